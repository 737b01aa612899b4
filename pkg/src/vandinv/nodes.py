"""Sampling node sets: validated containers, standard families, perturbation.

Five node families are supported on their usual domains:

* ``equidistant``        x_k = -1 + 2(k-1)/(N-1)              (includes both endpoints)
* ``chebyshev``          x_k = cos((2k-1) pi / (2N))          (open, no endpoints)
* ``extended_chebyshev`` chebyshev nodes rescaled by 1/cos(pi/(2N)) so the
  outermost nodes land exactly on +-1
* ``gauss_lobatto``      x_k = cos((k-1) pi / (N-1))          (Chebyshev extrema)
* ``roots_of_unity``     v_k = exp(2 pi i k / N), k = 1..N

All generators are deterministic.  `perturb_roots_of_unity` is the only
randomized operation and is fully determined by its 64-bit seed
(numpy PCG64 streams derived through SeedSequence).

Everything here is pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NodeCollisionError

# Relative pairwise-distinctness floor: min gap must exceed this times max |v|.
DISTINCTNESS_RTOL = 1e-12

NODE_FAMILIES = (
    "equidistant",
    "chebyshev",
    "extended_chebyshev",
    "gauss_lobatto",
    "roots_of_unity",
)

# Families whose formulas place nodes on both interval endpoints (need N >= 2).
_ENDPOINT_FAMILIES = ("equidistant", "gauss_lobatto")

# Identifier recorded in run manifests so seeded experiments are replayable.
RNG_ALGORITHM = "numpy.PCG64"

_PERTURB_RETRIES = 8


def validate_pairwise_distinct(values):
    """Check the pairwise-distinctness tolerance on a raw value sequence.

    Returns ``(True, None)`` when the minimum pairwise gap exceeds
    ``DISTINCTNESS_RTOL * max |v|``, else ``(False, (k, j))`` with the
    1-based indices of the closest offending pair.
    """
    v = np.atleast_1d(np.asarray(values, dtype=np.complex128))
    n = v.size
    if n < 2:
        return True, None
    gaps = np.abs(v[:, None] - v[None, :])
    np.fill_diagonal(gaps, np.inf)
    k, j = np.unravel_index(np.argmin(gaps), gaps.shape)
    threshold = DISTINCTNESS_RTOL * np.abs(v).max()
    if gaps[k, j] > threshold:
        return True, None
    lo, hi = sorted((int(k) + 1, int(j) + 1))
    return False, (lo, hi)


@dataclass(frozen=True)
class NodeSet:
    """Ordered, immutable sequence of pairwise-distinct complex nodes."""

    values: np.ndarray

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.values, dtype=np.complex128)).copy()
        if v.ndim != 1 or v.size < 1:
            raise ValueError("a NodeSet needs a one-dimensional, non-empty value sequence")
        ok, pair = validate_pairwise_distinct(v)
        if not ok:
            raise ValueError(
                f"nodes {pair[0]} and {pair[1]} are closer than "
                f"{DISTINCTNESS_RTOL:g} * max|v|"
            )
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return int(self.values.size)

    def drop(self, index: int) -> "NodeSet":
        """Return a new NodeSet with the 1-based `index` node removed."""
        n = len(self)
        if not 1 <= index <= n:
            raise ValueError(f"drop index {index} outside 1..{n}")
        if n == 1:
            raise ValueError("cannot drop the only node of a singleton set")
        return NodeSet(np.delete(self.values, index - 1))


@dataclass(frozen=True)
class NodeSpec:
    """Which family to generate and how many nodes."""

    kind: str
    count: int


@dataclass(frozen=True)
class PerturbationSpec:
    """Noise model for roots-of-unity sampling irregularities.

    sigma_shift is the standard deviation (radians) of the per-node phase
    shift; sigma_mag the total standard deviation of an isotropic complex
    offset (independent real/imaginary parts of variance sigma_mag**2 / 2).
    """

    sigma_shift: float
    sigma_mag: float
    seed: int

    def __post_init__(self):
        for name in ("sigma_shift", "sigma_mag"):
            s = getattr(self, name)
            if not np.isfinite(s) or s < 0:
                raise ValueError(f"{name} must be finite and non-negative, got {s}")


def _unit_circle_points(n: int) -> np.ndarray:
    k = np.arange(1, n + 1)
    return np.exp(2j * np.pi * k / n)


def generate_nodes(spec: NodeSpec) -> NodeSet:
    """Generate one of the standard node families."""
    kind, n = spec.kind, spec.count
    if kind not in NODE_FAMILIES:
        raise ValueError(f"unknown node family {kind!r}; expected one of {NODE_FAMILIES}")
    if n < 1:
        raise ValueError("node count must be at least 1")
    if kind in _ENDPOINT_FAMILIES and n < 2:
        raise ValueError(f"{kind} nodes need N >= 2")
    k = np.arange(1, n + 1)
    if kind == "equidistant":
        x = -1.0 + 2.0 * (k - 1) / (n - 1)
    elif kind == "chebyshev":
        x = np.cos((2 * k - 1) * np.pi / (2 * n))
    elif kind == "extended_chebyshev":
        x = np.cos((2 * k - 1) * np.pi / (2 * n)) / np.cos(np.pi / (2 * n))
        # the rescale puts the extreme nodes at +-1 exactly; clip the odd ulp
        x = np.clip(x, -1.0, 1.0)
    elif kind == "gauss_lobatto":
        x = np.cos((k - 1) * np.pi / (n - 1))
    else:
        return NodeSet(_unit_circle_points(n))
    return NodeSet(x.astype(np.complex128))


def perturb_roots_of_unity(
    n: int,
    spec: PerturbationSpec,
    radial_shift: bool = False,
) -> NodeSet:
    """Nth roots of unity contaminated by phase and magnitude noise.

    Each node is ``exp(i(2 pi k / N + eta_S)) + eta_M`` with
    ``eta_S ~ Normal(0, sigma_shift**2)`` shifting the node along the circle
    and ``eta_M`` an isotropic complex Gaussian of total variance
    ``sigma_mag**2``.  With ``radial_shift=True`` the shift noise instead
    enters the exponent without the imaginary unit,
    ``exp(2 pi i k / N + eta_S)``, scaling the magnitude rather than the
    phase; this variant exists for comparison only.

    Deterministic per seed.  If the noise collapses two nodes within the
    distinctness tolerance, the draw is retried up to 8 times on sub-seeds
    derived from ``spec.seed`` before NodeCollisionError is raised.
    """
    if n < 2:
        raise ValueError("perturbed roots of unity need N >= 2")
    base = _unit_circle_points(n)
    last = None
    for attempt in range(_PERTURB_RETRIES + 1):
        rng = np.random.default_rng(np.random.SeedSequence([int(spec.seed), attempt]))
        eta_s = rng.normal(0.0, spec.sigma_shift, n)
        part_std = spec.sigma_mag / np.sqrt(2.0)
        eta_m = rng.normal(0.0, part_std, n) + 1j * rng.normal(0.0, part_std, n)
        # factored exponential keeps the zero-noise case bit-identical to
        # the clean generator
        if radial_shift:
            v = base * np.exp(eta_s) + eta_m
        else:
            v = base * np.exp(1j * eta_s) + eta_m
        ok, pair = validate_pairwise_distinct(v)
        if ok:
            return NodeSet(v)
        last = pair
    raise NodeCollisionError(
        f"nodes {last[0]} and {last[1]} collapsed within tolerance on "
        f"{_PERTURB_RETRIES + 1} consecutive draws (seed {spec.seed})"
    )
