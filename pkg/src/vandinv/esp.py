"""Elementary symmetric polynomial (ESP) kernels.

The j'th ESP over nodes v_1..v_N is the sum over all size-j index subsets
of the product of the selected nodes, written sigma(N, j) below.  All
public outputs use this unordered convention (sigma(N, 0) = 1).

Four algorithms are implemented:

* ``proposed`` - a per-order balanced recursion.  For a target order n it
  iterates f_i(v_d) = v_d * (C_{i-1} - (n - i) * f_{i-1}(v_d)) with
  f_0(v) = v and C_i = sum_d f_i(v_d), and returns C_{n-1} / n!.  The sum
  over ordered distinct index tuples equals n! times the unordered ESP,
  which is why the factorial division appears.  Every step keeps the full
  node set in play, which is what makes this recursion stable on symmetric
  sets such as the roots of unity.  Cost is O(n * N) per order.
* ``traub``    - the classic triangular table sigma(n, j) =
  sigma(n-1, j) + v_n * sigma(n-1, j-1) over node prefixes.
* ``yang``     - a prefix-block expansion of the same table: group each
  subset by its run of trailing consecutive nodes, giving
  sigma(n, j) = sum_k (v_n * ... * v_{n-k+1}) * sigma(n-k-1, j-k) where the
  k = j = n term contributes the bare product of all n nodes.
* ``mikkawy``  - a dropped-node recursion: the node to remove is swapped
  into the leading slot and the table recursion is run over slots 2..N,
  so the output row holds ESPs of the remaining N-1 nodes.

Tables and dropped sweeps cost O(N^2).  Functions are pure; different
orders or drop indices can be evaluated concurrently without coordination.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import OrderOverflowError
from .nodes import NodeSet

ESP_BACKENDS = ("proposed", "traub", "yang", "mikkawy")

# Backends that can produce full-set ESPs (mikkawy only drops).
FULL_SET_ESP_BACKENDS = ("proposed", "traub", "yang")

# Largest order whose factorial still fits a double; beyond this the
# unscaled recursion cannot finish and the scaled mode must be used.
MAX_UNSCALED_ORDER = 170

_ORACLE_MAX_NODES = 25


def _ordered_sum(values: np.ndarray, compensated: bool = False) -> complex:
    """Accumulate in index order; optionally Kahan-compensated.

    cumsum keeps the strict left-to-right association at native speed.
    """
    if compensated:
        total = 0j
        carry = 0j
        for x in values:
            y = complex(x) - carry
            t = total + y
            carry = (t - total) - y
            total = t
        return total
    if values.size == 0:
        return 0j
    return complex(np.cumsum(values)[-1])


@dataclass
class ESPRecursionState:
    """One step of the balanced recursion: f_i per node and C_i = sum f_i.

    At step 0, ``f_values`` equals the nodes themselves and ``running_sum``
    their plain sum; the final state has step = target_order - 1.
    """

    target_order: int
    step: int
    f_values: np.ndarray
    running_sum: complex


def _recursion_steps(v, n, scaled, compensated):
    f = v.astype(np.complex128, copy=True)
    c = _ordered_sum(f, compensated)
    yield 0, f, c
    for i in range(1, n):
        f = v * (c - (n - i) * f)
        if scaled:
            f = f / (i + 1)
        c = _ordered_sum(f, compensated)
        yield i, f, c


def esp_proposed(
    nodes: NodeSet,
    order: int,
    scaled: bool = False,
    compensated: bool = False,
) -> complex:
    """sigma(N, order) via the balanced per-order recursion.

    ``scaled`` folds the final division by n! into the iteration (each step
    divides by i + 1), extending the usable order range past 170 without
    changing results for moderate orders.  ``compensated`` switches the
    per-step node sum to Kahan accumulation; the default is a plain
    node-order sum.
    """
    v = nodes.values
    n = int(order)
    if not 1 <= n <= v.size:
        raise ValueError(f"order {order} outside 1..{v.size}")
    if not scaled and n > MAX_UNSCALED_ORDER:
        raise OrderOverflowError(
            f"order {n} needs {n}! which overflows double precision; "
            "use scaled=True"
        )
    for _, _, c in _recursion_steps(v, n, scaled, compensated):
        pass
    if scaled:
        return c
    return c / float(math.factorial(n))


def esp_recursion_trace(
    nodes: NodeSet,
    order: int,
    scaled: bool = False,
    compensated: bool = False,
) -> list[ESPRecursionState]:
    """Materialized per-step states of the recursion behind `esp_proposed`."""
    v = nodes.values
    n = int(order)
    if not 1 <= n <= v.size:
        raise ValueError(f"order {order} outside 1..{v.size}")
    return [
        ESPRecursionState(target_order=n, step=i, f_values=f.copy(), running_sum=c)
        for i, f, c in _recursion_steps(v, n, scaled, compensated)
    ]


@dataclass
class ESPTable:
    """Lower-triangular table of sigma(n, j) for n = 1..order, j = 0..n.

    ``entries`` is an (order+1) x (order+1) array; row 0 holds the empty-set
    convention sigma(0, 0) = 1.  Entries above the diagonal are zero.
    """

    order: int
    entries: np.ndarray

    def row(self, n: int) -> np.ndarray:
        """sigma(n, j) for j = 0..n."""
        if not 0 <= n <= self.order:
            raise ValueError(f"row {n} outside 0..{self.order}")
        return self.entries[n, : n + 1]

    def top_row(self) -> np.ndarray:
        """Full-set ESPs sigma(N, j), j = 0..N."""
        return self.row(self.order)


def esp_traub_table(nodes: NodeSet) -> ESPTable:
    """Full triangular ESP table by the one-node-at-a-time recursion."""
    v = nodes.values
    n_total = v.size
    t = np.zeros((n_total + 1, n_total + 1), dtype=np.complex128)
    t[0, 0] = 1.0
    for n in range(1, n_total + 1):
        t[n, 0] = 1.0
        t[n, 1 : n + 1] = t[n - 1, 1 : n + 1] + v[n - 1] * t[n - 1, 0:n]
    return ESPTable(order=n_total, entries=t)


def esp_yang_table(nodes: NodeSet) -> ESPTable:
    """Full triangular ESP table by the prefix-block expansion.

    Row n is assembled from earlier rows directly: the contribution for a
    trailing block of k nodes is the block product times row n-k-1 shifted
    by k, accumulated in ascending k.  Contents agree with
    `esp_traub_table` entrywise.
    """
    v = nodes.values
    n_total = v.size
    t = np.zeros((n_total + 1, n_total + 1), dtype=np.complex128)
    t[0, 0] = 1.0
    for n in range(1, n_total + 1):
        row = np.zeros(n + 1, dtype=np.complex128)
        block = 1.0 + 0j
        for k in range(n):
            row[k:n] += block * t[n - 1 - k, 0 : n - k]
            block *= v[n - 1 - k]
        row[n] = block  # the whole prefix taken as one block
        t[n, : n + 1] = row
    return ESPTable(order=n_total, entries=t)


def esp_mikkawy_dropped(nodes: NodeSet, drop_index: int) -> np.ndarray:
    """ESPs of all orders over the nodes with the drop_index'th removed.

    Returns sigma over the reduced set for orders 0..N-1.  The dropped node
    is swapped into the leading slot, which the recursion never reads, so
    the remaining N-1 nodes are folded in slot order 2..N with the original
    first node visiting the dropped slot.
    """
    n_total = len(nodes)
    if n_total < 2:
        raise ValueError("dropping a node needs at least 2 nodes")
    if not 1 <= drop_index <= n_total:
        raise ValueError(f"drop index {drop_index} outside 1..{n_total}")
    v = nodes.values.copy()
    v[0], v[drop_index - 1] = v[drop_index - 1], v[0]
    row = np.zeros(n_total, dtype=np.complex128)
    row[0] = 1.0
    for n in range(2, n_total + 1):
        hi = n - 1
        row[1 : hi + 1] = row[1 : hi + 1] + v[n - 1] * row[0:hi]
    return row


def esp_dropped(nodes: NodeSet, drop_index: int, method: str = "proposed") -> np.ndarray:
    """Uniform dropped-node adapter over all four backends.

    Returns sigma over the reduced set for orders 0..N-1.  For proposed,
    traub, and yang the algorithm runs on the reduced NodeSet; mikkawy uses
    its native leading-slot substitution.
    """
    if method not in ESP_BACKENDS:
        raise ValueError(f"unknown ESP backend {method!r}; expected one of {ESP_BACKENDS}")
    if method == "mikkawy":
        return esp_mikkawy_dropped(nodes, drop_index)
    reduced = nodes.drop(drop_index)
    if method == "traub":
        return esp_traub_table(reduced).top_row().copy()
    if method == "yang":
        return esp_yang_table(reduced).top_row().copy()
    m = len(reduced)
    out = np.empty(m + 1, dtype=np.complex128)
    out[0] = 1.0
    for n in range(1, m + 1):
        out[n] = esp_proposed(reduced, n)
    return out


def esp_single(nodes: NodeSet, order: int, method: str = "proposed") -> complex:
    """Full-set sigma(N, order) via a full-set backend; order 0 returns 1."""
    if method not in FULL_SET_ESP_BACKENDS:
        raise ValueError(
            f"full-set ESPs need one of {FULL_SET_ESP_BACKENDS}, got {method!r}"
        )
    n_total = len(nodes)
    if not 0 <= order <= n_total:
        raise ValueError(f"order {order} outside 0..{n_total}")
    if order == 0:
        return 1.0 + 0j
    if method == "proposed":
        return esp_proposed(nodes, order)
    table = esp_traub_table(nodes) if method == "traub" else esp_yang_table(nodes)
    return complex(table.entries[n_total, order])


def esp_all_orders(nodes: NodeSet, method: str = "proposed") -> np.ndarray:
    """Full-set ESPs for every order 0..N as one array."""
    if method not in FULL_SET_ESP_BACKENDS:
        raise ValueError(
            f"full-set ESPs need one of {FULL_SET_ESP_BACKENDS}, got {method!r}"
        )
    n_total = len(nodes)
    if method == "traub":
        return esp_traub_table(nodes).top_row().copy()
    if method == "yang":
        return esp_yang_table(nodes).top_row().copy()
    out = np.empty(n_total + 1, dtype=np.complex128)
    out[0] = 1.0
    for n in range(1, n_total + 1):
        out[n] = esp_proposed(nodes, n)
    return out


def esp_bruteforce_oracle(nodes: NodeSet, order: int) -> complex:
    """Exact subset enumeration; the reference for every other backend.

    Guarded at N <= 25 because the subset count is combinatorial.
    """
    v = nodes.values
    if v.size > _ORACLE_MAX_NODES:
        raise ValueError(
            f"oracle refuses N = {v.size} > {_ORACLE_MAX_NODES} (combinatorial blowup)"
        )
    n = int(order)
    if not 0 <= n <= v.size:
        raise ValueError(f"order {order} outside 0..{v.size}")
    if n == 0:
        return 1.0 + 0j
    total = 0j
    for combo in itertools.combinations(v.tolist(), n):
        total += math.prod(combo)
    return total


def monic_coefficients(nodes: NodeSet, esp_backend: str = "proposed") -> np.ndarray:
    """Coefficients of prod_k (x - v_k) in ascending power order, monic.

    The coefficient of x^(N-j) is (-1)^j * sigma(N, j).
    """
    sig = esp_all_orders(nodes, esp_backend)
    n_total = len(nodes)
    j = np.arange(n_total + 1)
    coeffs = ((-1.0) ** (n_total - j)) * sig[::-1]
    coeffs[-1] = 1.0
    return coeffs
