import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vandinv import (
    NodeSet,
    NodeSpec,
    OrderOverflowError,
    esp_all_orders,
    esp_bruteforce_oracle,
    esp_dropped,
    esp_mikkawy_dropped,
    esp_proposed,
    esp_recursion_trace,
    esp_single,
    esp_traub_table,
    esp_yang_table,
    generate_nodes,
    monic_coefficients,
)

from conftest import assert_close, random_node_set


def roots(n):
    return generate_nodes(NodeSpec("roots_of_unity", n))


# ---------------------------------------------------------------- oracle

def test_oracle_product_of_all():
    assert_close(esp_bruteforce_oracle(NodeSet([1, 2, 3]), 3), 6)


def test_oracle_order_zero_is_one():
    assert_close(esp_bruteforce_oracle(NodeSet([1, 2, 3]), 0), 1)


def test_oracle_complex_pair():
    assert_close(esp_bruteforce_oracle(NodeSet([1 + 1j, 1 - 1j]), 2), 2)


def test_oracle_refuses_large_sets():
    with pytest.raises(ValueError):
        esp_bruteforce_oracle(NodeSet(np.arange(26) + 1.0), 2)


# ---------------------------------------------------------------- proposed

def test_proposed_pair_sum_of_products():
    assert_close(esp_proposed(NodeSet([1, 2, 3]), 2), 11)


def test_proposed_order_one_is_node_sum():
    assert_close(esp_proposed(NodeSet([1, 2, 3]), 1), 6)


def test_proposed_roots4_full_product():
    assert_close(esp_proposed(roots(4), 4), -1)


def test_proposed_roots4_middle_order_vanishes():
    assert abs(esp_proposed(roots(4), 2)) < 1e-12


def test_proposed_rejects_out_of_range_orders():
    ns = NodeSet([1, 2, 3])
    for bad in (0, -1, 4):
        with pytest.raises(ValueError):
            esp_proposed(ns, bad)


def test_proposed_overflow_guard_and_scaled_escape():
    ns = NodeSet(np.linspace(0.5, 1.5, 180))
    with pytest.raises(OrderOverflowError):
        esp_proposed(ns, 175)
    value = esp_proposed(ns, 175, scaled=True)
    assert np.isfinite(value)


def test_proposed_scaled_mode_agrees_on_unit_circle():
    # well-conditioned at every order, so the modes must track each other
    ns = generate_nodes(NodeSpec("roots_of_unity", 51)).drop(1)
    for order in range(1, 51):
        plain = esp_proposed(ns, order)
        scaled = esp_proposed(ns, order, scaled=True)
        assert abs(plain - scaled) <= 1e-12 * abs(plain)


def test_proposed_scaled_mode_agrees_on_small_random_sets(rng):
    for _ in range(20):
        n = int(rng.integers(2, 13))
        ns = random_node_set(rng, n)
        for order in range(1, n + 1):
            plain = esp_proposed(ns, order)
            scaled = esp_proposed(ns, order, scaled=True)
            assert abs(plain - scaled) <= 1e-12 * max(1.0, abs(plain))


def test_proposed_compensated_mode_matches_oracle(rng):
    ns = random_node_set(rng, 9)
    for order in range(1, 10):
        assert_close(
            esp_proposed(ns, order, compensated=True),
            esp_bruteforce_oracle(ns, order),
        )


def test_recursion_trace_invariants(rng):
    ns = random_node_set(rng, 7)
    order = 5
    trace = esp_recursion_trace(ns, order)
    assert [s.step for s in trace] == list(range(order))
    first = trace[0]
    np.testing.assert_array_equal(first.f_values, ns.values)
    assert_close(first.running_sum, ns.values.sum(), rel=1e-14)
    assert all(s.target_order == order for s in trace)
    final = trace[-1]
    assert_close(
        final.running_sum / 120.0, esp_bruteforce_oracle(ns, order), rel=1e-9
    )


# ---------------------------------------------------------------- tables

def test_traub_table_small_integers():
    table = esp_traub_table(NodeSet([1, 2, 3]))
    np.testing.assert_allclose(table.row(3), [1, 6, 11, 6], atol=1e-12)


def test_traub_table_single_node():
    table = esp_traub_table(NodeSet([5]))
    np.testing.assert_allclose(table.row(1), [1, 5], atol=0)


def test_traub_table_roots4():
    table = esp_traub_table(roots(4))
    np.testing.assert_allclose(table.row(4), [1, 0, 0, 0, -1], atol=1e-14)


def test_yang_table_small_integers():
    table = esp_yang_table(NodeSet([1, 2, 3]))
    np.testing.assert_allclose(table.row(3), [1, 6, 11, 6], atol=1e-12)


def test_yang_table_two_nodes():
    table = esp_yang_table(NodeSet([2, 4]))
    np.testing.assert_allclose(table.row(2), [1, 6, 8], atol=1e-12)


def test_tables_agree_entrywise(rng):
    ns = random_node_set(rng, 20)
    t = esp_traub_table(ns).entries
    y = esp_yang_table(ns).entries
    scale = np.maximum(np.abs(t), 1.0)
    assert (np.abs(t - y) / scale).max() < 1e-12


def test_table_invariants(rng):
    ns = random_node_set(rng, 10)
    for table in (esp_traub_table(ns), esp_yang_table(ns)):
        n = table.order
        np.testing.assert_array_equal(table.entries[1:, 0], np.ones(n))
        upper = np.triu_indices(n + 1, k=1)
        assert np.all(table.entries[upper] == 0)
        with pytest.raises(ValueError):
            table.row(n + 1)


# ---------------------------------------------------------------- dropped

def test_mikkawy_drop_first():
    np.testing.assert_allclose(
        esp_mikkawy_dropped(NodeSet([1, 2, 3]), 1), [1, 5, 6], atol=1e-12
    )


def test_mikkawy_drop_last():
    np.testing.assert_allclose(
        esp_mikkawy_dropped(NodeSet([1, 2, 3]), 3), [1, 3, 2], atol=1e-12
    )


def test_mikkawy_unit_magnitudes_on_roots():
    ns = roots(12)
    for drop in range(1, 13):
        mags = np.abs(esp_mikkawy_dropped(ns, drop))
        np.testing.assert_allclose(mags, 1.0, atol=1e-10)


def test_mikkawy_needs_two_nodes():
    with pytest.raises(ValueError):
        esp_mikkawy_dropped(NodeSet([5]), 1)


def test_dropped_proposed_example():
    np.testing.assert_allclose(
        esp_dropped(NodeSet([1, 2, 3]), 2, "proposed"), [1, 4, 3], atol=1e-12
    )


@pytest.mark.parametrize("method", ["proposed", "traub", "yang", "mikkawy"])
def test_dropped_order_zero_is_one(method):
    seq = esp_dropped(NodeSet([2, 5, 7]), 1, method)
    assert seq[0] == 1


@pytest.mark.parametrize("method", ["proposed", "traub", "yang", "mikkawy"])
def test_dropped_matches_oracle_on_reduced_set(rng, method):
    for n in (2, 5, 9, 12):
        ns = random_node_set(rng, n)
        for drop in range(1, n + 1):
            seq = esp_dropped(ns, drop, method)
            reduced = ns.drop(drop)
            assert seq.size == n
            for order in range(n):
                assert_close(seq[order], esp_bruteforce_oracle(reduced, order))


def test_dropped_roots50_magnitudes_near_one():
    seq = esp_dropped(roots(50), 1, "proposed")
    np.testing.assert_allclose(np.abs(seq), 1.0, atol=1e-6)


def test_dropped_unknown_method():
    with pytest.raises(ValueError):
        esp_dropped(NodeSet([1, 2]), 1, "newton")


# ------------------------------------------------------- cross-backend

@st.composite
def distinct_complex_nodes(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    parts = draw(
        st.lists(
            st.floats(min_value=-3, max_value=3, allow_nan=False).map(lambda x: round(x, 3)),
            min_size=2 * n,
            max_size=2 * n,
        )
    )
    v = np.array([complex(parts[2 * k], parts[2 * k + 1]) for k in range(n)])
    gaps = np.abs(v[:, None] - v[None, :])
    np.fill_diagonal(gaps, np.inf)
    if gaps.min() < 1e-3:
        return None
    return v


@settings(max_examples=60, deadline=None)
@given(distinct_complex_nodes())
def test_backends_match_oracle_property(values):
    if values is None:
        return
    ns = NodeSet(values)
    n = len(ns)
    for order in range(1, n + 1):
        expected = esp_bruteforce_oracle(ns, order)
        assert_close(esp_proposed(ns, order), expected)
        assert_close(esp_single(ns, order, "traub"), expected)
        assert_close(esp_single(ns, order, "yang"), expected)


@settings(max_examples=40, deadline=None)
@given(distinct_complex_nodes(), st.randoms(use_true_random=False))
def test_permutation_invariance_property(values, pyrandom):
    if values is None:
        return
    perm = list(range(len(values)))
    pyrandom.shuffle(perm)
    base = NodeSet(values)
    shuffled = NodeSet(values[perm])
    n = len(base)
    for order in (1, n // 2 + 1, n):
        for method in ("proposed", "traub", "yang"):
            a = esp_single(base, order, method)
            b = esp_single(shuffled, order, method)
            assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


# ---------------------------------------------------------------- monic

def test_monic_two_nodes():
    np.testing.assert_allclose(
        monic_coefficients(NodeSet([1, 2])), [2, -3, 1], atol=1e-12
    )


def test_monic_roots_of_unity():
    n = 16
    coeffs = monic_coefficients(roots(n))
    expected = np.zeros(n + 1, dtype=complex)
    expected[0] = -1.0
    expected[n] = 1.0
    np.testing.assert_allclose(coeffs, expected, atol=1e-12)


def test_monic_single_zero_node():
    np.testing.assert_allclose(monic_coefficients(NodeSet([0])), [0, 1], atol=0)


def test_vieta_closure(rng):
    for n in (5, 12, 20):
        ns = random_node_set(rng, n)
        coeffs = monic_coefficients(ns)
        bound = 1e-8 * max(1.0, np.abs(ns.values).max() ** n)
        for v in ns.values:
            p = np.polyval(coeffs[::-1], v)
            assert abs(p) < bound


# ---------------------------------------------------------------- helpers

def test_esp_single_order_zero():
    assert esp_single(NodeSet([1, 2, 3]), 0) == 1


def test_esp_single_rejects_mikkawy():
    with pytest.raises(ValueError):
        esp_single(NodeSet([1, 2, 3]), 1, "mikkawy")


def test_esp_all_orders_consistency(rng):
    ns = random_node_set(rng, 8)
    top = esp_all_orders(ns, "proposed")
    ref = esp_traub_table(ns).top_row()
    for a, b in zip(top, ref):
        assert_close(a, b, rel=1e-9)
