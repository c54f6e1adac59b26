"""Property tests: invariants over generated inputs, including large integers."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from collatz_strands import cadogan, core, criteria, search, trajectory
from collatz_strands.trajectory import Classification

nat = st.integers(min_value=0, max_value=2**256)
odd = nat.map(lambda n: 2 * n + 1)
rows = st.integers(min_value=1, max_value=200)
small_m = st.integers(min_value=0, max_value=40)


@given(nat)
def test_step_is_odd_and_exact(n):
    v, k = core.collatz_step(n)
    assert v % 2 == 1 and (k >= 1) == (n % 2 == 1)
    assert v << k == 3 * n + 1
    assert v % 3 != 0


@given(st.integers(min_value=0, max_value=10**30))
def test_step_matches_division_oracle(n):
    assert tuple(core.collatz_step(n)) == oracles.step(n)


@given(nat)
def test_inverse_roundtrip(n):
    v, k = core.collatz_step(n)
    assert core.collatz_inverse(k, v) == n


@given(odd)
def test_coordinates_roundtrip(n):
    coord = cadogan.c(n)
    assert coord == oracles.coords(n)
    assert cadogan.c_inv(coord) == n


@given(rows, nat)
def test_coordinates_inverse_roundtrip(i, j):
    assert cadogan.c(cadogan.c_inv((i, j))) == (i, j)


@given(st.integers(min_value=2, max_value=200), nat)
def test_rows_above_one_step_with_k1_and_transport(i, j):
    v, k = core.collatz_step(cadogan.c_inv((i, j)))
    assert k == 1
    assert cadogan.c(v) == (i - 1, 3 * j + 1)


@given(nat)
def test_row_one_shortcut(j):
    assert core.collatz_step(4 * j + 1).value == core.collatz_step(j).value


@given(nat, small_m)
def test_g_pow_closed_form(j, m):
    assert trajectory.g_pow(j, m) == oracles.g_iter(j, m) == oracles.g_sum_form(j, m)
    assert trajectory.g_inv_pow(trajectory.g_pow(j, m), m) == j


@given(nat, st.integers(min_value=1, max_value=40))
def test_g_inv_pow_closed_form(j, m):
    assert trajectory.g_inv_pow(j, m) == oracles.g_inv_iter(j, m) == oracles.g_inv_sum_form(j, m)


@given(st.fractions(), small_m, small_m)
def test_g_pow_composes(x, a, b):
    assert trajectory.g_pow(trajectory.g_pow(x, a), b) == trajectory.g_pow(x, a + b)
    assert trajectory.g_inv_pow(trajectory.g_inv_pow(x, a), b) == trajectory.g_inv_pow(x, a + b)


@given(st.integers(min_value=1, max_value=2**128))
def test_classification_matches_integer_oracle(J):
    assert trajectory.classify_restart(J).value == oracles.classify_scaled(J)


@given(st.integers(min_value=1, max_value=2**128), rows)
def test_boundary_is_parallel_and_matches_determinant(J, i):
    d = trajectory.boundary_column(J, i)
    assert d == criteria.determinant(i, J)
    assert d < trajectory.boundary_column(J + 1, i)
    assert trajectory.g_pow(d, i - 1) == J


@given(st.integers(min_value=1, max_value=2**128))
def test_case_params_inverts_synthesis(J):
    p = criteria.case_params(J)
    assert criteria.synthesize_J(p) == J
    assert criteria.check_consistency(p)


@st.composite
def params(draw):
    cid = draw(st.sampled_from(criteria.CASES))
    t = draw(st.integers(0, 10**6))
    u = draw(st.integers(1 if cid in ("EE", "OE") else 0, 60))
    v = draw(st.integers(0, 60))
    return criteria.CaseParams(cid, t, u, v)


@given(params())
def test_params_roundtrip_and_cleared_form(p):
    J = criteria.synthesize_J(p)
    if J == 0:
        return
    assert criteria.case_params(J) == p
    assert criteria.check_consistency(p)
    assert criteria.classify_cleared(p) is criteria.classify_params(p)
    assert criteria.classify_params(p) is not Classification.ON


@settings(max_examples=50)
@given(st.integers(min_value=1, max_value=10**6))
def test_reduction_matches_plain_iteration(n):
    n = 2 * n + 1
    assert trajectory.reduce_sequence(n) == oracles.row_reductions(n)


@given(st.integers(1, 300), st.integers(0, 300))
def test_unified_filter_bounds_cycle_equation(i, k):
    cell = search.unified_cell(i, k)
    if cell is not None and cell is not False:
        j = cell["j"]
        assert (2 * j + 1) * ((1 << (i + k + 1)) - 3**i) == (1 << (k + 1)) - 1
        assert (i, k, j) == (1, 0, 0)


@given(st.integers(0, 10**12), st.integers(0, 40))
def test_fraction_inputs_are_exact(j, m):
    assert isinstance(trajectory.g_inv_pow(j, m), Fraction)
