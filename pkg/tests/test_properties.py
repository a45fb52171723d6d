"""Randomized algebraic properties of the series ring and the builders."""

from hypothesis import given, settings
from hypothesis import strategies as st

from qlambert import (
    A_series,
    D_series,
    E_series,
    L_series,
    N_series,
    X_series,
    Y_series,
    Z_series,
    omega_series,
    one,
    pochhammer_inf,
)
from qlambert.series import TruncSeries

ORDER = 12


def series_of(order=ORDER):
    return st.lists(
        st.integers(min_value=-50, max_value=50),
        min_size=order + 1, max_size=order + 1,
    ).map(lambda cs: TruncSeries(tuple(cs)))


@given(series_of(), series_of(), series_of())
def test_mul_associative(s, t, u):
    assert s * (t * u) == (s * t) * u


@given(series_of(), series_of())
def test_mul_commutative(s, t):
    assert s * t == t * s


@given(series_of(), series_of(), series_of())
def test_mul_distributes_over_add(s, t, u):
    assert s * (t + u) == s * t + s * u


@given(series_of())
def test_one_is_identity(s):
    assert s * one(ORDER) == s


@given(series_of(), st.sampled_from([1, -1]))
def test_invert_unit_roundtrip(s, c0):
    s = TruncSeries((c0,) + s.coeffs[1:])
    assert s * s.invert_unit() == one(ORDER)


@given(series_of())
def test_subst_neg_q_involution(s):
    assert s.subst_neg_q().subst_neg_q() == s


@given(series_of(), series_of())
def test_subst_neg_q_is_ring_homomorphism(s, t):
    assert (s * t).subst_neg_q() == s.subst_neg_q() * t.subst_neg_q()
    assert (s + t).subst_neg_q() == s.subst_neg_q() + t.subst_neg_q()


@given(series_of())
def test_doubled_even_part_recombines(s):
    assert s.even_part() + s.even_part() == s + s.subst_neg_q()


@given(series_of(), series_of(), st.integers(min_value=0, max_value=ORDER))
def test_truncation_commutes_with_mul(s, t, m):
    assert (s * t).truncate(m) == s.truncate(m) * t.truncate(m)


BUILDERS = {
    "Y": Y_series,
    "X": X_series,
    "Z": Z_series,
    "A": A_series,
    "N": N_series,
    "D": D_series,
    "L": L_series,
    "E": E_series,
    "omega": omega_series,
    "euler_product": lambda n: pochhammer_inf(1, 1, 1, n),
}


@settings(deadline=None)
@given(st.sampled_from(sorted(BUILDERS)), st.integers(min_value=0, max_value=40))
def test_builders_are_prefix_stable(name, order):
    build = BUILDERS[name]
    assert build(order + 17).truncate(order) == build(order)
