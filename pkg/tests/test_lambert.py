import json

import pytest

from qlambert import (
    A_series,
    D_series,
    L_series,
    N_series,
    X_series,
    Y_series,
    Z_series,
    SpecInvalid,
    double_lambert,
    geometric,
    lambert_single,
    triangular_sum,
    zero,
)
from qlambert.lambert import (
    Affine,
    BiKernel,
    Bilinear,
    Kernel,
    DoubleLambertSpec,
    LambertSpec,
    TriangularSpec,
    Weight,
    L_CLOSED_SPEC,
    NAMED_SPECS,
    STEP10_SPEC,
    STEP11_SPEC,
    Y_TRIANGULAR_SPEC,
)


def test_single_sum_low_order():
    # sum q^n/(1+q^(2n-1)) = q + 2q^3 + O(q^5)
    assert lambert_single(STEP10_SPEC, 4).coeffs == (0, 1, 0, 2, 0)
    assert lambert_single(STEP11_SPEC, 4).coeffs == (0, -1, 0, -2, 0)


def test_L_low_order():
    assert L_series(4).coeffs == (0, 0, 1, 2, 3)


def test_single_sum_empty_when_start_beyond_order():
    spec = LambertSpec(Weight(), Affine(1), -1, Affine(2, -1), start=10)
    assert lambert_single(spec, 4) == zero(4)


def test_squared_denominator_matches_geometric_square():
    # 1/(1 - s*q^d)^2 expanded by the (j+1)s^j rule vs. an explicit square;
    # the numerator exponent jumps past the order after one term.
    for s in (1, -1):
        for d in (1, 2, 3):
            spec = LambertSpec(Weight(), Affine(21, -1), s, Affine(0, d), den_pow=2, start=1)
            got = lambert_single(spec, 40)
            g = geometric(s, d, 40)
            expected = (g * g).shift_up(20)
            assert got == expected


def test_Y_low_order():
    assert Y_series(4).coeffs == (0, 0, 0, -1, 0)
    assert Y_series(5).coeff(5) == -2


def test_Z_low_order():
    assert Z_series(4).coeffs == (0, 0, 1, 0, 3)


def test_X_vanishes_below_its_valuation():
    assert X_series(2) == zero(2)


def test_D_low_order():
    # recomputed by the long-division oracle: D = q^2 + 2q^3 + 4q^4 + ...
    assert D_series(4).coeffs == (0, 0, 1, 2, 4)


def test_triangular_equals_double_for_Y():
    n = 30
    assert -triangular_sum(Y_TRIANGULAR_SPEC, n) == Y_series(n)


def test_triangular_empty_inner_range():
    spec = TriangularSpec(
        outer_weight=Weight(),
        outer_num=Affine(1),
        outer_den=Kernel(-1, Affine(2, -1)),
        inner_num=Affine(1),
        inner_den=Kernel(-1, Affine(1)),
        inner_start=50,
    )
    assert triangular_sum(spec, 10) == zero(10)


def test_valuations():
    assert Y_series(10).valuation() == 3 and Y_series(10).coeff(3) == -1
    assert Z_series(10).valuation() == 2 and Z_series(10).coeff(2) == 1
    assert L_series(10).valuation() == 2 and L_series(10).coeff(2) == 1


def test_Y_is_odd_Z_is_even():
    y = Y_series(50)
    assert y.subst_neg_q() == -y
    z = Z_series(50)
    assert z.subst_neg_q() == z


def test_even_coeffs_of_Z_and_L_agree_odd_differ():
    z, l = Z_series(20), L_series(20)
    for r in range(1, 11):
        assert z.coeff(2 * r) == l.coeff(2 * r)
    assert z.coeff(3) == 0 and l.coeff(3) == 2


def test_L_closed_form():
    assert lambert_single(L_CLOSED_SPEC, 80) == L_series(80)


def test_spec_invalid_cases():
    with pytest.raises(SpecInvalid):
        # non-increasing numerator exponent
        lambert_single(LambertSpec(Weight(), Affine(0, 1), -1, Affine(2, -1)), 10)
    with pytest.raises(SpecInvalid):
        # denominator exponent 0 at the first index
        lambert_single(LambertSpec(Weight(), Affine(1), -1, Affine(1, -1)), 10)
    with pytest.raises(SpecInvalid):
        # numerator exponent <= 0 at the minimal index pair
        double_lambert(DoubleLambertSpec(
            sign_outer=1, sign_inner=-1,
            num=Bilinear(nm=1, n=-2, m=1),
            den1=BiKernel(1, Bilinear(m=2, const=-1)),
            den2=BiKernel(-1, Bilinear(n=2, const=-1)),
        ), 10)
    with pytest.raises(SpecInvalid):
        # numerator exponent not eventually increasing in the inner index
        double_lambert(DoubleLambertSpec(
            sign_outer=1, sign_inner=1,
            num=Bilinear(n=1),
            den1=BiKernel(1, Bilinear(m=1)),
            den2=BiKernel(-1, Bilinear(n=1)),
        ), 10)
    with pytest.raises(SpecInvalid):
        # denominator exponent that can reach zero
        triangular_sum(TriangularSpec(
            outer_weight=Weight(),
            outer_num=Affine(1),
            outer_den=Kernel(-1, Affine(0, 0)),
            inner_num=Affine(1),
            inner_den=Kernel(-1, Affine(1)),
        ), 10)


def test_named_specs_serialize_to_json():
    for name, spec in NAMED_SPECS.items():
        blob = json.dumps(spec.as_dict())
        decoded = json.loads(blob)
        assert decoded["type"] in {"lambert_single", "double_lambert", "triangular_sum"}


@pytest.mark.parametrize("builder", [
    Y_series, X_series, Z_series, A_series, N_series, D_series, L_series,
])
def test_named_builders_prefix_stable(builder):
    n = 33
    assert builder(n + 17).truncate(n) == builder(n)
