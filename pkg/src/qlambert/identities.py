"""The identity registry and verification engine.

Each record pairs two independent builders for the same series and a
comparison mode.  The registry is code, not config, so the complete list
of verified claims is reviewable in this one file.

Two normalizations keep everything inside the integer power-series ring:
identities stated with a constant 1/2 are registered doubled, and
identities stated with a q**-1 factor are registered multiplied through
by q.  Both transformations are equalities of power series, so nothing is
lost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .lambert import (
    Affine,
    BiKernel,
    Bilinear,
    DoubleLambertSpec,
    Kernel,
    LambertSpec,
    TriangularSpec,
    Weight,
    A_series,
    D_series,
    L_series,
    N_series,
    X_series,
    Y_series,
    Z_series,
    L_CLOSED_SPEC,
    STEP10_SPEC,
    STEP11_SPEC,
    Y_TRIANGULAR_SPEC,
    double_lambert,
    lambert_single,
    triangular_sum,
)
from .qproducts import E_series
from .series import TruncSeries, zero


class UnknownIdentity(KeyError):
    """Lookup of an identity name not present in the registry."""


ALL_COEFFS = "all_coeffs"
EVEN_COEFFS_ONLY = "even_coeffs_only"


@dataclass(frozen=True)
class IdentityRecord:
    name: str
    lhs: Callable[[int], TruncSeries]
    rhs: Callable[[int], TruncSeries]
    mode: str
    description: str


@dataclass(frozen=True)
class VerifyReport:
    name: str
    order: int
    status: str  # "pass" or "fail"
    first_mismatch: tuple[int, int, int] | None  # (exponent, lhs, rhs)
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        mismatch = None
        if self.first_mismatch is not None:
            e, lv, rv = self.first_mismatch
            mismatch = {"exponent": e, "lhs": str(lv), "rhs": str(rv)}
        return {
            "identity": self.name,
            "order": self.order,
            "status": self.status,
            "first_mismatch": mismatch,
            "elapsed_ms": self.elapsed_ms,
        }


# -- auxiliary single sums appearing on product sides -------------------------------

# sum_{k>=1} q^(2k) / (1 + q^(2k))
SUM_EVEN_OVER_ONE_PLUS_EVEN = LambertSpec(Weight(), Affine(2), -1, Affine(2))
# sum_{n>=1} q^n / (1 - q^(2n))
SUM_N_OVER_ONE_MINUS_EVEN = LambertSpec(Weight(), Affine(1), 1, Affine(2))
# sum_{k>=1} q^(2k) / (1 - q^(2k-1))
SUM_EVEN_OVER_ONE_MINUS_ODD = LambertSpec(Weight(), Affine(2), 1, Affine(2, -1))
# sum_{n>=1} q^(2n) / (1 + q^(2n-1))
SUM_EVEN_OVER_ONE_PLUS_ODD = LambertSpec(Weight(), Affine(2), -1, Affine(2, -1))
# sum_{n>=1} q^(2n) / (1 - q^(4n-2))
SUM_EVEN_OVER_ONE_MINUS_TWICE_ODD = LambertSpec(Weight(), Affine(2), 1, Affine(4, -2))


# -- auxiliary double sums appearing inside identities ------------------------------

# sum_{k,n>=1} q^(k+n) / ((1 + q^n)(1 + q^(2k-1)))
CROSS_SUM = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(n=1, m=1),
    den1=BiKernel(-1, Bilinear(m=1)),
    den2=BiKernel(-1, Bilinear(n=2, const=-1)),
)

# sum_{k,n>=1} q^(2kn+k) / ((1 - q^(2n))(1 + q^(2k-1)))
BILINEAR_EVEN_SUM = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(nm=2, n=1),
    den1=BiKernel(1, Bilinear(m=2)),
    den2=BiKernel(-1, Bilinear(n=2, const=-1)),
)

# sum_{k,n>=1} q^(k+n) / ((1 + q^(2n-1))(1 - q^(2k)))
MIXED_CROSS_SUM = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(n=1, m=1),
    den1=BiKernel(-1, Bilinear(m=2, const=-1)),
    den2=BiKernel(1, Bilinear(n=2)),
)

# Z(q) rewritten as a tail sum:
# sum_{n>=1} q^n/(1+q^(2n-1)) * sum_{k>=n} q^k/(1-q^(2k)), re-indexed diagonally
Z_TAIL_SUM = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(n=1, m=1),
    den1=BiKernel(-1, Bilinear(n=2, const=-1)),
    den2=BiKernel(1, Bilinear(m=2)),
    diagonal=True,
)

# sum_{n>=1} q^n/(1-q^n) * sum_{k>=n+1} q^k/(1+q^(2k-1))
X_TAIL_SUM = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(n=1, m=1),
    den1=BiKernel(1, Bilinear(n=1)),
    den2=BiKernel(-1, Bilinear(m=2, const=-1)),
    diagonal=True,
    diagonal_offset=1,
)

# sum_{k>=1} (-1)^k q^k/(1-q^(2k-1)) * sum_{n>=k} q^(2n-1)/(1-q^(2n-1))
D_TAIL_SUM = DoubleLambertSpec(
    sign_outer=-1, sign_inner=1,
    num=Bilinear(n=1, m=2, const=-1),
    den1=BiKernel(1, Bilinear(n=2, const=-1)),
    den2=BiKernel(1, Bilinear(m=2, const=-1)),
    diagonal=True,
)

# sum_{n,k>=1} (-1)^k q^(2nk+k-n) / ((1 - q^(2k-1))(1 + q^(2n-1)))
# The numerator exponent has a negative linear part; the bilinear term keeps
# it >= 2 on the whole summation region (validated by the spec checker).
SKEW_SUM = DoubleLambertSpec(
    sign_outer=1, sign_inner=-1,
    num=Bilinear(nm=2, n=-1, m=1),
    den1=BiKernel(1, Bilinear(m=2, const=-1)),
    den2=BiKernel(-1, Bilinear(n=2, const=-1)),
)


def _q_E(order: int) -> TruncSeries:
    """q * E(q), the closed form shared by many right-hand sides."""
    return E_series(order).shift_up(1)


def _records() -> tuple[IdentityRecord, ...]:
    E = E_series
    return (
        IdentityRecord(
            "id.step10",
            lambda n: lambert_single(STEP10_SPEC, n),
            lambda n: _q_E(n),
            ALL_COEFFS,
            "sum q^n/(1+q^(2n-1)) = q*(q^4;q^4)^4/(q^2;q^2)^2",
        ),
        IdentityRecord(
            "id.step11",
            lambda n: lambert_single(STEP11_SPEC, n),
            lambda n: -_q_E(n),
            ALL_COEFFS,
            "sum (-q)^n/(1-q^(2n-1)) = -q*(q^4;q^4)^4/(q^2;q^2)^2",
        ),
        IdentityRecord(
            "id.aab",
            Y_series,
            lambda n: -triangular_sum(Y_TRIANGULAR_SPEC, n),
            ALL_COEFFS,
            "Y = -sum_{k>=2} q^k/(1+q^(2k-1)) * sum_{n=1}^{k-1} q^n/(1+q^n)",
        ),
        IdentityRecord(
            "id.step1",
            Y_series,
            lambda n: -double_lambert(CROSS_SUM, n) + A_series(n),
            ALL_COEFFS,
            "Y = -sum q^(k+n)/((1+q^n)(1+q^(2k-1))) + A",
        ),
        IdentityRecord(
            "id.step3",
            A_series,
            lambda n: -double_lambert(BILINEAR_EVEN_SUM, n) + Z_series(n),
            ALL_COEFFS,
            "A = -sum q^(2kn+k)/((1-q^(2n))(1+q^(2k-1))) + Z",
        ),
        IdentityRecord(
            "id.aux1",
            Y_series,
            lambda n: (
                -double_lambert(CROSS_SUM, n)
                - double_lambert(BILINEAR_EVEN_SUM, n)
                + Z_series(n)
            ),
            ALL_COEFFS,
            "Y = -sum q^(k+n)/((1+q^n)(1+q^(2k-1))) - sum q^(2kn+k)/((1-q^(2n))(1+q^(2k-1))) + Z",
        ),
        IdentityRecord(
            "id.znew",
            Z_series,
            lambda n: double_lambert(Z_TAIL_SUM, n),
            ALL_COEFFS,
            "Z = sum_n q^n/(1+q^(2n-1)) * sum_{k>=n} q^k/(1-q^(2k))",
        ),
        IdentityRecord(
            "id.step6",
            X_series,
            lambda n: -double_lambert(X_TAIL_SUM, n),
            ALL_COEFFS,
            "X = -sum_n q^n/(1-q^n) * sum_{k>=n+1} q^k/(1+q^(2k-1))",
        ),
        IdentityRecord(
            "id.aux2x2",
            lambda n: Z_series(n).scale(2),
            lambda n: (
                double_lambert(MIXED_CROSS_SUM, n).scale(2)
                + X_series(n)
                + Y_series(n)
            ),
            ALL_COEFFS,
            "2Z = 2*sum q^(k+n)/((1+q^(2n-1))(1-q^(2k))) + X + Y  (doubled to clear 1/2)",
        ),
        IdentityRecord(
            "id.main",
            Y_series,
            lambda n: -(E(n) * lambert_single(SUM_EVEN_OVER_ONE_PLUS_EVEN, n)).shift_up(1),
            ALL_COEFFS,
            "Y = -q*E*sum q^(2k)/(1+q^(2k)) with E = (q^4;q^4)^4/(q^2;q^2)^2",
        ),
        IdentityRecord(
            "id.yodd",
            lambda n: Y_series(n) + Y_series(n).subst_neg_q(),
            zero,
            ALL_COEFFS,
            "Y(q) + Y(-q) = 0  (Y is an odd function of q)",
        ),
        IdentityRecord(
            "id.zeven",
            lambda n: Z_series(n).subst_neg_q(),
            Z_series,
            ALL_COEFFS,
            "Z(-q) = Z(q)  (Z is an even function of q)",
        ),
        IdentityRecord(
            "id.aux3",
            lambda n: Y_series(n) + L_series(n),
            lambda n: (
                D_series(n)
                + Z_series(n)
                - (E(n) * lambert_single(SUM_N_OVER_ONE_MINUS_EVEN, n)).shift_up(1)
            ),
            ALL_COEFFS,
            "Y + L = D + Z - q*E*sum q^n/(1-q^(2n))",
        ),
        IdentityRecord(
            "id.step15",
            D_series,
            lambda n: -double_lambert(D_TAIL_SUM, n),
            ALL_COEFFS,
            "D = -sum_k (-1)^k q^k/(1-q^(2k-1)) * sum_{n>=k} q^(2n-1)/(1-q^(2n-1))",
        ),
        IdentityRecord(
            "id.Lclosed",
            L_series,
            lambda n: lambert_single(L_CLOSED_SPEC, n),
            ALL_COEFFS,
            "L = sum_m (-1)^(m-1) q^(3m-1)/(1-q^(2m-1))^2",
        ),
        IdentityRecord(
            "id.step19q",
            lambda n: double_lambert(SKEW_SUM, n).shift_up(1),
            lambda n: -L_series(n).shift_up(1) - N_series(n),
            ALL_COEFFS,
            "q*sum (-1)^k q^(2nk+k-n)/((1-q^(2k-1))(1+q^(2n-1))) = -q*L - N  (cleared of q^-1)",
        ),
        IdentityRecord(
            "id.step22",
            N_series,
            lambda n: (
                (E(n) * lambert_single(SUM_EVEN_OVER_ONE_MINUS_ODD, n)).shift_up(1)
                - D_series(n).shift_up(1)
            ),
            ALL_COEFFS,
            "N = q*E*sum q^(2k)/(1-q^(2k-1)) - q*D",
        ),
        IdentityRecord(
            "id.step20q",
            lambda n: D_series(n).subst_neg_q().shift_up(1),
            lambda n: (
                (E(n) * lambert_single(SUM_EVEN_OVER_ONE_PLUS_ODD, n)).shift_up(1)
                + N_series(n)
            ),
            ALL_COEFFS,
            "q*D(-q) = q*E*sum q^(2n)/(1+q^(2n-1)) + N  (cleared of q^-1)",
        ),
        IdentityRecord(
            "id.step23",
            lambda n: double_lambert(SKEW_SUM, n),
            lambda n: (
                D_series(n)
                - L_series(n)
                - E(n) * lambert_single(SUM_EVEN_OVER_ONE_MINUS_ODD, n)
            ),
            ALL_COEFFS,
            "sum (-1)^k q^(2nk+k-n)/((1-q^(2k-1))(1+q^(2n-1))) = D - L - E*sum q^(2k)/(1-q^(2k-1))",
        ),
        IdentityRecord(
            "id.aux4",
            lambda n: D_series(n) + D_series(n).subst_neg_q(),
            lambda n: (E(n) * lambert_single(SUM_EVEN_OVER_ONE_MINUS_TWICE_ODD, n)).scale(2),
            ALL_COEFFS,
            "D(q) + D(-q) = 2*E*sum q^(2n)/(1-q^(4n-2))",
        ),
        IdentityRecord(
            "id.thm2",
            Z_series,
            L_series,
            EVEN_COEFFS_ONLY,
            "[q^(2r)] Z = [q^(2r)] L for r >= 1 (even coefficients only)",
        ),
        IdentityRecord(
            "id.final",
            lambda n: L_series(n) + L_series(n).subst_neg_q(),
            lambda n: Z_series(n).scale(2),
            ALL_COEFFS,
            "L(q) + L(-q) = 2*Z(q)",
        ),
    )


_REGISTRY = _records()
_BY_NAME = {r.name: r for r in _REGISTRY}


def registry() -> tuple[IdentityRecord, ...]:
    return _REGISTRY


def lookup(name: str) -> IdentityRecord:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownIdentity(name) from None


def _compare(lhs: TruncSeries, rhs: TruncSeries, mode: str, order: int):
    step = 2 if mode == EVEN_COEFFS_ONLY else 1
    for e in range(0, order + 1, step):
        lv, rv = lhs.coeff(e), rhs.coeff(e)
        if lv != rv:
            return (e, lv, rv)
    return None


def verify_record(record: IdentityRecord, order: int) -> VerifyReport:
    started = time.perf_counter()
    lhs = record.lhs(order)
    rhs = record.rhs(order)
    mismatch = _compare(lhs, rhs, record.mode, order)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    status = "pass" if mismatch is None else "fail"
    return VerifyReport(record.name, order, status, mismatch, elapsed_ms)


def verify(name: str, order: int) -> VerifyReport:
    return verify_record(lookup(name), order)


def verify_all(order: int) -> list[VerifyReport]:
    return [verify_record(r, order) for r in _REGISTRY]
