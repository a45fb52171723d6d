"""Summators for single, double, and triangular Lambert series.

A "Lambert series" here is any sum of rational terms with a monomial
numerator and one or two geometric-kernel denominators 1 - s*q**d.  The
specs are declarative (serializable to JSON) so every named series the
engine knows is described by data, not code.

Index conventions: for double and triangular sums the first index is the
outer summation variable and the second the inner one.  Weights have the
restricted shape c(n) = sigma**n * (u*n + v) with sigma in {+1, -1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import TruncSeries


class SpecInvalid(ValueError):
    """A series spec violates its positivity or termination invariants."""


def _sgnpow(s: int, k: int) -> int:
    return -1 if (s == -1 and k % 2) else 1


@dataclass(frozen=True)
class Weight:
    """Term weight c(n) = sigma**n * (u*n + v)."""

    sigma: int = 1
    u: int = 0
    v: int = 1

    def __call__(self, n: int) -> int:
        return _sgnpow(self.sigma, n) * (self.u * n + self.v)

    def as_dict(self) -> dict:
        return {"sigma": self.sigma, "u": self.u, "v": self.v}


@dataclass(frozen=True)
class Affine:
    """Exponent map n -> a*n + b."""

    a: int
    b: int = 0

    def __call__(self, n: int) -> int:
        return self.a * n + self.b

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b}


@dataclass(frozen=True)
class Bilinear:
    """Exponent map (outer, inner) -> nm*outer*inner + n*outer + m*inner + const."""

    nm: int = 0
    n: int = 0
    m: int = 0
    const: int = 0

    def __call__(self, outer: int, inner: int) -> int:
        return self.nm * outer * inner + self.n * outer + self.m * inner + self.const

    def as_dict(self) -> dict:
        return {"nm": self.nm, "outer": self.n, "inner": self.m, "const": self.const}


@dataclass(frozen=True)
class Kernel:
    """Single-index denominator 1 - sign*q**exp(n)."""

    sign: int
    exp: Affine

    def as_dict(self) -> dict:
        return {"sign": self.sign, "exp": self.exp.as_dict()}


@dataclass(frozen=True)
class BiKernel:
    """Two-index denominator 1 - sign*q**exp(outer, inner); exp must be linear."""

    sign: int
    exp: Bilinear

    def as_dict(self) -> dict:
        return {"sign": self.sign, "exp": self.exp.as_dict()}


@dataclass(frozen=True)
class LambertSpec:
    """sum_{n>=start} weight(n) * q**num(n) / (1 - den_sign*q**den(n))**den_pow."""

    weight: Weight
    num: Affine
    den_sign: int
    den: Affine
    den_pow: int = 1
    start: int = 1

    def validate(self) -> None:
        if self.weight.sigma not in (1, -1) or self.den_sign not in (1, -1):
            raise SpecInvalid("signs must be +1 or -1")
        if self.den_pow not in (1, 2):
            raise SpecInvalid("denominator power must be 1 or 2")
        if self.start < 0:
            raise SpecInvalid("start index must be >= 0")
        if self.num.a < 1:
            raise SpecInvalid("numerator exponent must be strictly increasing (a >= 1)")
        if self.start == 0 and self.num(0) < 0:
            raise SpecInvalid("n=0 numerator exponent must be >= 0")
        if self.num(max(self.start, 1)) < 1:
            raise SpecInvalid("numerator exponent must be >= 1 from the first positive index")
        if self.den.a < 0 or self.den(self.start) < 1:
            raise SpecInvalid("denominator exponent must be >= 1 at every summed index")

    def as_dict(self) -> dict:
        return {
            "type": "lambert_single",
            "weight": self.weight.as_dict(),
            "num_exp": self.num.as_dict(),
            "den": {"sign": self.den_sign, "exp": self.den.as_dict(), "power": self.den_pow},
            "start": self.start,
        }


@dataclass(frozen=True)
class DoubleLambertSpec:
    """sum over (outer, inner) of sign_outer**o * sign_inner**i * q**num(o,i)
    divided by two geometric kernels.

    The inner index runs from ``inner_start``, or from ``outer + diagonal_offset``
    when ``diagonal`` is set (tail sums like sum_{m >= n} are re-indexed, not
    filtered out of a rectangle).
    """

    sign_outer: int
    sign_inner: int
    num: Bilinear
    den1: BiKernel
    den2: BiKernel
    start_outer: int = 1
    inner_start: int = 1
    diagonal: bool = False
    diagonal_offset: int = 0

    def inner_min(self, outer: int) -> int:
        return outer + self.diagonal_offset if self.diagonal else self.inner_start

    def validate(self) -> None:
        if self.sign_outer not in (1, -1) or self.sign_inner not in (1, -1):
            raise SpecInvalid("signs must be +1 or -1")
        if self.start_outer < 1 or (not self.diagonal and self.inner_start < 1):
            raise SpecInvalid("summation indices must start at 1 or above")
        if self.diagonal and self.diagonal_offset < 0:
            raise SpecInvalid("diagonal offset must be >= 0")
        n0 = self.start_outer
        m0 = self.inner_min(n0)
        num = self.num
        if num.nm < 0:
            raise SpecInvalid("bilinear numerator coefficient must be >= 0")
        if not (num.nm >= 1 or (num.n >= 1 and num.m >= 1)):
            raise SpecInvalid("numerator exponent must eventually increase in each index")
        # Positivity across the whole summation region follows from the value
        # at the minimal index pair together with monotonicity in each index.
        if num(n0, m0) < 1:
            raise SpecInvalid("numerator exponent must be >= 1 at the minimal index pair")
        if num.nm * m0 + num.n < (1 if not self.diagonal else 0):
            raise SpecInvalid("numerator exponent must increase strictly along the outer index")
        if num.nm * n0 + num.m < 1:
            raise SpecInvalid("numerator exponent must increase strictly along the inner index")
        for den in (self.den1, self.den2):
            if den.sign not in (1, -1):
                raise SpecInvalid("denominator sign must be +1 or -1")
            if den.exp.nm != 0:
                raise SpecInvalid("denominator exponents must be linear in the indices")
            if den.exp.n < 0 or den.exp.m < 0:
                raise SpecInvalid("denominator exponent must be nondecreasing in each index")
            if den.exp(n0, m0) < 1:
                raise SpecInvalid("denominator exponent must be >= 1 at every summed index pair")

    def as_dict(self) -> dict:
        inner = (
            {"mode": "diagonal", "offset": self.diagonal_offset}
            if self.diagonal
            else {"mode": "constant", "value": self.inner_start}
        )
        return {
            "type": "double_lambert",
            "sign_outer": self.sign_outer,
            "sign_inner": self.sign_inner,
            "num_exp": self.num.as_dict(),
            "den1": self.den1.as_dict(),
            "den2": self.den2.as_dict(),
            "start_outer": self.start_outer,
            "inner_lower_bound": inner,
        }


@dataclass(frozen=True)
class TriangularSpec:
    """sum_{k>=start} outer_weight(k) * q**outer_num(k) / outer kernel
    times sum_{n=inner_start}^{k-1} q**inner_num(n) / inner kernel.

    The inner range is empty for k <= inner_start, contributing zero.
    """

    outer_weight: Weight
    outer_num: Affine
    outer_den: Kernel
    inner_num: Affine
    inner_den: Kernel
    inner_start: int = 1
    start: int = 1

    def validate(self) -> None:
        if self.outer_weight.sigma not in (1, -1):
            raise SpecInvalid("signs must be +1 or -1")
        if self.outer_den.sign not in (1, -1) or self.inner_den.sign not in (1, -1):
            raise SpecInvalid("signs must be +1 or -1")
        if self.start < 1 or self.inner_start < 1:
            raise SpecInvalid("summation indices must start at 1 or above")
        if self.outer_num.a < 1 or self.outer_num(self.start) < 1:
            raise SpecInvalid("outer numerator exponent must be >= 1 and increasing")
        if self.outer_den.exp.a < 0 or self.outer_den.exp(self.start) < 1:
            raise SpecInvalid("outer denominator exponent must be >= 1 at every summed index")
        if self.inner_num.a < 0 or self.inner_num(self.inner_start) < 0:
            raise SpecInvalid("inner numerator exponent must be >= 0")
        if self.inner_den.exp.a < 0 or self.inner_den.exp(self.inner_start) < 1:
            raise SpecInvalid("inner denominator exponent must be >= 1 at every summed index")

    def as_dict(self) -> dict:
        return {
            "type": "triangular_sum",
            "outer": {
                "weight": self.outer_weight.as_dict(),
                "num_exp": self.outer_num.as_dict(),
                "den": self.outer_den.as_dict(),
                "start": self.start,
            },
            "inner": {
                "num_exp": self.inner_num.as_dict(),
                "den": self.inner_den.as_dict(),
                "start": self.inner_start,
            },
        }


# -- summators ------------------------------------------------------------------


def _add_rational_term(out: list[int], w: int, e: int, s1: int, d1: int,
                       s2: int, d2: int, order: int) -> None:
    """Accumulate w * q**e / ((1 - s1*q**d1)(1 - s2*q**d2)) into ``out``."""
    ci = w
    for ei in range(e, order + 1, d1):
        c = ci
        for ej in range(ei, order + 1, d2):
            out[ej] += c
            c *= s2
        ci *= s1


def lambert_single(spec: LambertSpec, order: int) -> TruncSeries:
    """Exact expansion of a single Lambert series to the given order."""
    spec.validate()
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [0] * (order + 1)
    n = spec.start
    while True:
        e = spec.num(n)
        if e > order:
            break
        w = spec.weight(n)
        if w:
            d = spec.den(n)
            s = spec.den_sign
            if spec.den_pow == 1:
                c = w
                for ej in range(e, order + 1, d):
                    out[ej] += c
                    c *= s
            else:
                # 1/(1 - s*q**d)**2 = sum_{j>=0} (j+1) * s**j * q**(d*j)
                c = w
                j = 1
                for ej in range(e, order + 1, d):
                    out[ej] += c * j
                    c *= s
                    j += 1
        n += 1
    return TruncSeries(tuple(out))


def double_lambert(spec: DoubleLambertSpec, order: int) -> TruncSeries:
    """Exact expansion of a double Lambert series to the given order."""
    spec.validate()
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [0] * (order + 1)
    n = spec.start_outer
    while True:
        m0 = spec.inner_min(n)
        if spec.num(n, m0) > order:
            break
        wn = _sgnpow(spec.sign_outer, n)
        m = m0
        while True:
            e = spec.num(n, m)
            if e > order:
                break
            w = wn * _sgnpow(spec.sign_inner, m)
            _add_rational_term(
                out, w, e,
                spec.den1.sign, spec.den1.exp(n, m),
                spec.den2.sign, spec.den2.exp(n, m),
                order,
            )
            m += 1
        n += 1
    return TruncSeries(tuple(out))


def triangular_sum(spec: TriangularSpec, order: int) -> TruncSeries:
    """Exact expansion of a nested sum with finite inner range inner_start..k-1."""
    spec.validate()
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [0] * (order + 1)
    k = spec.start
    while True:
        ek = spec.outer_num(k)
        if ek > order:
            break
        wk = spec.outer_weight(k)
        if wk:
            dk = spec.outer_den.exp(k)
            for n in range(spec.inner_start, k):
                e = ek + spec.inner_num(n)
                if e > order:
                    break
                _add_rational_term(
                    out, wk, e,
                    spec.outer_den.sign, dk,
                    spec.inner_den.sign, spec.inner_den.exp(n),
                    order,
                )
        k += 1
    return TruncSeries(tuple(out))


# -- the named series -------------------------------------------------------------

# Y(q) = sum_{n,m>=1} (-1)^m q^(2nm+m) / ((1 - q^(2m-1))(1 + q^n))
Y_SPEC = DoubleLambertSpec(
    sign_outer=1, sign_inner=-1,
    num=Bilinear(nm=2, m=1),
    den1=BiKernel(1, Bilinear(m=2, const=-1)),
    den2=BiKernel(-1, Bilinear(n=1)),
)

# X(q) = sum_{k,n>=1} (-1)^k q^(2kn+k) / ((1 - q^n)(1 - q^(2k-1)))
X_SPEC = DoubleLambertSpec(
    sign_outer=-1, sign_inner=1,
    num=Bilinear(nm=2, n=1),
    den1=BiKernel(1, Bilinear(m=1)),
    den2=BiKernel(1, Bilinear(n=2, const=-1)),
)

# Z(q) = sum_{k,n>=1} q^(2kn) / ((1 + q^(2n-1))(1 - q^(2k-1)))
Z_SPEC = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(nm=2),
    den1=BiKernel(-1, Bilinear(m=2, const=-1)),
    den2=BiKernel(1, Bilinear(n=2, const=-1)),
)

# A(q) = sum_{k>=1} sum_{n>=k} q^(k+n) / ((1 + q^n)(1 + q^(2k-1)))
A_SPEC = DoubleLambertSpec(
    sign_outer=1, sign_inner=1,
    num=Bilinear(n=1, m=1),
    den1=BiKernel(-1, Bilinear(m=1)),
    den2=BiKernel(-1, Bilinear(n=2, const=-1)),
    diagonal=True,
)

# N(q) = sum_{k,n>=1} (-1)^k q^(2kn+k+n) / ((1 + q^(2n-1))(1 - q^(2k-1)))
N_SPEC = DoubleLambertSpec(
    sign_outer=-1, sign_inner=1,
    num=Bilinear(nm=2, n=1, m=1),
    den1=BiKernel(-1, Bilinear(m=2, const=-1)),
    den2=BiKernel(1, Bilinear(n=2, const=-1)),
)

# D(q) = sum_{k>=1} sum_{n=1}^{k-1} q^k / ((1 - q^(2n))(1 + q^(2k-1)))
D_SPEC = TriangularSpec(
    outer_weight=Weight(),
    outer_num=Affine(1),
    outer_den=Kernel(-1, Affine(2, -1)),
    inner_num=Affine(0),
    inner_den=Kernel(1, Affine(2)),
)

# L(q) = sum_{k>=1} (k-1) q^k / (1 + q^(2k-1)); the k=1 weight vanishes, so
# starting at k=1 and k=2 are the same series.
L_SPEC = LambertSpec(
    weight=Weight(u=1, v=-1),
    num=Affine(1),
    den_sign=-1,
    den=Affine(2, -1),
)

# Closed form of L: sum_{m>=1} (-1)^(m-1) q^(3m-1) / (1 - q^(2m-1))^2
L_CLOSED_SPEC = LambertSpec(
    weight=Weight(sigma=-1, v=-1),
    num=Affine(3, -1),
    den_sign=1,
    den=Affine(2, -1),
    den_pow=2,
)

# sum_{n>=1} q^n / (1 + q^(2n-1))  (equals q * E(q))
STEP10_SPEC = LambertSpec(
    weight=Weight(),
    num=Affine(1),
    den_sign=-1,
    den=Affine(2, -1),
)

# sum_{n>=1} (-q)^n / (1 - q^(2n-1))  (equals -q * E(q))
STEP11_SPEC = LambertSpec(
    weight=Weight(sigma=-1),
    num=Affine(1),
    den_sign=1,
    den=Affine(2, -1),
)

# The nested-sum form of Y(q):
# -sum_{k>=2} q^k/(1+q^(2k-1)) * sum_{n=1}^{k-1} q^n/(1+q^n)
# (registered without the leading minus; the inner range is empty at k=1)
Y_TRIANGULAR_SPEC = TriangularSpec(
    outer_weight=Weight(),
    outer_num=Affine(1),
    outer_den=Kernel(-1, Affine(2, -1)),
    inner_num=Affine(1),
    inner_den=Kernel(-1, Affine(1)),
)


@lru_cache(maxsize=None)
def Y_series(order: int) -> TruncSeries:
    return double_lambert(Y_SPEC, order)


@lru_cache(maxsize=None)
def X_series(order: int) -> TruncSeries:
    return double_lambert(X_SPEC, order)


@lru_cache(maxsize=None)
def Z_series(order: int) -> TruncSeries:
    return double_lambert(Z_SPEC, order)


@lru_cache(maxsize=None)
def A_series(order: int) -> TruncSeries:
    return double_lambert(A_SPEC, order)


@lru_cache(maxsize=None)
def N_series(order: int) -> TruncSeries:
    return double_lambert(N_SPEC, order)


@lru_cache(maxsize=None)
def D_series(order: int) -> TruncSeries:
    return triangular_sum(D_SPEC, order)


@lru_cache(maxsize=None)
def L_series(order: int) -> TruncSeries:
    return lambert_single(L_SPEC, order)


# Declarative spec behind every named Lambert builder, keyed by public name.
NAMED_SPECS = {
    "Y": Y_SPEC,
    "X": X_SPEC,
    "Z": Z_SPEC,
    "A": A_SPEC,
    "N": N_SPEC,
    "D": D_SPEC,
    "L": L_SPEC,
    "L_closed": L_CLOSED_SPEC,
    "step10_lhs": STEP10_SPEC,
    "step11_lhs": STEP11_SPEC,
    "Y_triangular": Y_TRIANGULAR_SPEC,
}
