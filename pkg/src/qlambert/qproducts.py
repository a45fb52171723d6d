"""Builders for q-Pochhammer products, eta quotients, and the series omega(q).

All products here have arguments of the restricted shape a = s*q**j0 with
j0 >= 1, so every infinite product is a unit (constant term 1) and every
quotient of such products is again a power series.

Truncation note: a factor (1 - s*q**e) with e > N equals 1 modulo q**(N+1),
so infinite products only ever need the finitely many factors whose smallest
exponent j0 + b*j is <= N; omitting the rest cannot change any coefficient
at or below the truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import TruncSeries, one


def _mul_binomial(coeffs: list[int], s: int, e: int, n: int) -> None:
    """In-place multiply a coefficient list by (1 - s*q**e), truncated at n."""
    if e > n:
        return
    for i in range(n - e, -1, -1):
        c = coeffs[i]
        if c:
            coeffs[i + e] -= s * c


def pochhammer_finite(j0: int, b: int, s: int, n: int, order: int) -> TruncSeries:
    """(s*q**j0; q**b)_n = prod_{j=0}^{n-1} (1 - s*q**(j0 + b*j)), truncated."""
    if j0 < 1 or b < 1 or n < 0 or s not in (1, -1):
        raise ValueError("pochhammer_finite requires j0 >= 1, b >= 1, n >= 0, s in {+1,-1}")
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [0] * (order + 1)
    out[0] = 1
    for j in range(n):
        e = j0 + b * j
        if e > order:
            break  # every later factor is 1 modulo q**(order+1)
        _mul_binomial(out, s, e, order)
    return TruncSeries(tuple(out))


def pochhammer_inf(j0: int, b: int, s: int, order: int) -> TruncSeries:
    """(s*q**j0; q**b)_inf truncated at ``order``."""
    if j0 < 1 or b < 1 or s not in (1, -1):
        raise ValueError("pochhammer_inf requires j0 >= 1, b >= 1, s in {+1,-1}")
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [0] * (order + 1)
    out[0] = 1
    e = j0
    while e <= order:
        _mul_binomial(out, s, e, order)
        e += b
    return TruncSeries(tuple(out))


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A product of infinite q-Pochhammer symbols raised to integer powers.

    Each factor (j0, b, s, p) denotes (s*q**j0; q**b)_inf ** p.  Offsets are
    required to be >= 1 so every factor is a unit and negative powers stay
    inside the power-series ring.
    """

    factors: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("eta quotient needs at least one factor")
        for j0, b, s, p in self.factors:
            if j0 < 1 or b < 1 or s not in (1, -1) or p == 0:
                raise ValueError(f"invalid eta quotient factor {(j0, b, s, p)}")

    def as_dict(self) -> dict:
        return {
            "type": "eta_quotient",
            "factors": [
                {"offset": j0, "step": b, "sign": s, "power": p}
                for j0, b, s, p in self.factors
            ],
        }


def eta_quotient(spec: EtaQuotientSpec, order: int) -> TruncSeries:
    """Expand the quotient of infinite products described by ``spec``."""
    result = one(order)
    for j0, b, s, p in spec.factors:
        base = pochhammer_inf(j0, b, s, order)
        if p < 0:
            base = base.invert_unit()
        for _ in range(abs(p)):
            result = result * base
    return result


# (q^4;q^4)_inf^4 / (q^2;q^2)_inf^2 -- the even eta quotient appearing on the
# product side of every closed form in the identity registry.
E_SPEC = EtaQuotientSpec(((4, 4, 1, 4), (2, 2, 1, -2)))


@lru_cache(maxsize=None)
def E_series(order: int) -> TruncSeries:
    return eta_quotient(E_SPEC, order)


@lru_cache(maxsize=None)
def omega_series(order: int) -> TruncSeries:
    """omega(q) = sum_{n>=0} q**(2n^2+2n) / (q; q^2)_{n+1}^2, truncated.

    Terms with valuation 2n^2+2n above the order contribute nothing.
    q * omega(q) is the generating function for partitions in which every
    odd part is less than twice the smallest part.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    total = [0] * (order + 1)
    n = 0
    while 2 * n * n + 2 * n <= order:
        denom = pochhammer_finite(1, 2, 1, n + 1, order)
        inv = denom.invert_unit()
        term = (inv * inv).shift_up(2 * n * n + 2 * n)
        for e, c in enumerate(term.coeffs):
            total[e] += c
        n += 1
    return TruncSeries(tuple(total))
