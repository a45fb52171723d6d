"""Exact ring arithmetic on truncated formal power series in q.

A :class:`TruncSeries` represents a power series known exactly through
q**order with arbitrary-precision integer coefficients.  Every operation is
pure and returns a new value; no rounding ever occurs anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

# Below this many coefficients schoolbook multiplication wins; above it the
# Karatsuba path is used.  Both paths must agree exactly (tested).
KARATSUBA_THRESHOLD = 64


class NotAUnit(ValueError):
    """The series is not invertible: its constant term is not +1 or -1."""


class OrderExceeded(IndexError):
    """A requested exponent or comparison order lies outside the represented range."""


@dataclass(frozen=True)
class TruncSeries:
    """A formal power series in q, exact through q**order.

    ``coeffs[e]`` is the coefficient of q**e; ``len(coeffs) == order + 1``.
    Immutable and safe to share across threads.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series represents at least q^0")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, e: int) -> int:
        """Coefficient of q**e.  Raises OrderExceeded outside 0..order."""
        if e < 0 or e > self.order:
            raise OrderExceeded(f"exponent {e} outside represented range 0..{self.order}")
        return self.coeffs[e]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries(tuple(self.coeffs[e] + other.coeffs[e] for e in range(n + 1)))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries(tuple(self.coeffs[e] - other.coeffs[e] for e in range(n + 1)))

    def __neg__(self) -> TruncSeries:
        return TruncSeries(tuple(-c for c in self.coeffs))

    def scale(self, c: int) -> TruncSeries:
        return TruncSeries(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        a = self.coeffs[: n + 1]
        b = other.coeffs[: n + 1]
        return TruncSeries(tuple(_mul_trunc(a, b, n)))

    def __pow__(self, p: int) -> TruncSeries:
        if p < 0:
            return self.invert_unit() ** (-p)
        result = one(self.order)
        for _ in range(p):
            result = result * self
        return result

    # -- substitutions and rearrangements ------------------------------------

    def shift_up(self, k: int) -> TruncSeries:
        """Multiply by q**k: coefficients move up by k, order unchanged."""
        if k < 0:
            raise ValueError("shift_up requires k >= 0; negative powers of q are unrepresentable")
        return TruncSeries((0,) * min(k, self.order + 1) + self.coeffs[: self.order + 1 - k])

    def subst_neg_q(self) -> TruncSeries:
        """Substitute q -> -q: negate odd-exponent coefficients."""
        return TruncSeries(tuple(-c if e % 2 else c for e, c in enumerate(self.coeffs)))

    def subst_q_pow(self, k: int, cap: int | None = None) -> TruncSeries:
        """Substitute q -> q**k (k >= 1); result order is k*order, or ``cap``."""
        if k < 1:
            raise ValueError("subst_q_pow requires k >= 1")
        n = k * self.order if cap is None else cap
        out = [0] * (n + 1)
        for e, c in enumerate(self.coeffs):
            if k * e > n:
                break
            out[k * e] = c
        return TruncSeries(tuple(out))

    def invert_unit(self) -> TruncSeries:
        """Multiplicative inverse to the same order; constant term must be +-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NotAUnit(f"constant term {c0} is not +1 or -1")
        n = self.order
        inv = [0] * (n + 1)
        inv[0] = c0  # 1/(+-1) == +-1
        a = self.coeffs
        for e in range(1, n + 1):
            acc = 0
            for j in range(1, e + 1):
                if a[j]:
                    acc += a[j] * inv[e - j]
            inv[e] = -c0 * acc
        return TruncSeries(tuple(inv))

    def even_part(self) -> TruncSeries:
        return TruncSeries(tuple(c if e % 2 == 0 else 0 for e, c in enumerate(self.coeffs)))

    def odd_part(self) -> TruncSeries:
        return TruncSeries(tuple(c if e % 2 == 1 else 0 for e, c in enumerate(self.coeffs)))

    def truncate(self, m: int) -> TruncSeries:
        if m < 0 or m > self.order:
            raise OrderExceeded(f"cannot truncate order-{self.order} series at {m}")
        return TruncSeries(self.coeffs[: m + 1])

    def equals_upto(self, other: TruncSeries, m: int) -> bool:
        if m > self.order or m > other.order:
            raise OrderExceeded(f"comparison order {m} exceeds a series order")
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None if zero."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    def to_decimal_strings(self) -> list[str]:
        """JSON-safe serialization: decimal strings indexed by exponent."""
        return [str(c) for c in self.coeffs]


# -- constructors -------------------------------------------------------------


def from_coeffs(coeffs) -> TruncSeries:
    return TruncSeries(tuple(int(c) for c in coeffs))


def zero(n: int) -> TruncSeries:
    if n < 0:
        raise ValueError("order must be >= 0")
    return TruncSeries((0,) * (n + 1))


def one(n: int) -> TruncSeries:
    return monomial(1, 0, n)


def monomial(c: int, e: int, n: int) -> TruncSeries:
    """c * q**e truncated at order n; zero if e > n."""
    if n < 0:
        raise ValueError("order must be >= 0")
    if e < 0:
        raise ValueError("negative powers of q are unrepresentable")
    out = [0] * (n + 1)
    if e <= n:
        out[e] = c
    return TruncSeries(tuple(out))


def geometric(s: int, d: int, n: int) -> TruncSeries:
    """1/(1 - s*q**d) = sum_{j>=0} s**j q**(d*j), truncated at order n."""
    if d < 1:
        raise ValueError("geometric requires exponent step d >= 1")
    if s not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = [0] * (n + 1)
    c = 1
    e = 0
    while e <= n:
        out[e] = c
        c *= s
        e += d
    return TruncSeries(tuple(out))


# -- multiplication kernels ----------------------------------------------------


def _mul_trunc(a, b, n: int) -> list[int]:
    if n + 1 >= KARATSUBA_THRESHOLD:
        full = _karatsuba(list(a), list(b))
        full = full[: n + 1]
        return full + [0] * (n + 1 - len(full))
    return _schoolbook_trunc(a, b, n)


def _schoolbook_trunc(a, b, n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _karatsuba(a: list[int], b: list[int]) -> list[int]:
    """Full (untruncated) product of two coefficient lists."""
    la, lb = len(a), len(b)
    if min(la, lb) <= 32:
        out = [0] * (la + lb - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return out
    half = max(la, lb) // 2
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]
    if not a1 or not b1:
        # One operand fits entirely in the low half; fall back to split-free product.
        out = [0] * (la + lb - 1)
        low = _karatsuba(a0 or [0], b0 or [0])
        for i, c in enumerate(low):
            out[i] += c
        if a1:
            hi = _karatsuba(a1, b0 or [0])
            for i, c in enumerate(hi):
                out[half + i] += c
        if b1:
            hi = _karatsuba(a0 or [0], b1)
            for i, c in enumerate(hi):
                out[half + i] += c
        return out
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    sa = [x + y for x, y in zip(a0, a1)] + (a1[len(a0):] or a0[len(a1):])
    sb = [x + y for x, y in zip(b0, b1)] + (b1[len(b0):] or b0[len(b1):])
    z1 = _karatsuba(sa, sb)
    for i, c in enumerate(z0):
        z1[i] -= c
    for i, c in enumerate(z2):
        z1[i] -= c
    out = [0] * (la + lb - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        if c:
            out[half + i] += c
    for i, c in enumerate(z2):
        out[2 * half + i] += c
    return out
