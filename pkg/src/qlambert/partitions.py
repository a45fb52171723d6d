"""Combinatorial oracles: partition counts with the odd-part constraint.

pw_count(n) counts partitions of n in which every odd part is less than
twice the smallest part.  pwbar_count(n) is the overpartition analogue in
which the smallest part is always overlined and each other distinct part
size may independently be overlined or not, giving weight 2**(d-1) per
qualifying partition with d distinct part sizes.

These are pure enumerations sharing no code with the series engine; they
exist to cross-check the series side, so clarity beats cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def partitions_ascending(n: int) -> Iterator[list[int]]:
    """All partitions of n as ascending part lists (accelerated ascent order)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        ell = k + 1
        while x <= y:
            a[k] = x
            a[ell] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _odd_parts_below_twice_smallest(parts: list[int]) -> bool:
    bound = 2 * parts[0]  # parts are ascending, so parts[0] is the smallest
    return all(p < bound for p in parts if p % 2)


def pw_count(n: int) -> int:
    """Partitions of n with every odd part < 2 * smallest part; 0 for n = 0.

    The n = 0 convention matches the series side: q * omega(q) has no
    constant term.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    return sum(1 for p in partitions_ascending(n) if _odd_parts_below_twice_smallest(p))


def pwbar_count(n: int) -> int:
    """Overpartition count: weight 2**(distinct sizes - 1) per qualifying partition."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    total = 0
    for p in partitions_ascending(n):
        if _odd_parts_below_twice_smallest(p):
            total += 1 << (len(set(p)) - 1)
    return total


_PARTITION_COUNTS = [1]


def partition_count(n: int) -> int:
    """Unrestricted partition count p(n), by the pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_PARTITION_COUNTS) <= n:
        m = len(_PARTITION_COUNTS)
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * _PARTITION_COUNTS[m - g1]
            if g2 <= m:
                total += sign * _PARTITION_COUNTS[m - g2]
            j += 1
        _PARTITION_COUNTS.append(total)
    return _PARTITION_COUNTS[n]


@dataclass(frozen=True)
class ScanEntry:
    n: int
    value: int
    residue: int
    ok: bool

    def as_dict(self) -> dict:
        return {"n": self.n, "value": str(self.value), "residue": self.residue, "pass": self.ok}


@dataclass(frozen=True)
class ScanReport:
    """Result of checking pwbar_count over an arithmetic progression."""

    progression_modulus: int
    progression_residue: int
    divisor: int
    entries: tuple[ScanEntry, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.ok for e in self.entries)

    def as_json(self) -> list[dict]:
        return [e.as_dict() for e in self.entries]


def congruence_scan(residue: int, modulus: int, divisor: int, max_n: int) -> ScanReport:
    """Check pwbar_count(k) == 0 (mod divisor) for k <= max_n with k = residue (mod modulus)."""
    if modulus < 1 or not (0 <= residue < modulus):
        raise ValueError("need 0 <= residue < modulus")
    if divisor < 2:
        raise ValueError("divisor modulus must be >= 2")
    entries = []
    for k in range(residue if residue else modulus, max_n + 1, modulus):
        value = pwbar_count(k)
        r = value % divisor
        entries.append(ScanEntry(k, value, r, r == 0))
    return ScanReport(modulus, residue, divisor, tuple(entries))


@dataclass(frozen=True)
class CrosscheckReport:
    checked_up_to: int
    first_mismatch: tuple[int, int, int] | None  # (n, enumeration, series coefficient)

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def pw_omega_crosscheck(max_n: int) -> CrosscheckReport:
    """Compare pw_count(n) against the coefficient of q**n in q*omega(q)."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    from .qproducts import omega_series

    q_omega = omega_series(max_n).shift_up(1)
    for n in range(1, max_n + 1):
        enumerated = pw_count(n)
        series_side = q_omega.coeff(n)
        if enumerated != series_side:
            return CrosscheckReport(max_n, (n, enumerated, series_side))
    return CrosscheckReport(max_n, None)
