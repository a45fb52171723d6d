"""Maximally naive re-expansion of the named series, for oracle testing.

Every term q**e / (denominator product) is computed by long division of
truncated integer polynomials.  Nothing here touches the TruncSeries ring
or the declarative spec machinery; the summation bounds are written out
directly from each series definition.  Results are plain lists of ints,
index = exponent.
"""

from __future__ import annotations


def poly_mul(p: list[int], q: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, a in enumerate(p):
        if a and i <= order:
            for j, b in enumerate(q):
                if i + j > order:
                    break
                out[i + j] += a * b
    return out


def poly_longdiv(num: list[int], den: list[int], order: int) -> list[int]:
    """Series quotient num/den through q**order; den must have constant term 1."""
    if den[0] != 1:
        raise ValueError("long division requires a denominator with constant term 1")
    quot = [0] * (order + 1)
    for i in range(order + 1):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            if den[j]:
                acc -= den[j] * quot[i - j]
        quot[i] = acc
    return quot


def _term(w: int, e: int, dens: list[tuple[int, int]], order: int) -> list[int]:
    """w * q**e / prod (1 - s*q**d) for (s, d) in dens, via long division."""
    num = [0] * (order + 1)
    if e <= order:
        num[e] = w
    den = [1]
    for s, d in dens:
        factor = [0] * (d + 1)
        factor[0] = 1
        factor[d] = -s
        den = poly_mul(den, factor, order)
    return poly_longdiv(num, den, order)


def _add(total: list[int], term: list[int]) -> None:
    for i, c in enumerate(term):
        total[i] += c


def naive_Y(order: int) -> list[int]:
    total = [0] * (order + 1)
    n = 1
    while 2 * n + 1 <= order:
        m = 1
        while 2 * n * m + m <= order:
            w = -1 if m % 2 else 1
            _add(total, _term(w, 2 * n * m + m, [(1, 2 * m - 1), (-1, n)], order))
            m += 1
        n += 1
    return total


def naive_X(order: int) -> list[int]:
    total = [0] * (order + 1)
    k = 1
    while 3 * k <= order:
        n = 1
        while 2 * k * n + k <= order:
            w = -1 if k % 2 else 1
            _add(total, _term(w, 2 * k * n + k, [(1, n), (1, 2 * k - 1)], order))
            n += 1
        k += 1
    return total


def naive_Z(order: int) -> list[int]:
    total = [0] * (order + 1)
    k = 1
    while 2 * k <= order:
        n = 1
        while 2 * k * n <= order:
            _add(total, _term(1, 2 * k * n, [(-1, 2 * n - 1), (1, 2 * k - 1)], order))
            n += 1
        k += 1
    return total


def naive_A(order: int) -> list[int]:
    total = [0] * (order + 1)
    k = 1
    while 2 * k <= order:
        n = k
        while k + n <= order:
            _add(total, _term(1, k + n, [(-1, n), (-1, 2 * k - 1)], order))
            n += 1
        k += 1
    return total


def naive_N(order: int) -> list[int]:
    total = [0] * (order + 1)
    k = 1
    while 3 * k + 1 <= order:
        n = 1
        while 2 * k * n + k + n <= order:
            w = -1 if k % 2 else 1
            _add(total, _term(w, 2 * k * n + k + n, [(-1, 2 * n - 1), (1, 2 * k - 1)], order))
            n += 1
        k += 1
    return total


def naive_D(order: int) -> list[int]:
    total = [0] * (order + 1)
    for k in range(2, order + 1):
        for n in range(1, k):
            _add(total, _term(1, k, [(1, 2 * n), (-1, 2 * k - 1)], order))
    return total


def naive_L(order: int) -> list[int]:
    total = [0] * (order + 1)
    for k in range(2, order + 1):
        _add(total, _term(k - 1, k, [(-1, 2 * k - 1)], order))
    return total


NAIVE_BUILDERS = {
    "Y": naive_Y,
    "X": naive_X,
    "Z": naive_Z,
    "A": naive_A,
    "N": naive_N,
    "D": naive_D,
    "L": naive_L,
}
