"""Shared test oracles: exact Fraction linear algebra and ideal membership."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from qschub.polyring import MPoly


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve A x = b over the rationals; returns None if inconsistent.

    Gaussian elimination on the augmented matrix; free columns get 0.
    """
    m = len(rows)
    cols = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[r])] for r, row in enumerate(rows)]
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, m) if aug[r][col]), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = aug[rank][col]
        aug[rank] = [v / inv for v in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, m):
        if aug[r][cols]:
            return None
    x = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        x[col] = aug[r][cols]
    return x


def monomial_exponents(n: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def elementary_symmetric(n: int, t: int) -> MPoly:
    out = MPoly.zero(n)
    from itertools import combinations

    for subset in combinations(range(1, n + 1), t):
        term = MPoly.const(n, 1)
        for i in subset:
            term = term * MPoly.variable(n, i)
        out = out + term
    return out


def ideal_spanning_columns(n: int, degree: int) -> list[dict[tuple[int, ...], Fraction]]:
    """Spanning set of the degree-`degree` slice of the ideal generated by the
    positive-degree symmetric polynomials, as rational coefficient dicts."""
    cols = []
    for t in range(1, n + 1):
        if t > degree:
            break
        e_t = elementary_symmetric(n, t)
        for mono in monomial_exponents(n, degree - t):
            shifted = e_t * MPoly.monomial(n, mono)
            cols.append({e: Fraction(c.as_int()) for e, c in shifted.terms.items()})
    return cols


def in_ideal_rational(poly: dict[tuple[int, ...], Fraction], n: int, degree: int) -> bool:
    """Exact membership of a homogeneous rational polynomial in the symmetric
    ideal slice, via a linear solve against the spanning set."""
    if not poly:
        return True
    cols = ideal_spanning_columns(n, degree)
    monos = monomial_exponents(n, degree)
    index = {e: i for i, e in enumerate(monos)}
    rows = [[col.get(e, Fraction(0)) for col in cols] for e in monos]
    rhs = [Fraction(0)] * len(monos)
    for e, v in poly.items():
        rhs[index[e]] = v
    return solve_exact(rows, rhs) is not None
