"""Schubert polynomials, expansion in the Schubert basis, and Monk's formula.

The table for S_n starts from the staircase monomial x_1^{n-1} x_2^{n-2} ...
at the longest element and walks down one divided difference per permutation.
Expansion of a homogeneous degree-k polynomial into residue-class coordinates
uses the duality of divided-difference chains with the Schubert basis: the
coordinate at z is the constant obtained by applying the chain of z.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .operators import divided_difference
from .perm import (
    Perm,
    all_perms,
    has_left_descent,
    identity,
    length,
    mult_left_s,
    mult_right_s,
    perms_by_length,
    perms_of_length,
)
from .polyring import MPoly, QPoly, QP_ZERO


@dataclass(frozen=True)
class SchubertTable:
    """All Schubert polynomials of S_n; immutable and shared."""

    n: int
    polys: dict[Perm, MPoly]

    def __getitem__(self, w: Perm) -> MPoly:
        return self.polys[w]

    def basis(self, k: int) -> tuple[Perm, ...]:
        """Length-k permutations in lexicographic order: the degree-k basis."""
        return perms_of_length(self.n, k)

    @property
    def max_degree(self) -> int:
        return self.n * (self.n - 1) // 2


def staircase_monomial(n: int) -> MPoly:
    return MPoly.monomial(n, tuple(n - 1 - j for j in range(n)))


@lru_cache(maxsize=None)
def build_schubert_table(n: int) -> SchubertTable:
    """Compute all n! Schubert polynomials by divided differences.

    Every polynomial is checked to be homogeneous of the right degree with
    nonnegative integer coefficients (classical positivity) before the table
    is frozen.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    by_len = perms_by_length(n)
    top = n * (n - 1) // 2
    polys: dict[Perm, MPoly] = {by_len[top][0]: staircase_monomial(n)}
    for k in range(top - 1, -1, -1):
        for w in by_len[k]:
            i = next(i for i in range(1, n) if w[i - 1] < w[i])  # first ascent
            polys[w] = divided_difference(polys[mult_right_s(w, i)], i)
    for w, f in polys.items():
        assert f.homogeneous_degree() == length(w), f"wrong degree at {w}"
        assert all(
            c.is_int() and c.as_int() > 0 for c in f.terms.values()
        ), f"non-positive coefficient at {w}"
    assert polys[identity(n)] == MPoly.const(n, 1)
    return SchubertTable(n, polys)


@dataclass(frozen=True)
class CoinvariantVector:
    """Residue class of a degree-k polynomial in the Schubert basis; only the
    nonzero coordinates are stored."""

    k: int
    coords: dict[Perm, QPoly]

    def __getitem__(self, z: Perm) -> QPoly:
        return self.coords.get(z, QP_ZERO)

    def is_zero(self) -> bool:
        return not self.coords

    def support(self) -> tuple[Perm, ...]:
        return tuple(sorted(self.coords))


def expand_homogeneous(f: MPoly, k: int, table: SchubertTable) -> CoinvariantVector:
    """Coordinates of f in the degree-k Schubert basis of the quotient.

    Runs one breadth-first sweep over permutations by length, reusing each
    partial divided-difference chain: the value at z of length j is the i-th
    divided difference of the value at s_i z for any left descent i.  Degree-k
    input collapses to constants exactly at the length-k layer.
    """
    n = table.n
    if f.n != n:
        raise ValueError(f"ambient mismatch: polynomial n={f.n}, table n={n}")
    deg = f.homogeneous_degree()
    if deg is None:
        raise ValueError("expansion requires a homogeneous polynomial")
    if not f:
        return CoinvariantVector(k, {})
    if deg != k:
        raise ValueError(f"polynomial is homogeneous of degree {deg}, not {k}")
    layer = {identity(n): f}
    for j in range(1, k + 1):
        nxt: dict[Perm, MPoly] = {}
        for z in perms_by_length(n)[j] if j <= table.max_degree else ():
            i = next(i for i in range(1, n) if has_left_descent(z, i))
            src = layer.get(mult_left_s(z, i))
            if src is None:
                continue
            g = divided_difference(src, i)
            if g:
                nxt[z] = g
        layer = nxt
        if not layer:
            break
    coords = {}
    for z, g in layer.items():
        c = g.constant_coefficient()
        if c:
            coords[z] = c
    return CoinvariantVector(k, coords)


def monk_products(i: int, w: Perm) -> tuple[Perm, ...]:
    """Transposition terms of the product of the i-th elementary Schubert
    class with the class of w, inside S_n.

    All w t_{jk} with j <= i < k <= n whose length is length(w)+1, sorted.
    """
    n = len(w)
    if not 1 <= i < n:
        raise ValueError(f"index {i} out of range for n={n}")
    lw = length(w)
    out = []
    for j in range(1, i + 1):
        for k in range(i + 1, n + 1):
            wt = _apply_transposition(w, j, k)
            if length(wt) == lw + 1:
                out.append(wt)
    return tuple(sorted(out))


def x_action_on_schubert(i: int, w: Perm) -> tuple[tuple[Perm, ...], tuple[Perm, ...]]:
    """Signed supports of multiplication by x_i on the class of w.

    Returns (plus, minus): transposition images t_{ik} with k > i count
    positively, t_{ji} with j < i negatively; only length(w)+1 images enter.
    """
    n = len(w)
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range for n={n}")
    lw = length(w)
    plus = tuple(
        sorted(
            wt
            for k in range(i + 1, n + 1)
            if length(wt := _apply_transposition(w, i, k)) == lw + 1
        )
    )
    minus = tuple(
        sorted(
            wt
            for j in range(1, i)
            if length(wt := _apply_transposition(w, j, i)) == lw + 1
        )
    )
    return plus, minus


def _apply_transposition(w: Perm, j: int, k: int) -> Perm:
    out = list(w)
    out[j - 1], out[k - 1] = out[k - 1], out[j - 1]
    return tuple(out)


def schubert_table_strings(n: int) -> dict[str, str]:
    """Rendered table keyed by one-line notation, for the CLI and golden files."""
    from .perm import perm_str

    table = build_schubert_table(n)
    return {perm_str(w): str(table[w]) for w in all_perms(n)}
