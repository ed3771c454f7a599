"""Permutation combinatorics for S_n.

Permutations are tuples in one-line notation with 1-based values: position i
(0-based index i-1) holds w(i).  Partitions are weakly decreasing tuples of
positive parts.

Conventions, fixed once and validated by the Schubert recursion tests:

* composition is (u o v)(i) = u(v(i));
* multiplying by the adjacent transposition s_i on the right swaps the
  entries in positions i, i+1; on the left it swaps the values i, i+1;
* hence length(w s_i) < length(w) exactly when w(i) > w(i+1).

>>> canonical_reduced_word((3, 2, 1))
(2, 1, 2)
>>> alt_reduced_word((3, 2, 1))
(1, 2, 1)
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations

from .polyring import QPoly, QP_ZERO, QP_ONE, minus_q_power

Perm = tuple[int, ...]
Partition = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def check_perm(w: Perm) -> Perm:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def length(w: Perm) -> int:
    """Number of inversions of w."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def compose(u: Perm, v: Perm) -> Perm:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for pos, val in enumerate(w):
        out[val - 1] = pos + 1
    return tuple(out)


def mult_right_s(w: Perm, i: int) -> Perm:
    """w * s_i: swap positions i and i+1 (1-based)."""
    ii = i - 1
    return w[:ii] + (w[ii + 1], w[ii]) + w[ii + 2:]


def mult_left_s(w: Perm, i: int) -> Perm:
    """s_i * w: swap values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def right_descents(w: Perm) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def has_left_descent(w: Perm, i: int) -> bool:
    """True iff length(s_i w) < length(w), i.e. value i sits after value i+1."""
    return w.index(i) > w.index(i + 1)


def from_word(n: int, word) -> Perm:
    """Compose s_{a_1} ... s_{a_k} for the index word (a_1, ..., a_k)."""
    w = identity(n)
    for a in reversed(word):
        w = mult_left_s(w, a)  # builds u o s_a products right to left
    return w


def canonical_reduced_word(w: Perm) -> Word:
    """Deterministic reduced word for w, via peeling the minimum to the front.

    Moving the smallest remaining value from position p to the front of its
    block costs the suffix (offset+1, ..., offset+p-1); recursing on the rest
    and concatenating the blocks in reverse recursion order gives a word whose
    length is the inversion number.
    """
    blocks = []
    cur = list(w)
    offset = 0
    while len(cur) > 1:
        p = cur.index(min(cur)) + 1
        blocks.append(range(offset + 1, offset + p))
        del cur[p - 1]
        offset += 1
    out: list[int] = []
    for block in reversed(blocks):
        out.extend(block)
    return tuple(out)


def alt_reduced_word(w: Perm) -> Word:
    """A reduced word different from the canonical one when any exists.

    One commutation or braid move applied to the canonical word; if neither
    applies anywhere, the canonical word is the unique reduced word.
    """
    cw = canonical_reduced_word(w)
    for t in range(len(cw) - 1):
        if abs(cw[t] - cw[t + 1]) > 1:
            return cw[:t] + (cw[t + 1], cw[t]) + cw[t + 2:]
    for t in range(len(cw) - 2):
        a, b = cw[t], cw[t + 1]
        if cw[t + 2] == a and abs(a - b) == 1:
            return cw[:t] + (b, a, b) + cw[t + 3:]
    return cw


def valley_weight(w: Perm) -> QPoly:
    """(-q)^m when w is strictly decreasing then strictly increasing with a
    descending prefix of length m; the zero polynomial otherwise."""
    n = len(w)
    p = w.index(1)  # the valley, if the shape holds, is at the minimum
    for t in range(p):
        if w[t] <= w[t + 1]:
            return QP_ZERO
    for t in range(p, n - 1):
        if w[t] >= w[t + 1]:
            return QP_ZERO
    return minus_q_power(p)


def check_partition(mu, n: int) -> Partition:
    mu = tuple(mu)
    if not mu or any(p <= 0 for p in mu) or any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError(f"not a partition: {mu}")
    if sum(mu) != n:
        raise ValueError(f"partition {mu} does not sum to {n}")
    return mu


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""

    def gen(rest: int, maxpart: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def block_ranges(mu: Partition) -> list[range]:
    """Position blocks of mu: 0-based ranges covering 0..n-1."""
    out = []
    o = 0
    for part in mu:
        out.append(range(o, o + part))
        o += part
    return out


@dataclass(frozen=True)
class CosetDecomposition:
    """w = r o (w_1 x ... x w_t) with r increasing inside every mu-block."""

    mu: Partition
    r: Perm
    blocks: tuple[Perm, ...]

    def recompose(self) -> Perm:
        sigma = []
        o = 0
        for block in self.blocks:
            sigma.extend(o + v for v in block)
            o += len(block)
        return compose(self.r, tuple(sigma))


def coset_decompose(w: Perm, mu) -> CosetDecomposition:
    """Factor w over the Young subgroup of mu-blocks of positions.

    Each block entry is the standardization of w on that block; r sorts the
    block values increasingly and is the minimal-length coset representative.
    """
    mu = check_partition(mu, len(w))
    blocks = []
    r: list[int] = []
    for rng in block_ranges(mu):
        vals = [w[p] for p in rng]
        order = sorted(vals)
        blocks.append(tuple(order.index(v) + 1 for v in vals))
        r.extend(order)
    return CosetDecomposition(mu, tuple(r), tuple(blocks))


def coset_weight(w: Perm, mu) -> QPoly:
    """Product of valley weights over the block components of w."""
    out = QP_ONE
    for block in coset_decompose(w, mu).blocks:
        out = out * valley_weight(block)
        if not out:
            return QP_ZERO
    return out


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n in lexicographic order."""
    return tuple(_itertools_permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def perms_by_length(n: int) -> tuple[tuple[Perm, ...], ...]:
    """Index k holds the permutations with k inversions, lexicographically."""
    top = n * (n - 1) // 2
    buckets: list[list[Perm]] = [[] for _ in range(top + 1)]
    for w in all_perms(n):
        buckets[length(w)].append(w)
    return tuple(tuple(b) for b in buckets)


def perms_of_length(n: int, k: int) -> tuple[Perm, ...]:
    if not 0 <= k <= n * (n - 1) // 2:
        raise ValueError(f"no permutations of length {k} in S_{n}")
    return perms_by_length(n)[k]


def partition_word(mu) -> Word:
    """Ascending generator word 1, 2, ... omitting the block boundaries of mu."""
    mu = tuple(mu)
    out = []
    o = 0
    for part in mu:
        out.extend(range(o + 1, o + part))
        o += part
    return tuple(out)


def cycle_type(w: Perm) -> Partition:
    """Sorted cycle lengths of w, largest first."""
    seen = [False] * len(w)
    out = []
    for start in range(len(w)):
        if seen[start]:
            continue
        size = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = w[p] - 1
            size += 1
        out.append(size)
    return tuple(sorted(out, reverse=True))


# --- RSK and Knuth classes ---------------------------------------------------


def rsk_insertion_tableau(w: Perm) -> tuple[tuple[int, ...], ...]:
    """Row-insertion tableau of w (rows as tuples)."""
    rows: list[list[int]] = []
    for x in w:
        for row in rows:
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                x = None
                break
            row[pos], x = x, row[pos]
        if x is not None:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def tableau_shape(tab) -> Partition:
    return tuple(len(row) for row in tab)


@lru_cache(maxsize=None)
def knuth_classes(n: int) -> tuple[tuple[Partition, tuple[tuple[Perm, ...], ...]], ...]:
    """S_n split into Knuth classes, grouped by RSK shape.

    Two permutations share a class iff they have the same insertion tableau.
    Shapes are listed in decreasing lexicographic order; classes within a
    shape are sorted by their smallest member.
    """
    by_tableau: dict[tuple, list[Perm]] = {}
    for w in all_perms(n):
        by_tableau.setdefault(rsk_insertion_tableau(w), []).append(w)
    by_shape: dict[Partition, list[tuple[Perm, ...]]] = {}
    for tab, members in by_tableau.items():
        by_shape.setdefault(tableau_shape(tab), []).append(tuple(sorted(members)))
    return tuple(
        (shape, tuple(sorted(by_shape[shape])))
        for shape in sorted(by_shape, reverse=True)
    )


def standard_tableaux_count(shape) -> int:
    """Number of standard Young tableaux of the given shape (hook lengths)."""
    shape = tuple(shape)
    n = sum(shape)
    fact = 1
    for v in range(2, n + 1):
        fact *= v
    denom = 1
    for r, width in enumerate(shape):
        for c in range(width):
            arm = width - c - 1
            leg = sum(1 for row in shape[r + 1:] if row > c)
            denom *= arm + leg + 1
    return fact // denom


# --- serialization -----------------------------------------------------------


def perm_str(w: Perm) -> str:
    return ",".join(str(v) for v in w)


def parse_perm(s: str) -> Perm:
    return check_perm(tuple(int(v) for v in s.split(",")))


def partition_str(mu) -> str:
    return "+".join(str(p) for p in mu)


def parse_partition(s: str, n: int) -> Partition:
    return check_partition(tuple(int(v) for v in s.split("+")), n)
