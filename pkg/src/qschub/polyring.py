"""Exact arithmetic for Z[q] and for sparse multivariate polynomials over Z[q].

A ``QPoly`` is a univariate polynomial in q with integer coefficients, stored
densely: index d of the coefficient tuple holds the coefficient of q^d.
Canonical form strips trailing zeros; the zero polynomial is the empty tuple.

An ``MPoly`` is a polynomial in x_1 .. x_n with QPoly coefficients, stored as
a sparse map from exponent tuples to nonzero QPoly values:

    (1-q)*x1^2*x2 + q^2*x3   ->   {(2, 1, 0): 1-q, (0, 0, 1): q^2}

All values are immutable after construction and every operation is pure, so
they can be shared freely between workers.  Equality is structural; terms are
printed in decreasing lexicographic order of exponent vectors, which makes
``str`` deterministic and ``parse_mpoly(str(f), f.n) == f`` a round trip.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator


class QPoly:
    """Element of Z[q], coefficients stored densely by q-degree."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = tuple(coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        self.c = c

    @classmethod
    def const(cls, k: int) -> "QPoly":
        return cls((k,))

    @classmethod
    def q_power(cls, d: int, coeff: int = 1) -> "QPoly":
        return cls((0,) * d + (coeff,))

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self.c) - 1

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        other = _as_qpoly(other)
        return other is not NotImplemented and self.c == other.c

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-v for v in self.c))

    def __sub__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return _as_qpoly(other) + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return QP_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = QP_ONE
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, r):
        """Value at q = r, computed exactly (r may be int or Fraction)."""
        out = 0
        for v in reversed(self.c):
            out = out * r + v
        return out

    def is_int(self) -> bool:
        return len(self.c) <= 1

    def as_int(self) -> int:
        if not self.is_int():
            raise ValueError(f"not a constant: {self}")
        return self.c[0] if self.c else 0

    def divide_one_minus_q(self) -> "QPoly":
        """Exact quotient by (1 - q); raises if not divisible."""
        if self.evaluate(1) != 0:
            raise ValueError(f"{self} is not divisible by 1-q")
        out = []
        acc = 0
        for v in self.c[:-1] if self.c else ():
            acc = v + acc
            out.append(acc)
        return QPoly(out)

    def __str__(self) -> str:
        if not self.c:
            return "0"
        pieces = []
        for d, v in enumerate(self.c):
            if v == 0:
                continue
            mag = _q_piece(abs(v), d)
            if not pieces:
                pieces.append(("-" if v < 0 else "") + mag)
            else:
                pieces.append(("-" if v < 0 else "+") + mag)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def n_terms(self) -> int:
        return sum(1 for v in self.c if v)


def _q_piece(mag: int, d: int) -> str:
    if d == 0:
        return str(mag)
    qpart = "q" if d == 1 else f"q^{d}"
    return qpart if mag == 1 else f"{mag}*{qpart}"


def _as_qpoly(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    return NotImplemented


QP_ZERO = QPoly()
QP_ONE = QPoly((1,))
Q = QPoly((0, 1))
ONE_MINUS_Q = QPoly((1, -1))


def minus_q_power(m: int) -> QPoly:
    """(-q)^m as a QPoly."""
    return QPoly.q_power(m, -1 if m % 2 else 1)


Exponents = tuple  # exponent vector, one nonnegative int per variable


class MPoly:
    """Sparse multivariate polynomial in x_1 .. x_n over Z[q]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("ambient size must be nonnegative")
        self.n = n
        clean: dict[Exponents, QPoly] = {}
        if terms:
            for e, c in terms.items():
                c = _as_qpoly(c)
                if c:
                    if len(e) != n:
                        raise ValueError(f"exponent vector {e} has wrong length for n={n}")
                    clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c) -> "MPoly":
        return cls(n, {(0,) * n: _as_qpoly(c)})

    @classmethod
    def variable(cls, n: int, i: int) -> "MPoly":
        """The polynomial x_i (1-based index)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): QP_ONE})

    @classmethod
    def monomial(cls, n: int, exponents, coeff=QP_ONE) -> "MPoly":
        return cls(n, {tuple(exponents): _as_qpoly(coeff)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(self.n, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def _check_ambient(self, other: "MPoly"):
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(self.n, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_ambient(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e, QP_ZERO) + c
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
        return _raw(self.n, out)

    def __neg__(self) -> "MPoly":
        return _raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-other if isinstance(other, MPoly) else -MPoly.const(self.n, other))

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_ambient(other)
        out: dict[Exponents, QPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(e, QP_ZERO) + c1 * c2
                if acc:
                    out[e] = acc
                else:
                    out.pop(e, None)
        return _raw(self.n, out)

    def __rmul__(self, other) -> "MPoly":
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "MPoly":
        c = _as_qpoly(c)
        if not c:
            return MPoly.zero(self.n)
        return _raw(self.n, {e: v * c for e, v in self.terms.items()})

    def sorted_terms(self) -> Iterator[tuple[Exponents, QPoly]]:
        """Terms in decreasing lexicographic order of exponent vectors."""
        for e in sorted(self.terms, reverse=True):
            yield e, self.terms[e]

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None if inhomogeneous.

        The zero polynomial reports -1 (homogeneous of every degree).
        """
        degs = {sum(e) for e in self.terms}
        if not degs:
            return -1
        if len(degs) > 1:
            return None
        return degs.pop()

    def constant_coefficient(self) -> QPoly:
        return self.terms.get((0,) * self.n, QP_ZERO)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}")
                for i, p in enumerate(e)
                if p
            )
            if c.n_terms() > 1:
                body = f"({c})" + (f"*{mono}" if mono else "")
                sign = "+"
            else:
                d = c.degree
                v = c.c[d]
                sign = "-" if v < 0 else "+"
                parts = []
                if abs(v) != 1 or (d == 0 and not mono):
                    parts.append(str(abs(v)))
                if d:
                    parts.append("q" if d == 1 else f"q^{d}")
                if mono:
                    parts.append(mono)
                body = "*".join(parts)
            if not out:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"MPoly[{self.n}]({self})"


def _raw(n: int, terms: dict) -> MPoly:
    """Build an MPoly from an already-canonical term dict (no copying checks)."""
    p = MPoly.__new__(MPoly)
    p.n = n
    p.terms = terms
    return p


def act_variable_permutation(w, f: MPoly) -> MPoly:
    """Substitute x_i -> x_{w(i)} for a permutation w of 1..n in one-line notation."""
    n = f.n
    if len(w) != n:
        raise ValueError(f"permutation of length {len(w)} applied to n={n} variables")
    out: dict[Exponents, QPoly] = {}
    for e, c in f.terms.items():
        ne = [0] * n
        for pos in range(n):
            ne[w[pos] - 1] = e[pos]
        out[tuple(ne)] = c
    return _raw(n, out)


def swap_variables(f: MPoly, i: int) -> MPoly:
    """Apply the adjacent transposition exchanging x_i and x_{i+1}."""
    if not 1 <= i < f.n:
        raise ValueError(f"transposition index {i} out of range for n={f.n}")
    ii = i - 1
    out = {}
    for e, c in f.terms.items():
        out[e[:ii] + (e[ii + 1], e[ii]) + e[ii + 2:]] = c
    return _raw(f.n, out)


def is_i_symmetric(i: int, f: MPoly) -> bool:
    """True iff f is invariant under exchanging x_i and x_{i+1}."""
    if not 1 <= i < f.n:
        raise ValueError(f"index {i} out of range for n={f.n}")
    ii = i - 1
    for e, c in f.terms.items():
        if e[ii] != e[ii + 1]:
            mirror = e[:ii] + (e[ii + 1], e[ii]) + e[ii + 2:]
            if f.terms.get(mirror) != c:
                return False
    return True


RationalPoly = dict  # exponent tuple -> Fraction, zero values omitted


def specialize_q(f: MPoly, r) -> RationalPoly:
    """Evaluate every coefficient at q = r; exact rational arithmetic."""
    r = Fraction(r)
    out = {}
    for e, c in f.terms.items():
        v = Fraction(c.evaluate(r))
        if v:
            out[e] = v
    return out


def rational_add(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    out = dict(a)
    for e, v in b.items():
        acc = out.get(e, Fraction(0)) + v
        if acc:
            out[e] = acc
        else:
            out.pop(e, None)
    return out


def rational_mul(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    out: RationalPoly = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            acc = out.get(e, Fraction(0)) + v1 * v2
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
    return out


# --- text format ------------------------------------------------------------
#
#   poly   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := INT | 'q' ['^' INT] | 'x'INT ['^' INT] | '(' poly ')'

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(q)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def _tokenize(s: str) -> list:
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ValueError(f"bad character in polynomial at: {s[pos:]!r}")
            break
        pos = m.end()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(2))))
        elif m.group(3):
            tokens.append(("q", None))
        elif m.group(4):
            tokens.append(("pow", None))
        elif m.group(5):
            tokens.append(("mul", None))
        elif m.group(6):
            tokens.append(("plus", None))
        elif m.group(7):
            tokens.append(("minus", None))
        elif m.group(8):
            tokens.append(("open", None))
        else:
            tokens.append(("close", None))
    return tokens


class _Parser:
    def __init__(self, tokens: list, n: int):
        self.tokens = tokens
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ValueError("unexpected end of polynomial text")
        tok = self.tokens[self.pos]
        if kind and tok[0] != kind:
            raise ValueError(f"expected {kind}, found {tok[0]}")
        self.pos += 1
        return tok

    def parse_poly(self) -> MPoly:
        negate = False
        if self.peek() == "minus":
            self.take()
            negate = True
        acc = self.parse_term()
        if negate:
            acc = -acc
        while self.peek() in ("plus", "minus"):
            op = self.take()[0]
            t = self.parse_term()
            acc = acc + (-t if op == "minus" else t)
        return acc

    def parse_term(self) -> MPoly:
        acc = self.parse_factor()
        while self.peek() == "mul":
            self.take()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> MPoly:
        kind, val = self.take()
        if kind == "int":
            return MPoly.const(self.n, val)
        if kind == "q":
            d = self._opt_power()
            return MPoly.const(self.n, QPoly.q_power(d))
        if kind == "var":
            if not 1 <= val <= self.n:
                raise ValueError(f"variable x{val} out of range for n={self.n}")
            d = self._opt_power()
            e = [0] * self.n
            e[val - 1] = d
            return MPoly.monomial(self.n, e)
        if kind == "open":
            inner = self.parse_poly()
            self.take("close")
            return inner
        raise ValueError(f"unexpected token {kind} in polynomial text")

    def _opt_power(self) -> int:
        if self.peek() == "pow":
            self.take()
            return self.take("int")[1]
        return 1


def parse_mpoly(s: str, n: int) -> MPoly:
    """Parse the textual polynomial format back into an MPoly with n variables."""
    parser = _Parser(_tokenize(s), n)
    out = parser.parse_poly()
    if parser.pos != len(parser.tokens):
        raise ValueError(f"trailing tokens in polynomial text: {s!r}")
    return out


def parse_qpoly(s: str) -> QPoly:
    """Parse an element of Z[q] (no x variables allowed)."""
    f = parse_mpoly(s, 0)
    return f.constant_coefficient()
