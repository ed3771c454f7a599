import random
from fractions import Fraction

import pytest

from helpers import in_ideal_rational, monomial_exponents, solve_exact, ideal_spanning_columns

from qschub.operators import divided_difference
from qschub.perm import all_perms, identity, length, mult_right_s, perms_of_length
from qschub.polyring import MPoly, QPoly, QP_ONE, specialize_q
from qschub.schubert import (
    build_schubert_table,
    expand_homogeneous,
    monk_products,
    schubert_table_strings,
    staircase_monomial,
    x_action_on_schubert,
)


def x(i, n=3):
    return MPoly.variable(n, i)


class TestTable:
    def test_n1(self):
        table = build_schubert_table(1)
        assert table[(1,)] == MPoly.const(1, 1)

    def test_n2(self):
        table = build_schubert_table(2)
        assert table[(1, 2)] == MPoly.const(2, 1)
        assert table[(2, 1)] == MPoly.variable(2, 1)

    def test_n3_exact(self):
        table = build_schubert_table(3)
        assert table[(2, 1, 3)] == x(1)
        assert table[(1, 3, 2)] == x(1) + x(2)
        assert table[(2, 3, 1)] == x(1) * x(2)
        assert table[(3, 1, 2)] == x(1) ** 2
        assert table[(3, 2, 1)] == x(1) ** 2 * x(2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_linear_classes(self, n):
        table = build_schubert_table(n)
        acc = MPoly.zero(n)
        for i in range(1, n):
            acc = acc + MPoly.variable(n, i)
            assert table[mult_right_s(identity(n), i)] == acc

    def test_staircase_top(self):
        table = build_schubert_table(4)
        assert table[(4, 3, 2, 1)] == staircase_monomial(4)
        assert staircase_monomial(4) == MPoly.monomial(4, (3, 2, 1, 0))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_recursion(self, n):
        table = build_schubert_table(n)
        for w in all_perms(n):
            for i in range(1, n):
                image = divided_difference(table[w], i)
                if w[i - 1] > w[i]:
                    assert image == table[mult_right_s(w, i)]
                else:
                    assert not image

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_degrees_and_positivity(self, n):
        table = build_schubert_table(n)
        for w, f in table.polys.items():
            assert f.homogeneous_degree() == length(w)
            assert all(c.is_int() and c.as_int() > 0 for c in f.terms.values())

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_basis_sizes(self, n):
        table = build_schubert_table(n)
        for k in range(table.max_degree + 1):
            assert len(table.basis(k)) == len(perms_of_length(n, k))
        assert sum(len(table.basis(k)) for k in range(table.max_degree + 1)) == len(all_perms(n))


class TestExpansion:
    def test_duality(self):
        for n in (2, 3, 4):
            table = build_schubert_table(n)
            for w in all_perms(n):
                vec = expand_homogeneous(table[w], length(w), table)
                assert vec.coords == {w: QP_ONE}

    def test_linear_ideal_class(self):
        table = build_schubert_table(2)
        vec = expand_homogeneous(MPoly.variable(2, 1) + MPoly.variable(2, 2), 1, table)
        assert vec.is_zero()

    def test_symmetric_multiple_vanishes(self):
        table = build_schubert_table(3)
        e1_x1 = (x(1) + x(2) + x(3)) * x(1)
        vec = expand_homogeneous(e1_x1, 2, table)
        assert vec.is_zero()

    def test_zero_polynomial(self):
        table = build_schubert_table(3)
        assert expand_homogeneous(MPoly.zero(3), 2, table).is_zero()

    def test_errors(self):
        table = build_schubert_table(3)
        with pytest.raises(ValueError):
            expand_homogeneous(x(1) + x(1) * x(2), 1, table)
        with pytest.raises(ValueError):
            expand_homogeneous(x(1), 2, table)
        with pytest.raises(ValueError):
            expand_homogeneous(MPoly.variable(2, 1), 1, table)

    def _random_homogeneous(self, n, k, rng):
        f = MPoly.zero(n)
        for e in rng.sample(monomial_exponents(n, k), k=min(4, len(monomial_exponents(n, k)))):
            f = f + MPoly.monomial(n, e, QPoly((rng.randint(-3, 3), rng.randint(-2, 2))))
        return f

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_round_trip_reexpansion(self, k):
        n = 3
        table = build_schubert_table(n)
        rng = random.Random(20 + k)
        for _ in range(5):
            f = self._random_homogeneous(n, k, rng)
            vec = expand_homogeneous(f, k, table)
            residue = f
            for z, c in vec.coords.items():
                residue = residue - table[z].scale(c)
            assert expand_homogeneous(residue, k, table).is_zero()
            # exact ideal membership at random rational q values
            for q in (Fraction(2, 3), Fraction(-1, 2), Fraction(5)):
                assert in_ideal_rational(specialize_q(residue, q), n, k)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_against_linear_solve_oracle(self, k):
        """Dense solve modulo the ideal slice reproduces the chain coordinates."""
        n = 3
        table = build_schubert_table(n)
        rng = random.Random(30 + k)
        basis = table.basis(k)
        monos = monomial_exponents(n, k)
        index = {e: i for i, e in enumerate(monos)}
        schubert_cols = [
            {e: Fraction(c.as_int()) for e, c in table[z].terms.items()} for z in basis
        ]
        ideal_cols = ideal_spanning_columns(n, k)
        for _ in range(5):
            f = self._random_homogeneous(n, k, rng)
            vec = expand_homogeneous(f, k, table)
            for q in (Fraction(3, 2), Fraction(-2)):
                spec = specialize_q(f, q)
                rows = [
                    [col.get(e, Fraction(0)) for col in schubert_cols + ideal_cols]
                    for e in monos
                ]
                rhs = [spec.get(e, Fraction(0)) for e in monos]
                solution = solve_exact(rows, rhs)
                assert solution is not None
                for j, z in enumerate(basis):
                    assert solution[j] == Fraction(vec[z].evaluate(q))


class TestMonk:
    def test_examples(self):
        assert monk_products(1, (2, 1, 3)) == ((3, 1, 2),)
        assert monk_products(1, (1, 2)) == ((2, 1),)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_against_polynomial_expansion(self, n):
        table = build_schubert_table(n)
        for i in range(1, n):
            si_class = table[mult_right_s(identity(n), i)]
            for w in all_perms(n):
                k = length(w) + 1
                vec = expand_homogeneous(si_class * table[w], k, table)
                expected = monk_products(i, w)
                assert vec.support() == expected
                assert all(vec[z] == QP_ONE for z in expected)

    def test_lengths(self):
        for w in all_perms(4):
            for i in range(1, 4):
                for wt in monk_products(i, w):
                    assert length(wt) == length(w) + 1


class TestXAction:
    def test_first_variable_on_identity(self):
        plus, minus = x_action_on_schubert(1, identity(3))
        assert plus == ((2, 1, 3),)
        assert minus == ()

    def test_second_variable_on_identity(self):
        plus, minus = x_action_on_schubert(2, identity(3))
        assert plus == ((1, 3, 2),)
        assert minus == ((2, 1, 3),)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_against_expansion(self, n):
        from qschub.operators import mul_x

        table = build_schubert_table(n)
        for i in range(1, n + 1):
            for w in all_perms(n):
                plus, minus = x_action_on_schubert(i, w)
                vec = expand_homogeneous(mul_x(table[w], i), length(w) + 1, table)
                signed = {}
                for z in plus:
                    signed[z] = signed.get(z, 0) + 1
                for z in minus:
                    signed[z] = signed.get(z, 0) - 1
                assert vec.coords == {z: QPoly((v,)) for z, v in signed.items() if v}


class TestRendering:
    def test_n2_strings(self):
        assert schubert_table_strings(2) == {"1,2": "1", "2,1": "x1"}

    def test_n1_strings(self):
        assert schubert_table_strings(1) == {"1": "1"}
