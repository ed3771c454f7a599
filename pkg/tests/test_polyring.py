import random
from fractions import Fraction

import pytest

from qschub.polyring import (
    MPoly,
    ONE_MINUS_Q,
    Q,
    QPoly,
    QP_ONE,
    QP_ZERO,
    act_variable_permutation,
    is_i_symmetric,
    minus_q_power,
    parse_mpoly,
    parse_qpoly,
    rational_add,
    rational_mul,
    specialize_q,
    swap_variables,
)


def x(i, n=3):
    return MPoly.variable(n, i)


class TestQPoly:
    def test_difference_of_squares(self):
        assert ONE_MINUS_Q * QPoly((1, 1)) == QPoly((1, 0, -1))

    def test_minus_q_squared(self):
        assert QPoly((0, -1)) * QPoly((0, -1)) == QPoly((0, 0, 1))

    def test_quadratic_eigenvalue(self):
        # -q satisfies the deformed involution t^2 = (1-q)t + q
        t = QPoly((0, -1))
        assert t * t == ONE_MINUS_Q * t + Q

    def test_canonical_form(self):
        assert QPoly((1, 2, 0, 0)).c == (1, 2)
        assert QPoly((0, 0, 0)).c == ()
        assert not QPoly()
        assert QPoly((5,))

    def test_int_coercion(self):
        assert QPoly((2,)) + 3 == QPoly((5,))
        assert 2 * Q == QPoly((0, 2))
        assert 1 - Q == ONE_MINUS_Q

    def test_evaluate(self):
        p = QPoly((1, -2, 1))
        assert p.evaluate(1) == 0
        assert p.evaluate(Fraction(1, 2)) == Fraction(1, 4)
        assert p.evaluate(0) == 1

    def test_divide_one_minus_q(self):
        p = ONE_MINUS_Q * QPoly((3, 0, -2))
        assert p.divide_one_minus_q() == QPoly((3, 0, -2))
        with pytest.raises(ValueError):
            Q.divide_one_minus_q()

    def test_minus_q_power(self):
        assert minus_q_power(0) == QP_ONE
        assert minus_q_power(1) == QPoly((0, -1))
        assert minus_q_power(2) == QPoly((0, 0, 1))

    def test_str(self):
        assert str(QP_ZERO) == "0"
        assert str(ONE_MINUS_Q) == "1-q"
        assert str(QPoly((0, -1))) == "-q"
        assert str(QPoly((2, 3, -1))) == "2+3*q-q^2"

    def test_ring_axioms_random(self):
        rng = random.Random(4)
        polys = [QPoly(tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, 4)))) for _ in range(12)]
        for a, b, c in zip(polys, polys[1:], polys[2:]):
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a


class TestMPolyArithmetic:
    def test_add_sub(self):
        assert x(1) + x(2) - x(1) == x(2)

    def test_mul(self):
        assert x(1) * x(2) == MPoly.monomial(3, (1, 1, 0))

    def test_coefficient_collapse(self):
        assert x(1).scale(ONE_MINUS_Q) + x(1).scale(Q) == x(1)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            MPoly.variable(2, 1) + MPoly.variable(3, 1)

    def test_pow(self):
        assert x(1) ** 3 == MPoly.monomial(3, (3, 0, 0))
        assert x(1) ** 0 == MPoly.const(3, 1)

    def test_zero_handling(self):
        z = MPoly.zero(3)
        assert not z
        assert z + x(1) == x(1)
        assert z * x(1) == z
        assert x(1) - x(1) == z

    def test_ring_axioms_random(self):
        rng = random.Random(11)

        def rand_poly():
            f = MPoly.zero(3)
            for _ in range(rng.randint(1, 4)):
                e = tuple(rng.randint(0, 2) for _ in range(3))
                f = f + MPoly.monomial(3, e, QPoly((rng.randint(-2, 2), rng.randint(-1, 1))))
            return f

        for _ in range(8):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a


class TestSpecializeQ:
    def test_at_one(self):
        f = x(1, 2).scale(ONE_MINUS_Q) + x(2, 2)
        assert specialize_q(f, 1) == {(0, 1): Fraction(1)}

    def test_at_zero(self):
        f = MPoly.monomial(2, (1, 0), QPoly((0, 0, 1)))
        assert specialize_q(f, 0) == {}

    def test_at_half(self):
        f = x(1, 2).scale(ONE_MINUS_Q)
        assert specialize_q(f, Fraction(1, 2)) == {(1, 0): Fraction(1, 2)}

    def test_commutes_with_arithmetic(self):
        rng = random.Random(3)
        for _ in range(6):
            f = MPoly.monomial(2, (rng.randint(0, 2), rng.randint(0, 2)), QPoly((1, rng.randint(-2, 2))))
            g = MPoly.monomial(2, (rng.randint(0, 2), 1), QPoly((rng.randint(-2, 2), 1))) + MPoly.const(2, 2)
            r = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            assert specialize_q(f * g, r) == rational_mul(specialize_q(f, r), specialize_q(g, r))
            assert specialize_q(f + g, r) == rational_add(specialize_q(f, r), specialize_q(g, r))


class TestVariablePermutation:
    def test_transposition(self):
        assert act_variable_permutation((2, 1), MPoly.variable(2, 1)) == MPoly.variable(2, 2)

    def test_symmetric_monomial_fixed(self):
        f = x(1, 2) * x(2, 2)
        assert act_variable_permutation((2, 1), f) == f

    def test_relabeling(self):
        f = x(1) * x(1) * x(2)
        assert act_variable_permutation((3, 1, 2), f) == x(3) * x(3) * x(1)

    def test_swap_matches_act(self):
        f = x(1) ** 2 + x(2) * x(3)
        assert swap_variables(f, 1) == act_variable_permutation((2, 1, 3), f)

    def test_multiplicative(self):
        rng = random.Random(7)
        for _ in range(6):
            f = MPoly.monomial(3, (rng.randint(0, 2),) * 3, QPoly((1, 1))) + x(rng.randint(1, 3))
            g = x(rng.randint(1, 3)) + MPoly.const(3, rng.randint(1, 3))
            w = tuple(rng.sample([1, 2, 3], 3))
            assert act_variable_permutation(w, f * g) == act_variable_permutation(w, f) * act_variable_permutation(w, g)

    def test_composition_order(self):
        from qschub.perm import compose

        f = x(1) ** 2 * x(2)
        u, v = (2, 3, 1), (3, 1, 2)
        assert act_variable_permutation(u, act_variable_permutation(v, f)) == act_variable_permutation(
            compose(u, v), f
        )


class TestISymmetric:
    def test_examples(self):
        assert is_i_symmetric(1, x(1, 2) + x(2, 2))
        assert not is_i_symmetric(1, x(1, 2))
        assert is_i_symmetric(1, x(1) * x(2) + x(3))

    def test_product_of_symmetric(self):
        f = x(1) + x(2)
        g = x(1) * x(2) + MPoly.const(3, 1)
        assert is_i_symmetric(1, f * g)


class TestTextFormat:
    def test_printing(self):
        f = (x(1) ** 2 * x(2)).scale(ONE_MINUS_Q) + x(3).scale(QPoly((0, 0, 1)))
        assert str(f) == "(1-q)*x1^2*x2 + q^2*x3"

    def test_negative_leading(self):
        assert str(-x(1)) == "-x1"
        assert str(x(2) - x(1)) == "-x1 + x2"

    def test_constants(self):
        assert str(MPoly.const(2, 1)) == "1"
        assert str(MPoly.zero(2)) == "0"
        assert str(MPoly.const(2, ONE_MINUS_Q)) == "(1-q)"

    def test_round_trip_random(self):
        rng = random.Random(19)
        for _ in range(25):
            f = MPoly.zero(3)
            for _ in range(rng.randint(0, 5)):
                e = tuple(rng.randint(0, 3) for _ in range(3))
                c = QPoly(tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 3))))
                f = f + MPoly.monomial(3, e, c)
            assert parse_mpoly(str(f), 3) == f

    def test_parse_examples(self):
        assert parse_mpoly("x1^2*x2 + q*x3", 3) == x(1) ** 2 * x(2) + x(3).scale(Q)
        assert parse_mpoly("0", 3) == MPoly.zero(3)
        assert parse_mpoly("- x1 + 2", 3) == MPoly.const(3, 2) - x(1)
        assert parse_qpoly("1-q") == ONE_MINUS_Q
        assert parse_qpoly("(1-q)*(1+q)") == QPoly((1, 0, -1))

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_mpoly("x4", 3)
        with pytest.raises(ValueError):
            parse_mpoly("x1 +", 3)
        with pytest.raises(ValueError):
            parse_mpoly("x1 ~ x2", 3)
