import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_rationals, rationals
from qcalc.errors import ZeroInverseError
from qcalc.scalars import (
    ComplexRational,
    ExactRational,
    Float64,
    GaussianRational,
    PrimeField,
    ScalarKind,
    is_prime,
    parse_rational,
    scalar_field_selfcheck,
    scalar_nth_root,
)

Q = ExactRational()
C = ComplexRational()


def g(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


class TestExactRational:
    def test_square_root_of_four(self):
        assert scalar_nth_root(Q, Fraction(4), 2) == 2

    def test_square_root_of_two_missing(self):
        assert scalar_nth_root(Q, Fraction(2), 2) is None

    def test_odd_root_keeps_sign(self):
        assert scalar_nth_root(Q, Fraction(-27, 8), 3) == Fraction(-3, 2)

    def test_even_root_is_nonnegative(self):
        assert scalar_nth_root(Q, Fraction(16, 81), 4) == Fraction(2, 3)
        assert scalar_nth_root(Q, Fraction(-4), 2) is None

    def test_root_degree_validated(self):
        with pytest.raises(ValueError):
            scalar_nth_root(Q, Fraction(4), 0)

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroInverseError):
            Q.inv(Fraction(0))

    def test_rationals_always_reduced(self):
        x = Q.add(Fraction(1, 6), Fraction(1, 3))
        assert (x.numerator, x.denominator) == (1, 2)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            Q.coerce(0.5)

    @given(rationals(), st.integers(1, 5))
    def test_root_of_power_round_trips(self, x, n):
        r = scalar_nth_root(Q, x**n, n)
        assert r is not None and r**n == x**n
        assert abs(r) == abs(x)

    @given(rationals(), st.integers(1, 6))
    def test_returned_roots_are_exact(self, x, n):
        r = scalar_nth_root(Q, x, n)
        if r is not None:
            assert r**n == x

    def test_selfcheck_on_random_samples(self):
        rng = random.Random(7)
        samples = [Q.random(rng) for _ in range(1000)]
        assert scalar_field_selfcheck(Q, samples).passed

    def test_random_triples(self):
        rng = random.Random(11)
        for _ in range(10_000):
            a, b, c = (Q.random(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert Q.mul(a, Q.inv(a)) == 1


class TestPrimeField:
    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            PrimeField(4)

    def test_two_is_not_a_square_mod_three(self):
        assert scalar_nth_root(PrimeField(3), 2, 2) is None

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_exhaustive_field_axioms(self, p):
        f = PrimeField(p)
        assert scalar_field_selfcheck(f, list(f.elements())).passed

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_roots_match_brute_force(self, p):
        f = PrimeField(p)
        for x, n in itertools.product(range(p), range(1, p + 1)):
            expected = next((r for r in range(p) if pow(r, n, p) == x), None)
            assert f.nth_root(x, n) == expected

    def test_fraction_literal(self):
        f = PrimeField(7)
        assert f.parse("1/2") == 4
        assert f.parse("0.5") == 4

    def test_is_prime(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestComplexRational:
    def test_square_root_of_minus_four(self):
        assert C.nth_root(g(-4), 2) == g(0, 2)
        assert set(C.all_nth_roots(g(-4), 2)) == {g(0, 2), g(0, -2)}

    def test_fourth_roots_of_unity(self):
        assert set(C.all_nth_roots(C.one, 4)) == {g(1), g(-1), g(0, 1), g(0, -1)}

    def test_square_root_of_two_i(self):
        assert C.nth_root(g(0, 2), 2) == g(1, 1)

    def test_cube_root(self):
        assert C.nth_root(g(-8), 3) == g(-2)

    def test_no_rational_root(self):
        assert C.nth_root(g(5), 2) is None
        assert C.nth_root(g(2), 2) is None

    def test_canonical_root_has_largest_real_part(self):
        assert C.nth_root(g(3, 4), 2) == g(2, 1)

    @given(rationals(max_value=6, max_denominator=4), rationals(max_value=6, max_denominator=4), st.integers(1, 4))
    def test_powers_have_their_base_as_a_root(self, re, im, n):
        z = g(re, im)
        zn = C.pow(z, n)
        roots = C.all_nth_roots(zn, n)
        assert z in roots
        assert all(C.pow(r, n) == zn for r in roots)
        assert C.nth_root(zn, n) == max(roots, key=lambda r: (r.re, r.im))

    @pytest.mark.parametrize("text,value", [("1+2i", g(1, 2)), ("i", g(0, 1)), ("-i", g(0, -1)), ("3/2-i", g(Fraction(3, 2), -1)), ("4", g(4))])
    def test_parse_and_format(self, text, value):
        assert C.parse(text) == value
        assert C.format(value) == text

    def test_random_triples(self):
        rng = random.Random(13)
        for _ in range(10_000):
            a, b, c = (C.random(rng) for _ in range(3))
            assert C.add(C.add(a, b), c) == C.add(a, C.add(b, c))
            assert C.mul(a, C.add(b, c)) == C.add(C.mul(a, b), C.mul(a, c))
            if not C.is_zero(a):
                assert C.mul(a, C.inv(a)) == C.one


class TestFloat64:
    def test_flagged_inexact(self):
        assert Float64.inexact and not ExactRational.inexact
        assert Float64().kind is ScalarKind.FLOAT64

    def test_square_root_within_tolerance(self):
        r = scalar_nth_root(Float64(), 2.0, 2)
        assert math.isclose(r * r, 2.0, rel_tol=1e-12)

    def test_negative_even_root_missing(self):
        assert Float64().nth_root(-1.0, 2) is None
        assert Float64().nth_root(-8.0, 3) == pytest.approx(-2.0)

    def test_selfcheck_uses_tolerance(self):
        f = Float64()
        rng = random.Random(3)
        assert scalar_field_selfcheck(f, [f.random(rng) for _ in range(200)]).passed


class _BrokenField(PrimeField):
    """GF(5) with a multiplication that is not associative."""

    def mul(self, a, b):
        if {a, b} == {2, 3}:
            return 2
        return super().mul(a, b)


def test_selfcheck_reports_violations():
    f = _BrokenField(5)
    report = scalar_field_selfcheck(f, list(f.elements()))
    assert not report.passed
    assert "mul-associative" in report.axioms()
    assert "mul-inverse" in report.axioms()


@pytest.mark.parametrize("text,value", [("3", 3), ("-2", -2), ("0.25", Fraction(1, 4)), ("3/6", Fraction(1, 2)), ("1.50", Fraction(3, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_parse_rational_rejects_junk():
    with pytest.raises(ValueError):
        parse_rational("1e3")
