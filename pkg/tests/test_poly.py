from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverseq.poly import Poly, poly_gcd


def P(nvars=2, **terms):
    """Shorthand: P(x=..., terms_by_exponent_tuple)."""
    return Poly(nvars, terms)


def make(nvars, pairs):
    return Poly(nvars, {tuple(e): c for e, c in pairs})


x = Poly.variable(2, 0)
y = Poly.variable(2, 1)
one = Poly.one(2)


@st.composite
def small_polys(draw, nvars=2):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(
            draw(st.integers(min_value=-2, max_value=3)) for _ in range(nvars)
        )
        terms[exps] = draw(st.integers(min_value=-6, max_value=6))
    return Poly(nvars, terms)


class TestArithmetic:
    def test_add_cancels(self):
        assert (x + y) - (x + y) == Poly.zero(2)

    def test_mul(self):
        assert (x + y) * (x - y) == x * x - y * y

    def test_int_coercion(self):
        assert x + 1 == x + one
        assert 2 * x == x + x

    def test_pow(self):
        assert (x + 1) ** 3 == x * x * x + 3 * x * x + 3 * x + 1
        assert (x + y) ** 0 == one

    def test_laurent_exponents(self):
        inv = Poly.monomial(2, (-1, 0))
        assert inv * x == one

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


class TestExactDiv:
    def test_simple(self):
        assert (x * x - 1).exact_div(x - 1) == x + 1

    def test_not_divisible(self):
        assert (x * x + 1).exact_div(x - 1) is None

    def test_coefficient_divisibility(self):
        assert (2 * x + 2).exact_div(Poly.const(2, 2)) == x + 1
        assert (2 * x + 1).exact_div(Poly.const(2, 2)) is None

    def test_laurent_divisor(self):
        p = x * y + one
        d = Poly.monomial(2, (-1, 0))  # 1/x
        q = p.exact_div(d)
        assert q == p * x

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            one.exact_div(Poly.zero(2))

    @given(small_polys(), small_polys())
    @settings(max_examples=60)
    def test_product_division_round_trip(self, a, b):
        if b.is_zero():
            return
        assert (a * b).exact_div(b) == a


class TestGcd:
    def test_shared_factor(self):
        g = poly_gcd((x + 1) * (x + 2), (x + 1) * (x - 5))
        assert g == x + 1

    def test_coprime(self):
        assert poly_gcd(x + 1, x + 2).is_one()

    def test_integer_content(self):
        assert poly_gcd(2 * x + 2, Poly.const(2, 4)) == Poly.const(2, 2)

    def test_monomials_are_units(self):
        g = poly_gcd(Poly.monomial(2, (3, 0)), Poly.monomial(2, (5, 0)))
        assert g.is_one()

    def test_multivariate(self):
        common = x * y + 1
        g = poly_gcd(common * (x + y), common * (x - y + 3))
        assert g == common

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=40, deadline=None)
    def test_gcd_divides_products(self, a, b, g):
        if g.is_zero() or (a.is_zero() and b.is_zero()):
            return
        result = poly_gcd(a * g, b * g)
        # the common factor g (up to units) must divide the gcd
        shifted = g.shift(tuple(-m for m in g.min_exponents()))
        assert result.exact_div(shifted) is not None


class TestEvaluate:
    def test_point(self):
        p = 3 * x * x * y - 2
        assert p.evaluate([Fraction(2), Fraction(1, 3)]) == Fraction(2)

    def test_negative_exponents(self):
        p = Poly.monomial(2, (-2, 1), 5)
        assert p.evaluate([Fraction(1, 2), Fraction(3)]) == 60

    def test_pole(self):
        p = Poly.monomial(2, (-1, 0))
        with pytest.raises(ZeroDivisionError):
            p.evaluate([Fraction(0), Fraction(1)])


class TestFormat:
    def test_plain(self):
        names = ["x1", "x2"]
        assert (x * x - y + 3).format(names) == "x1^2 - x2 + 3"
        assert Poly.zero(2).format(names) == "0"

    def test_laurent_format(self):
        names = ["x1", "x2"]
        assert Poly.monomial(2, (-1, 2), -4).format(names) == "-4*x1^-1*x2^2"

    def test_sexpr_deterministic(self):
        names = ["x1", "x2"]
        p = x * y - 2
        assert p.sexpr(names) == "(+ (* 1 x1 x2) -2)"
