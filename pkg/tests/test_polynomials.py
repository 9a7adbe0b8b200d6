"""Symbolic arithmetic tests. Ring identities are cross-checked against
sympy as an independent oracle; the nonnegativity prover gets soundness
witnesses."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pentabound.polynomials import (
    EpsPoly,
    K,
    NonnegVerdict,
    Poly,
    RationalFunction,
    eps_expand_collect,
    parse_poly,
    prove_nonneg_int,
)

DEN = parse_poly("5*k^7 - 35*k^6 + 75*k^5 - 48*k^4")

coeff_st = st.integers(-9, 9)
poly_st = st.lists(coeff_st, min_size=0, max_size=6).map(Poly)


class TestPoly:
    def test_product_example(self):
        assert parse_poly("k - 1") * parse_poly("k + 1") == parse_poly("k^2 - 1")

    def test_den_at_4(self):
        # direct arithmetic: 5*4^7 - 35*4^6 + 75*4^5 - 48*4^4
        assert 5 * 4**7 - 35 * 4**6 + 75 * 4**5 - 48 * 4**4 == 3072
        assert DEN.eval(4) == 3072

    def test_eval_horner_matches_naive(self):
        rng = random.Random(1)
        for _ in range(20):
            p = Poly([rng.randint(-20, 20) for _ in range(rng.randint(0, 7))])
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            naive = sum(c * x**i for i, c in enumerate(p.coeffs))
            assert p.eval(x) == naive

    @settings(max_examples=80, deadline=None)
    @given(poly_st, poly_st, poly_st)
    def test_distributivity(self, a, b, c):
        assert (a + b) * c == a * c + b * c

    @settings(max_examples=40, deadline=None)
    @given(poly_st, poly_st)
    def test_product_against_sympy(self, a, b):
        k = sympy.symbols("k")
        sa = sympy.Poly(list(reversed(a.coeffs)) or [0], k)
        sb = sympy.Poly(list(reversed(b.coeffs)) or [0], k)
        expect = [Fraction(str(c)) for c in (sa * sb).all_coeffs()[::-1]]
        while expect and expect[-1] == 0:
            expect.pop()
        assert list((a * b).coeffs) == expect

    def test_divmod_roundtrip(self):
        rng = random.Random(2)
        for _ in range(25):
            a = Poly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
            b = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
            if b.is_zero:
                continue
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.degree < b.degree

    def test_parse_format_roundtrip(self):
        texts = [
            "5*k^7 - 35*k^6 + 75*k^5 - 48*k^4",
            "k^2 - 2*k + 1",
            "12",
            "-4*k + 4",
            "k",
        ]
        for t in texts:
            assert parse_poly(Poly.format(parse_poly(t))) == parse_poly(t)

    def test_parse_rational_coeff(self):
        assert parse_poly("1/2*k^2 - 3/4") == Poly([Fraction(-3, 4), 0, Fraction(1, 2)])

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_poly("")
        with pytest.raises(ValueError):
            parse_poly("k +")
        with pytest.raises(ValueError):
            parse_poly("x^2", var="k")

    def test_cauchy_bound_brackets_roots(self):
        p = parse_poly("k^2 - 5*k + 6")  # roots 2, 3
        assert p.cauchy_bound() >= 3
        assert p.eval(int(p.cauchy_bound()) + 1) > 0


class TestRationalFunction:
    def test_normalization_cancels(self):
        r = RationalFunction(parse_poly("2*k^2 - 2"), parse_poly("2*k - 2"))
        assert r.num == parse_poly("k + 1")
        assert r.den == Poly.const(1)

    def test_den_leading_positive(self):
        r = RationalFunction(parse_poly("k"), -DEN)
        assert r.den.leading > 0
        assert r.eval(10) == Fraction(10, -DEN.eval(10))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(Poly.const(1), Poly([]))

    def test_equality_iff_agreement_at_points(self):
        rng = random.Random(3)
        for _ in range(20):
            a = RationalFunction(
                Poly([rng.randint(-5, 5) for _ in range(4)]),
                Poly([rng.randint(-5, 5) for _ in range(3)] + [1]),
            )
            b = RationalFunction(
                Poly([rng.randint(-5, 5) for _ in range(4)]),
                Poly([rng.randint(-5, 5) for _ in range(3)] + [1]),
            )
            points = []
            x = Fraction(101)
            while len(points) < 20:
                if a.den.eval(x) != 0 and b.den.eval(x) != 0:
                    points.append(x)
                x += Fraction(7, 3)
            agree = all(a.eval(x) == b.eval(x) for x in points)
            assert agree == (a == b)

    def test_field_arithmetic(self):
        z = K / (K - 1) + 1 / (K - 1)
        assert z == RationalFunction(parse_poly("k + 1"), parse_poly("k - 1"))
        assert (K - 1) * (K + 1) / (K - 1) == K + 1
        assert K - K == RationalFunction.const(0)

    def test_from_laurent(self):
        r = RationalFunction.from_laurent({0: 12, -1: -84, -2: 228})
        assert r == 12 - 84 / K + 228 / K**2
        assert r.eval(2) == Fraction(12) - 42 + 57

    def test_pow_negative(self):
        assert K**-2 == 1 / K**2


class TestEpsPoly:
    def test_square_example(self):
        one_plus_eps = EpsPoly([1, 1])
        sq = one_plus_eps**2
        assert eps_expand_collect(sq) == [
            RationalFunction.const(1),
            RationalFunction.const(2),
            RationalFunction.const(1),
        ]

    def test_rf_coefficients(self):
        e = EpsPoly.eps()
        expr = (1 - e) * (1 + e * (K - 1))
        coeffs = eps_expand_collect(expr)
        assert coeffs[0] == RationalFunction.const(1)
        assert coeffs[1] == K - 2
        assert coeffs[2] == -(K - 1)

    def test_degree_truncation(self):
        assert EpsPoly([1, 0, RationalFunction.const(0)]).degree == 0


class TestProveNonnegInt:
    def test_den_positive_from_4(self):
        v = prove_nonneg_int(RationalFunction(DEN), 4)
        assert v.holds

    def test_square_from_0(self):
        v = prove_nonneg_int(RationalFunction(parse_poly("k^2 - 2*k + 1")), 0)
        assert v.holds

    def test_soundness_witness_negated_den(self):
        v = prove_nonneg_int(RationalFunction(-DEN), 4)
        assert v.status == "fails_at"
        assert v.witness is not None
        assert RationalFunction(-DEN).eval(v.witness) < 0

    def test_negative_tail_beyond_sweep(self):
        # positive on the sweep, negative eventually
        r = RationalFunction(parse_poly("2000 - k"))
        v = prove_nonneg_int(r, 0, sweep_max=100)
        assert v.status == "inconclusive"
        assert v.required_sweep >= 2000
        v2 = prove_nonneg_int(r, 0, sweep_max=v.required_sweep)
        assert v2.status == "fails_at"
        assert r.eval(v2.witness) < 0

    def test_den_root_reported(self):
        r = RationalFunction(Poly.const(1), parse_poly("k^2 - 20*k + 100"))
        v = prove_nonneg_int(r, 4)
        assert v.status == "fails_at"
        assert v.den_root == 10

    def test_zero_function_holds(self):
        assert prove_nonneg_int(RationalFunction.const(0), 0).holds

    def test_strictly_positive_rational_function(self):
        r = (K**2 + 1) / (K**2 + K + 1)
        assert prove_nonneg_int(r, 0).holds


class TestVerdictRepr:
    def test_repr_mentions_fields(self):
        v = NonnegVerdict("fails_at", witness=7)
        assert "fails_at" in repr(v) and "7" in repr(v)
