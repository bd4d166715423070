"""Polynomial arithmetic: division identity, root products, evaluation."""

import random

import pytest

from tgrs import NEG_INF, Poly, ValidationError

from conftest import get_field


def naive_mul(a: Poly, b: Poly) -> Poly:
    """Convolution oracle independent of Poly.__mul__'s skip logic."""
    f = a.field
    if a.is_zero() or b.is_zero():
        return Poly.zero(f)
    out = [f.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i in range(len(a.coeffs)):
        for j in range(len(b.coeffs)):
            out[i + j] = out[i + j] + a.coeffs[i] * b.coeffs[j]
    return Poly(f, out)


def naive_eval(p: Poly, x) -> object:
    acc = p.field.zero()
    for i, c in enumerate(p.coeffs):
        acc = acc + c * x**i
    return acc


def random_poly(rng, f, max_deg):
    return Poly(f, [f.element(rng.randrange(f.q)) for _ in range(rng.randint(0, max_deg + 1))])


class TestDivMod:
    def test_published_remainder_gf31(self, gf31):
        # (1 + 28x^2 + 6x^3) mod (x-30)(x-2) has constant term 7
        num = Poly(gf31, [1, 0, 28, 6])
        den = Poly.from_roots(gf31, [gf31.element(30), gf31.element(2)])
        _, rem = divmod(num, den)
        assert rem.coeff(0) == gf31.element(7)

    def test_self_division(self, gf7):
        x2 = Poly.monomial(gf7, 2)
        q, r = divmod(x2, x2)
        assert q == Poly.one(gf7) and r.is_zero()

    def test_published_remainder_gf37(self, gf37):
        num = Poly(gf37, [1, 0, 22, 24])
        den = Poly.from_roots(gf37, [gf37.element(1), gf37.element(16)])
        _, rem = divmod(num, den)
        assert rem.coeff(0) == gf37.element(3)

    def test_division_by_zero(self, gf7):
        with pytest.raises(ZeroDivisionError):
            divmod(Poly.one(gf7), Poly.zero(gf7))

    def test_division_identity_randomized(self):
        rng = random.Random(3)
        for f in (get_field(7), get_field(31), get_field(3, 2, [1, 0, 1])):
            for _ in range(40):
                a = random_poly(rng, f, 8)
                b = random_poly(rng, f, 5)
                if b.is_zero():
                    continue
                q, r = divmod(a, b)
                assert naive_mul(q, b) + r == a
                assert r.degree < b.degree


class TestFromRoots:
    def test_two_roots_gf31(self, gf31):
        got = Poly.from_roots(gf31, [gf31.element(30), gf31.element(2)])
        # oracle: multiply the linear factors directly
        lin1 = Poly(gf31, [-30, 1])
        lin2 = Poly(gf31, [-2, 1])
        assert got == naive_mul(lin1, lin2)
        assert [c.rep for c in got.coeffs] == [29, 30, 1]  # x^2 + 30x + 29

    def test_empty_product_is_one(self, gf7):
        assert Poly.from_roots(gf7, []) == Poly.one(gf7)

    def test_three_roots_gf7_oracle(self, gf7):
        got = Poly.from_roots(gf7, [gf7.element(1), gf7.element(2), gf7.element(3)])
        expected = Poly.one(gf7)
        for r in (1, 2, 3):
            expected = naive_mul(expected, Poly(gf7, [-r, 1]))
        assert got == expected
        assert [c.rep for c in got.coeffs] == [1, 4, 1, 1]  # x^3 + x^2 + 4x + 1

    def test_vanishes_on_roots_and_monic(self):
        rng = random.Random(4)
        f = get_field(31)
        for _ in range(25):
            roots = [f.element(rng.randrange(31)) for _ in range(rng.randint(1, 6))]
            p = Poly.from_roots(f, roots)
            assert p.leading() == f.one()
            assert p.degree == len(roots)
            for r in roots:
                assert p(r).is_zero()


class TestEvalAndCoeff:
    def test_eval_matches_power_sum(self, gf37):
        p = Poly(gf37, [0, 1, 0, 22, 24])  # x + 22x^3 + 24x^4
        assert p(gf37.one()) == naive_eval(p, gf37.one()) == gf37.element(10)

    def test_zero_poly_evaluates_to_zero(self, gf31):
        assert Poly.zero(gf31)(gf31.element(11)).is_zero()

    def test_cyclotomic_vanishing(self, gf31):
        p = Poly(gf31, [-1] + [0] * 14 + [1])  # x^15 - 1
        assert p(gf31.element(2)).is_zero()

    def test_eval_randomized_oracle(self):
        rng = random.Random(5)
        f = get_field(31)
        for _ in range(30):
            p = random_poly(rng, f, 7)
            x = f.element(rng.randrange(31))
            assert p(x) == naive_eval(p, x)

    def test_coeff_beyond_degree_is_zero(self, gf7):
        assert Poly.monomial(gf7, 2).coeff(5).is_zero()

    def test_coeff_negative_index_rejected(self, gf7):
        with pytest.raises(ValidationError):
            Poly.one(gf7).coeff(-1)

    def test_published_remainder_constant_gf31_six_points(self, gf31):
        # twist polynomial 1 + 3x^5 + 21x^6 + 22x^7 + x^8 (hook 1, k = 6)
        # reduced by the head-point product
        num = Poly(gf31, [1, 0, 0, 0, 0, 3, 21, 22, 1])
        den = Poly.from_roots(gf31, [gf31.element(a) for a in (1, 5, 8, 25, 28)])
        assert (num % den).coeff(0) == gf31.element(15)


class TestRepresentation:
    def test_zero_degree_marker(self, gf7):
        assert Poly.zero(gf7).degree == NEG_INF
        assert Poly.zero(gf7).degree < 0

    def test_trailing_zeros_stripped(self, gf7):
        assert Poly(gf7, [1, 2, 0, 0]) == Poly(gf7, [1, 2])

    def test_mixed_field_arithmetic_rejected(self, gf7, gf31):
        with pytest.raises(ValidationError):
            Poly.one(gf7) + Poly.one(gf31)

    def test_json_form(self, gf31):
        assert Poly(gf31, [29, 30, 1]).to_json() == [29, 30, 1]
