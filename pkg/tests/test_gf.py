"""Field arithmetic: axioms, inverses, orders, and n-th root extraction."""

import random

import pytest

from tgrs import Field, FieldElement, ValidationError, field_from_json, field_to_json
from tgrs.gf import element_from_json, element_to_json, is_prime

from conftest import get_field


class TestConstruction:
    def test_rejects_composite_characteristic(self):
        with pytest.raises(ValidationError):
            Field(15)

    def test_rejects_field_over_word_budget(self):
        with pytest.raises(ValidationError, match="word budget"):
            Field(46349, 2)  # q = p^2 > 2^31

    def test_prime_field_rejects_modulus(self):
        with pytest.raises(ValidationError):
            Field(7, 1, [1, 1])

    def test_extension_requires_modulus(self):
        with pytest.raises(ValidationError):
            Field(3, 2)

    def test_rejects_reducible_modulus_with_root(self):
        # x^2 - 1 = (x-1)(x+1) over GF(3)
        with pytest.raises(ValidationError, match="root"):
            Field(3, 2, [2, 0, 1])

    def test_rejects_reducible_modulus_without_root(self):
        # (x^2+1)^2 = x^4 + 2x^2 + 1 has no root mod 3 but factors
        with pytest.raises(ValidationError, match="factor"):
            Field(3, 4, [1, 0, 2, 0, 1])

    def test_accepts_known_irreducibles(self):
        assert Field(3, 2, [1, 0, 1]).q == 9       # x^2 + 1
        assert Field(2, 3, [1, 1, 0, 1]).q == 8    # x^3 + x + 1
        assert Field(2, 4, [1, 1, 0, 0, 1]).q == 16

    def test_is_prime_small_cases(self):
        primes = {2, 3, 5, 7, 11, 13, 31, 37, 2147483647}
        for n in primes:
            assert is_prime(n)
        for n in (0, 1, 4, 9, 15, 91, 2147483647 + 2):
            assert not is_prime(n)


class TestElementOps:
    def test_add_wraps_at_characteristic(self, gf31):
        assert gf31.element(30) + gf31.element(1) == gf31.zero()

    def test_add_identity(self, gf31):
        assert gf31.zero() + gf31.element(17) == gf31.element(17)

    def test_add_matches_integer_oracle(self, gf37):
        # oracle: plain integer addition mod 37
        assert gf37.element(33) + gf37.element(10) == gf37.element((33 + 10) % 37)

    def test_inverse_of_one(self, gf31):
        assert gf31.one().inverse() == gf31.one()

    def test_inverse_by_exhaustive_scan(self, gf7):
        # oracle: the unique b in GF(7) with 2b = 1
        two = gf7.element(2)
        expected = [b for b in gf7.elements() if two * b == gf7.one()]
        assert expected == [gf7.element(4)]
        assert two.inverse() == gf7.element(4)

    def test_minus_one_is_self_inverse(self, gf37):
        assert gf37.element(36).inverse() == gf37.element(36)

    def test_inverse_of_zero_raises(self, gf31):
        with pytest.raises(ZeroDivisionError):
            gf31.zero().inverse()

    def test_mixed_field_operations_rejected(self, gf7, gf31):
        with pytest.raises(ValidationError):
            gf7.one() + gf31.one()

    def test_int_coercion(self, gf31):
        assert gf31.element(5) + 30 == gf31.element(4)
        assert 2 * gf31.element(20) == gf31.element(9)
        assert gf31.element(3) ** -1 == gf31.element(3).inverse()

    @pytest.mark.parametrize("p,m,mod", [(31, 1, None), (3, 2, [1, 0, 1]), (2, 3, [1, 1, 0, 1])])
    def test_inverse_law_exhaustive_small_fields(self, p, m, mod):
        f = get_field(p, m, mod)
        assert f.q <= 1024
        for a in f.nonzero_elements():
            assert a * a.inverse() == f.one()

    def test_inverse_law_randomized_large_field(self):
        f = get_field(10007)
        rng = random.Random(1)
        for _ in range(200):
            a = f.element(rng.randint(1, f.q - 1))
            assert a * a.inverse() == f.one()

    @pytest.mark.parametrize("p,m,mod", [(7, 1, None), (31, 1, None), (3, 2, [1, 0, 1]), (2, 3, [1, 1, 0, 1])])
    def test_field_axioms_randomized(self, p, m, mod):
        f = get_field(p, m, mod)
        rng = random.Random(2)
        for _ in range(60):
            a, b, c = (f.from_index(rng.randrange(f.q)) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a


class TestOrder:
    def test_identity_has_order_one(self, gf31):
        assert gf31.one().order() == 1

    def test_minus_one_has_order_two(self, gf31):
        assert gf31.element(30).order() == 2

    def test_primitive_root_mod_37(self, gf37):
        # oracle: scan powers of 2 until they hit 1
        two = gf37.element(2)
        t, acc = 1, two
        while acc != gf37.one():
            acc = acc * two
            t += 1
        assert t == 36
        assert two.order() == 36

    def test_order_divides_group_order(self):
        for f in (get_field(31), get_field(3, 2, [1, 0, 1])):
            for a in f.nonzero_elements():
                assert (f.q - 1) % a.order() == 0

    def test_order_of_zero_raises(self, gf31):
        with pytest.raises(ValidationError):
            gf31.zero().order()


class TestRoots:
    def test_ninth_roots_in_gf37(self, gf37):
        roots = gf37.roots_of_xn_minus_lambda(9, gf37.one())
        assert {r.rep for r in roots} == {1, 16, 26, 12, 33, 10, 34, 7, 9}
        assert [r.rep for r in roots] == sorted(r.rep for r in roots)

    def test_degree_one(self, gf31):
        assert gf31.roots_of_xn_minus_lambda(1, gf31.element(5)) == [gf31.element(5)]

    def test_fifteenth_roots_match_exhaustive_scan(self, gf31):
        roots = gf31.roots_of_xn_minus_lambda(15, gf31.one())
        # oracle: scan the whole field
        expected = [a for a in gf31.elements() if a ** 15 == gf31.one()]
        assert roots == expected
        assert len(set(roots)) == 15

    def test_nontrivial_lambda(self, gf31):
        lam = gf31.element(5)  # order 3 divides (31-1)/5 = 6
        roots = gf31.roots_of_xn_minus_lambda(5, lam)
        assert len(set(roots)) == 5
        assert all(r ** 5 == lam for r in roots)

    def test_extension_field_roots(self):
        f = get_field(3, 2, [1, 0, 1])  # GF(9)
        roots = f.roots_of_xn_minus_lambda(4, f.one())
        assert len(set(roots)) == 4
        assert all(r ** 4 == f.one() for r in roots)

    def test_extension_field_nontrivial_lambda(self):
        f27 = get_field(3, 3, [1, 2, 0, 1])  # x^3 + 2x + 1, irreducible mod 3
        lam = -f27.one()  # order 2 divides (27-1)/13
        roots = f27.roots_of_xn_minus_lambda(13, lam)
        assert len(set(roots)) == 13
        assert all(r ** 13 == lam for r in roots)
        # oracle: exhaustive scan of the whole field
        assert set(roots) == {a for a in f27.elements() if a ** 13 == lam}

    def test_divisibility_precondition_named(self, gf31):
        with pytest.raises(ValidationError, match="does not divide q - 1"):
            gf31.roots_of_xn_minus_lambda(7, gf31.one())

    def test_order_precondition_named(self, gf31):
        lam = gf31.element(3)  # a primitive root: ord 30 does not divide 30/5
        assert lam.order() == 30
        with pytest.raises(ValidationError, match="ord"):
            gf31.roots_of_xn_minus_lambda(5, lam)

    def test_zero_lambda_rejected(self, gf31):
        with pytest.raises(ValidationError):
            gf31.roots_of_xn_minus_lambda(5, gf31.zero())


class TestEnumerationAndJson:
    def test_prime_field_enumeration(self, gf7):
        assert [e.rep for e in gf7.elements()] == list(range(7))

    def test_extension_enumeration_distinct(self):
        f = get_field(3, 2, [1, 0, 1])
        elems = list(f.elements())
        assert len(elems) == 9 and len(set(elems)) == 9
        assert [e.index() for e in elems] == list(range(9))

    def test_field_json_round_trip(self):
        for f in (get_field(31), get_field(3, 2, [1, 0, 1])):
            again = field_from_json(field_to_json(f))
            assert again == f

    def test_element_json_forms(self, gf31):
        assert element_to_json(gf31.element(5)) == 5
        f9 = get_field(3, 2, [1, 0, 1])
        e = f9.element([2, 1])
        assert element_to_json(e) == [2, 1]
        assert element_from_json(f9, [2, 1]) == e
        assert element_from_json(gf31, -1) == gf31.element(30)

    def test_immutability(self, gf7):
        e = gf7.element(3)
        with pytest.raises(AttributeError):
            e.rep = 5

    def test_extension_product_against_divmod_oracle(self):
        # multiply as raw polynomials and reduce with the generic divmod,
        # independently of the precomputed reduction table
        import random as _random
        from tgrs.gf import _gfp_divmod, _gfp_trim
        rng = _random.Random(40)
        for p, m, mod in ((3, 3, [1, 2, 0, 1]), (2, 4, [1, 1, 0, 0, 1]), (5, 2, [2, 0, 1])):
            f = get_field(p, m, mod)
            for _ in range(60):
                a = f.from_index(rng.randrange(f.q))
                b = f.from_index(rng.randrange(f.q))
                raw = [0] * (2 * m - 1)
                for i, x in enumerate(a.rep):
                    for j, y in enumerate(b.rep):
                        raw[i + j] = (raw[i + j] + x * y) % p
                _, rem = _gfp_divmod(raw, list(f.modulus), p)
                rem = _gfp_trim(rem) + [0] * m
                assert (a * b).rep == tuple(rem[:m])

    def test_pickle_round_trip(self):
        import pickle
        from tgrs import MatGF, Poly
        for f in (get_field(31), get_field(3, 2, [1, 0, 1])):
            e = f.from_index(f.q - 1)
            assert pickle.loads(pickle.dumps(e)) == e
            p = Poly(f, [e, f.one()])
            assert pickle.loads(pickle.dumps(p)) == p
            M = MatGF(f, [[e, f.one()], [f.zero(), e]])
            assert pickle.loads(pickle.dumps(M)) == M
