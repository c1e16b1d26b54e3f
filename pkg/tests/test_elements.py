import random
from fractions import Fraction

import pytest

from leavitt_lp import (
    AlphabetMismatchError,
    GaussianRational,
    gen_s,
    gen_t,
    monomial,
    one,
    zero,
)
from leavitt_lp.elements import (
    GradedComponent,
    contract,
    expand,
    expand_to,
    expanded_entries,
)

from conftest import random_element


def common_level_equal(a, b):
    """Equality via the expansion oracle: compare every degree at a shared
    large level, independently of the canonical form."""
    if a.d != b.d:
        return False
    degrees = set(a.components) | set(b.components)
    for n in degrees:
        level = max(a.component(n).level, b.component(n).level) + 1
        if expanded_entries(a, n, level) != expanded_entries(b, n, level):
            return False
    return True


@pytest.mark.parametrize("d", [2, 3, 4])
class TestDefiningRelations:
    def test_t_s_diagonal(self, d):
        for j in range(1, d + 1):
            assert gen_t(d, j) * gen_s(d, j) == one(d)

    def test_t_s_off_diagonal(self, d):
        for j in range(1, d + 1):
            for k in range(1, d + 1):
                if j != k:
                    assert (gen_t(d, j) * gen_s(d, k)).is_zero()

    def test_unit_sum(self, d):
        total = zero(d)
        for j in range(1, d + 1):
            total = total + gen_s(d, j) * gen_t(d, j)
        assert total == one(d)


class TestExpandContract:
    def test_expand_degree_zero(self):
        c = GradedComponent(0, 1, {((1,), (1,)): GaussianRational(1)})
        e = expand(c, 2)
        assert e.level == 2
        assert e.entries == {
            ((1, 1), (1, 1)): GaussianRational(1),
            ((1, 2), (1, 2)): GaussianRational(1),
        }
        assert contract(e, 2) == c

    def test_expand_degree_one(self):
        c = GradedComponent(1, 0, {((1,), ()): GaussianRational(1)})
        e = expand(c, 2)
        assert e.entries == {
            ((1, 1), (1,)): GaussianRational(1),
            ((1, 2), (2,)): GaussianRational(1),
        }
        assert contract(e, 2) == c

    def test_expand_empty(self):
        c = GradedComponent(0, 1, {})
        assert expand(c, 2).level == 2
        assert expand(c, 2).is_zero()

    def test_partial_block_does_not_contract(self):
        c = GradedComponent(0, 2, {((1, 1), (1, 1)): GaussianRational(1)})
        assert contract(c, 2) == c

    def test_identity_contracts_to_level_zero(self):
        c = GradedComponent(
            0, 1, {((1,), (1,)): GaussianRational(1), ((2,), (2,)): GaussianRational(1)}
        )
        assert contract(c, 2) == GradedComponent(0, 0, {((), ()): GaussianRational(1)})

    @pytest.mark.parametrize("d", [2, 3])
    def test_round_trips_random(self, d, rng):
        for _ in range(50):
            a = random_element(rng, d)
            for n, comp in a.components.items():
                up = expand(comp, d)
                assert contract(up, d) == comp
                assert expand_to(comp, d, comp.level + 2).level == comp.level + 2


class TestArithmetic:
    def test_unit_sum_by_addition(self):
        assert gen_s(2, 1) * gen_t(2, 1) + gen_s(2, 2) * gen_t(2, 2) == one(2)

    def test_additive_identity_and_inverse(self, rng):
        a = random_element(rng, 2)
        assert a + zero(2) == a
        assert (a + (-a)).is_zero()
        assert a - a == zero(2)

    def test_mul_examples(self):
        assert gen_t(2, 1) * gen_s(2, 1) == one(2)
        s1t2 = monomial(2, (1,), (2,))
        s2t1 = monomial(2, (2,), (1,))
        assert s1t2 * s2t1 == monomial(2, (1,), (1,))

    def test_unit_laws(self, rng):
        for _ in range(20):
            a = random_element(rng, 2)
            assert one(2) * a == a
            assert a * one(2) == a

    def test_scalar_action(self, rng):
        a = random_element(rng, 2)
        half = GaussianRational(Fraction(1, 2))
        assert a.scale(half) + a.scale(half) == a
        assert a.scale(0) == zero(2)

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            one(2) + one(3)
        with pytest.raises(AlphabetMismatchError):
            one(2) * one(3)
        with pytest.raises(AlphabetMismatchError):
            one(2) == one(3)  # cross-d comparisons are errors, not coercions

    @pytest.mark.parametrize("d", [2, 3])
    def test_associativity_distributivity(self, d):
        rng = random.Random(7000 + d)
        for _ in range(200):
            a = random_element(rng, d, max_monos=3, max_len=3)
            b = random_element(rng, d, max_monos=3, max_len=3)
            c = random_element(rng, d, max_monos=3, max_len=3)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c

    def test_graded_multiplication_degrees(self, rng):
        for _ in range(50):
            a = random_element(rng, 2, max_monos=1)
            b = random_element(rng, 2, max_monos=1)
            prod = a * b
            if prod.is_zero() or a.is_zero() or b.is_zero():
                continue
            (na,) = a.degrees()
            (nb,) = b.degrees()
            assert prod.degrees() == (na + nb,)

    @pytest.mark.parametrize("d", [2, 3])
    def test_mul_agrees_with_monomial_expansion(self, d):
        # independent oracle: distribute over canonical monomials and
        # multiply each pair through one-letter junction rewriting
        from test_words import rewrite_oracle

        rng = random.Random(86000 + d)
        for _ in range(100):
            a = random_element(rng, d, max_monos=3, max_len=3)
            b = random_element(rng, d, max_monos=3, max_len=3)
            expected = zero(d)
            for row1, col1, c1 in a.monomials():
                for row2, col2, c2 in b.monomials():
                    surviving = rewrite_oracle(row1, col1, row2, col2)
                    if surviving is not None:
                        expected = expected + monomial(
                            d, surviving[0], surviving[1], c1 * c2
                        )
            assert a * b == expected


class TestCanonicalForm:
    @pytest.mark.parametrize("d", [2, 3])
    def test_equals_matches_expansion_oracle(self, d):
        rng = random.Random(31000 + d)
        for _ in range(150):
            a = random_element(rng, d)
            b = random_element(rng, d)
            assert (a == b) == common_level_equal(a, b)
            # rebuilding a through a rewritten path preserves equality
            rebuilt = zero(d)
            for row, col, coeff in a.monomials():
                rebuilt = rebuilt + monomial(d, row, col, coeff)
            assert rebuilt == a
            assert common_level_equal(rebuilt, a)

    def test_equality_basics(self):
        assert gen_s(2, 1) != gen_s(2, 2)
        a = monomial(2, (1, 2), (2,), GaussianRational(2, 1))
        assert a == a

    def test_no_zero_entries_survive(self, rng):
        a = random_element(rng, 2)
        b = a - a
        assert b.is_zero() and not b.components

    def test_minimality_no_contraction_applies(self, rng):
        from leavitt_lp.elements import _contract_once

        for _ in range(40):
            a = random_element(rng, 3)
            for comp in a.components.values():
                assert _contract_once(comp, 3) is None


class TestStar:
    def test_generator_swap(self):
        assert gen_s(2, 1).star() == gen_t(2, 1)
        assert one(2).star() == one(2)

    def test_antilinear(self):
        i_s1t2 = monomial(2, (1,), (2,), GaussianRational(0, 1))
        assert i_s1t2.star() == monomial(2, (2,), (1,), GaussianRational(0, -1))

    def test_involutive_antihomomorphism(self, rng):
        for _ in range(60):
            a = random_element(rng, 2)
            b = random_element(rng, 2)
            assert a.star().star() == a
            assert (a * b).star() == b.star() * a.star()
            assert (a + b).star() == a.star() + b.star()
