import itertools
import random
from fractions import Fraction

import pytest

from leavitt_lp import (
    AlgebraDescriptor,
    GeneratorSequence,
    SupernaturalNumber,
    classify_iso,
    hom_obstruction,
    k0_contains,
    r_d,
    sn_equal,
    supernatural_of,
)
from leavitt_lp.invariants import INF, k0_generators

TWO_INF = SupernaturalNumber({2: INF})
SIX_INF = SupernaturalNumber({2: INF, 3: INF})


class TestGeneratorSequence:
    def test_terms(self):
        seq = GeneratorSequence((2,), (3, 4))
        assert [seq.term(n) for n in range(1, 7)] == [2, 3, 4, 3, 4, 3]

    def test_parse(self):
        assert GeneratorSequence.parse("2;3,4") == GeneratorSequence((2,), (3, 4))
        assert GeneratorSequence.parse("2") == GeneratorSequence((), (2,))
        assert GeneratorSequence.parse(";5") == GeneratorSequence((), (5,))

    def test_validation(self):
        with pytest.raises(ValueError):
            GeneratorSequence((2,), ())
        with pytest.raises(ValueError):
            GeneratorSequence((1,), (2,))


class TestRd:
    def test_constant_two(self):
        seq = GeneratorSequence((), (2,))
        assert r_d(seq, 3) == 8
        assert r_d(seq, 0) == 1

    def test_preperiod(self):
        seq = GeneratorSequence((2,), (3,))
        assert r_d(seq, 3) == 2 * 3 * 3

    def test_arbitrary_precision(self):
        seq = GeneratorSequence((), (10,))
        assert r_d(seq, 40) == 10 ** 40


class TestSupernaturalOf:
    def test_two_power(self):
        assert sn_equal(supernatural_of(GeneratorSequence((), (2,))), TWO_INF)

    def test_six_power(self):
        assert sn_equal(supernatural_of(GeneratorSequence((), (6,))), SIX_INF)

    def test_preperiod_contributions(self):
        got = supernatural_of(GeneratorSequence((10,), (3,)))
        assert got.as_dict() == {2: 1, 5: 1, 3: INF}

    def test_shift_stability(self):
        # dropping preperiod terms never changes the infinite part
        seq = GeneratorSequence((10, 6), (15,))
        full = supernatural_of(seq)
        tail = supernatural_of(GeneratorSequence((6,), (15,)))
        assert {t for t, e in full.exponents if e == INF} == {
            t for t, e in tail.exponents if e == INF
        }
        finite_full = {t: e for t, e in full.exponents if e != INF}
        finite_tail = {t: e for t, e in tail.exponents if e != INF}
        assert finite_full == {2: 2}
        assert finite_tail == {2: 1}

    def test_period_alignment_irrelevant(self):
        a = supernatural_of(GeneratorSequence((), (2, 4)))
        b = supernatural_of(GeneratorSequence((2,), (4, 2)))
        assert sn_equal(a, b)


class TestSupernaturalNumber:
    def test_parse_formats(self):
        assert sn_equal(SupernaturalNumber.parse("2^inf"), TWO_INF)
        assert sn_equal(SupernaturalNumber.parse("6^inf"), SIX_INF)
        got = SupernaturalNumber.parse("2^inf*3^2")
        assert got.as_dict() == {2: INF, 3: 2}
        assert sn_equal(SupernaturalNumber.parse(str(got)), got)

    def test_requires_an_infinite_exponent(self):
        with pytest.raises(ValueError):
            SupernaturalNumber({2: 3})

    def test_requires_primes(self):
        with pytest.raises(ValueError):
            SupernaturalNumber({4: INF})

    def test_equality(self):
        assert sn_equal(TWO_INF, SupernaturalNumber({2: INF}))
        assert not sn_equal(TWO_INF, SIX_INF)


class TestK0:
    def test_table_for_two_inf(self):
        assert k0_contains(TWO_INF, Fraction(1, 2))
        assert not k0_contains(TWO_INF, Fraction(1, 3))
        assert k0_contains(TWO_INF, Fraction(5, 8))

    def test_integers_always_in(self):
        for N in (TWO_INF, SIX_INF, SupernaturalNumber({2: INF, 3: 2})):
            for q in (0, 1, -7, 12):
                assert k0_contains(N, Fraction(q))

    def test_finite_exponent_cutoff(self):
        N = SupernaturalNumber({2: INF, 3: 2})
        assert k0_contains(N, Fraction(1, 9))
        assert not k0_contains(N, Fraction(1, 27))

    def test_matches_k_of_n_formula(self):
        # membership agrees with divisibility into some k(n)
        N = SupernaturalNumber({2: INF, 3: 2, 5: 1})
        for q in [Fraction(1, 2), Fraction(1, 45), Fraction(7, 40), Fraction(1, 25), Fraction(1, 7)]:
            direct = k0_contains(N, q)
            staged = any(
                (q / k0_generators(N, n)).denominator == 1 for n in range(1, 12)
            )
            assert direct == staged

    def test_subgroup_closure(self):
        rng = random.Random(77)
        N = SupernaturalNumber({2: INF, 3: 2})
        members = []
        while len(members) < 20:
            q = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
            if k0_contains(N, q):
                members.append(q)
        for q1, q2 in itertools.combinations(members, 2):
            assert k0_contains(N, q1 + q2)
        for q in members:
            assert k0_contains(N, -q)


class TestClassify:
    def test_same_type_different_presentation(self):
        a1 = AlgebraDescriptor(Fraction(3, 2), TWO_INF)
        a2 = AlgebraDescriptor(
            Fraction(3, 2), supernatural_of(GeneratorSequence((), (2, 4)))
        )
        assert classify_iso(a1, a2)

    def test_different_p(self):
        a1 = AlgebraDescriptor(Fraction(3, 2), TWO_INF)
        a2 = AlgebraDescriptor(Fraction(3), TWO_INF)
        assert not classify_iso(a1, a2)

    def test_different_type(self):
        a1 = AlgebraDescriptor(Fraction(2), TWO_INF)
        a2 = AlgebraDescriptor(Fraction(2), SupernaturalNumber({3: INF}))
        assert not classify_iso(a1, a2)

    def test_equivalence_relation(self):
        rng = random.Random(11)
        types = [TWO_INF, SIX_INF, SupernaturalNumber({3: INF})]
        ps = [Fraction(1), Fraction(3, 2), Fraction(2)]
        pool = [AlgebraDescriptor(rng.choice(ps), rng.choice(types)) for _ in range(12)]
        for a in pool:
            assert classify_iso(a, a)
        for a, b in itertools.product(pool, repeat=2):
            assert classify_iso(a, b) == classify_iso(b, a)
        for a, b, c in itertools.product(pool, repeat=3):
            if classify_iso(a, b) and classify_iso(b, c):
                assert classify_iso(a, c)


class TestHomObstruction:
    def test_paper_examples(self):
        assert hom_obstruction(Fraction(3, 2), 3) == "excluded"
        assert hom_obstruction(2, 3) == "not_excluded"
        assert hom_obstruction(Fraction(6, 5), Fraction(11, 10)) == "not_excluded"

    def test_truth_table(self):
        ps = [Fraction(1), Fraction(6, 5), Fraction(3, 2), Fraction(2), Fraction(3)]
        for p1, p2 in itertools.product(ps, repeat=2):
            got = hom_obstruction(p1, p2)
            if p1 == p2:
                expected = "not_excluded"
            elif (1 <= p2 < p1 <= 2) or (p1 == 2 < p2):
                expected = "not_excluded"
            else:
                expected = "excluded"
            assert got == expected, (p1, p2)

    def test_asymmetry_witness(self):
        assert hom_obstruction(Fraction(3, 2), Fraction(6, 5)) == "not_excluded"
        assert hom_obstruction(Fraction(6, 5), Fraction(3, 2)) == "excluded"

    def test_consistency_with_classify(self):
        a1 = AlgebraDescriptor(Fraction(3, 2), TWO_INF)
        a2 = AlgebraDescriptor(Fraction(3, 2), TWO_INF)
        assert classify_iso(a1, a2)
        assert hom_obstruction(a1.p, a2.p) == "not_excluded"
        assert hom_obstruction(a2.p, a1.p) == "not_excluded"

    def test_validation(self):
        with pytest.raises(ValueError):
            hom_obstruction(Fraction(1, 2), 2)
