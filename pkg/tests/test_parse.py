import json

import pytest

from leavitt_lp import (
    ExprSyntaxError,
    GaussianRational,
    format_element,
    gen_s,
    monomial,
    one,
    parse,
    zero,
)
from leavitt_lp.jsonio import element_from_json, element_to_json

from conftest import random_element


class TestParse:
    def test_basic_sum(self):
        from fractions import Fraction

        a = parse("s1 t2 + 3/2 s12 t1", 2)
        expected = monomial(2, (1,), (2,)) + monomial(2, (1, 2), (1,), Fraction(3, 2))
        assert a == expected

    def test_relation_collapses(self):
        assert parse("t1 s1", 2) == one(2)
        assert parse("s1 t1 + s2 t2", 2) == one(2)

    def test_bracket_words(self):
        a = parse("s[1,10] t[3]", 12)
        assert a == monomial(12, (1, 10), (3,))

    def test_scalars(self):
        assert parse("0", 2) == zero(2)
        assert parse("-1", 2) == one(2).scale(-1)
        assert parse("i", 2) == one(2).scale(GaussianRational(0, 1))
        assert parse("2i s1", 2) == gen_s(2, 1).scale(GaussianRational(0, 2))
        assert parse("(1+2i) 1", 2) == one(2).scale(GaussianRational(1, 2))
        assert parse("1/2 s1 - 1/2 s1", 2) == zero(2)

    def test_parenthesized_products(self):
        a = parse("(s1 + s2) t1", 2)
        assert a == gen_s(2, 1) * monomial(2, (), (1,)) + gen_s(2, 2) * monomial(2, (), (1,))

    def test_errors_carry_position(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse("s1 +", 2)
        assert err.value.pos == 4
        with pytest.raises(ExprSyntaxError):
            parse("", 2)
        with pytest.raises(ExprSyntaxError):
            parse("s3", 2)  # letter out of range
        with pytest.raises(ExprSyntaxError):
            parse("s1 )", 2)

    @pytest.mark.parametrize("d", [2, 3])
    def test_round_trip_random(self, d, rng):
        for _ in range(80):
            a = random_element(rng, d)
            assert parse(format_element(a), d) == a

    def test_round_trip_large_alphabet(self, rng):
        a = monomial(11, (1, 10, 11), (2,), GaussianRational(-1, 3))
        assert parse(format_element(a), 11) == a

    def test_format_zero_and_one(self):
        assert format_element(zero(2)) == "0"
        assert format_element(one(2)) == "1"


class TestJson:
    @pytest.mark.parametrize("d", [2, 3])
    def test_round_trip(self, d, rng):
        for _ in range(40):
            a = random_element(rng, d)
            blob = json.dumps(element_to_json(a))
            assert element_from_json(json.loads(blob)) == a

    def test_exact_coefficients(self):
        from fractions import Fraction

        a = monomial(2, (1,), (), GaussianRational(Fraction(1, 3), Fraction(-7, 11)))
        obj = element_to_json(a)
        entry = obj["components"][0]["entries"][0]
        assert entry["re"] == "1/3" and entry["im"] == "-7/11"
        assert element_from_json(obj) == a

    def test_envelope_accepted(self):
        a = gen_s(2, 1)
        assert element_from_json({"schema": "x", "element": element_to_json(a)}) == a
