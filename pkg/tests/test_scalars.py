from fractions import Fraction

import pytest

from leavitt_lp import GaussianRational
from leavitt_lp.scalars import as_scalar, format_scalar, parse_fraction


class TestArithmetic:
    def test_exact_field_ops(self):
        a = GaussianRational(Fraction(1, 3), Fraction(1, 2))
        b = GaussianRational(Fraction(2, 3), Fraction(-1, 2))
        assert a + b == GaussianRational(1, 0)
        assert a * b == GaussianRational(
            Fraction(1, 3) * Fraction(2, 3) + Fraction(1, 2) * Fraction(1, 2),
            Fraction(1, 2) * Fraction(2, 3) - Fraction(1, 3) * Fraction(1, 2),
        )
        assert (a - a).is_zero()

    def test_inverse(self):
        z = GaussianRational(3, 4)
        assert z * z.inverse() == GaussianRational(1)
        with pytest.raises(ZeroDivisionError):
            GaussianRational(0).inverse()

    def test_pow(self):
        i = GaussianRational(0, 1)
        assert i ** 2 == GaussianRational(-1)
        assert i ** -1 == GaussianRational(0, -1)
        assert i ** 0 == GaussianRational(1)

    def test_conjugate_and_modulus(self):
        z = GaussianRational(Fraction(3, 5), Fraction(-4, 5))
        assert z.conjugate() == GaussianRational(Fraction(3, 5), Fraction(4, 5))
        assert z.abs_sq() == 1

    def test_no_floats_accepted(self):
        with pytest.raises(TypeError):
            as_scalar(0.5)

    def test_immutable(self):
        z = GaussianRational(1)
        with pytest.raises(AttributeError):
            z.re = Fraction(2)

    def test_complex_conversion(self):
        assert complex(GaussianRational(Fraction(1, 2), -2)) == 0.5 - 2j


class TestFormatting:
    @pytest.mark.parametrize(
        "z,text",
        [
            (GaussianRational(0), "0"),
            (GaussianRational(Fraction(3, 2)), "3/2"),
            (GaussianRational(0, 1), "i"),
            (GaussianRational(0, -1), "-i"),
            (GaussianRational(0, Fraction(-2, 3)), "-2/3i"),
            (GaussianRational(1, 2), "(1+2i)"),
            (GaussianRational(-1, Fraction(-1, 2)), "(-1-1/2i)"),
        ],
    )
    def test_format(self, z, text):
        assert format_scalar(z) == text

    def test_parse_fraction(self):
        assert parse_fraction("-7/11") == Fraction(-7, 11)
        assert parse_fraction("4") == Fraction(4)
