"""Text syntax for elements.

Grammar (whitespace insensitive):

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := [scalar] factor*
    factor  := 's' word | 't' word | '1' | '(' element ')'
    word    := digit+ | '[' int (',' int)* ']'
    scalar  := rat ['i'] | 'i'
    rat     := ['-'] int ['/' int]

Digit-string words read one letter per digit and therefore need d <= 9;
the bracket form works for any d. Parenthesized complex coefficients
like (1+2i) come out of the ordinary element rules, since a scalar is
just a multiple of 1.
"""

from __future__ import annotations

from fractions import Fraction

from .elements import LeavittElement, monomial, one, scalar_element, zero
from .errors import ExprSyntaxError
from .scalars import GaussianRational, format_scalar


class _Parser:
    def __init__(self, text: str, d: int):
        self.text = text
        self.d = d
        self.pos = 0

    # -- lexing helpers -------------------------------------------------

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str) -> None:
        if self._peek() != ch:
            raise ExprSyntaxError(f"expected '{ch}'", self.pos)
        self.pos += 1

    def _fail(self, msg: str):
        raise ExprSyntaxError(msg, self.pos)

    # -- grammar --------------------------------------------------------

    def parse(self) -> LeavittElement:
        out = self._element()
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail("trailing input")
        return out

    def _element(self) -> LeavittElement:
        sign = 1
        if self._peek() and self._peek() in "+-":
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        out = self._term()
        if sign < 0:
            out = -out
        while self._peek() and self._peek() in "+-":
            op = self._peek()
            self.pos += 1
            term = self._term()
            out = out - term if op == "-" else out + term
        return out

    def _term(self) -> LeavittElement:
        out = None
        coeff = self._try_scalar()
        if coeff is not None:
            out = scalar_element(self.d, coeff)
        while self._peek() and self._peek() in "st1(":
            factor = self._factor()
            out = factor if out is None else out * factor
        if out is None:
            self._fail("expected a term")
        return out

    def _factor(self) -> LeavittElement:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            inner = self._element()
            self._expect(")")
            return inner
        if ch == "1":
            self.pos += 1
            return one(self.d)
        if ch in "st":
            self.pos += 1
            letters = self._word()
            if ch == "s":
                return monomial(self.d, letters, ())
            return monomial(self.d, (), letters)
        self._fail("expected a factor")

    def _word(self) -> tuple:
        ch = self._peek()
        if ch == "[":
            self.pos += 1
            letters = [self._int()]
            while self._peek() == ",":
                self.pos += 1
                letters.append(self._int())
            self._expect("]")
        elif ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            letters = [int(c) for c in self.text[start : self.pos]]
        else:
            self._fail("expected a word (digits or [..])")
        for x in letters:
            if not 1 <= x <= self.d:
                self._fail(f"letter {x} out of range [1, {self.d}]")
        return tuple(letters)

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() == "-":
            self.pos += 1
        if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
            self._fail("expected an integer")
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def _try_scalar(self) -> GaussianRational | None:
        self._skip_ws()
        if self._peek() == "i":
            self.pos += 1
            return GaussianRational(0, 1)
        if not (self._peek().isdigit() or self._peek() == "-"):
            return None
        if self._peek() == "-" and not self._digit_follows():
            return None
        start = self.pos
        value = Fraction(self._int())
        if self._peek() == "/":
            self.pos += 1
            den = self._int()
            if den == 0:
                self.pos = start
                self._fail("zero denominator")
            value /= den
        if self._peek() == "i":
            self.pos += 1
            return GaussianRational(0, value)
        return GaussianRational(value)

    def _digit_follows(self) -> bool:
        k = self.pos + 1
        while k < len(self.text) and self.text[k].isspace():
            k += 1
        return k < len(self.text) and self.text[k].isdigit()


def parse(text: str, d: int) -> LeavittElement:
    """Parse an element expression over the alphabet {1..d}."""
    text = text.strip()
    if not text:
        raise ExprSyntaxError("empty expression", 0)
    return _Parser(text, d).parse()


def _format_word(letters, d: int) -> str:
    if d <= 9:
        return "".join(str(x) for x in letters)
    return "[" + ",".join(str(x) for x in letters) + "]"


def _format_monomial(row, col, coeff: GaussianRational, d: int) -> str:
    parts = []
    if row:
        parts.append("s" + _format_word(row, d))
    if col:
        parts.append("t" + _format_word(col, d))
    if not parts:
        return format_scalar(coeff)
    body = " ".join(parts)
    if coeff.is_one():
        return body
    if coeff == GaussianRational(-1):
        return f"-{body}"
    return f"{format_scalar(coeff)} {body}"


def format_element(a: LeavittElement) -> str:
    """Render canonical form; parse(format(a), a.d) == a."""
    if a.is_zero():
        return "0"
    terms = [_format_monomial(row, col, coeff, a.d) for row, col, coeff in a.monomials()]
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out
