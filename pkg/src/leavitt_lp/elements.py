"""Exact elements of the Leavitt algebra L_d in graded canonical form.

An element is stored degree by degree. The degree-n piece is a sparse
rectangular coefficient matrix indexed by pairs of words: row words of
one common length, column words of another, the difference of lengths
being n. The identity sum s_1 t_1 + ... + s_d t_d = 1 lets any piece be
rewritten one level up (every entry fans out over a fresh last letter);
the canonical form keeps each piece at the minimal level at which it can
be written. Two elements are equal in L_d exactly when their canonical
forms coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

from .errors import AlphabetMismatchError
from .scalars import ONE, GaussianRational, as_scalar
from .words import Letters, Word

EntryKey = Tuple[Letters, Letters]
Entries = Dict[EntryKey, GaussianRational]


def row_length(degree: int, level: int) -> int:
    return level + max(degree, 0)


def col_length(degree: int, level: int) -> int:
    return level + max(-degree, 0)


@dataclass(frozen=True)
class GradedComponent:
    """One gauge eigenspace piece: degree n at level m >= 0.

    Entries map (row word, col word) to a nonzero exact scalar, with
    l(row) = m + max(n, 0) and l(col) = m + max(-n, 0).
    """

    degree: int
    level: int
    entries: Mapping[EntryKey, GaussianRational] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def row_len(self) -> int:
        return row_length(self.degree, self.level)

    @property
    def col_len(self) -> int:
        return col_length(self.degree, self.level)

    def validate(self, d: int) -> None:
        rl, cl = self.row_len, self.col_len
        for (row, col), coeff in self.entries.items():
            if len(row) != rl or len(col) != cl:
                raise ValueError("entry word lengths disagree with degree/level")
            if any(not 1 <= x <= d for x in row + col):
                raise ValueError("letter out of range")
            if coeff.is_zero():
                raise ValueError("stored zero coefficient")


def expand(c: GradedComponent, d: int) -> GradedComponent:
    """Rewrite one level up: each entry fans out over a common last letter."""
    out: Entries = {}
    for (row, col), coeff in c.entries.items():
        for j in range(1, d + 1):
            out[(row + (j,), col + (j,))] = coeff
    return GradedComponent(c.degree, c.level + 1, out)


def expand_to(c: GradedComponent, d: int, level: int) -> GradedComponent:
    if level < c.level:
        raise ValueError(f"cannot expand level {c.level} down to {level}")
    while c.level < level:
        c = expand(c, d)
    return c


def _contract_once(c: GradedComponent, d: int) -> GradedComponent | None:
    """Undo one expand step, or None when the component is not an image.

    The component is an image of expand exactly when, grouped by the
    (row prefix, col prefix) obtained by dropping the last letters, every
    group is a d-by-d identity block times a common scalar.
    """
    if c.level < 1 or not c.entries:
        return None
    groups: Dict[EntryKey, Dict[Tuple[int, int], GaussianRational]] = {}
    for (row, col), coeff in c.entries.items():
        j, k = row[-1], col[-1]
        if j != k:
            return None
        groups.setdefault((row[:-1], col[:-1]), {})[(j, k)] = coeff
    out: Entries = {}
    for prefix, block in groups.items():
        if len(block) != d:
            return None
        values = set(block.values())
        if len(values) != 1:
            return None
        out[prefix] = values.pop()
    return GradedComponent(c.degree, c.level - 1, out)


def contract(c: GradedComponent, d: int) -> GradedComponent:
    """Canonicalize: undo expand while possible (minimal level)."""
    while True:
        lower = _contract_once(c, d)
        if lower is None:
            return c
        c = lower


def _component_add(a: GradedComponent, b: GradedComponent, d: int) -> GradedComponent:
    level = max(a.level, b.level)
    a = expand_to(a, d, level)
    b = expand_to(b, d, level)
    out: Entries = dict(a.entries)
    for key, coeff in b.entries.items():
        s = out.get(key)
        total = coeff if s is None else s + coeff
        if total.is_zero():
            out.pop(key, None)
        else:
            out[key] = total
    return GradedComponent(a.degree, level, out)


def _component_mul(a: GradedComponent, b: GradedComponent, d: int) -> GradedComponent:
    """Sparse rectangular product into degree a.degree + b.degree.

    The inner word lengths are aligned by expanding whichever side is
    shorter; matching inner words then contract to 1 and mismatches die.
    """
    if a.col_len < b.row_len:
        a = expand_to(a, d, a.level + (b.row_len - a.col_len))
    elif b.row_len < a.col_len:
        b = expand_to(b, d, b.level + (a.col_len - b.row_len))
    by_row: Dict[Letters, list] = {}
    for (row, col), coeff in b.entries.items():
        by_row.setdefault(row, []).append((col, coeff))
    out: Entries = {}
    for (row, mid), coeff in a.entries.items():
        for col, coeff2 in by_row.get(mid, ()):
            key = (row, col)
            s = out.get(key)
            total = coeff * coeff2 if s is None else s + coeff * coeff2
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    degree = a.degree + b.degree
    level = a.row_len - max(degree, 0) if out else 0
    return GradedComponent(degree, level, out)


class LeavittElement:
    """Finite L_d expression in canonical graded form. Immutable by convention."""

    __slots__ = ("d", "components")

    def __init__(self, d: int, components: Mapping[int, GradedComponent] | None = None):
        if d < 2:
            raise ValueError(f"alphabet size must be >= 2, got d={d}")
        canon: Dict[int, GradedComponent] = {}
        for degree, comp in (components or {}).items():
            comp = GradedComponent(
                degree,
                comp.level,
                {k: v for k, v in comp.entries.items() if not v.is_zero()},
            )
            if comp.is_zero():
                continue
            comp = contract(comp, d)
            comp.validate(d)
            canon[degree] = comp
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "components", canon)

    def __setattr__(self, name, value):
        raise AttributeError("LeavittElement is immutable")

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.components

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self.components))

    def component(self, degree: int) -> GradedComponent:
        return self.components.get(degree, GradedComponent(degree, 0, {}))

    def level(self) -> int:
        """Largest component level (0 for the zero element)."""
        return max((c.level for c in self.components.values()), default=0)

    def monomials(self) -> Iterable[Tuple[Letters, Letters, GaussianRational]]:
        """Canonical-form entries as (row word, col word, coefficient)."""
        for degree in sorted(self.components):
            comp = self.components[degree]
            for (row, col) in sorted(comp.entries):
                yield row, col, comp.entries[(row, col)]

    # -- arithmetic ------------------------------------------------------

    def _require_same_d(self, other: "LeavittElement") -> None:
        if self.d != other.d:
            raise AlphabetMismatchError(
                f"elements over different alphabets: d={self.d} vs d={other.d}"
            )

    def __add__(self, other: "LeavittElement") -> "LeavittElement":
        self._require_same_d(other)
        out: Dict[int, GradedComponent] = dict(self.components)
        for degree, comp in other.components.items():
            if degree in out:
                out[degree] = _component_add(out[degree], comp, self.d)
            else:
                out[degree] = comp
        return LeavittElement(self.d, out)

    def __neg__(self) -> "LeavittElement":
        out = {
            n: GradedComponent(n, c.level, {k: -v for k, v in c.entries.items()})
            for n, c in self.components.items()
        }
        return LeavittElement(self.d, out)

    def __sub__(self, other: "LeavittElement") -> "LeavittElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LeavittElement):
            self._require_same_d(other)
            out: Dict[int, GradedComponent] = {}
            for c1 in self.components.values():
                for c2 in other.components.values():
                    prod = _component_mul(c1, c2, self.d)
                    if prod.is_zero():
                        continue
                    n = prod.degree
                    out[n] = _component_add(out[n], prod, self.d) if n in out else prod
            return LeavittElement(self.d, out)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, scalar) -> "LeavittElement":
        scalar = as_scalar(scalar)
        if scalar.is_zero():
            return LeavittElement(self.d)
        out = {
            n: GradedComponent(n, c.level, {k: scalar * v for k, v in c.entries.items()})
            for n, c in self.components.items()
        }
        return LeavittElement(self.d, out)

    def __pow__(self, n: int) -> "LeavittElement":
        if n < 0:
            raise ValueError("negative powers are not defined in L_d")
        out = one(self.d)
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "LeavittElement":
        """Antilinear antihomomorphism swapping s_j and t_j."""
        out = {}
        for n, c in self.components.items():
            entries = {
                (col, row): v.conjugate() for (row, col), v in c.entries.items()
            }
            out[-n] = GradedComponent(-n, c.level, entries)
        return LeavittElement(self.d, out)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeavittElement):
            return NotImplemented
        self._require_same_d(other)
        if set(self.components) != set(other.components):
            return False
        for n, c in self.components.items():
            o = other.components[n]
            if c.level != o.level or c.entries != o.entries:
                return False
        return True

    def __hash__(self):
        return hash(
            (
                self.d,
                tuple(
                    (n, self.components[n].level, tuple(sorted(self.components[n].entries.items())))
                    for n in sorted(self.components)
                ),
            )
        )

    def __repr__(self) -> str:
        from .exprparse import format_element

        return f"<LeavittElement d={self.d}: {format_element(self)}>"


# -- constructors ------------------------------------------------------------


def zero(d: int) -> LeavittElement:
    return LeavittElement(d)


def one(d: int) -> LeavittElement:
    return monomial(d, (), ())


def monomial(d: int, alpha, beta, coeff=ONE) -> LeavittElement:
    """coeff * s_alpha t_beta. Words may be Word objects or letter tuples."""
    row = tuple(alpha.letters if isinstance(alpha, Word) else alpha)
    col = tuple(beta.letters if isinstance(beta, Word) else beta)
    coeff = as_scalar(coeff)
    if coeff.is_zero():
        return zero(d)
    degree = len(row) - len(col)
    level = min(len(row), len(col))
    comp = GradedComponent(degree, level, {(row, col): coeff})
    return LeavittElement(d, {degree: comp})


def gen_s(d: int, j: int) -> LeavittElement:
    return monomial(d, (j,), ())


def gen_t(d: int, j: int) -> LeavittElement:
    return monomial(d, (), (j,))


def scalar_element(d: int, value) -> LeavittElement:
    return one(d).scale(value)


# -- module-level operation aliases ------------------------------------------


def add(a: LeavittElement, b: LeavittElement) -> LeavittElement:
    return a + b


def mul(a: LeavittElement, b: LeavittElement) -> LeavittElement:
    return a * b


def equals(a: LeavittElement, b: LeavittElement) -> bool:
    return a == b


def star(a: LeavittElement) -> LeavittElement:
    return a.star()


def expanded_entries(a: LeavittElement, degree: int, level: int) -> Entries:
    """Entries of the degree component rewritten at the given level.

    This is the expansion oracle used to cross-check canonical equality.
    """
    comp = a.component(degree)
    if comp.is_zero():
        return {}
    return dict(expand_to(comp, a.d, level).entries)
