"""The matrix-unit core of L_d.

For each m the monomials s_alpha t_beta with both words of length m form
a system of matrix units, so their span is a copy of the d^m x d^m
matrices. This module moves between that matrix picture and elements
(phi / phi_inv), computes the partial-trace conditional expectation down
the nested chain, the normalized trace, and the signed permutation group
together with its averaging identity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .elements import GradedComponent, LeavittElement, expand_to
from .errors import LevelError, NotInCoreError
from .scalars import ONE, ZERO, GaussianRational, as_scalar
from .words import word_from_index, word_index


class CoreMatrix:
    """Dense d^m x d^m matrix of exact scalars, indexed by length-m words
    in lexicographic order."""

    __slots__ = ("d", "m", "rows")

    def __init__(self, d: int, m: int, rows: Sequence[Sequence]):
        side = d ** m
        rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if len(rows) != side or any(len(r) != side for r in rows):
            raise ValueError(f"core matrix must be {side}x{side} for d={d}, m={m}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("CoreMatrix is immutable")

    @property
    def side(self) -> int:
        return self.d ** self.m

    def __getitem__(self, key: Tuple[int, int]) -> GaussianRational:
        return self.rows[key[0]][key[1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoreMatrix):
            return NotImplemented
        return (self.d, self.m, self.rows) == (other.d, other.m, other.rows)

    def __matmul__(self, other: "CoreMatrix") -> "CoreMatrix":
        if (self.d, self.m) != (other.d, other.m):
            raise ValueError("core matrix size mismatch")
        n = self.side
        rows = [
            [
                sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), ZERO)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return CoreMatrix(self.d, self.m, rows)

    def trace(self) -> GaussianRational:
        """Normalized trace: average of the diagonal."""
        total = sum((self.rows[i][i] for i in range(self.side)), ZERO)
        return total * GaussianRational(Fraction(1, self.side))

    def __repr__(self) -> str:
        return f"CoreMatrix(d={self.d}, m={self.m}, side={self.side})"


def identity_matrix(d: int, m: int) -> CoreMatrix:
    side = d ** m
    return CoreMatrix(
        d, m, [[ONE if i == j else ZERO for j in range(side)] for i in range(side)]
    )


def matrix_unit(d: int, m: int, alpha, beta) -> CoreMatrix:
    """e_{alpha,beta} with words given as letter tuples or flat indices."""
    i = alpha if isinstance(alpha, int) else word_index(tuple(alpha), d)
    j = beta if isinstance(beta, int) else word_index(tuple(beta), d)
    side = d ** m
    rows = [[ONE if (r, c) == (i, j) else ZERO for c in range(side)] for r in range(side)]
    return CoreMatrix(d, m, rows)


def phi(M: CoreMatrix) -> LeavittElement:
    """Matrix-unit embedding: e_{alpha,beta} -> s_alpha t_beta, linearly."""
    d, m = M.d, M.m
    entries = {}
    for i, row in enumerate(M.rows):
        alpha = word_from_index(i, d, m)
        for j, coeff in enumerate(row):
            if coeff.is_zero():
                continue
            beta = word_from_index(j, d, m)
            entries[(alpha, beta)] = coeff
    comp = GradedComponent(0, m, entries)
    return LeavittElement(d, {0: comp})


def phi_inv(a: LeavittElement, m: int) -> CoreMatrix:
    """The unique level-m matrix mapping to a under phi.

    Requires a to be in the core (degree 0 only) at level <= m; the
    component is expanded up to level m as needed.
    """
    d = a.d
    if any(n != 0 for n in a.components):
        raise NotInCoreError("element has a nonzero component of degree != 0")
    side = d ** m
    rows = [[ZERO] * side for _ in range(side)]
    comp = a.components.get(0)
    if comp is not None:
        if comp.level > m:
            raise LevelError(f"element lives at level {comp.level} > requested {m}")
        comp = expand_to(comp, d, m)
        for (row, col), coeff in comp.entries.items():
            rows[word_index(row, d)][word_index(col, d)] = coeff
    return CoreMatrix(d, m, rows)


def expect_to_level(a: LeavittElement, m: int) -> LeavittElement:
    """Conditional expectation of a core element onto the level-m subalgebra.

    Through the splitting of a level-m' word into its length-m prefix and
    the remainder, the element sits in (d^m matrices) tensor (d^(m'-m)
    matrices); the expectation applies the normalized trace on the second
    factor: s_{a1 a2} t_{b1 b2} -> [a2 == b2] d^-(m'-m) s_{a1} t_{b1}.
    It is idempotent and acts as the identity on level <= m.
    """
    if m < 0:
        raise ValueError("target level must be >= 0")
    d = a.d
    if any(n != 0 for n in a.components):
        raise NotInCoreError("element has a nonzero component of degree != 0")
    comp = a.components.get(0)
    if comp is None or comp.level <= m:
        return a
    weight = GaussianRational(Fraction(1, d ** (comp.level - m)))
    entries = {}
    for (row, col), coeff in comp.entries.items():
        if row[m:] != col[m:]:
            continue
        key = (row[:m], col[:m])
        acc = entries.get(key)
        contrib = coeff * weight
        acc = contrib if acc is None else acc + contrib
        if acc.is_zero():
            entries.pop(key, None)
        else:
            entries[key] = acc
    return LeavittElement(d, {0: GradedComponent(0, m, entries)})


def trace(a: LeavittElement) -> GaussianRational:
    """Normalized trace on the core: s_alpha t_beta -> [alpha == beta] d^-l(alpha)."""
    if any(n != 0 for n in a.components):
        raise NotInCoreError("element has a nonzero component of degree != 0")
    comp = a.components.get(0)
    if comp is None:
        return ZERO
    weight = GaussianRational(Fraction(1, a.d ** comp.level))
    total = ZERO
    for (row, col), coeff in comp.entries.items():
        if row == col:
            total = total + coeff
    return total * weight


@dataclass(frozen=True)
class SignedPermMatrix:
    """Sum over j of eps_j e_{j, sigma(j)}; sigma is 1-based.

    These form a group of order 2^d d! acting isometrically on l_d^p for
    every p, and their span is the whole matrix algebra.
    """

    sigma: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        d = len(self.sigma)
        if sorted(self.sigma) != list(range(1, d + 1)):
            raise ValueError("sigma is not a permutation of 1..d")
        if len(self.signs) != d or any(e not in (-1, 1) for e in self.signs):
            raise ValueError("signs must be +-1 of length d")

    @property
    def d(self) -> int:
        return len(self.sigma)

    def __mul__(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        if self.d != other.d:
            raise ValueError("size mismatch")
        sigma = tuple(other.sigma[self.sigma[j] - 1] for j in range(self.d))
        signs = tuple(self.signs[j] * other.signs[self.sigma[j] - 1] for j in range(self.d))
        return SignedPermMatrix(sigma, signs)

    def inverse(self) -> "SignedPermMatrix":
        inv = [0] * self.d
        signs = [1] * self.d
        for j in range(self.d):
            k = self.sigma[j] - 1
            inv[k] = j + 1
            signs[k] = self.signs[j]
        return SignedPermMatrix(tuple(inv), tuple(signs))

    def to_core_matrix(self) -> CoreMatrix:
        d = self.d
        rows = [[ZERO] * d for _ in range(d)]
        for j in range(d):
            rows[j][self.sigma[j] - 1] = GaussianRational(self.signs[j])
        return CoreMatrix(d, 1, rows)

    def to_float(self):
        import numpy as np

        out = np.zeros((self.d, self.d), dtype=complex)
        for j in range(self.d):
            out[j, self.sigma[j] - 1] = self.signs[j]
        return out


def signed_perm_group(d: int, max_d: int = 6) -> List[SignedPermMatrix]:
    """All 2^d d! signed permutation matrices, each exactly once."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > max_d:
        raise ValueError(
            f"refusing to enumerate {2 ** d * math.factorial(d)} group elements "
            f"(d={d} > cap {max_d}); raise max_d to override"
        )
    out = []
    for sigma in itertools.permutations(range(1, d + 1)):
        for signs in itertools.product((1, -1), repeat=d):
            out.append(SignedPermMatrix(sigma, signs))
    return out


def group_average(A: CoreMatrix, d: int, max_d: int = 6) -> CoreMatrix:
    """(1 / |G|) sum over the signed permutation group of g A g^-1.

    The result always equals trace(A) times the identity; the identity is
    re-checked after summation and a failure means a bug in this module.
    """
    if A.d ** A.m != d:
        raise ValueError(f"expected a {d}x{d} matrix")
    group = signed_perm_group(d, max_d=max_d)
    side = d
    acc = [[ZERO] * side for _ in range(side)]
    for g in group:
        # (g A g^-1)[j, k] = eps_j A[sigma(j), sigma(k)] eps_k
        for j in range(side):
            for k in range(side):
                term = A.rows[g.sigma[j] - 1][g.sigma[k] - 1]
                if term.is_zero():
                    continue
                acc[j][k] = acc[j][k] + GaussianRational(g.signs[j] * g.signs[k]) * term
    weight = GaussianRational(Fraction(1, len(group)))
    result = CoreMatrix(A.d, A.m, [[weight * x for x in row] for row in acc])
    tr = A.trace()
    expected = CoreMatrix(
        A.d,
        A.m,
        [[tr if i == j else ZERO for j in range(side)] for i in range(side)],
    )
    if result != expected:
        raise RuntimeError("group averaging identity violated; implementation bug")
    return result
