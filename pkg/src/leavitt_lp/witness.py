"""Constructive pure-infiniteness witnesses.

Given any nonzero element a, produce x and y with x a y = 1, verified
exactly. The route: pick a degree where a survives, slide it to degree
zero with a power of t_1 or s_1, solve the core case through the
matrix-unit identity and the shift endomorphism, and kill the leftover
off-degree terms by compressing with an idempotent s_w t_w built on a
prefix of the nonperiodic marker sequence 1,2,1,1,2,2,...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .elements import LeavittElement, monomial, one, zero
from .errors import WitnessBoundError
from .gauge import project, shift_endo
from .scalars import GaussianRational
from .words import Word, words_of_length


@dataclass(frozen=True)
class WitnessPair:
    """x, y with x a y = 1; certificate stores the verified product."""

    x: LeavittElement
    y: LeavittElement
    certificate: LeavittElement


def sigma_word(r: int, d: int = 2) -> Word:
    """First r letters of 1,2,1,1,2,2,1,1,1,2,2,2,... (blocks of k ones
    then k twos). No tail of the sequence is periodic, which is what
    makes its prefixes useful annihilators."""
    if r < 1:
        raise ValueError("r must be >= 1")
    letters: List[int] = []
    k = 1
    while len(letters) < r:
        letters.extend([1] * k)
        letters.extend([2] * k)
        k += 1
    return Word(tuple(letters[:r]), d)


def annihilating_word(
    pairs: Sequence[Tuple[Word, Word]], r_max: int | None = None, d: int | None = None
) -> Word:
    """Smallest prefix w of the marker sequence with
    (s_w t_w) s_alpha t_beta (s_w t_w) = 0 for every given pair.

    Every pair must have words of different lengths; existence of a
    finite r is then guaranteed, so hitting r_max means the cap was too
    small.
    """
    if d is None:
        if not pairs:
            raise ValueError("d must be given when the pair list is empty")
        d = pairs[0][0].d
    for alpha, beta in pairs:
        if alpha.d != d or beta.d != d:
            raise ValueError("pair words over mismatched alphabets")
        if len(alpha) == len(beta):
            raise ValueError(
                f"pair ({alpha.letters}, {beta.letters}) has equal word lengths"
            )
    if not pairs:
        return sigma_word(1, d)
    if r_max is None:
        max_len = max(max(len(a), len(b)) for a, b in pairs)
        r_max = 8 * (max_len + len(pairs) + 1)
    zero_elt = zero(d)
    for r in range(1, r_max + 1):
        w = sigma_word(r, d)
        e = monomial(d, w.letters, w.letters)
        if all(
            e * monomial(d, a.letters, b.letters) * e == zero_elt for a, b in pairs
        ):
            return w
    raise WitnessBoundError(
        f"no annihilating prefix up to r_max={r_max}; raise the cap"
    )


def _pick_entry(comp_entries) -> Tuple[tuple, tuple, GaussianRational]:
    """Lexicographically smallest key among the entries of largest modulus."""
    best_sq = max(v.abs_sq() for v in comp_entries.values())
    key = min(k for k, v in comp_entries.items() if v.abs_sq() == best_sq)
    return key[0], key[1], comp_entries[key]


def core_witness(a: LeavittElement) -> Tuple[int, LeavittElement, LeavittElement]:
    """For nonzero degree-0 a, return (n, x, y) with x a y = 1,
    x of pure degree -n and y of pure degree n.

    With m the level of a and (alpha0, beta0) a chosen nonzero entry with
    coefficient lam, the elements b_g = lam^-1 s_g t_alpha0 and
    c_g = s_beta0 t_g (g running over the level-m words) satisfy
    sum_g b_g a c_g = 1. Conjugating through the shift endomorphism
    psi_m turns that sum into a product: with f_{g,h} = psi_m(s_g t_h),

        x = psi_m(t_g1) sum_g b_g f_{g1,g},
        y = (sum_g f_{g,g1} c_g) psi_m(s_g1),

    where g1 is the first level-m word. Exact coefficients make the
    correction inverse of the approximate argument equal to 1.
    """
    if a.is_zero():
        raise ValueError("zero element has no witness")
    if a.degrees() != (0,):
        raise ValueError("core_witness requires a pure degree-0 element")
    d = a.d
    m = a.level()
    alpha0, beta0, lam = _pick_entry(a.components[0].entries)
    if m == 0:
        x = one(d).scale(lam.inverse())
        return 0, x, one(d)

    gammas = list(words_of_length(d, m))
    g1 = gammas[0]
    lam_inv = lam.inverse()

    x_sum = zero(d)
    y_sum = zero(d)
    for g in gammas:
        b_g = monomial(d, g, alpha0, lam_inv)
        c_g = monomial(d, beta0, g)
        f_1g = shift_endo(monomial(d, g1, g), m)
        f_g1 = shift_endo(monomial(d, g, g1), m)
        x_sum = x_sum + b_g * f_1g
        y_sum = y_sum + f_g1 * c_g
    x = shift_endo(monomial(d, (), g1), m) * x_sum
    y = y_sum * shift_endo(monomial(d, g1, ()), m)

    check = x * a * y
    if check != one(d):
        raise RuntimeError("core witness identity failed; implementation bug")
    return m, x, y


def witness(a: LeavittElement, r_max: int | None = None) -> WitnessPair:
    """Witness pair for any nonzero element, verified exactly.

    Degree choice: the surviving degree of smallest absolute value,
    preferring the nonnegative one on ties (keeps the t_1 power short).
    """
    if a.is_zero():
        raise ValueError("zero element has no witness")
    d = a.d
    n = min(a.degrees(), key=lambda k: (abs(k), k < 0))
    if n > 0:
        shifter = monomial(d, (), (1,) * n)  # t_1^n
        a_prime = a * shifter
    elif n < 0:
        shifter = monomial(d, (1,) * (-n), ())  # s_1^-n
        a_prime = shifter * a
    else:
        shifter = None
        a_prime = a

    p0 = project(a_prime, 0)
    # P_0(a t_1^n) = P_n(a) t_1^n never vanishes, and symmetrically
    _, x0, y0 = core_witness(p0)

    b = x0 * a_prime * y0 - one(d)
    if b.is_zero():
        left, right = x0, y0
    else:
        pairs = []
        for row, col, _ in b.monomials():
            pairs.append((Word(row, d), Word(col, d)))
        try:
            w = annihilating_word(pairs, r_max=r_max, d=d)
        except WitnessBoundError as err:
            raise WitnessBoundError(
                f"{err} (while flattening the off-degree remainder of the witness product)"
            ) from err
        left = monomial(d, (), w.letters) * x0
        right = y0 * monomial(d, w.letters, ())

    if n > 0:
        x, y = left, shifter * right
    elif n < 0:
        x, y = left * shifter, right
    else:
        x, y = left, right

    certificate = x * a * y
    if certificate != one(d):
        raise RuntimeError("witness identity failed; implementation bug")
    return WitnessPair(x=x, y=y, certificate=certificate)
