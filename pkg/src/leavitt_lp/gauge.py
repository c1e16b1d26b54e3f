"""Gauge grading: degree projections, the circle action at exact scalars,
and the shift endomorphisms a -> sum_gamma s_gamma a t_gamma.

The circle action scales the degree-n piece by lambda^n. On a graded
element the averaging projection onto degree n therefore has the closed
form "keep the degree-n piece", which is what project implements; no
integration is needed.
"""

from __future__ import annotations

from .elements import GradedComponent, LeavittElement
from .scalars import as_scalar
from .words import words_of_length


def project(a: LeavittElement, n: int) -> LeavittElement:
    """Degree-n piece of a, returned as a full element."""
    comp = a.components.get(n)
    if comp is None:
        return LeavittElement(a.d)
    return LeavittElement(a.d, {n: comp})


def gauge_act(a: LeavittElement, lam) -> LeavittElement:
    """Scale the degree-n piece by lam^n for every n.

    lam may be any nonzero exact scalar; lam = 0 is allowed only when no
    negative degree is present (lam^n with n < 0 would divide by zero).
    """
    lam = as_scalar(lam)
    if lam.is_zero() and any(n < 0 for n in a.components):
        raise ZeroDivisionError(
            "gauge action at 0 undefined on negative-degree components"
        )
    out = {}
    for n, comp in a.components.items():
        factor = lam ** n
        if factor.is_zero():
            continue
        out[n] = GradedComponent(
            n, comp.level, {k: factor * v for k, v in comp.entries.items()}
        )
    return LeavittElement(a.d, out)


def shift_endo(a: LeavittElement, r: int) -> LeavittElement:
    """psi_r(a) = sum over gamma in {1..d}^r of s_gamma a t_gamma.

    A unital endomorphism; it commutes with every s_alpha t_beta having
    l(alpha) = l(beta) = r, and preserves each degree.
    """
    if r < 1:
        raise ValueError(f"shift exponent must be >= 1, got r={r}")
    d = a.d
    out = {}
    for n, comp in a.components.items():
        entries = {}
        for (row, col), coeff in comp.entries.items():
            for gamma in words_of_length(d, r):
                entries[(gamma + row, gamma + col)] = coeff
        out[n] = GradedComponent(n, comp.level + r, entries)
    return LeavittElement(d, out)
