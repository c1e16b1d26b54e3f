"""Numerical lp -> lp operator norms with certified enclosures.

For p in {1, 2, inf} the norm has a closed form (column sums, largest
singular value, row sums) and the enclosure is a point. For other p the
lower endpoint is the best value found by multi-restart nonlinear power
iteration (each restart certified by its witness vector) and the upper
endpoint is the smaller of two Riesz-Thorin style interpolation bounds:
the direct 1/inf bound and the refinement through p = 2. Soundness of
the enclosure never depends on the iteration converging.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .elements import LeavittElement
from .kernels import power_iterate
from .words import word_index


class PExponent:
    """Holder exponent: a rational p >= 1 or infinity."""

    __slots__ = ("_value",)

    def __init__(self, value):
        if isinstance(value, PExponent):
            value = value._value
        if value in (float("inf"), "inf"):
            value = None
        if value is not None:
            value = Fraction(value)
            if value < 1:
                raise ValueError(f"p must be >= 1, got {value}")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, v):
        raise AttributeError("PExponent is immutable")

    @property
    def is_inf(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        if self.is_inf:
            raise ValueError("p is infinite")
        return self._value

    def conjugate(self) -> "PExponent":
        """q with 1/p + 1/q = 1."""
        if self.is_inf:
            return PExponent(1)
        if self._value == 1:
            return PExponent("inf")
        return PExponent(self._value / (self._value - 1))

    def __float__(self) -> float:
        return float("inf") if self.is_inf else float(self._value)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, float, str, PExponent)):
            try:
                other = PExponent(other)
            except (ValueError, TypeError):
                return NotImplemented
            return self._value == other._value
        return NotImplemented

    def __hash__(self):
        return hash(self._value)

    def __repr__(self) -> str:
        return "PExponent(inf)" if self.is_inf else f"PExponent({self._value})"

    def __str__(self) -> str:
        return "inf" if self.is_inf else str(self._value)

    @staticmethod
    def parse(text: str) -> "PExponent":
        text = text.strip().lower()
        if text in ("inf", "infinity", "oo"):
            return PExponent("inf")
        return PExponent(Fraction(text))


@dataclass(frozen=True)
class NormConfig:
    """Tuning knobs for the power iteration; defaults suit desk scale."""

    seed: int = 0
    restarts: int = 32
    max_iter: int = 10_000
    tol: float = 1e-10


@dataclass(frozen=True)
class NormInterval:
    """Certified enclosure [lower, upper] of an operator norm.

    The lower endpoint is achieved by `witness` (up to float rounding);
    the upper endpoint comes from an exact formula or an interpolation
    bound, so it stays valid even when the iteration stalls.
    """

    lower: float
    upper: float
    witness: Optional[Tuple[complex, ...]] = None
    method: str = ""
    converged: bool = True
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def __contains__(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def _as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if not np.isfinite(M).all():
        raise ValueError("matrix has NaN or Inf entries")
    return M


def opnorm_exact(A, p) -> float:
    """Closed-form norm for p in {1, 2, inf}."""
    M = _as_matrix(A)
    p = PExponent(p)
    if M.size == 0:
        return 0.0
    if p == 1:
        return float(np.max(np.sum(np.abs(M), axis=0)))
    if p.is_inf:
        return float(np.max(np.sum(np.abs(M), axis=1)))
    if p == 2:
        return float(np.linalg.norm(M, ord=2))
    raise ValueError(f"no closed form for p={p}; use opnorm")


def _exact_witness(M: np.ndarray, p: PExponent) -> np.ndarray:
    """Unit vector achieving the closed-form norm."""
    if M.size == 0 or not M.any():
        x = np.zeros(M.shape[1], dtype=np.complex128)
        if x.size:
            x[0] = 1.0
        return x
    if p == 1:
        j = int(np.argmax(np.sum(np.abs(M), axis=0)))
        x = np.zeros(M.shape[1], dtype=np.complex128)
        x[j] = 1.0
        return x
    if p.is_inf:
        i = int(np.argmax(np.sum(np.abs(M), axis=1)))
        row = M[i]
        x = np.ones(M.shape[1], dtype=np.complex128)
        nz = np.abs(row) > 0
        x[nz] = np.conj(row[nz] / np.abs(row[nz]))
        return x
    # p == 2: top right singular vector
    _, _, vh = np.linalg.svd(M)
    return np.conj(vh[0])


def _vec_pnorm(v: np.ndarray, p: PExponent) -> float:
    if v.size == 0:
        return 0.0
    if p.is_inf:
        return float(np.max(np.abs(v)))
    return float(np.linalg.norm(v, ord=float(p)))


def _interpolation_upper(M: np.ndarray, p: PExponent) -> float:
    """min of the 1/inf bound and the two-segment bound through p = 2."""
    pf = float(p)
    n1 = opnorm_exact(M, 1)
    n2 = opnorm_exact(M, 2)
    ninf = opnorm_exact(M, PExponent("inf"))
    if n1 == 0.0 or ninf == 0.0:
        return 0.0
    theta = 1.0 / pf
    direct = n1 ** theta * ninf ** (1.0 - theta)
    if pf < 2.0:
        # 1/p = a/1 + (1-a)/2
        a = 2.0 / pf - 1.0
        seg = n1 ** a * n2 ** (1.0 - a)
    else:
        # 1/p = a/2
        a = 2.0 / pf
        seg = n2 ** a * ninf ** (1.0 - a)
    return min(direct, seg)


def _warm_starts(M: np.ndarray, rng: np.random.Generator, cfg: NormConfig, extra):
    ncol = M.shape[1]
    starts = [
        _exact_witness(M, PExponent(1)),
        _exact_witness(M, PExponent(2)),
        _exact_witness(M, PExponent("inf")),
    ]
    starts.extend(np.asarray(x, dtype=np.complex128) for x in extra)
    while len(starts) < cfg.restarts:
        v = rng.standard_normal(ncol) + 1j * rng.standard_normal(ncol)
        starts.append(v)
    return starts


def opnorm(A, p, cfg: NormConfig | None = None, extra_starts: Sequence = ()) -> NormInterval:
    """Certified enclosure of the lp -> lp norm (rectangular allowed)."""
    M = _as_matrix(A)
    p = PExponent(p)
    cfg = cfg or NormConfig()
    if p == 1 or p == 2 or p.is_inf:
        value = opnorm_exact(M, p)
        x = _exact_witness(M, p)
        tag = "inf" if p.is_inf else str(p)
        return NormInterval(
            lower=value,
            upper=value,
            witness=tuple(x.tolist()),
            method=f"exact:p{tag}",
        )
    if M.shape[1] == 0 or M.shape[0] == 0 or not M.any():
        x = np.zeros(M.shape[1], dtype=np.complex128)
        if x.size:
            x[0] = 1.0
        return NormInterval(0.0, 0.0, tuple(x.tolist()), method="zero")

    rng = np.random.default_rng(cfg.seed)
    pf = float(p)
    best = 0.0
    best_x = None
    any_converged = False
    for x0 in _warm_starts(M, rng, cfg, extra_starts):
        est, x, _, conv = power_iterate(M, pf, x0, cfg.max_iter, cfg.tol)
        any_converged = any_converged or conv
        if est > best:
            best = est
            best_x = np.asarray(x)
    if best_x is None:
        best_x = _exact_witness(M, PExponent(2))
    upper = max(_interpolation_upper(M, p), best)
    notes = () if any_converged else ("max-iterations-reached",)
    return NormInterval(
        lower=best,
        upper=upper,
        witness=tuple(best_x.tolist()),
        method="power-iteration+interpolation",
        converged=any_converged,
        notes=notes,
    )


def kron(A, B) -> np.ndarray:
    """Kronecker product; row-major index pairing, (A@C) kron (B@D) law."""
    return np.kron(_as_matrix(A), _as_matrix(B))


def permute_factors(A, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Conjugate by the coordinate shuffle of a product index.

    `dims` lists the factor sizes whose product is the matrix side, and
    `perm` gives the new factor order (0-based): output factor k is input
    factor perm[k]. An lp isometry for every p, so norms are unchanged.
    """
    M = _as_matrix(A)
    dims = [int(x) for x in dims]
    side = int(np.prod(dims))
    if M.shape != (side, side):
        raise ValueError(f"matrix side {M.shape} does not match product {side}")
    n = len(dims)
    perm = [int(x) for x in perm]
    if sorted(perm) != list(range(n)):
        raise ValueError("perm is not a permutation of the factor positions")
    T = M.reshape(dims + dims)
    axes = perm + [n + k for k in perm]
    new_side = side
    return np.ascontiguousarray(T.transpose(axes).reshape(new_side, new_side))


def embed(A, t: int) -> np.ndarray:
    """Unital isometric embedding a -> a tensor 1_t (norm preserved)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return np.kron(_as_matrix(A), np.eye(t, dtype=np.complex128))


def component_matrix(a: LeavittElement, degree: int) -> np.ndarray:
    """Dense coefficient matrix of one graded piece at its canonical level.

    Rows and columns are indexed by all words of the piece's row and
    column lengths in lexicographic order.
    """
    comp = a.component(degree)
    d = a.d
    rows, cols = d ** comp.row_len, d ** comp.col_len
    M = np.zeros((rows, cols), dtype=np.complex128)
    for (row, col), coeff in comp.entries.items():
        M[word_index(row, d), word_index(col, d)] = complex(coeff)
    return M


def elem_norm(a: LeavittElement, p, cfg: NormConfig | None = None) -> NormInterval:
    """Enclosure of the operator norm of an element.

    A pure degree-0 element is a matrix at its level and the matrix norm
    IS the element norm (the matrix-unit embedding is isometric). With
    other degrees present the per-degree rectangular norms give a valid
    lower bound via max and an upper bound via the triangle inequality;
    treating each piece's norm as exactly its rectangular matrix norm is
    an assumption (compression only proves >=) and is flagged in notes.
    """
    p = PExponent(p)
    cfg = cfg or NormConfig()
    if a.is_zero():
        return NormInterval(0.0, 0.0, None, method="zero")
    degrees = a.degrees()
    if degrees == (0,):
        M = component_matrix(a, 0)
        inner = opnorm(M, p, cfg)
        return NormInterval(
            lower=inner.lower,
            upper=inner.upper,
            witness=inner.witness,
            method=f"core-matrix-level-{a.components[0].level}:{inner.method}",
            converged=inner.converged,
            notes=inner.notes,
        )
    lower = 0.0
    upper = 0.0
    converged = True
    notes = {"mixed-degree-bounds", "component-norm-equality-assumed"}
    for n in degrees:
        part = opnorm(component_matrix(a, n), p, cfg)
        lower = max(lower, part.lower)
        upper += part.upper
        converged = converged and part.converged
        notes.update(part.notes)
    return NormInterval(
        lower=lower,
        upper=upper,
        witness=None,
        method="component-bounds",
        converged=converged,
        notes=tuple(sorted(notes)),
    )
