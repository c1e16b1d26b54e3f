"""Pure-NumPy power-iteration kernel for lp operator norms.

Same contract as the compiled twin in _kernels.pyx; used automatically
when the extension is unavailable.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _dual_power(v: np.ndarray, e: float) -> np.ndarray:
    """Entrywise phase * |v|^e (phase-power map)."""
    mag = np.abs(v)
    out = np.zeros_like(v)
    nz = mag > 0.0
    out[nz] = (v[nz] / mag[nz]) * mag[nz] ** e
    return out


def _pnorm(v: np.ndarray, p: float) -> float:
    return float(np.linalg.norm(v, ord=p)) if v.size else 0.0


def power_iterate(A, p, x0, max_iter, rel_tol):
    """Maximize ||A x||_p over ||x||_p = 1 from the start vector x0.

    Fixed point map: y = A x, then x <- dual_q(A^H dual_p(y)) where
    dual_p(y) has unit q-norm and pairs to ||y||_p. Monotone for
    nonnegative data, a well-behaved heuristic otherwise; the caller is
    responsible for restarts.

    Returns (best estimate, witness vector, iterations used, converged).
    """
    A = np.ascontiguousarray(A, dtype=np.complex128)
    x = np.array(x0, dtype=np.complex128)
    p = float(p)
    if not 1.0 < p < float("inf"):
        raise ValueError("power iteration needs 1 < p < inf; endpoints have closed forms")
    q = p / (p - 1.0)
    nx = _pnorm(x, p)
    if nx == 0.0:
        return 0.0, x, 0, True
    x = x / nx
    best = 0.0
    best_x = x.copy()
    prev = -1.0
    it = 0
    while it < max_iter:
        it += 1
        y = A @ x
        est = _pnorm(y, p)
        if est > best:
            best = est
            best_x = x.copy()
        if est == 0.0:
            return best, best_x, it, True
        xi = _dual_power(y, p - 1.0)
        xi /= est ** (p - 1.0)
        z = A.conj().T @ xi
        zq = _pnorm(z, q)
        # KKT check: ||z||_q <= Re <z, x> at a maximizer
        inner = float(np.real(np.vdot(z, x)))
        if zq <= inner * (1.0 + rel_tol) + 1e-300:
            return best, best_x, it, True
        x = _dual_power(z, q - 1.0)
        nx = _pnorm(x, p)
        if nx == 0.0:
            return best, best_x, it, True
        x = x / nx
        if prev >= 0.0 and abs(est - prev) <= rel_tol * est:
            return best, best_x, it, True
        prev = est
    return best, best_x, it, False
