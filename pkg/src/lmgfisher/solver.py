"""Ground-state eigensolvers for real symmetric tridiagonal matrices.

ground_eigenpair brackets the smallest eigenvalue with Sturm-sequence
bisection, then polishes the eigenvector by shifted inverse iteration.
dense_oracle_eigenpair is an independent cyclic-Jacobi routine kept for
cross-validation.  lmg_ground_state solves both parity blocks of one
model instance and returns the lower one (even wins exact ties, so the
reported state keeps <S_x> = <S_y> = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spincore import (
    EVEN,
    ODD,
    ModelParams,
    TridiagonalMatrix,
    build_sector,
    build_sector_matrix,
)

_SAFE_MIN = float(np.finfo(float).tiny)
_BISECTION_RELTOL = 1e-13
_MAX_INVERSE_ITERATIONS = 50
_RESIDUAL_FACTOR = 1e-10
_DEGENERACY_RELTOL = 1e-12
_RESEED = 1905


class ConvergenceError(RuntimeError):
    """Inverse iteration failed to reach the residual target."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (last residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class GroundState:
    """Lowest eigenstate of one model instance, over its sector's descending M values."""

    params: ModelParams
    parity: str
    energy: float
    amplitudes: np.ndarray

    def sector(self):
        return build_sector(self.params, self.parity)


def _residual_tolerance(t: TridiagonalMatrix) -> float:
    scale = float(np.max(np.abs(t.diagonal)))
    if t.offdiagonal.size:
        scale += 2.0 * float(np.max(np.abs(t.offdiagonal)))
    return _RESIDUAL_FACTOR * max(1.0, scale)


def _pivot_floor(e: np.ndarray) -> float:
    biggest = float(np.max(e * e)) if e.size else 1.0
    return _SAFE_MIN * max(1.0, biggest)


def _count_below(diagonal, off_squared, x, pivmin):
    """Sturm-sequence count of eigenvalues below x (exact hits count as below)."""
    count = 0
    q = diagonal[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, len(diagonal)):
        q = (diagonal[i] - x) - off_squared[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _bisect_smallest(t: TridiagonalMatrix) -> float:
    """Bracket the minimal eigenvalue to relative width 1e-13 (Gershgorin start)."""
    d = t.diagonal
    e = t.offdiagonal
    radius = np.zeros(d.size)
    if e.size:
        radius[:-1] += np.abs(e)
        radius[1:] += np.abs(e)
    lo = float(np.min(d - radius))
    hi = float(np.max(d + radius))
    pivmin = _pivot_floor(e)
    off2 = e * e
    dlist = d.tolist()
    o2list = off2.tolist()
    while hi - lo > _BISECTION_RELTOL * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # interval no longer splits in floats
            break
        if _count_below(dlist, o2list, mid, pivmin) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _solve_shifted(d, e, shift, rhs, pivmin):
    """Solve (T - shift I) x = rhs by tridiagonal LU with partial pivoting.

    Near-singular pivots are clamped to +-pivmin; the resulting growth is
    exactly what inverse iteration wants.
    """
    n = d.size
    diag = d - shift
    sup1 = np.zeros(n)
    sup1[: n - 1] = e
    sup2 = np.zeros(n)
    b = np.array(rhs, dtype=float)
    for i in range(n - 1):
        sub = e[i]
        if abs(diag[i]) >= abs(sub):
            piv = diag[i]
            if abs(piv) < pivmin:
                piv = pivmin if piv >= 0.0 else -pivmin
                diag[i] = piv
            m = sub / piv
            diag[i + 1] -= m * sup1[i]
            sup1[i + 1] -= m * sup2[i]
            b[i + 1] -= m * b[i]
        else:
            # swap rows i and i+1; pivot is the subdiagonal entry
            e_next = e[i + 1] if i + 1 < n - 1 else 0.0
            m = diag[i] / sub
            new_diag = sup1[i] - m * diag[i + 1]
            new_sup1 = sup2[i] - m * e_next
            diag[i] = sub
            sup1[i] = diag[i + 1]
            sup2[i] = e_next
            diag[i + 1] = new_diag
            sup1[i + 1] = new_sup1
            b[i], b[i + 1] = b[i + 1], b[i] - m * b[i + 1]
    x = np.empty(n)
    for i in range(n - 1, -1, -1):
        piv = diag[i]
        if abs(piv) < pivmin:
            piv = pivmin if piv >= 0.0 else -pivmin
        acc = b[i]
        if i + 1 < n:
            acc -= sup1[i] * x[i + 1]
        if i + 2 < n:
            acc -= sup2[i] * x[i + 2]
        x[i] = acc / piv
    return x


def _fix_sign(v: np.ndarray) -> np.ndarray:
    """Make the first significant component (storage order) positive.

    Components below 1e-6 of the peak are treated as zero: inverse
    iteration leaves noise well under that level, genuine amplitudes at
    the pivot are well above it.
    """
    threshold = 1e-6 * float(np.max(np.abs(v)))
    nz = np.nonzero(np.abs(v) > threshold)[0]
    pivot = int(nz[0]) if nz.size else 0
    return -v if v[pivot] < 0.0 else v


def ground_eigenpair(
    t: TridiagonalMatrix, max_iterations: int = _MAX_INVERSE_ITERATIONS
) -> tuple[float, np.ndarray]:
    """Smallest eigenvalue and normalized eigenvector of a symmetric tridiagonal matrix.

    The eigenvalue is bracketed by Sturm bisection to relative tolerance
    1e-13; inverse iteration then refines the vector until

        || T v - E v ||_2 <= 1e-10 max(1, ||diag||_inf + 2 ||off||_inf),

    re-randomizing the start vector once on stagnation.  Raises
    ConvergenceError (carrying the last residual) after `max_iterations`.
    """
    d = t.diagonal
    e = t.offdiagonal
    n = t.dimension
    if n == 1:
        return float(d[0]), np.ones(1)
    shift = _bisect_smallest(t)
    pivmin = _pivot_floor(e)
    tol = _residual_tolerance(t)

    v = np.ones(n)
    v[1::2] = -1.0  # alternating start, unlikely to be orthogonal to the target
    v /= np.linalg.norm(v)
    hv = t.matvec(v)
    energy = float(v @ hv)
    residual = float(np.linalg.norm(hv - energy * v))

    best = math.inf
    stalled = 0
    reseeded = False
    polished = False
    for _ in range(max_iterations):
        x = _solve_shifted(d, e, shift, v, pivmin)
        x = x / np.max(np.abs(x))
        v = x / np.linalg.norm(x)
        hv = t.matvec(v)
        energy = float(v @ hv)
        residual = float(np.linalg.norm(hv - energy * v))
        if residual <= tol:
            # one extra pass once the target is met drives the remaining
            # eigenvector noise down to the machine floor
            if polished or max_iterations == 1:
                return energy, _fix_sign(v)
            polished = True
            continue
        if residual >= 0.9 * best:
            stalled += 1
            if stalled >= 2 and not reseeded:
                rng = np.random.default_rng(_RESEED)
                v = rng.standard_normal(n)
                v /= np.linalg.norm(v)
                reseeded = True
                stalled = 0
        else:
            stalled = 0
        best = min(best, residual)
    raise ConvergenceError("inverse iteration did not converge", residual)


def dense_oracle_eigenpair(t: TridiagonalMatrix) -> tuple[float, np.ndarray]:
    """Smallest eigenpair via cyclic Jacobi rotations on the densified matrix.

    Independent O(d^3)-per-sweep cross-check; restricted to d <= 64.
    Sweeps continue until the off-diagonal Frobenius norm drops below
    1e-14 ||T||_F.
    """
    n = t.dimension
    if n > 64:
        raise ValueError(f"dense oracle limited to dimension <= 64, got {n}")
    a = t.to_dense()
    vecs = np.eye(n)
    norm = float(np.linalg.norm(a))
    target = 1e-14 * norm
    off_mask = ~np.eye(n, dtype=bool)
    for _sweep in range(60):
        off = float(np.linalg.norm(a[off_mask]))
        if off <= target:
            break
        skip = target / (10.0 * n)  # too small to ever keep `off` above target
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                tt = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + tt * tt)
                s = tt * c
                app = a[p, p]
                aqq = a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - tt * apq
                a[q, q] = aqq + tt * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = vecs[:, p].copy()
                vcol_q = vecs[:, q].copy()
                vecs[:, p] = c * vcol_p - s * vcol_q
                vecs[:, q] = s * vcol_p + c * vcol_q
    else:
        raise RuntimeError("Jacobi sweep limit exceeded")
    idx = int(np.argmin(np.diag(a)))
    return float(a[idx, idx]), _fix_sign(vecs[:, idx].copy())


def lmg_ground_state(params: ModelParams) -> GroundState:
    """Ground state over both parity blocks; exact ties resolve to even parity."""
    solved = {}
    for parity in (EVEN, ODD):
        sector = build_sector(params, parity)
        block = build_sector_matrix(params, sector)
        solved[parity] = ground_eigenpair(block)
    e_even, v_even = solved[EVEN]
    e_odd, v_odd = solved[ODD]
    tie = _DEGENERACY_RELTOL * max(1.0, abs(e_even), abs(e_odd))
    if e_odd < e_even - tie:
        parity, energy, vec = ODD, e_odd, v_odd
    else:
        parity, energy, vec = EVEN, e_even, v_even
    vec = _fix_sign(vec / np.linalg.norm(vec))
    return GroundState(params=params, parity=parity, energy=energy, amplitudes=vec)
