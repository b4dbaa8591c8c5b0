"""Shared complex-analysis numerics.

Branch-consistent square roots, dense polynomial root finding (companion
matrix + Newton polish), adaptive contour winding numbers, and contour-based
root localization on the annulus 1 < |A| <= R via recursive subdivision.

All function arguments named ``f`` are analytic function handles that must
accept complex numpy arrays (vectorized evaluation).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ContourTooClose, DegenerateInput

TWO_PI = 2.0 * np.pi

# Relative trim threshold for polynomial leading coefficients.
COEFF_TRIM = 1e-13

# Hard cap on adaptive contour samples.
MAX_CONTOUR_SAMPLES = 2**20


def branch_sqrt(z):
    """Square root with Re(w) >= 0; on the imaginary axis, Im(w) >= 0.

    This branch keeps the fluid modes exp(-gamma*k*y) decaying for y -> inf.
    Works on scalars and arrays.
    """
    w = np.sqrt(np.asarray(z, dtype=complex))
    flip = (w.real < 0) | ((w.real == 0) & (w.imag < 0))
    w = np.where(flip, -w, w)
    if w.ndim == 0:
        return complex(w)
    return w


@dataclass
class Polynomial:
    """Dense polynomial with complex coefficients ordered constant-first."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        scale = np.max(np.abs(c)) if c.size else 0.0
        if scale > 0.0:
            keep = np.abs(c) > COEFF_TRIM * scale
            last = np.max(np.nonzero(keep)[0]) if keep.any() else 0
            c = c[: last + 1]
        self.coeffs = c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        # Horner, highest power first
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial(np.zeros(1, dtype=complex))
        k = np.arange(1, len(self.coeffs))
        return Polynomial(self.coeffs[1:] * k)


def poly_roots(p: Polynomial) -> list[complex]:
    """All roots of ``p`` via the companion matrix, Newton-polished.

    Each returned root r satisfies
    |p(r)| <= 1e-9 * max|coeff| * max(1, |r|)^degree.
    """
    if p.degree < 1:
        raise DegenerateInput("polynomial has degree 0 after trimming")
    roots = np.roots(p.coeffs[::-1])
    dp = p.derivative()
    scale = np.max(np.abs(p.coeffs))
    polished = []
    for r in roots:
        r = complex(r)
        for _ in range(50):
            fr = complex(p(r))
            tol = 1e-9 * scale * max(1.0, abs(r)) ** p.degree
            if abs(fr) <= 0.01 * tol:
                break
            dfr = complex(dp(r))
            if dfr == 0.0:
                break
            step = fr / dfr
            if abs(step) <= 1e-16 * (1.0 + abs(r)):
                break
            r -= step
        polished.append(r)
    return polished


@dataclass
class Contour:
    """Circular contour for winding-number evaluation."""

    center: complex = 0.0 + 0.0j
    radius: float = 1.0
    n_samples: int = 256
    max_phase_step: float = np.pi / 2

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("contour radius must be positive")
        if self.n_samples < 64:
            raise ValueError("contour needs at least 64 samples")

    def points(self, t):
        return self.center + self.radius * np.exp(2j * np.pi * np.asarray(t))


@dataclass
class WindingResult:
    winding: int
    min_abs_on_contour: float
    refinements: int


def _adaptive_winding(f, zfun, n0, max_phase_step=np.pi / 2, where=None) -> WindingResult:
    """Winding number of f along the closed path t -> zfun(t), t in [0, 1].

    Segments whose phase step exceeds ``max_phase_step`` are bisected until
    resolved or MAX_CONTOUR_SAMPLES is reached. The total unwrapped phase of a
    closed path is an exact multiple of 2*pi once every step is below pi.
    """
    t = np.linspace(0.0, 1.0, n0 + 1)
    v = np.asarray(f(zfun(t)), dtype=complex)
    refinements = 0
    while True:
        if not np.all(np.isfinite(v)):
            raise ContourTooClose("non-finite contour values", min_abs=0.0, where=where)
        absv = np.abs(v)
        min_abs = float(absv.min())
        if min_abs == 0.0:
            raise ContourTooClose("zero on contour", min_abs=0.0, where=where)
        dphi = np.angle(v[1:] / v[:-1])
        bad = np.abs(dphi) > max_phase_step
        if not bad.any():
            break
        if len(t) >= MAX_CONTOUR_SAMPLES:
            raise ContourTooClose(
                "phase step unresolved at sample cap", min_abs=min_abs, where=where
            )
        idx = np.flatnonzero(bad)
        tm = 0.5 * (t[idx] + t[idx + 1])
        vm = np.asarray(f(zfun(tm)), dtype=complex)
        t = np.insert(t, idx + 1, tm)
        v = np.insert(v, idx + 1, vm)
        refinements += 1
    if min_abs < 1e-12:
        raise ContourTooClose("root or pole on contour", min_abs=min_abs, where=where)
    total = float(dphi.sum())
    winding = int(np.rint(total / TWO_PI))
    return WindingResult(winding=winding, min_abs_on_contour=min_abs, refinements=refinements)


def winding_number(f, c: Contour) -> WindingResult:
    """Total phase change of f along the circle ``c``, divided by 2*pi."""
    return _adaptive_winding(f, c.points, c.n_samples, c.max_phase_step, where=c)


@dataclass
class _Sector:
    """Annular sector cell in the zeta = 1/A plane."""

    r0: float
    r1: float
    th0: float
    th1: float

    def path(self, t):
        # Positively oriented boundary: outer arc (theta increasing), inward
        # radial, inner arc (theta decreasing), outward radial.
        t = np.asarray(t, dtype=float)
        z = np.empty(t.shape, dtype=complex)
        s = np.mod(t, 1.0) * 4.0
        seg = np.minimum(s.astype(int), 3)
        u = s - seg
        m = seg == 0
        z[m] = self.r1 * np.exp(1j * (self.th0 + u[m] * (self.th1 - self.th0)))
        m = seg == 1
        z[m] = (self.r1 + u[m] * (self.r0 - self.r1)) * np.exp(1j * self.th1)
        m = seg == 2
        z[m] = self.r0 * np.exp(1j * (self.th1 + u[m] * (self.th0 - self.th1)))
        m = seg == 3
        z[m] = (self.r0 + u[m] * (self.r1 - self.r0)) * np.exp(1j * self.th0)
        return z

    @property
    def diameter(self) -> float:
        return max(self.r1 - self.r0, self.r1 * (self.th1 - self.th0))

    @property
    def center(self) -> complex:
        return np.sqrt(self.r0 * self.r1) * np.exp(0.5j * (self.th0 + self.th1))

    def split(self, fr=0.5, fth=0.5):
        rm = self.r0 ** (1.0 - fr) * self.r1**fr
        thm = self.th0 + fth * (self.th1 - self.th0)
        return [
            _Sector(self.r0, rm, self.th0, thm),
            _Sector(self.r0, rm, thm, self.th1),
            _Sector(rm, self.r1, self.th0, thm),
            _Sector(rm, self.r1, thm, self.th1),
        ]


def _newton_refine(f, z0: complex, tol: float, max_iter: int = 60) -> complex:
    """Newton with numerical derivative (step 1e-7*(1+|z|)); cheap f assumed."""
    z = complex(z0)
    for _ in range(max_iter):
        fz = complex(f(np.array([z]))[0])
        if abs(fz) <= tol:
            break
        h = 1e-7 * (1.0 + abs(z))
        df = (complex(f(np.array([z + h]))[0]) - fz) / h
        if df == 0.0 or not np.isfinite(df):
            break
        step = fz / df
        # damp wild steps out of the basin
        if abs(step) > 0.5 * (1.0 + abs(z)):
            step *= 0.5 * (1.0 + abs(z)) / abs(step)
        z -= step
        if abs(step) <= 1e-15 * (1.0 + abs(z)):
            break
    return z


def subdivide_roots(f, outer_radius: float = 1e3, n0: int = 64) -> list[complex]:
    """All zeros of ``f`` with 1 + 1e-8 < |A| <= outer_radius.

    Works in zeta = 1/A, where the search region is the annulus
    1/outer_radius <= |zeta| <= 1/(1 + 1e-8). Cells with more than one zero
    are split recursively; isolated zeros are Newton-refined in A.
    """
    g = lambda zeta: f(1.0 / np.asarray(zeta, dtype=complex))
    r_lo = 1.0 / outer_radius
    r_hi = 1.0 / (1.0 + 1e-8)

    def cell_count(cell: _Sector) -> tuple[int, float]:
        res = _adaptive_winding(g, cell.path, n0, where=cell)
        return res.winding, res.min_abs_on_contour

    roots: list[complex] = []

    def refine_from(cell: _Sector, count: int, scale: float) -> bool:
        a0 = 1.0 / cell.center
        tol = 1e-10 * max(1.0, scale)
        root = _newton_refine(f, a0, tol)
        if abs(complex(f(np.array([root]))[0])) <= tol and abs(root) > 1.0 + 1e-8:
            roots.extend([root] * count)
            return True
        return False

    def recurse(cell: _Sector):
        count, scale = cell_count(cell)
        if count == 0:
            return
        # localize a single zero to a small cell before polishing; multiple
        # zeros keep splitting down to the 1e-6 floor
        if (count == 1 and cell.diameter < 1e-3) or cell.diameter < 1e-6:
            if refine_from(cell, count, scale) or cell.diameter < 1e-6:
                return
        mark = len(roots)
        try:
            for ch in cell.split():
                recurse(ch)
        except ContourTooClose:
            # a zero sat on an internal split edge; retry with jittered split
            del roots[mark:]
            for ch in cell.split(fr=0.473, fth=0.531):
                recurse(ch)

    # Total zero count over the annulus boundary; early out when analytic
    # region is root-free (the common stable case).
    w_out = _adaptive_winding(g, lambda t: r_hi * np.exp(2j * np.pi * np.asarray(t)), max(n0, 256))
    w_in = _adaptive_winding(g, lambda t: r_lo * np.exp(2j * np.pi * np.asarray(t)), max(n0, 256))
    total = w_out.winding - w_in.winding
    if total <= 0:
        return []

    n_th = 8
    for r0, r1 in ((r_lo, 1e-1), (1e-1, r_hi)):
        if r0 >= r_hi:
            continue
        r1 = min(r1, r_hi)
        for k in range(n_th):
            recurse(_Sector(r0, r1, TWO_PI * k / n_th, TWO_PI * (k + 1) / n_th))

    # dedupe Newton results that drifted across cell borders
    unique: list[complex] = []
    for r in sorted(roots, key=lambda z: (z.real, z.imag)):
        if all(abs(r - u) > 1e-6 * (1.0 + abs(u)) for u in unique):
            unique.append(r)
    return unique
