"""Fuzzy spheres: spin-j matrices, fuzzy harmonics and semiclassical checks.

At level ``N`` (spin ``j = N/2``) the algebra is ``M_{N+1}(C)`` with
coordinates ``X_a = J_a / sqrt(j(j+1))``.  Fuzzy harmonics are built from
Clebsch-Gordan coefficients and normalized for ``<A, B> = tr(A^dag B)/(N+1)``;
their commutative partners are ``sqrt(4 pi) Y_lm``, orthonormal for the
averaged sphere measure.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from math import exp, lgamma, pi, sqrt
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.linalg import expm
from scipy.special import sph_harm_y

__all__ = [
    "SU2Irrep", "FuzzyOp", "HarmonicBasis", "su2_irrep", "fuzzy_coords",
    "clebsch_gordan", "fuzzy_harmonics", "fuzzy_product", "quantize",
    "dequantize", "convergence_experiment", "rotate", "rotation_about_axis",
    "center_dimension", "named_function", "GRID",
]


@dataclass(frozen=True)
class SU2Irrep:
    N: int
    J1: np.ndarray
    J2: np.ndarray
    J3: np.ndarray


@dataclass(frozen=True)
class FuzzyOp:
    N: int
    matrix: np.ndarray

    def __matmul__(self, other: "FuzzyOp") -> "FuzzyOp":
        return fuzzy_product(self, other)


def su2_irrep(N: int) -> SU2Irrep:
    """Spin ``N/2`` matrices with ``J3 = diag(j, ..., -j)``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    j = N / 2
    m = j - np.arange(N + 1)
    Jp = np.zeros((N + 1, N + 1), dtype=complex)
    for r in range(1, N + 1):
        # <m+1| J+ |m> with m = m[r]
        Jp[r - 1, r] = sqrt(j * (j + 1) - m[r] * (m[r] + 1))
    Jm = Jp.conj().T
    return SU2Irrep(N, (Jp + Jm) / 2, (Jp - Jm) / 2j, np.diag(m).astype(complex))


def fuzzy_coords(N: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if N < 1:
        raise ValueError("fuzzy coordinates need N >= 1")
    R = su2_irrep(N)
    s = sqrt(N / 2 * (N / 2 + 1))
    return R.J1 / s, R.J2 / s, R.J3 / s


def hbar_fuzzy(N: int) -> float:
    """Commutator scale ``1/sqrt(j(j+1))`` of the fuzzy coordinates."""
    return 1 / sqrt(N / 2 * (N / 2 + 1))


def hbar_fk(N: int) -> float:
    """Projected-product scale ``2/(N+1)``."""
    return 2 / (N + 1)


# --- Clebsch-Gordan ------------------------------------------------------------

def _lf(x: float) -> float:
    return lgamma(x + 1)


def _is_half_int(x: float) -> bool:
    return abs(2 * x - round(2 * x)) < 1e-9


def clebsch_gordan(j1, m1, j2, m2, J, M) -> float:
    """``<j1 m1; j2 m2 | J M>`` in the Condon-Shortley convention.

    Racah's single-sum formula evaluated with log-factorials.  Inadmissible
    arguments return 0.
    """
    vals = (j1, m1, j2, m2, J, M)
    if not all(_is_half_int(v) for v in vals):
        return 0.0
    if abs(m1 + m2 - M) > 1e-9 or J < abs(j1 - j2) - 1e-9 or J > j1 + j2 + 1e-9:
        return 0.0
    if abs(m1) > j1 + 1e-9 or abs(m2) > j2 + 1e-9 or abs(M) > J + 1e-9:
        return 0.0
    for a, b in ((j1, m1), (j2, m2), (J, M)):
        if not _is_half_int(a + b) or round(2 * (a + b)) % 2:
            return 0.0
    if round(2 * (j1 + j2 + J)) % 2:
        return 0.0
    r = lambda x: int(round(x))
    a1, a2, a3 = r(j1 + j2 - J), r(j1 - j2 + J), r(-j1 + j2 + J)
    pref = 0.5 * (np.log(2 * J + 1) + _lf(a1) + _lf(a2) + _lf(a3) - _lf(r(j1 + j2 + J + 1)))
    pref += 0.5 * (_lf(r(J + M)) + _lf(r(J - M)) + _lf(r(j1 - m1)) + _lf(r(j1 + m1))
                   + _lf(r(j2 - m2)) + _lf(r(j2 + m2)))
    kmin = max(0, r(j2 - J - m1), r(j1 + m2 - J))
    kmax = min(a1, r(j1 - m1), r(j2 + m2))
    total = 0.0
    for k in range(kmin, kmax + 1):
        den = (_lf(k) + _lf(a1 - k) + _lf(r(j1 - m1) - k) + _lf(r(j2 + m2) - k)
               + _lf(r(J - j2 + m1) + k) + _lf(r(J - j1 - m2) + k))
        total += (-1) ** k * exp(pref - den)
    return total


# --- harmonics -----------------------------------------------------------------

@dataclass(frozen=True)
class HarmonicBasis:
    N: int
    thetas: Mapping[tuple[int, int], FuzzyOp]

    def keys(self) -> list[tuple[int, int]]:
        return [(l, m) for l in range(self.N + 1) for m in range(-l, l + 1)]


@lru_cache(maxsize=64)
def _harmonic_matrices(N: int) -> tuple[np.ndarray, ...]:
    j = N / 2
    ms = [j - r for r in range(N + 1)]
    mats = []
    for l in range(N + 1):
        for m in range(-l, l + 1):
            T = np.zeros((N + 1, N + 1))
            for c, m2 in enumerate(ms):
                m1 = m2 + m
                if abs(m1) > j + 1e-9:
                    continue
                row = int(round(j - m1))
                T[row, c] = sqrt(2 * l + 1) * clebsch_gordan(j, m2, l, m, j, m1)
            mats.append(T)
    return tuple(mats)


def fuzzy_harmonics(N: int) -> HarmonicBasis:
    """``Theta_lm`` with entries ``sqrt(2l+1) <j m2; l m | j m1>`` at (m1, m2)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    mats = _harmonic_matrices(N)
    keys = [(l, m) for l in range(N + 1) for m in range(-l, l + 1)]
    return HarmonicBasis(N, {k: FuzzyOp(N, M.astype(complex)) for k, M in zip(keys, mats)})


def fuzzy_product(F: FuzzyOp, G: FuzzyOp) -> FuzzyOp:
    if F.N != G.N:
        raise ValueError("level mismatch")
    return FuzzyOp(F.N, F.matrix @ G.matrix)


def inner(A: np.ndarray, B: np.ndarray) -> complex:
    return complex(np.trace(A.conj().T @ B) / A.shape[0])


Coeffs = Mapping[tuple[int, int], complex]


def quantize(coeffs: Coeffs, N: int) -> FuzzyOp:
    """``sum a_lm Theta_lm`` for coefficients with ``l <= N``."""
    basis = fuzzy_harmonics(N).thetas
    M = np.zeros((N + 1, N + 1), dtype=complex)
    for (l, m), a in coeffs.items():
        if l > N:
            raise ValueError(f"harmonic l={l} exceeds level N={N}")
        M += a * basis[(l, m)].matrix
    return FuzzyOp(N, M)


def dequantize(F: FuzzyOp) -> dict[tuple[int, int], complex]:
    """Coefficients ``<Theta_lm, F>``."""
    return {k: inner(T.matrix, F.matrix) for k, T in fuzzy_harmonics(F.N).thetas.items()}


# --- functions on the sphere -----------------------------------------------------

def _grid(nt: int = 32, nphi: int = 64):
    theta = pi * (np.arange(nt) + 0.5) / nt
    phi = 2 * pi * np.arange(nphi) / nphi
    return np.meshgrid(theta, phi, indexing="ij")


GRID = _grid()


def sphere_harmonic(l: int, m: int, grid=GRID) -> np.ndarray:
    """``sqrt(4 pi) Y_lm`` (Condon-Shortley) on the grid."""
    th, ph = grid
    return sqrt(4 * pi) * sph_harm_y(l, m, th, ph)


def evaluate(coeffs: Coeffs, grid=GRID) -> np.ndarray:
    out = np.zeros(grid[0].shape, dtype=complex)
    for (l, m), a in coeffs.items():
        if a:
            out += a * sphere_harmonic(l, m, grid)
    return out


def _rotation_generators(coeffs: Coeffs) -> list[dict[tuple[int, int], complex]]:
    """Coefficients of ``(x cross grad) f`` componentwise, via ``L = -i x cross grad``.

    ``L3 Y_lm = m Y_lm`` and ``L_pm Y_lm = sqrt(l(l+1) - m(m pm 1)) Y_l,m pm 1``;
    the real rotation fields are ``i L_a``.
    """
    Lp: dict = {}
    Lm: dict = {}
    L3: dict = {}
    for (l, m), a in coeffs.items():
        if m < l:
            Lp[(l, m + 1)] = Lp.get((l, m + 1), 0) + a * sqrt(l * (l + 1) - m * (m + 1))
        if m > -l:
            Lm[(l, m - 1)] = Lm.get((l, m - 1), 0) + a * sqrt(l * (l + 1) - m * (m - 1))
        L3[(l, m)] = L3.get((l, m), 0) + a * m
    keys = set(Lp) | set(Lm)
    L1 = {k: (Lp.get(k, 0) + Lm.get(k, 0)) / 2 for k in keys}
    L2 = {k: (Lp.get(k, 0) - Lm.get(k, 0)) / 2j for k in keys}
    return [{k: 1j * v for k, v in L.items()} for L in (L1, L2, L3)]


def poisson_on_grid(f: Coeffs, g: Coeffs, grid=GRID) -> np.ndarray:
    """``{f, g}`` with ``{x_a, x_b} = eps_abc x_c``, as ``x . (Lf x Lg)``."""
    th, ph = grid
    x = [np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)]
    A = [evaluate(c, grid) for c in _rotation_generators(f)]
    B = [evaluate(c, grid) for c in _rotation_generators(g)]
    cross = [A[1] * B[2] - A[2] * B[1], A[2] * B[0] - A[0] * B[2], A[0] * B[1] - A[1] * B[0]]
    return sum(xi * ci for xi, ci in zip(x, cross))


def named_function(name: str) -> dict[tuple[int, int], complex]:
    """Harmonic coefficients of ``one``, ``x1``, ``x2``, ``x3``."""
    s = 1 / sqrt(3)
    table = {
        "one": {(0, 0): 1.0},
        "x3": {(1, 0): s},
        # x1 = (Y_{1,-1} - Y_{1,1}) / sqrt2 and x2 = i (Y_{1,-1} + Y_{1,1}) / sqrt2
        "x1": {(1, -1): s / sqrt(2), (1, 1): -s / sqrt(2)},
        "x2": {(1, -1): 1j * s / sqrt(2), (1, 1): 1j * s / sqrt(2)},
    }
    if name not in table:
        raise ValueError(f"unknown function {name!r}")
    return table[name]


@dataclass(frozen=True)
class ConvergenceRow:
    N: int
    hbar_N: float
    sup_err_product: float
    sup_err_poisson: float


def convergence_experiment(f: Coeffs, g: Coeffs, N_list: Iterable[int],
                           matching: str = "fuzzy") -> list[ConvergenceRow]:
    """Sup-norm errors of the quantized product and bracket on a 32x64 grid.

    ``matching`` picks the scale dividing ``[F, G]/i``: ``"fuzzy"`` uses
    ``1/sqrt(j(j+1))`` (exact for the coordinate functions) and ``"fk"`` uses
    ``2/(N+1)``.
    """
    if matching not in ("fuzzy", "fk"):
        raise ValueError(f"unknown matching {matching!r}")
    Ns = sorted(set(int(n) for n in N_list))
    if not Ns or Ns[0] < 1:
        raise ValueError("levels must be positive")
    lmax = max((l for l, _ in list(f) + list(g)), default=0)
    if lmax > Ns[0]:
        raise ValueError(f"harmonic l={lmax} exceeds smallest level N={Ns[0]}")
    fg = evaluate(f) * evaluate(g)
    pb = poisson_on_grid(f, g)
    rows = []
    for N in Ns:
        F, G = quantize(f, N), quantize(g, N)
        h = hbar_fuzzy(N) if matching == "fuzzy" else hbar_fk(N)
        prod = evaluate(dequantize(fuzzy_product(F, G)))
        br = FuzzyOp(N, (F.matrix @ G.matrix - G.matrix @ F.matrix) / (1j * h))
        rows.append(ConvergenceRow(
            N, h,
            float(np.abs(prod - fg).max()),
            float(np.abs(evaluate(dequantize(br)) - pb).max()),
        ))
    return rows


def rows_to_csv(rows: Sequence[ConvergenceRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "hbar_N", "sup_err_product", "sup_err_poisson"])
    for r in rows:
        w.writerow([r.N, repr(r.hbar_N), f"{r.sup_err_product:.12e}", f"{r.sup_err_poisson:.12e}"])
    return buf.getvalue()


# --- rotations ---------------------------------------------------------------------

def wigner_matrix(N: int, euler: Sequence[float]) -> np.ndarray:
    """``exp(-i a J3) exp(-i b J2) exp(-i c J3)`` for ZYZ Euler angles."""
    a, b, c = euler
    R = su2_irrep(N)
    return expm(-1j * a * R.J3) @ expm(-1j * b * R.J2) @ expm(-1j * c * R.J3)


def rotate(F: FuzzyOp, euler: Sequence[float]) -> FuzzyOp:
    """Conjugate by the Wigner matrix of the rotation with ZYZ angles ``euler``."""
    D = wigner_matrix(F.N, euler)
    return FuzzyOp(F.N, D @ F.matrix @ D.conj().T)


def rotation_about_axis(axis: int, angle: float) -> tuple[float, float, float]:
    """ZYZ Euler angles of the rotation by ``angle`` about coordinate axis 1, 2 or 3."""
    if axis == 3:
        return (angle, 0.0, 0.0)
    if axis == 2:
        return (0.0, angle, 0.0)
    if axis == 1:
        return (-pi / 2, angle, pi / 2)
    raise ValueError("axis must be 1, 2 or 3")


def center_dimension(N: int, tol: float = 1e-10) -> int:
    """Dimension of the commutant of the fuzzy coordinates (numerical)."""
    X = fuzzy_coords(N)
    n = N + 1
    eye = np.eye(n)
    rows = [np.kron(A, eye) - np.kron(eye, A.T) for A in X]
    s = np.linalg.svd(np.vstack(rows), compute_uv=False)
    return int(np.sum(s < tol * max(1.0, s.max())))
