"""Truncated Fock-space matrices for Wick elements.

``zeta_i`` acts as ``sqrt(hbar) a_i`` on occupation states with total
occupation below the cutoff.  Matrix products agree with the Wick product on
"interior" states, those far enough from the cutoff that no intermediate
state is truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import sqrt

import numpy as np

from .report import Report, fmt_float
from .wick import WickElement, WickSignature, adjoint, commutator, named_element

__all__ = [
    "FockSpace", "FockOp", "represent", "eta_mu", "verify_sphere_relations",
    "schwinger_block", "cp1_coords", "c4_numeric_report", "residual_profile",
]


@dataclass(frozen=True)
class FockSpace:
    modes: int
    cutoff: int
    hbar: Fraction = Fraction(1)

    def __post_init__(self):
        if self.modes < 1 or self.cutoff < 1:
            raise ValueError("modes and cutoff must be positive")
        object.__setattr__(self, "hbar", Fraction(self.hbar))
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")

    @property
    def basis(self) -> list[tuple[int, ...]]:
        # grouped by total occupation; inside a group, mode 0 descending
        states = [n for n in product(range(self.cutoff), repeat=self.modes) if sum(n) < self.cutoff]
        return sorted(states, key=lambda n: (sum(n), tuple(-k for k in n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self) -> dict[tuple[int, ...], int]:
        return {n: i for i, n in enumerate(self.basis)}

    def totals(self) -> np.ndarray:
        return np.array([sum(n) for n in self.basis])

    def interior(self, degree: int) -> np.ndarray:
        """States whose total occupation is at most ``cutoff - 1 - degree``."""
        return self.totals() <= self.cutoff - 1 - degree


@dataclass(frozen=True)
class FockOp:
    matrix: np.ndarray
    interior_mask: np.ndarray

    def residual(self, other: np.ndarray | None = None, mask: np.ndarray | None = None) -> float:
        """Largest entry of ``matrix - other`` on the interior columns."""
        m = self.matrix if other is None else self.matrix - other
        cols = self.interior_mask if mask is None else mask
        if not cols.any():
            return 0.0
        return float(np.abs(m[:, cols]).max())


def _word_matrix(F: FockSpace, dag, und) -> np.ndarray:
    idx = F.index()
    M = np.zeros((F.dim, F.dim), dtype=complex)
    for n, col in idx.items():
        amp = 1.0
        mid = []
        for k, u in zip(n, und):
            if k < u:
                break
            f = 1
            for t in range(k - u + 1, k + 1):
                f *= t
            amp *= sqrt(f)
            mid.append(k - u)
        else:
            out = []
            for k, d in zip(mid, dag):
                f = 1
                for t in range(k + 1, k + d + 1):
                    f *= t
                amp *= sqrt(f)
                out.append(k + d)
            row = idx.get(tuple(out))
            if row is not None:
                M[row, col] += amp
    return M


def represent(x: WickElement, F: FockSpace) -> FockOp:
    """Matrix of ``x`` with ``zeta_i -> sqrt(hbar) a_i``."""
    if x.has_central():
        raise ValueError("central variables cannot be represented")
    if x.sig.modes != F.modes:
        raise ValueError("mode count mismatch")
    deg = max(x.degree(), 0)
    if F.cutoff < deg:
        raise ValueError(f"cutoff {F.cutoff} below element degree {deg}")
    h = float(F.hbar)
    M = np.zeros((F.dim, F.dim), dtype=complex)
    for w, c in x.terms.items():
        wd = sum(w.dag) + sum(w.und)
        M += c.evalf(h) * h ** (wd / 2) * _word_matrix(F, w.dag, w.und)
    return FockOp(M, F.interior(deg))


# --- sphere generators --------------------------------------------------------

def eta_r2(F: FockSpace, convention: str = "bridged") -> np.ndarray:
    """Diagonal of the squared radius entering eta and mu."""
    r2 = represent(named_element("Rsq", WickSignature(2)), F).matrix.real.diagonal().copy()
    return 2 * r2 if convention == "bridged" else r2


def eta_mu(F: FockSpace, convention: str = "bridged"):
    """Return ``(eta0, eta1, mu, Rsq)`` as FockOps.

    ``Rsq`` is the image of ``zeta0^dag zeta0 + zeta1 zeta1^dag``, diagonal
    with entries ``hbar (n0 + n1 + 1)``.  With ``convention="literal"`` the
    generators are ``eta_i = sqrt2 R^-1 zeta_i^dag`` and ``mu = -2 hbar R^-2``
    for this ``R``.  The default ``"bridged"`` uses the same formulas with
    ``R`` replaced by the radius ``R' = sqrt2 R`` of the rescaled
    ``xi = zeta / sqrt2`` convention, i.e. ``eta_i = R^-1 zeta_i^dag`` and
    ``mu = -hbar R^-2``; only this choice satisfies the sphere relations.
    """
    if F.modes != 2:
        raise ValueError("eta_mu needs exactly two modes")
    if convention not in ("bridged", "literal"):
        raise ValueError(f"unknown convention {convention!r}")
    sig = WickSignature(2)
    from .wick import zeta_dag

    r2 = eta_r2(F, convention)
    rinv = np.diag(1 / np.sqrt(r2))
    h = float(F.hbar)
    etas = []
    for i in range(2):
        zd = represent(zeta_dag(sig, i), F).matrix
        etas.append(FockOp(sqrt(2) * rinv @ zd, F.interior(1)))
    mu = FockOp(np.diag(-2 * h / r2).astype(complex), F.interior(0))
    rsq = represent(named_element("Rsq", sig), F)
    return etas[0], etas[1], mu, rsq


def verify_sphere_relations(F: FockSpace, tol: float = 1e-10,
                            convention: str = "bridged") -> Report:
    """Five defining relations of the quantized two-sphere on interior states."""
    if F.modes != 2 or F.cutoff < 4:
        raise ValueError("needs two modes and cutoff >= 4")
    e0, e1, mu, _ = eta_mu(F, convention)
    eta = [e0.matrix, e1.matrix]
    etad = [m.conj().T for m in eta]
    M = mu.matrix
    # mu^-1 = -R'^2 / (2 hbar) built directly, avoiding a reciprocal of mu
    r2 = eta_r2(F, convention)
    Minv = np.diag(-r2 / (2 * float(F.hbar))).astype(complex)
    one = np.eye(F.dim)
    rep = Report(f"two-sphere relations (cutoff {F.cutoff}, {convention})")
    rep.info = {"cutoff": F.cutoff, "hbar": str(F.hbar), "convention": convention}

    def res(mat, degree):
        mask = F.interior(degree)
        return float(np.abs(mat[:, mask]).max()) if mask.any() else 0.0

    rels = {
        "[mu^-1, eta_i] = -eta_i": max(res(Minv @ e - e @ Minv + e, 1) for e in eta),
        "[mu^-1, eta_i^dag] = eta_i^dag": max(res(Minv @ e - e @ Minv - e, 1) for e in etad),
        "[eta0, eta1] = 0": res(eta[0] @ eta[1] - eta[1] @ eta[0], 2),
        "eta_i eta_j^dag - (1 - mu) eta_j^dag eta_i = mu delta_ij": max(
            res(eta[i] @ etad[j] - (one - M) @ etad[j] @ eta[i] - (M if i == j else 0), 2)
            for i in range(2) for j in range(2)),
        "eta0^dag eta0 + eta1^dag eta1 = 1": res(etad[0] @ eta[0] + etad[1] @ eta[1] - one, 2),
    }
    for name, r in rels.items():
        rep.add(name, r < tol, residual=fmt_float(r))
    return rep


def residual_profile(cutoffs=(4, 6, 8), hbar=Fraction(1), convention: str = "bridged") -> dict[int, dict[str, float]]:
    """Per-relation interior residuals for several cutoffs."""
    out = {}
    for c in cutoffs:
        rep = verify_sphere_relations(FockSpace(2, c, hbar), convention=convention)
        out[c] = {ch.name: float(ch.residual) for ch in rep.checks}
    return out


ROUNDING_FLOOR = 1e-13


def sphere_relations_suite(hbar=Fraction(1), tol: float = 1e-10,
                           floor: float = ROUNDING_FLOOR) -> Report:
    """Relations at cutoff 6, and at cutoff 8 residuals that do not grow.

    Residuals below ``floor`` are double-precision rounding and count as zero
    in the cutoff comparison.
    """
    prof = residual_profile((6, 8), hbar)
    rep = Report("two-sphere relations on interior Fock states")
    for name, r in prof[6].items():
        rep.add(f"cutoff 6: {name}", r < tol, residual=fmt_float(r))
    for name, r in prof[8].items():
        before = max(prof[6][name], floor)
        rep.add(f"cutoff 8 not above cutoff 6: {name}", max(r, floor) <= before,
                residual=fmt_float(r))
    return rep


# --- Schwinger blocks ---------------------------------------------------------

_EPS = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 0, 2): -1, (2, 1, 0): -1, (0, 2, 1): -1}


def schwinger_block(F: FockSpace, N: int, tol: float = 1e-10):
    """Blocks of ``L1, L2, L3`` on total occupation ``N`` (basis |N,0>, |N-1,1>, ...)."""
    if F.modes != 2:
        raise ValueError("needs two modes")
    if not 0 <= N < F.cutoff - 1:
        raise ValueError(f"N={N} out of range for cutoff {F.cutoff}")
    sig = WickSignature(2)
    full = [represent(named_element(f"L{a + 1}", sig), F).matrix for a in range(3)]
    tot = F.totals()
    sel = np.flatnonzero(tot == N)
    blocks = [m[np.ix_(sel, sel)] for m in full]
    h = float(F.hbar)
    j = N / 2
    rep = Report(f"Schwinger block N={N}")
    cas = sum(b @ b for b in blocks)
    r = float(np.abs(cas - h * h * j * (j + 1) * np.eye(N + 1)).max())
    rep.add("Casimir = hbar^2 j(j+1)", r < tol, residual=fmt_float(r))
    worst = 0.0
    for a in range(3):
        for b in range(3):
            rhs = sum(1j * h * _EPS.get((a, b, c), 0) * blocks[c] for c in range(3))
            worst = max(worst, float(np.abs(blocks[a] @ blocks[b] - blocks[b] @ blocks[a] - rhs).max()))
    rep.add("[L_a, L_b] = i hbar eps_abc L_c", worst < tol, residual=fmt_float(worst))
    off = tot[:, None] != tot[None, :]
    leak = max(float(np.abs(m[off]).max()) if off.any() else 0.0 for m in full)
    rep.add("L_a preserve total occupation", leak == 0.0, residual=fmt_float(leak))
    return blocks, rep


# --- projective coordinate ----------------------------------------------------

def cp1_coords(F: FockSpace, tol: float = 1e-6, convention: str = "bridged") -> Report:
    """Check the relations of ``Z = eta0^+ eta1`` on admissible states.

    ``eta0^+`` is the Moore-Penrose pseudo-inverse.  Admissible states sit at
    least two levels below the cutoff and have mode-0 occupation at least 1.
    Besides the two displayed relations the report includes the variant
    ``[Z, Z^dag] = mu (1 + Z Z^dag)(1 + Z^dag Z)``.
    """
    if F.modes != 2 or F.cutoff < 6:
        raise ValueError("needs two modes and cutoff >= 6")
    e0, e1, mu, _ = eta_mu(F, convention)
    Z = np.linalg.pinv(e0.matrix) @ e1.matrix
    Zd = Z.conj().T
    M = mu.matrix
    one = np.eye(F.dim)
    basis = F.basis
    adm = np.array([sum(n) <= F.cutoff - 3 and n[0] >= 1 for n in basis])
    rep = Report(f"projective coordinate relations (cutoff {F.cutoff})")
    rep.info = {"admissible_states": int(adm.sum()), "caveat": "pseudo-inverse localization"}

    def res(mat):
        return float(np.abs(mat[:, adm]).max()) if adm.any() else 0.0

    comm = Z @ Zd - Zd @ Z
    rA = res(comm - M @ (one + Z @ Zd) @ (one + Z @ Zd))
    rA2 = res(comm - M @ (one + Z @ Zd) @ (one + Zd @ Z))
    W = np.linalg.inv(one + Zd @ Z) @ Zd
    rB = res(Z @ W - W @ Z - M)
    rep.add("admissible states exist", bool(adm.any()))
    rep.add("[Z, Z^dag] = mu (1 + Z Z^dag)^2", rA < tol, residual=fmt_float(rA))
    rep.add("[Z, Z^dag] = mu (1 + Z Z^dag)(1 + Z^dag Z)", rA2 < tol, residual=fmt_float(rA2))
    rep.add("[Z, (1 + Z^dag Z)^-1 Z^dag] = mu", rB < tol, residual=fmt_float(rB))
    return rep


# --- four-mode identities in matrices ----------------------------------------

def c4_numeric_report(cutoff: int = 6, hbar=Fraction(1, 3), tol: float = 1e-10) -> Report:
    """Four-mode alpha/beta commutators as matrix identities on interior states."""
    sig = WickSignature(4)
    F = FockSpace(4, cutoff, hbar)
    al, be = named_element("alpha", sig), named_element("beta", sig)
    x, r0, r1 = (named_element(n, sig) for n in ("x", "R0sq", "R1sq"))
    h = WickElement.hbar(sig)
    rho = lambda e: represent(e, F).matrix
    rep = Report(f"four-mode commutators in Fock space (cutoff {cutoff})")
    mask = F.interior(4)
    rep.info = {"interior_states": int(mask.sum()), "hbar": str(F.hbar)}
    cases = [
        ("[alpha, beta] = 0", al, be, WickElement.zero(sig)),
        ("[alpha, beta^dag] = 0", al, adjoint(be), WickElement.zero(sig)),
        ("[alpha, alpha^dag] = 4 hbar (R1sq - R0sq)", al, adjoint(al), 4 * h * (r1 - r0)),
        ("[alpha, alpha^dag] = -4 hbar x", al, adjoint(al), -4 * h * x),
        ("[beta, beta^dag] = 4 hbar (R0sq + R1sq)", be, adjoint(be), 4 * h * (r0 + r1)),
    ]
    for name, a, b, exp in cases:
        A, B = rho(a), rho(b)
        diff = A @ B - B @ A - rho(exp)
        r = float(np.abs(diff[:, mask]).max())
        rep.add(name, r < tol, residual=fmt_float(r))
    return rep
