"""Diagrams of algebras, assembled convolution algebras and the gluing model.

An ``AlgDiagram`` is a contravariant functor from a finite poset: for
``i <= j`` there is a unital algebra map ``A^j -> A^i``.  The assembled
algebra has basis ``(arrow i->j, basis element of A^i)`` with

    (a, i->j) (b, j->k) = (a . phi_{i<=j}(b), i->k)

and zero when the arrows do not compose.  The normal-crossing model is the
truncated local algebra of ``{z0 z1 = 0}`` with its two branches and their
intersection.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .hochschild import (Bimodule, Cochain, FDAlgebra, DeformationSeries, ObstructionReport,
                         coboundary, extend_deformation, g_star, monomial_algebra, _image_echelon)
from .linalg import Echelon, axpy, kernel, rank
from .nctorus import S3Element, restrict_to_torus
from .report import Report
from .scalars import Gauss, ONE, ZERO, dump_scalar, parse_scalar

__all__ = [
    "AlgMap", "AlgDiagram", "NormalCrossingModel", "GluingSpec", "NotPosetError",
    "build_nc_model", "check_exact", "build_gluing_diagram", "assemble",
    "restrict_cocycle", "compatibility_check", "glue_s3theta", "is_algebra_map",
    "substitution_map", "minimal_gluing_spec", "incidence_diagram",
]

AlgMap = list  # images of basis vectors: phi[a] is a sparse vector


class NotPosetError(ValueError):
    pass


def is_algebra_map(phi: Sequence[Mapping], A: FDAlgebra, B: FDAlgebra) -> str | None:
    """None when ``phi: A -> B`` is a unital algebra map, else a diagnostic."""
    if len(phi) != A.dim:
        return "map has the wrong number of columns"
    img_unit: dict = {}
    for a, c in A.unit.items():
        axpy(img_unit, c, phi[a])
    if img_unit != B.unit:
        return "map is not unital"
    for a, b in itertools.product(range(A.dim), repeat=2):
        lhs: dict = {}
        for k, c in A.prod(a, b).items():
            axpy(lhs, c, phi[k])
        if lhs != B.mul(phi[a], phi[b]):
            return f"map is not multiplicative on basis pair {(a, b)}"
    return None


def compose(psi: Sequence[Mapping], phi: Sequence[Mapping]) -> AlgMap:
    """``psi o phi``."""
    out = []
    for v in phi:
        w: dict = {}
        for k, c in v.items():
            axpy(w, c, psi[k])
        out.append(w)
    return out


def _matrix(phi: Sequence[Mapping], rows: int) -> list[list]:
    return [[dump_scalar(phi[c].get(r, ZERO)) for c in range(len(phi))] for r in range(rows)]


def _from_matrix(M: Sequence[Sequence]) -> AlgMap:
    cols = len(M[0]) if M else 0
    out = []
    for c in range(cols):
        v = {r: parse_scalar(M[r][c]) for r in range(len(M))}
        out.append({r: x for r, x in v.items() if x})
    return out


# --- diagrams and assembly ------------------------------------------------------------

@dataclass
class AlgDiagram:
    """``homs[(i, j)]`` for ``i < j`` maps ``algebras[j] -> algebras[i]``."""

    objects: list
    leq: set
    algebras: dict
    homs: dict

    def __post_init__(self):
        n = len(self.objects)
        leq = {(i, j) for i, j in self.leq} | {(i, i) for i in range(n)}
        for i, j in leq:
            if not (0 <= i < n and 0 <= j < n):
                raise NotPosetError(f"relation {(i, j)} mentions an unknown object")
        for i, j in leq:
            if i != j and (j, i) in leq:
                raise NotPosetError(f"objects {i} and {j} form a cycle")
        for (i, j), (k, l) in itertools.product(leq, repeat=2):
            if j == k and (i, l) not in leq:
                raise NotPosetError(f"relation is not transitive at {(i, j, l)}")
        self.leq = leq
        self._maps: dict = {}
        for i in range(n):
            A = self.algebras[i]
            self._maps[(i, i)] = [{a: ONE} for a in range(A.dim)]
        for (i, j) in sorted(leq):
            if i != j:
                self._maps[(i, j)] = self._path_map(i, j)

    def covers(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, j in self.leq if i != j and not any(
            (i, k) in self.leq and (k, j) in self.leq and k not in (i, j)
            for k in range(len(self.objects))))

    def _path_map(self, i: int, j: int) -> AlgMap:
        if (i, j) in self.homs:
            return [dict(v) for v in self.homs[(i, j)]]
        for k in range(len(self.objects)):
            if k not in (i, j) and (i, k) in self.leq and (k, j) in self.leq:
                return compose(self._path_map(i, k), self._path_map(k, j))
        raise ValueError(f"no map given for the covering relation {(i, j)}")

    def map(self, i: int, j: int) -> AlgMap:
        return self._maps[(i, j)]

    def functoriality(self) -> Report:
        rep = Report("diagram functoriality")
        for (i, j) in sorted(self.leq):
            if i == j:
                continue
            err = is_algebra_map(self.map(i, j), self.algebras[j], self.algebras[i])
            rep.add(f"hom {i}<={j} is a unital algebra map", err is None, note=err or "")
        for i, k, j in itertools.permutations(range(len(self.objects)), 3):
            if (i, k) in self.leq and (k, j) in self.leq:
                ok = compose(self.map(i, k), self.map(k, j)) == self.map(i, j)
                rep.add(f"composition {i}<={k}<={j}", ok)
        return rep

    def to_json(self) -> dict:
        return {
            "objects": list(self.objects),
            "leq": sorted([list(p) for p in self.leq if p[0] != p[1]]),
            "algebras": {str(i): A.to_json() for i, A in self.algebras.items()},
            "homs": {f"{i},{j}": _matrix(self.map(i, j), self.algebras[i].dim)
                     for i, j in self.covers()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "AlgDiagram":
        objs = list(data["objects"])
        algebras = {int(k): FDAlgebra.from_json(v) for k, v in data["algebras"].items()}
        if sorted(algebras) != list(range(len(objs))):
            raise ValueError("every object needs an algebra")
        homs = {}
        for key, M in data.get("homs", {}).items():
            i, j = (int(x) for x in key.split(","))
            homs[(i, j)] = _from_matrix(M)
        return cls(objs, {tuple(p) for p in data["leq"]}, algebras, homs)


def incidence_diagram(n: int, leq: Sequence[tuple[int, int]]) -> AlgDiagram:
    """Poset diagram with every algebra equal to C."""
    from .hochschild import field_algebra
    C = field_algebra()
    return AlgDiagram(list(range(n)), set(map(tuple, leq)), {i: C for i in range(n)},
                      {tuple(p): [{0: ONE}] for p in leq if p[0] != p[1]})


@dataclass
class AssembledAlgebra:
    algebra: FDAlgebra
    basis: list  # (i, j, a): arrow i->j, basis element a of A^i
    diagram: AlgDiagram


def assemble(D: AlgDiagram, with_terminator: bool = False) -> AssembledAlgebra:
    if with_terminator:
        D = _add_terminator(D)
    arrows = sorted(D.leq)
    basis = [(i, j, a) for i, j in arrows for a in range(D.algebras[i].dim)]
    pos = {b: r for r, b in enumerate(basis)}
    table: dict = {}
    for (i, j, a), (k, l, b) in itertools.product(basis, repeat=2):
        if j != k:
            continue
        Ai = D.algebras[i]
        v = Ai.mul({a: ONE}, D.map(i, j)[b])
        if v:
            table[(pos[(i, j, a)], pos[(k, l, b)])] = {pos[(i, l, c)]: x for c, x in v.items()}
    unit = [ZERO] * len(basis)
    for o in range(len(D.objects)):
        for a, c in D.algebras[o].unit.items():
            unit[pos[(o, o, a)]] = c
    names = [f"{D.algebras[i].names[a]}|{D.objects[i]}->{D.objects[j]}" for i, j, a in basis]
    return AssembledAlgebra(FDAlgebra(len(basis), table, unit, names), basis, D)


def _add_terminator(D: AlgDiagram) -> AlgDiagram:
    from .hochschild import field_algebra
    n = len(D.objects)
    leq = set(D.leq) | {(i, n) for i in range(n + 1)}
    algebras = dict(D.algebras)
    algebras[n] = field_algebra()
    homs = dict(D.homs)
    for i in range(n):
        homs[(i, n)] = [dict(D.algebras[i].unit)]
    return AlgDiagram(list(D.objects) + ["inf"], leq, algebras, homs)


# --- normal-crossing model ------------------------------------------------------------

def _projection(A: FDAlgebra, B: FDAlgebra) -> AlgMap:
    """Monomial quotient map: basis monomials of ``A`` present in ``B`` map to themselves."""
    pos = {e: r for r, e in enumerate(B.monomials)}
    return [{pos[e]: ONE} if e in pos else {} for e in A.monomials]


@dataclass
class NormalCrossingModel:
    d: int
    A: FDAlgebra
    A1: FDAlgebra
    A2: FDAlgebra
    A3: FDAlgebra
    phi1: AlgMap
    phi2: AlgMap
    psi1: AlgMap
    psi2: AlgMap

    def mutated(self) -> "NormalCrossingModel":
        """Negative control: ``psi2`` with its sign flipped."""
        flipped = [{k: -c for k, c in v.items()} for v in self.psi2]
        return NormalCrossingModel(self.d, self.A, self.A1, self.A2, self.A3,
                                   self.phi1, self.phi2, self.psi1, flipped)


def build_nc_model(d: int) -> NormalCrossingModel:
    """Monomial truncations of ``C[z0..z3]/(z0 z1)``, ``A/(z0)``, ``A/(z1)``, ``A/(z0, z1)``."""
    if not 1 <= d <= 4:
        raise ValueError("truncation degree must lie in 1..4")
    z0z1, z0, z1 = (1, 1, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0)
    A = monomial_algebra(4, d, [z0z1], "z")
    A1 = monomial_algebra(4, d, [z0], "z")
    A2 = monomial_algebra(4, d, [z1], "z")
    A3 = monomial_algebra(4, d, [z0, z1], "z")
    return NormalCrossingModel(d, A, A1, A2, A3, _projection(A, A1), _projection(A, A2),
                               _projection(A1, A3), _projection(A2, A3))


def check_exact(model: NormalCrossingModel) -> Report:
    """Exactness of ``0 -> A -> A1 + A2 -> A3 -> 0`` with maps ``(phi1, phi2)`` and ``psi1 - psi2``."""
    m = model
    n1 = m.A1.dim
    Phi = [{**v1, **{n1 + k: c for k, c in v2.items()}} for v1, v2 in zip(m.phi1, m.phi2)]
    Psi = list(m.psi1) + [{k: -c for k, c in v.items()} for v in m.psi2]
    rPhi, rPsi = rank(Phi), rank(Psi)
    mid = n1 + m.A2.dim
    comp = compose(Psi, Phi)
    rep = Report(f"exact sequence d={m.d}")
    rep.info.update(dims=[m.A.dim, n1, m.A2.dim, m.A3.dim], ranks=[rPhi, rPsi])
    rep.add("injective at A", rPhi == m.A.dim, expected=str(m.A.dim), computed=str(rPhi))
    ok_mid = all(not v for v in comp) and rPhi + rPsi == mid
    rep.add("exact at A1+A2", ok_mid, expected=f"ker = im, dim {mid - rPsi}",
            computed=f"rank(phi)={rPhi}, composite zero={all(not v for v in comp)}")
    rep.add("surjective onto A3", rPsi == m.A3.dim, expected=str(m.A3.dim), computed=str(rPsi))
    euler = m.A.dim - n1 - m.A2.dim + m.A3.dim
    rep.add("euler characteristic", euler == 0, computed=str(euler))
    return rep


# --- gluing diagram --------------------------------------------------------------------

@dataclass
class GluingSpec:
    """Local data on two sides of a divisor.

    ``restrict1: B1 -> D1`` and ``restrict2: B2 -> D2`` restrict to the
    divisor truncation; ``gamma: D2 -> D1`` identifies the divisors.  Each
    entry of ``off`` is ``(side, C, r)`` with ``r: B_side -> C`` a chart that
    does not meet the divisor.
    """

    B1: FDAlgebra
    B2: FDAlgebra
    D1: FDAlgebra
    D2: FDAlgebra
    restrict1: AlgMap
    restrict2: AlgMap
    gamma: AlgMap
    off: list = field(default_factory=list)


def substitution_map(D: FDAlgebra, M: Sequence[Sequence[object]]) -> AlgMap:
    """Linear substitution ``x_i -> sum_j M[j][i] x_j`` on a monomial truncation."""
    monos = D.monomials
    nv = len(monos[0])
    pos = {e: r for r, e in enumerate(monos)}
    images = []
    for i in range(nv):
        images.append({pos[tuple(int(k == j) for k in range(nv))]: parse_scalar(M[j][i])
                       for j in range(nv) if parse_scalar(M[j][i])})
    out = []
    for e in monos:
        v = dict(D.unit)
        for i, k in enumerate(e):
            for _ in range(k):
                v = D.mul(v, images[i])
        out.append(v)
    return out


def minimal_gluing_spec(d: int = 2, gamma=((0, 1), (-1, 0))) -> GluingSpec:
    """Charts ``C[u, x, y]`` truncated at degree ``d`` on both sides, divisor ``{u = 0}``,
    divisors identified by a linear substitution in ``(x, y)``; the off-divisor
    charts are the normal directions ``C[u]``."""
    B = monomial_algebra(3, d, [], "w")
    D = monomial_algebra(2, d, [], "x")
    N = monomial_algebra(1, d, [], "u")
    posD = {e: r for r, e in enumerate(D.monomials)}
    posN = {e: r for r, e in enumerate(N.monomials)}
    to_div = [{posD[e[1:]]: ONE} if e[0] == 0 else {} for e in B.monomials]
    to_normal = [{posN[e[:1]]: ONE} if e[1] == e[2] == 0 else {} for e in B.monomials]
    return GluingSpec(B, B, D, D, to_div, to_div, substitution_map(D, gamma),
                      [(1, N, to_normal), (2, N, to_normal)])


def _pair_algebra(spec: GluingSpec) -> tuple[FDAlgebra, list[tuple[dict, dict]]]:
    """Subalgebra ``{(f1, f2) : restrict1(f1) = gamma(restrict2(f2))}`` of ``B1 x B2``."""
    n1, n2 = spec.B1.dim, spec.B2.dim
    g_r2 = compose(spec.gamma, spec.restrict2)
    cols = [dict(v) for v in spec.restrict1] + [{k: -c for k, c in v.items()} for v in g_r2]
    ker = kernel(cols)
    # reduced echelon basis of the kernel for a canonical choice
    E = Echelon(track=True)
    for r, v in enumerate(ker):
        E.add(v, r)
    basis = []
    for lead in sorted(E.pivots):
        vec = E.pivots[lead][0]
        for other in sorted(E.pivots):
            if other != lead and other in vec:
                axpy(vec, -vec[other], E.pivots[other][0])
        basis.append(vec)
    split = [({k: c for k, c in v.items() if k < n1}, {k - n1: c for k, c in v.items() if k >= n1})
             for v in basis]
    S = Echelon(track=True)
    for r, v in enumerate(basis):
        S.add(v, r)
    table = {}
    for (r, (a1, a2)), (s, (b1, b2)) in itertools.product(enumerate(split), repeat=2):
        p1, p2 = spec.B1.mul(a1, b1), spec.B2.mul(a2, b2)
        vec = {**p1, **{n1 + k: c for k, c in p2.items()}}
        combo = S.solve(vec)
        if combo is None:
            raise ArithmeticError("pair set is not closed under products")
        if combo:
            table[(r, s)] = combo
    unit_vec = {**spec.B1.unit, **{n1 + k: c for k, c in spec.B2.unit.items()}}
    combo = S.solve(unit_vec)
    if combo is None:
        raise ArithmeticError("pair set does not contain the unit")
    unit = [combo.get(r, ZERO) for r in range(len(basis))]
    names = [f"pair{r}" for r in range(len(basis))]
    return FDAlgebra(len(basis), table, unit, names), split


def build_gluing_diagram(spec: GluingSpec) -> AlgDiagram:
    """Poset with the pair object on top and one object per off-divisor chart."""
    for name, phi, A, B in (("restrict1", spec.restrict1, spec.B1, spec.D1),
                            ("restrict2", spec.restrict2, spec.B2, spec.D2),
                            ("gamma", spec.gamma, spec.D2, spec.D1)):
        err = is_algebra_map(phi, A, B)
        if err:
            raise ValueError(f"{name}: {err}")
    if spec.D1.dim != spec.D2.dim or rank(spec.gamma) != spec.D1.dim:
        raise ValueError("gamma is not an isomorphism of divisor truncations")
    P, split = _pair_algebra(spec)
    objects = ["pair"]
    algebras = {0: P}
    homs = {}
    leq = set()
    for idx, (side, C, r) in enumerate(spec.off, start=1):
        B = spec.B1 if side == 1 else spec.B2
        err = is_algebra_map(r, B, C)
        if err:
            raise ValueError(f"off-divisor chart {idx}: {err}")
        objects.append(f"off{idx}")
        algebras[idx] = C
        leq.add((idx, 0))
        homs[(idx, 0)] = compose(r, [pair[side - 1] for pair in split])
    D = AlgDiagram(objects, leq, algebras, homs)
    D.pair_basis = split
    return D


# --- cochains on the model --------------------------------------------------------------

def restrict_cocycle(gamma: Cochain, phi: AlgMap, target: FDAlgebra) -> Cochain:
    """``phi o gamma`` as a cochain in ``C^n(A, target)``."""
    if gamma.M is not gamma.A.self_bimodule():
        raise ValueError("gamma must be self-valued")
    if len(phi) != gamma.A.dim:
        raise ValueError("map does not start at the cochain's algebra")
    M = _pulled(gamma.A, target, phi)
    data = {}
    for t, v in gamma.data.items():
        w: dict = {}
        for k, c in v.items():
            axpy(w, c, phi[k])
        if w:
            data[t] = w
    return Cochain(gamma.arity, gamma.A, M, data)


def _pulled(A: FDAlgebra, B: FDAlgebra, phi: AlgMap) -> Bimodule:
    key = ("pullback", id(B), tuple(tuple(sorted(v.items(), key=lambda kv: kv[0])) for v in phi))
    if key not in A._cache:
        A._cache[key] = Bimodule.pullback(B, phi)
    return A._cache[key]


def pullback_cochain(gi: Cochain, phi: AlgMap, A: FDAlgebra) -> Cochain:
    """``gi(phi a, phi b)`` for a self-valued cochain ``gi`` on the target of ``phi``."""
    B = gi.A
    M = _pulled(A, B, phi)
    data = {}
    for t in itertools.product(range(A.dim), repeat=gi.arity):
        acc: dict = {}
        for combo in itertools.product(*[list(phi[x].items()) for x in t]):
            key = tuple(k for k, _ in combo)
            coef = ONE
            for _, c in combo:
                coef = coef * c
            v = gi.data.get(key)
            if v:
                axpy(acc, coef, v)
        if acc:
            data[t] = acc
    return Cochain(gi.arity, A, M, data)


def _ideal_columns(model_maps: Sequence[AlgMap]):
    """Column filter for cochains preserving the kernels of monomial quotient maps."""
    kernels = [frozenset(a for a, v in enumerate(phi) if not v) for phi in model_maps]

    def allowed(key: tuple) -> bool:
        *args, out = key
        return all(out in K for K in kernels if any(a in K for a in args))
    return allowed


def descend(c: Cochain, phi: AlgMap, B: FDAlgebra) -> Cochain | None:
    """The cochain ``c_B`` on ``B`` with ``phi o c = c_B o (phi x phi)``, or None.

    ``phi`` must be a monomial quotient map (each basis vector goes to a basis
    vector or to zero, and the nonzero images are distinct).
    """
    section = {}
    for a, v in enumerate(phi):
        if v:
            (k, x), = v.items()
            if x != ONE or k in section:
                raise ValueError("descend needs a monomial quotient map")
            section[k] = a
    if len(section) != B.dim:
        raise ValueError("map is not surjective")
    data = {}
    for t in itertools.product(range(B.dim), repeat=c.arity):
        w: dict = {}
        for k, x in c.value(tuple(section[s] for s in t)).items():
            axpy(w, x, phi[k])
        if w:
            data[t] = w
    cb = Cochain(c.arity, B, B.self_bimodule(), data)
    lhs = restrict_cocycle(c, phi, B)
    rhs = pullback_cochain(cb, phi, c.A)
    return cb if lhs.data == rhs.data else None


def compatibility_check(gamma: Cochain, gamma1: Cochain, gamma2: Cochain,
                        model: NormalCrossingModel, K: int = 3) -> Report:
    """Order-by-order compatibility of a deformation of ``A`` with its branch quotients.

    (1) extends ``gamma`` inside the cochains preserving both branch ideals,
    descends each ``alpha_n`` to ``A_i`` and checks
    ``omega_n(descended) o (phi_i)^3 = phi_i o omega_n`` exactly for
    ``n <= K``; (2) checks ``[gamma_i o (phi_i x phi_i)] = [phi_i o gamma]``
    in ``HH^2(A, A_i)`` by an exact solve.
    """
    A = model.A
    rep = Report(f"compatibility d={model.d} K={K}")
    maps = [(1, model.phi1, model.A1, gamma1), (2, model.phi2, model.A2, gamma2)]
    series = extend_deformation(A, gamma, K, columns=_ideal_columns([model.phi1, model.phi2]))
    if isinstance(series, ObstructionReport):
        rep.add("extension", False, note=f"obstructed at order {series.failed_order}")
        rep.info["obstruction"] = series.to_dict()
        return rep
    rep.add("extension", True, computed=f"order {series.order}")
    from .hochschild import obstruction
    for i, phi, Ai, gi in maps:
        desc = [descend(a, phi, Ai) for a in series.alphas]
        if any(x is None for x in desc):
            rep.add(f"descent to A{i}", False)
            continue
        for n in range(2, K + 1):
            lhs = pullback_cochain(obstruction(desc, n), phi, A)
            rhs = restrict_cocycle(obstruction(series.alphas, n), phi, Ai)
            rep.add(f"omega_{n}(phi_{i} gamma) = phi_{i}(omega_{n}(gamma))", lhs.data == rhs.data)
        diff = pullback_cochain(gi, phi, A) - restrict_cocycle(gamma, phi, Ai)
        M = diff.M
        E = _image_echelon(A, M, 1)
        ok = E.contains(diff.flat())
        rep.add(f"[gamma_{i}] = [phi_{i} gamma] in HH^2(A, A{i})", ok,
                note="" if ok else "classes differ")
    return rep


# --- glued three-spheres -------------------------------------------------------------

def _random_s3(rnd: random.Random, terms: int = 3) -> S3Element:
    t = {}
    for _ in range(terms):
        key = (rnd.randint(-1, 1), rnd.randint(-1, 1), rnd.randint(0, 1), rnd.randint(0, 2))
        t[key] = rnd.randint(-3, 3)
    return S3Element(t)


def glue_s3theta(F1: S3Element, F2: S3Element, c0, s0, samples: int = 50, seed: int = 0) -> Report:
    """Membership of ``(F1, F2)`` in the algebra of two copies of ``S^3_theta`` glued
    along the torus ``c = c0, s = s0``, plus closure under products of sampled members
    ``(G, G + H (s - s0))``."""
    c0, s0 = Fraction(c0), Fraction(s0)
    if c0 * c0 + s0 * s0 != 1:
        raise ValueError(f"({c0}, {s0}) is not on the unit circle")
    rep = Report(f"glued S3theta at ({c0}, {s0})")
    member = restrict_to_torus(F1, c0, s0) == restrict_to_torus(F2, c0, s0)
    rep.add("pair restricts to the same torus element", member)
    rnd = random.Random(seed)
    s_minus = S3Element({(0, 0, 0, 1): 1, (0, 0, 0, 0): -s0})
    bad = 0
    for _ in range(samples):
        pairs = []
        for _ in range(2):
            G, H = _random_s3(rnd), _random_s3(rnd)
            pairs.append((G, G + H * s_minus))
        (G1, G2), (H1, H2) = pairs
        if not all(restrict_to_torus(x, c0, s0) == restrict_to_torus(y, c0, s0)
                   for x, y in ((G1, G2), (H1, H2))):
            bad += 1
            continue
        if restrict_to_torus(G1 * H1, c0, s0) != restrict_to_torus(G2 * H2, c0, s0):
            bad += 1
    rep.add(f"products of {samples} sampled member pairs are members", bad == 0,
            computed=f"{bad} violations")
    return rep
