"""Hochschild cochains of finite-dimensional algebras over Q(i).

Cochains are stored sparsely: ``data[(i1, ..., in)]`` is the coefficient
vector (a dict over the target basis) of ``c(e_i1, ..., e_in)``.  The
coboundary is

    (dc)(a0, ..., an) = a0.c(a1..an) + sum_i (-1)^i c(.., a_{i-1} a_i, ..)
                        + (-1)^(n+1) c(a0..a_{n-1}).an

and a formal deformation ``mu + t a1 + t^2 a2 + ...`` is associative to
order n exactly when ``d(a_n) = sum_{p+q=n, p,q>0} a_p * a_q`` with the
composition ``(f * g)(a,b,c) = f(g(a,b),c) - f(a,g(b,c))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import Echelon, axpy
from .report import Report
from .scalars import Gauss, ONE, ZERO, dump_scalar, parse_scalar

__all__ = [
    "FDAlgebra", "Bimodule", "Cochain", "DeformationSeries", "ObstructionReport",
    "ResourceBoundError", "NotCocycleError", "coboundary", "hh_dim", "g_star",
    "extend_deformation", "verify_associativity", "eulerian_split", "morita_check",
    "field_algebra", "product_of_fields", "matrix_algebra", "upper_triangular",
    "monomial_algebra", "truncated_polynomial", "matrices_over", "bivector_cochain",
]

MAX_ARITY = 4
MAX_DIM = 20
MAX_ROWS = 600_000


class ResourceBoundError(ValueError):
    pass


class NotCocycleError(ValueError):
    def __init__(self, msg: str, location=None, value=None):
        super().__init__(msg)
        self.location = location
        self.value = value


def _vec(x: Mapping) -> dict:
    out = {}
    for k, v in x.items():
        v = parse_scalar(v) if not isinstance(v, Gauss) else v
        if v:
            out[int(k)] = v
    return out


class FDAlgebra:
    """Unital associative algebra given by structure constants ``e_i e_j = sum c_ij^k e_k``."""

    def __init__(self, dim: int, table: Mapping[tuple[int, int], Mapping[int, object]],
                 unit: Sequence[object], names: Sequence[str] | None = None,
                 check: bool = True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.table = {(int(i), int(j)): v for (i, j), w in table.items() if (v := _vec(w))}
        self.unit = {k: v for k, v in _vec(dict(enumerate(unit))).items()}
        if len(unit) != dim:
            raise ValueError("unit has the wrong length")
        self.names = list(names) if names else [f"e{i}" for i in range(dim)]
        inv: dict[int, list] = {}
        for (i, j), w in sorted(self.table.items()):
            for k, c in w.items():
                inv.setdefault(k, []).append((i, j, c))
        self.mulinv = inv
        self._cache: dict = {}
        if check:
            problem = self.validate()
            if problem:
                raise ValueError(problem)

    def prod(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def mul(self, x: Mapping[int, Gauss], y: Mapping[int, Gauss]) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                w = self.table.get((i, j))
                if w:
                    axpy(out, a * b, w)
        return out

    def basis_vec(self, i: int) -> dict:
        return {i: ONE}

    def validate(self) -> str | None:
        for i in range(self.dim):
            e = {i: ONE}
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                return f"unit law fails on basis element {i}"
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            if self.mul(self.prod(i, j), {k: ONE}) != self.mul({i: ONE}, self.prod(j, k)):
                return f"associativity fails on basis triple {(i, j, k)}"
        return None

    def is_commutative(self) -> bool:
        return all(self.prod(i, j) == self.prod(j, i)
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def self_bimodule(self) -> "Bimodule":
        if "self" not in self._cache:
            left = [[self.prod(a, m) for m in range(self.dim)] for a in range(self.dim)]
            right = [[self.prod(m, a) for m in range(self.dim)] for a in range(self.dim)]
            self._cache["self"] = Bimodule(self.dim, left, right)
        return self._cache["self"]

    def multiplication(self) -> "Cochain":
        return Cochain(2, self, self.self_bimodule(), dict(self.table))

    def to_json(self) -> dict:
        table = [[[dump_scalar(self.prod(i, j).get(k, ZERO)) for k in range(self.dim)]
                  for j in range(self.dim)] for i in range(self.dim)]
        return {"dim": self.dim, "names": self.names,
                "unit": [dump_scalar(self.unit.get(k, ZERO)) for k in range(self.dim)],
                "table": table}

    @classmethod
    def from_json(cls, data: Mapping) -> "FDAlgebra":
        for key in ("dim", "unit", "table"):
            if key not in data:
                raise ValueError(f"algebra file lacks '{key}'")
        dim = int(data["dim"])
        T = data["table"]
        if len(T) != dim or any(len(r) != dim or any(len(c) != dim for c in r) for r in T):
            raise ValueError("table must be a dim x dim x dim array")
        table = {(i, j): {k: parse_scalar(T[i][j][k]) for k in range(dim)}
                 for i in range(dim) for j in range(dim)}
        return cls(dim, table, [parse_scalar(u) for u in data["unit"]], data.get("names"))

    def __repr__(self):
        return f"FDAlgebra(dim={self.dim})"


class Bimodule:
    """``left[a][m]`` is ``e_a . m`` and ``right[a][m]`` is ``m . e_a``, as sparse vectors."""

    def __init__(self, dim: int, left: Sequence[Sequence[Mapping]], right: Sequence[Sequence[Mapping]]):
        self.dim = dim
        self.left = [[dict(v) for v in row] for row in left]
        self.right = [[dict(v) for v in row] for row in right]
        self._cache: dict = {}

    def act_left(self, a: int, x: Mapping) -> dict:
        out: dict = {}
        for m, c in x.items():
            axpy(out, c, self.left[a][m])
        return out

    def act_right(self, x: Mapping, a: int) -> dict:
        out: dict = {}
        for m, c in x.items():
            axpy(out, c, self.right[a][m])
        return out

    def validate(self, A: FDAlgebra) -> str | None:
        for a, b, m in itertools.product(range(A.dim), range(A.dim), range(self.dim)):
            e = {m: ONE}
            ab = A.prod(a, b)
            lhs: dict = {}
            for k, c in ab.items():
                axpy(lhs, c, self.left[k][m])
            if lhs != self.act_left(a, self.left[b][m]):
                return f"left action fails at {(a, b, m)}"
            rhs: dict = {}
            for k, c in ab.items():
                axpy(rhs, c, self.right[k][m])
            if rhs != self.act_right(self.right[a][m], b):
                return f"right action fails at {(a, b, m)}"
            if self.act_right(self.act_left(a, e), b) != self.act_left(a, self.right[b][m]):
                return f"left and right actions do not commute at {(a, b, m)}"
        return None

    @classmethod
    def pullback(cls, B: FDAlgebra, phi: Sequence[Mapping[int, Gauss]]) -> "Bimodule":
        """``B`` as an ``A``-bimodule through the algebra map with ``phi[a] = phi(e_a)``."""
        left = [[B.mul(phi[a], {m: ONE}) for m in range(B.dim)] for a in range(len(phi))]
        right = [[B.mul({m: ONE}, phi[a]) for m in range(B.dim)] for a in range(len(phi))]
        return cls(B.dim, left, right)


@dataclass
class Cochain:
    arity: int
    A: FDAlgebra
    M: Bimodule
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        data = {}
        for k, v in self.data.items():
            v = {m: x for m, x in v.items() if x}
            if v:
                data[tuple(k)] = v
        self.data = data

    def value(self, t: tuple) -> dict:
        return self.data.get(t, {})

    def _same(self, other: "Cochain") -> None:
        if self.arity != other.arity or self.M is not other.M or self.A is not other.A:
            raise ValueError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._same(other)
        out = {k: dict(v) for k, v in self.data.items()}
        for k, v in other.data.items():
            w = out.setdefault(k, {})
            axpy(w, ONE, v)
        return Cochain(self.arity, self.A, self.M, out)

    def scale(self, c) -> "Cochain":
        c = Gauss.coerce(c)
        return Cochain(self.arity, self.A, self.M,
                       {k: {m: c * x for m, x in v.items()} for k, v in self.data.items()} if c else {})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.arity == other.arity and self.data == other.data

    def __bool__(self):
        return bool(self.data)

    def flat(self) -> dict:
        """Sparse vector keyed by ``(i1, ..., in, k)``."""
        return {t + (k,): c for t, v in self.data.items() for k, c in v.items()}

    @classmethod
    def from_flat(cls, arity: int, A: FDAlgebra, M: Bimodule, vec: Mapping) -> "Cochain":
        data: dict = {}
        for key, c in vec.items():
            if c:
                data.setdefault(tuple(key[:-1]), {})[key[-1]] = c
        return cls(arity, A, M, data)

    @classmethod
    def zero(cls, arity: int, A: FDAlgebra, M: Bimodule | None = None) -> "Cochain":
        return cls(arity, A, M or A.self_bimodule(), {})

    def support(self) -> list:
        return sorted(self.data)

    def to_json(self) -> dict:
        """Dense ``table`` of shape ``dim^arity x target_dim``."""
        def build(prefix: tuple):
            if len(prefix) == self.arity:
                v = self.value(prefix)
                return [dump_scalar(v.get(k, ZERO)) for k in range(self.M.dim)]
            return [build(prefix + (i,)) for i in range(self.A.dim)]
        return {"arity": self.arity, "target_dim": self.M.dim, "table": build(())}

    @classmethod
    def from_json(cls, data: Mapping, A: FDAlgebra, M: Bimodule | None = None) -> "Cochain":
        M = M or A.self_bimodule()
        n = int(data["arity"])
        out: dict = {}

        def walk(node, prefix):
            if len(prefix) == n:
                if len(node) != M.dim:
                    raise ValueError(f"cochain entry {prefix} has length {len(node)}, expected {M.dim}")
                v = {k: parse_scalar(x) for k, x in enumerate(node)}
                v = {k: x for k, x in v.items() if x}
                if v:
                    out[prefix] = v
                return
            if len(node) != A.dim:
                raise ValueError(f"cochain table has wrong size at {prefix}")
            for i, sub in enumerate(node):
                walk(sub, prefix + (i,))
        walk(data["table"], ())
        return cls(n, A, M, out)


def _check_bounds(A: FDAlgebra, M: Bimodule, n: int) -> None:
    if n > MAX_ARITY:
        raise ResourceBoundError(f"arity {n} exceeds the bound {MAX_ARITY}")
    if A.dim > MAX_DIM:
        raise ResourceBoundError(f"dim {A.dim} exceeds the bound {MAX_DIM}")
    if A.dim ** (n + 1) * M.dim > MAX_ROWS:
        raise ResourceBoundError(f"C^{n + 1} has {A.dim ** (n + 1) * M.dim} coordinates, "
                                 f"bound is {MAX_ROWS}")


def _scatter(A: FDAlgebra, M: Bimodule, n: int, t: tuple, v: Mapping, out: dict) -> None:
    """Add the coboundary of the cochain ``t -> v`` into the flat vector ``out``."""
    for a in range(A.dim):
        for m, c in v.items():
            for k, x in M.left[a][m].items():
                key = (a,) + t + (k,)
                w = out.get(key, ZERO) + c * x
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    for i in range(1, n + 1):
        sign = -1 if i % 2 else 1
        for x, y, cc in A.mulinv.get(t[i - 1], ()):
            pre = t[:i - 1] + (x, y) + t[i:]
            for m, c in v.items():
                key = pre + (m,)
                w = out.get(key, ZERO) + sign * cc * c
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    sign = -1 if (n + 1) % 2 else 1
    for a in range(A.dim):
        for m, c in v.items():
            for k, x in M.right[a][m].items():
                key = t + (a, k)
                w = out.get(key, ZERO) + sign * c * x
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)


def coboundary(c: Cochain, A: FDAlgebra | None = None) -> Cochain:
    if A is not None and A is not c.A:
        raise ValueError("cochain belongs to a different algebra")
    out: dict = {}
    for t, v in c.data.items():
        if len(t) != c.arity:
            raise ValueError("cochain key has the wrong arity")
        _scatter(c.A, c.M, c.arity, t, v, out)
    return Cochain.from_flat(c.arity + 1, c.A, c.M, out)


def _image_echelon(A: FDAlgebra, M: Bimodule, n: int, track: bool = False,
                   columns: Callable[[tuple], bool] | None = None) -> Echelon:
    """Echelon basis of ``d(C^n(A, M))`` inside ``C^(n+1)``.

    ``columns`` optionally restricts to the coordinate cochains ``(t, m)`` it accepts.
    """
    key = ("image", n, track, columns)
    cache = M._cache.setdefault(id(A), {})
    if key in cache:
        return cache[key]
    _check_bounds(A, M, n)
    E = Echelon(track=track)
    for t in itertools.product(range(A.dim), repeat=n):
        for m in range(M.dim):
            if columns is not None and not columns(t + (m,)):
                continue
            col: dict = {}
            _scatter(A, M, n, t, {m: ONE}, col)
            if col:
                E.add(col, t + (m,))
    cache[key] = E
    return E


def coboundary_rank(A: FDAlgebra, M: Bimodule, n: int) -> int:
    if n < 0:
        return 0
    return _image_echelon(A, M, n).rank


def hh_dim(A: FDAlgebra, M: Bimodule | None = None, n: int = 2) -> int:
    """``dim HH^n(A, M)`` by exact rank computation."""
    M = M or A.self_bimodule()
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _check_bounds(A, M, n)
    cols = A.dim ** n * M.dim
    return cols - coboundary_rank(A, M, n) - coboundary_rank(A, M, n - 1)


def g_star(f: Cochain, g: Cochain) -> Cochain:
    """``(f * g)(a,b,c) = f(g(a,b),c) - f(a,g(b,c))`` for self-valued 2-cochains."""
    if f.arity != 2 or g.arity != 2:
        raise ValueError("g_star takes two 2-cochains")
    A = f.A
    if g.A is not A or f.M is not A.self_bimodule() or g.M is not A.self_bimodule():
        raise ValueError("g_star needs self-valued cochains on one algebra")
    out: dict = {}
    for (a, b), gv in g.data.items():
        for c in range(A.dim):
            acc = out.setdefault((a, b, c), {})
            for k, x in gv.items():
                fv = f.data.get((k, c))
                if fv:
                    axpy(acc, x, fv)
    for (b, c), gv in g.data.items():
        for a in range(A.dim):
            acc = out.setdefault((a, b, c), {})
            for k, x in gv.items():
                fv = f.data.get((a, k))
                if fv:
                    axpy(acc, -x, fv)
    return Cochain(3, A, f.M, out)


def obstruction(alphas: Sequence[Cochain], n: int) -> Cochain:
    """``omega_n = sum_{p+q=n, p,q>0} alpha_p * alpha_q`` (``alphas[0]`` is alpha_1)."""
    A = alphas[0].A
    total = Cochain.zero(3, A)
    for p in range(1, n):
        total = total + g_star(alphas[p - 1], alphas[n - p - 1])
    return total


@dataclass
class DeformationSeries:
    """``mu + t a_1 + ... + t^K a_K``, associative modulo ``t^(K+1)`` (checked)."""

    algebra: FDAlgebra
    alphas: list

    def __post_init__(self):
        if not verify_associativity(self.algebra, self, self.order):
            raise ValueError("series is not associative to its stated order")

    @property
    def order(self) -> int:
        return len(self.alphas)

    def product(self, i: int, j: int, order: int | None = None) -> dict[int, dict]:
        """``e_i *_t e_j`` as ``{power: vector}``."""
        order = self.order if order is None else order
        out = {0: dict(self.algebra.prod(i, j))}
        for p in range(1, order + 1):
            v = self.alphas[p - 1].value((i, j))
            if v:
                out[p] = dict(v)
        return out

    def to_json(self) -> dict:
        return {"order": self.order, "alphas": [a.to_json() for a in self.alphas]}


@dataclass
class ObstructionReport:
    """Extension stopped: ``omega_n`` is not a coboundary.

    ``coordinates`` are the nonzero entries of the normal form of ``omega_n``
    modulo ``B^3``; the quotient basis consists of the non-pivot coordinate
    cochains of the coboundary echelon, so the class vanishes iff the list is
    empty.
    """

    order_reached: int
    failed_order: int
    obstruction: Cochain
    coordinates: list

    @property
    def passed(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {
            "order_reached": self.order_reached,
            "failed_order": self.failed_order,
            "obstruction_class": [[list(k), dump_scalar(v)] for k, v in self.coordinates],
        }


def _require_cocycle(alpha: Cochain) -> None:
    d = coboundary(alpha)
    if d:
        loc = min(d.flat())
        raise NotCocycleError(
            f"d(alpha_1) is nonzero, first entry at basis triple {loc[:-1]} component {loc[-1]}",
            location=loc, value=d.flat()[loc])


def extend_deformation(A: FDAlgebra, alpha1: Cochain, K: int,
                       columns: Callable[[tuple], bool] | None = None
                       ) -> DeformationSeries | ObstructionReport:
    """Solve ``d(alpha_n) = omega_n`` for ``n = 2..K``.

    Each ``alpha_n`` is the basic solution of the exact echelon solve: only
    pivot columns of the coboundary matrix (in lexicographic order of the
    cochain coordinates) carry nonzero values.  ``columns`` restricts the
    unknowns to a subcomplex, e.g. cochains preserving an ideal.
    """
    if alpha1.A is not A or alpha1.M is not A.self_bimodule() or alpha1.arity != 2:
        raise ValueError("alpha_1 must be a self-valued 2-cochain on A")
    if K < 1:
        raise ValueError("order must be at least 1")
    _require_cocycle(alpha1)
    alphas = [alpha1]
    E = None
    for n in range(2, K + 1):
        omega = obstruction(alphas, n)
        if coboundary(omega):
            raise ArithmeticError(f"omega_{n} is not a cocycle")
        if E is None:
            E = _image_echelon(A, A.self_bimodule(), 2, track=True, columns=columns)
        rest, combo = E.normal_form(omega.flat())
        if rest:
            return ObstructionReport(n - 1, n, omega, sorted(rest.items()))
        alphas.append(Cochain.from_flat(2, A, A.self_bimodule(), combo))
    return DeformationSeries(A, alphas)


def verify_associativity(A: FDAlgebra, series: DeformationSeries, order: int) -> bool:
    """Associativity of the truncated deformed product on every basis triple."""
    if order > series.order:
        raise ValueError("order exceeds the series order")

    def mult(x: dict[int, dict], y: dict[int, dict]) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for p, xv in x.items():
            for q, yv in y.items():
                for i, a in xv.items():
                    for j, b in yv.items():
                        for r, w in series.product(i, j, order).items():
                            if p + q + r <= order:
                                axpy(out.setdefault(p + q + r, {}), a * b, w)
        return {k: v for k, v in out.items() if v}

    for i, j, k in itertools.product(range(A.dim), repeat=3):
        ei, ej, ek = ({0: {i: ONE}}, {0: {j: ONE}}, {0: {k: ONE}})
        if mult(mult(ei, ej), ek) != mult(ei, mult(ej, ek)):
            return False
    return True


# --- Eulerian idempotents ------------------------------------------------------------

def _descents(s: tuple) -> int:
    return sum(1 for i in range(len(s) - 1) if s[i] > s[i + 1])


def _sign(s: tuple) -> int:
    sgn, seen = 1, list(s)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sgn = -sgn
    return sgn


def _binom_poly(shift: int, n: int) -> list[Fraction]:
    """Coefficients in ``x`` of ``binom(x + shift, n)``."""
    poly = [Fraction(1)]
    for r in range(n):
        c = shift - r
        new = [Fraction(0)] * (len(poly) + 1)
        for k, a in enumerate(poly):
            new[k] += a * c
            new[k + 1] += a
        poly = new
    return [a / factorial(n) for a in poly]


def eulerian_idempotents(n: int) -> list[dict[tuple, Fraction]]:
    """``e^(1..n)`` as signed permutation sums, from
    ``sum_k x^k e^(k) = sum_s binom(x + n - 1 - des(s), n) sgn(s) s``."""
    out = [dict() for _ in range(n)]
    for s in itertools.permutations(range(n)):
        poly = _binom_poly(n - 1 - _descents(s), n)
        for k in range(1, n + 1):
            c = poly[k] * _sign(s)
            if c:
                out[k - 1][s] = c
    return out


def _permute(c: Cochain, s: tuple) -> Cochain:
    """``(s.c)(a_1..a_n) = c(a_s(1)..a_s(n))``."""
    data = {}
    inv = [0] * len(s)
    for i, si in enumerate(s):
        inv[si] = i
    for t, v in c.data.items():
        data[tuple(t[inv[i]] for i in range(len(s)))] = v
    return Cochain(c.arity, c.A, c.M, data)


def eulerian_split(c: Cochain) -> list[Cochain]:
    """Hodge components ``[e^(1) c, ..., e^(n) c]`` for arity 2 or 3.

    For arity 2 these are the symmetric and antisymmetric parts.
    """
    if c.arity not in (2, 3):
        raise ValueError("eulerian_split handles arity 2 and 3")
    if not c.A.is_commutative():
        raise ValueError("Hodge splitting needs a commutative algebra")
    comps = []
    for e in eulerian_idempotents(c.arity):
        total = Cochain(c.arity, c.A, c.M, {})
        for s, coef in sorted(e.items()):
            total = total + _permute(c, s).scale(coef)
        comps.append(total)
    return comps


# --- standard algebras -----------------------------------------------------------------

def field_algebra() -> FDAlgebra:
    return FDAlgebra(1, {(0, 0): {0: 1}}, [1], ["1"])


def product_of_fields(k: int) -> FDAlgebra:
    return FDAlgebra(k, {(i, i): {i: 1} for i in range(k)}, [1] * k,
                     [f"p{i}" for i in range(k)])


def matrix_algebra(n: int) -> FDAlgebra:
    idx = lambda i, j: i * n + j
    table = {(idx(i, j), idx(j, l)): {idx(i, l): 1}
             for i in range(n) for j in range(n) for l in range(n)}
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return FDAlgebra(n * n, table, unit, [f"E{i}{j}" for i in range(n) for j in range(n)])


def upper_triangular(n: int = 2) -> FDAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: r for r, p in enumerate(pairs)}
    table = {(pos[(i, j)], pos[(j, l)]): {pos[(i, l)]: 1}
             for (i, j) in pairs for l in range(j, n)}
    unit = [1 if i == j else 0 for i, j in pairs]
    return FDAlgebra(len(pairs), table, unit, [f"E{i}{j}" for i, j in pairs])


def _mono_name(e: tuple, var: str) -> str:
    parts = [f"{var}{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
    return "*".join(parts) or "1"


def monomial_algebra(nvars: int, degree: int, forbidden: Iterable[Sequence[int]] = (),
                     var: str = "x") -> FDAlgebra:
    """``C[x_0..]/(monomials of degree > degree, forbidden monomials)``, monomial basis
    ordered by degree then reverse-lexicographically in the exponent vector."""
    forb = [tuple(f) for f in forbidden]

    def ok(e):
        return sum(e) <= degree and not any(all(a >= b for a, b in zip(e, f)) for f in forb)

    monos = [e for d in range(degree + 1)
             for e in sorted((e for e in itertools.product(range(d + 1), repeat=nvars)
                              if sum(e) == d), reverse=True) if ok(e)]
    pos = {e: r for r, e in enumerate(monos)}
    table = {}
    for e, f in itertools.product(monos, repeat=2):
        g = tuple(a + b for a, b in zip(e, f))
        if g in pos:
            table[(pos[e], pos[f])] = {pos[g]: 1}
    unit = [1] + [0] * (len(monos) - 1)
    A = FDAlgebra(len(monos), table, unit, [_mono_name(e, var) for e in monos], check=False)
    A.monomials = monos
    return A


def truncated_polynomial(nvars: int, degree: int) -> FDAlgebra:
    return monomial_algebra(nvars, degree)


def matrices_over(A: FDAlgebra, n: int) -> FDAlgebra:
    """``M_n(A)`` with basis ``E_ij (x) e_a`` at index ``(i*n + j)*dim + a``."""
    d = A.dim
    idx = lambda i, j, a: (i * n + j) * d + a
    table = {}
    for i, j, l in itertools.product(range(n), repeat=3):
        for (a, b), w in A.table.items():
            table[(idx(i, j, a), idx(j, l, b))] = {idx(i, l, k): c for k, c in w.items()}
    unit = [ZERO] * (n * n * d)
    for i in range(n):
        for a, c in A.unit.items():
            unit[idx(i, i, a)] = c
    names = [f"E{i}{j}.{A.names[a]}" for i in range(n) for j in range(n) for a in range(d)]
    return FDAlgebra(n * n * d, table, unit, names, check=False)


def bivector_cochain(A: FDAlgebra, coeffs: Mapping[tuple[int, int], Mapping[tuple[int, ...], object]]) -> Cochain:
    """``sum_{i<j} P^{ij} (d_i f d_j g - d_j f d_i g)`` on a monomial algebra.

    ``coeffs[(i, j)]`` maps exponent vectors to scalars, giving the polynomial
    coefficient ``P^{ij}``; products landing outside the basis are dropped.
    """
    monos = A.monomials
    pos = {e: r for r, e in enumerate(monos)}
    nv = len(monos[0])
    data: dict = {}

    def deriv(e, i):
        if not e[i]:
            return None
        return e[i], tuple(x - (k == i) for k, x in enumerate(e))

    for (ia, ea), (ib, eb) in itertools.product(enumerate(monos), repeat=2):
        acc: dict = {}
        for (i, j), poly in coeffs.items():
            for u, v, s in ((i, j, 1), (j, i, -1)):
                du, dv = deriv(ea, u), deriv(eb, v)
                if du is None or dv is None:
                    continue
                for pe, pc in poly.items():
                    g = tuple(a + b + c for a, b, c in zip(du[1], dv[1], pe))
                    if len(g) == nv and g in pos:
                        axpy(acc, Gauss(s * du[0] * dv[0]) * parse_scalar(pc), {pos[g]: ONE})
        if acc:
            data[(ia, ib)] = acc
    return Cochain(2, A, A.self_bimodule(), data)


def morita_check(A: FDAlgebra, n: int = 2) -> Report:
    """Compare ``dim HH^k(A)`` with ``dim HH^k(M_2(A))`` for ``k <= n``."""
    if n > 2:
        raise ResourceBoundError("morita_check is bounded to degree 2")
    if (4 * A.dim) ** (n + 2) > MAX_ROWS:
        raise ResourceBoundError("M_2(A) cochains exceed the resource bound")
    B = matrices_over(A, 2)
    rep = Report(f"morita dim={A.dim}")
    for k in range(n + 1):
        a, b = hh_dim(A, None, k), hh_dim(B, None, k)
        rep.add(f"HH^{k}", a == b, expected=str(a), computed=str(b))
    return rep
