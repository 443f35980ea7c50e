"""Star products with a constant antisymmetric bracket on polynomial algebras.

Polynomials live in 2n commuting variables ordered as the holomorphic block
``Z^0..Z^{n-1}`` followed by the conjugate block ``Zb_0..Zb_{n-1}``.  All
coefficients are polynomials in a formal ``hbar``, so every product below is a
finite exact sum.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .report import Report
from .scalars import ONE, ZERO, Gauss, HPoly, I, dump_scalar, parse_scalar
from .wick import WickElement

__all__ = [
    "CPoly", "Bivector", "star", "wick_star", "poisson", "closure_checks",
    "omega_std", "normal_to_weyl", "weyl_to_normal",
]

Exps = tuple[int, ...]


def _acc(d: dict, k, v: HPoly) -> None:
    cur = d.get(k)
    s = v if cur is None else cur + v
    if s:
        d[k] = s
    else:
        d.pop(k, None)


class CPoly:
    """Commutative polynomial in ``Z``, ``Zb`` with hbar-polynomial coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        self.n = n
        out: dict[Exps, HPoly] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != 2 * n or min(e, default=0) < 0:
                raise ValueError(f"exponent vector {e} invalid for {2 * n} variables")
            _acc(out, e, c if isinstance(c, HPoly) else HPoly.const(c))
        self._terms = out

    @classmethod
    def _raw(cls, n, terms) -> "CPoly":
        p = cls.__new__(cls)
        p.n, p._terms = n, terms
        return p

    @property
    def terms(self) -> dict[Exps, HPoly]:
        return dict(self._terms)

    @classmethod
    def const(cls, n: int, c=1) -> "CPoly":
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def var(cls, n: int, idx: int) -> "CPoly":
        e = [0] * (2 * n)
        e[idx] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def Z(cls, n: int, a: int) -> "CPoly":
        return cls.var(n, a)

    @classmethod
    def Zbar(cls, n: int, a: int) -> "CPoly":
        return cls.var(n, n + a)

    def _lift(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            if other.n != self.n:
                raise ValueError("dimension mismatch")
            return other
        return CPoly.const(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            _acc(out, e, c)
        return CPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, CPoly):
            if other.n != self.n:
                raise ValueError("dimension mismatch")
            out: dict[Exps, HPoly] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    _acc(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            return CPoly._raw(self.n, out)
        c = other if isinstance(other, HPoly) else HPoly.const(other)
        return CPoly._raw(self.n, {e: v * c for e, v in self._terms.items() if v * c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CPoly.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction, Gauss, HPoly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def zbar_degree(self) -> int:
        return max((sum(e[self.n:]) for e in self._terms), default=-1)

    def is_holomorphic(self) -> bool:
        return self.zbar_degree() <= 0

    def at_hbar_zero(self) -> "CPoly":
        return CPoly._raw(self.n, {e: HPoly.const(c.get(0)) for e, c in self._terms.items() if c.get(0)})

    def hbar_part(self, k: int) -> "CPoly":
        return CPoly._raw(self.n, {e: HPoly.const(c.get(k)) for e, c in self._terms.items() if c.get(k)})

    def derivative(self, idx: int) -> "CPoly":
        out: dict[Exps, HPoly] = {}
        for e, c in self._terms.items():
            if e[idx]:
                f = list(e)
                f[idx] -= 1
                _acc(out, tuple(f), c * e[idx])
        return CPoly._raw(self.n, out)

    def __str__(self):
        if not self._terms:
            return "0"
        names = [f"Z{a}" for a in range(self.n)] + [f"Zb{a}" for a in range(self.n)]
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            mono = "*".join(nm if k == 1 else f"{nm}^{k}" for nm, k in zip(names, e) if k)
            coef = str(c) if len(c) == 1 else f"({c})"
            parts.append(coef if not mono else (mono if coef == "1" else f"{coef}*{mono}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"CPoly({self})"

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"exp": list(e), "coeff": c.to_list()}
                                       for e, c in sorted(self._terms.items())]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CPoly":
        n = int(data["n"])
        terms: dict[Exps, HPoly] = {}
        for t in data["terms"]:
            _acc(terms, tuple(t["exp"]), HPoly.from_list(t["coeff"]))
        return cls(n, terms)


class Bivector:
    """Constant antisymmetric matrix ``omega^{ab}`` on 2n variables.

    Entries are Gaussian rationals: the conventionally normalized bracket for
    which ``[Z^a, Zb_a]_star = hbar`` has imaginary entries.
    """

    __slots__ = ("n", "omega")

    def __init__(self, omega: Sequence[Sequence[object]]):
        m = [[Gauss.coerce(v) if not isinstance(v, Gauss) else v for v in row] for row in omega]
        size = len(m)
        if size % 2 or any(len(r) != size for r in m):
            raise ValueError("bivector must be a square matrix of even size")
        for a in range(size):
            for b in range(size):
                if m[a][b] != -m[b][a]:
                    raise ValueError("bivector is not antisymmetric")
        self.n = size // 2
        self.omega = tuple(tuple(r) for r in m)

    def entries(self) -> list[tuple[int, int, Gauss]]:
        return [(a, b, v) for a, row in enumerate(self.omega) for b, v in enumerate(row) if v]

    def holomorphic_block_vanishes(self) -> bool:
        return all(not self.omega[a][b] for a in range(self.n) for b in range(self.n))

    def to_json(self) -> list:
        return [[dump_scalar(v) for v in row] for row in self.omega]

    @classmethod
    def from_json(cls, data) -> "Bivector":
        return cls([[parse_scalar(v) for v in row] for row in data])


def omega_std(n: int) -> Bivector:
    """Bracket supported on conjugate pairs with ``star(Z, Zb) - star(Zb, Z) = hbar``.

    The first-order part of the commutator is ``-i hbar omega^{Z Zb}``, which
    equals ``hbar`` exactly when ``omega^{Z Zb} = i``.
    """
    m = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        m[a][n + a] = I
        m[n + a][a] = -I
    return Bivector(m)


def _bidiff_series(f: CPoly, g: CPoly, pairs: list[tuple[int, int, Gauss]],
                   step: Gauss, hbar_step: int = 1) -> CPoly:
    """Sum over k of step^k hbar^k / k! * mult(B^k(f x g)), B = sum c d_a x d_b."""
    if f.n != g.n:
        raise ValueError("dimension mismatch")
    n = f.n
    layer: dict[tuple[Exps, Exps], HPoly] = {}
    for ef, cf in f._terms.items():
        for eg, cg in g._terms.items():
            layer[(ef, eg)] = cf * cg
    out: dict[Exps, HPoly] = {}
    k = 0
    scale = ONE
    while layer:
        for (ef, eg), c in layer.items():
            _acc(out, tuple(a + b for a, b in zip(ef, eg)), (c * scale).shift(hbar_step * k))
        nxt: dict[tuple[Exps, Exps], HPoly] = {}
        for (ef, eg), c in layer.items():
            for a, b, w in pairs:
                if ef[a] and eg[b]:
                    f2 = list(ef)
                    g2 = list(eg)
                    f2[a] -= 1
                    g2[b] -= 1
                    _acc(nxt, (tuple(f2), tuple(g2)), c * (w * (ef[a] * eg[b])))
        layer = nxt
        k += 1
        scale = scale * step / k
    return CPoly._raw(n, out)


def _check_dims(f: CPoly, g: CPoly, w: Bivector | None = None) -> None:
    if f.n != g.n or (w is not None and w.n != f.n):
        raise ValueError("dimension mismatch")


def star(f: CPoly, g: CPoly, w: Bivector) -> CPoly:
    """``f exp(-(i hbar/2) omega^{ab} <-d_a ->d_b) g`` expanded exactly."""
    _check_dims(f, g, w)
    return _bidiff_series(f, g, w.entries(), Gauss(0, Fraction(-1, 2)))


def wick_star(f: CPoly, g: CPoly) -> CPoly:
    """``f exp(hbar * 1/2 sum_i (<-d_zeta_i ->d_zetab_i - <-d_zetab_i ->d_zeta_i)) g``.

    The first block of variables plays the role of ``zeta_i`` and the second of
    ``zetab_i``.
    """
    _check_dims(f, g)
    n = f.n
    half = Gauss(Fraction(1, 2))
    pairs = [(i, n + i, half) for i in range(n)] + [(n + i, i, -half) for i in range(n)]
    return _bidiff_series(f, g, pairs, ONE)


def poisson(f: CPoly, g: CPoly, w: Bivector) -> CPoly:
    """``omega^{ab} d_a f d_b g``."""
    _check_dims(f, g, w)
    out = CPoly(f.n)
    for a, b, v in w.entries():
        out = out + f.derivative(a) * g.derivative(b) * v
    return out


def closure_checks(f: CPoly, g: CPoly, w: Bivector) -> Report:
    """Holomorphic and affine-in-Zb closure of the star product for this pair."""
    _check_dims(f, g, w)
    rep = Report("star-product closure")
    if not w.holomorphic_block_vanishes():
        rep.add("bivector has vanishing holomorphic block", False,
                note="precondition not met")
        return rep
    prod = star(f, g, w)
    if f.is_holomorphic() and g.is_holomorphic():
        rep.add("holomorphic * holomorphic is holomorphic", prod.is_holomorphic(),
                computed=str(prod))
    else:
        rep.add("holomorphic * holomorphic is holomorphic", True, note="precondition not met")
    if f.zbar_degree() <= 1 and g.is_holomorphic():
        rep.add("affine-in-Zb * holomorphic stays affine", prod.zbar_degree() <= 1,
                computed=str(prod))
    else:
        rep.add("affine-in-Zb * holomorphic stays affine", True, note="precondition not met")
    return rep


def _heat(p: CPoly, sign: int) -> CPoly:
    """exp(sign * hbar/2 * sum_i d_zeta_i d_zetab_i) applied to p."""
    n = p.n
    out = CPoly(n)
    layer = p
    k = 0
    scale = ONE
    while layer:
        out = out + CPoly._raw(n, {e: (c * scale).shift(k) for e, c in layer._terms.items()})
        nxt = CPoly(n)
        for i in range(n):
            nxt = nxt + layer.derivative(i).derivative(n + i)
        layer = nxt
        k += 1
        scale = scale * Gauss(Fraction(sign, 2)) / k
    return out


def normal_to_weyl(x: WickElement) -> CPoly:
    """Symmetric-order symbol of a normal-ordered Wick element.

    ``zeta_i^dag`` is identified with ``zetab_i``; the normal symbol is then
    smoothed by ``exp(-hbar/2 sum d_zeta d_zetab)``, which turns the Wick
    product into ``wick_star``.
    """
    if x.has_central():
        raise ValueError("central variables have no symbol here")
    n = x.sig.modes
    terms = {tuple(w.und) + tuple(w.dag): c for w, c in x.terms.items()}
    return _heat(CPoly(n, terms), -1)


def weyl_to_normal(p: CPoly):
    """Inverse of :func:`normal_to_weyl`."""
    from .wick import WickSignature, WickWord

    q = _heat(p, +1)
    n = p.n
    sig = WickSignature(n)
    return WickElement(sig, {WickWord(e[n:], e[:n], ()): c for e, c in q.terms.items()})
