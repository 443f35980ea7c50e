"""Theta-deformed torus and three-sphere over a formal phase ring.

The deformation parameter enters only through the formal unit ``p = e^{i pi
theta}``; the torus phase is ``q = p^2``, so ``U V = q V U``.  A three-sphere
element is a finite sum of ``U^a V^b c^j s^k`` with ``c``, ``s`` central
(cosine and sine of the latitude) and the relation ``c^2 = 1 - s^2`` used to
keep ``j`` in ``{0, 1}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .report import Report
from .scalars import ONE, ZERO, Gauss

__all__ = [
    "PhaseScalar", "TorusElement", "S3Element", "ThetaElement", "torus_mul",
    "s3_relations_report", "invariant_gens", "theta_component_product",
    "restrict_to_torus", "alpha", "beta", "generator_U", "generator_V",
]


class PhaseScalar:
    """Laurent polynomial ``sum c_k p^k`` with Gaussian rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            g = Gauss.coerce(v)
            if g:
                c[int(k)] = c.get(int(k), ZERO) + g
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def _raw(cls, c):
        s = cls.__new__(cls)
        s._c = c
        return s

    @classmethod
    def p_power(cls, k: int, coeff=1) -> "PhaseScalar":
        return cls({k: coeff})

    @classmethod
    def lift(cls, x) -> "PhaseScalar":
        return x if isinstance(x, PhaseScalar) else cls({0: x})

    @property
    def coeffs(self) -> dict[int, Gauss]:
        return dict(self._c)

    def __add__(self, other):
        o = PhaseScalar.lift(other)
        out = dict(self._c)
        for k, v in o._c.items():
            s = out.get(k, ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PhaseScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PhaseScalar._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-PhaseScalar.lift(other))

    def __rsub__(self, other):
        return PhaseScalar.lift(other) - self

    def __mul__(self, other):
        o = PhaseScalar.lift(other)
        out: dict[int, Gauss] = {}
        for a, x in self._c.items():
            for b, y in o._c.items():
                out[a + b] = out.get(a + b, ZERO) + x * y
        return PhaseScalar._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def shift(self, k: int) -> "PhaseScalar":
        return PhaseScalar._raw({a + k: v for a, v in self._c.items()})

    def conj(self) -> "PhaseScalar":
        return PhaseScalar._raw({-k: v.conj() for k, v in self._c.items()})

    def at_one(self) -> Gauss:
        """Value at ``p = 1`` (theta = 0)."""
        return sum(self._c.values(), ZERO)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        try:
            return self._c == PhaseScalar.lift(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            parts.append(str(v) if k == 0 else (f"p^{k}" if v == 1 else f"{v}*p^{k}"))
        return " + ".join(parts)

    __repr__ = __str__


def _acc(d: dict, key, v: PhaseScalar) -> None:
    cur = d.get(key)
    s = v if cur is None else cur + v
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _commute_phase(b: int, c: int) -> int:
    """p-exponent picked up by ``V^b U^c = q^{-bc} U^c V^b``."""
    return -2 * b * c


class TorusElement:
    """Finite sum of normal words ``U^a V^b`` (a, b integers; U, V unitary)."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        t: dict[tuple[int, int], PhaseScalar] = {}
        for k, v in (terms or {}).items():
            _acc(t, (int(k[0]), int(k[1])), PhaseScalar.lift(v))
        self._t = t

    @classmethod
    def _raw(cls, t):
        e = cls.__new__(cls)
        e._t = t
        return e

    @property
    def terms(self) -> dict[tuple[int, int], PhaseScalar]:
        return dict(self._t)

    def __add__(self, other):
        out = dict(self._t)
        for k, v in _as_torus(other)._t.items():
            _acc(out, k, v)
        return TorusElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-_as_torus(other))

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return torus_mul(self, other)
        c = PhaseScalar.lift(other)
        return TorusElement._raw({k: v * c for k, v in self._t.items() if v * c})

    def __rmul__(self, other):
        return self * other

    def star(self) -> "TorusElement":
        # (U^a V^b)^* = V^-b U^-a = q^{-ab} U^-a V^-b
        return TorusElement._raw({(-a, -b): v.conj().shift(_commute_phase(-b, -a))
                                  for (a, b), v in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, TorusElement):
            return self._t == other._t
        return self == _as_torus(other)

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def __str__(self):
        if not self._t:
            return "0"
        return " + ".join(f"({v})*U^{a}V^{b}" for (a, b), v in sorted(self._t.items()))

    __repr__ = __str__


def _as_torus(x) -> TorusElement:
    return x if isinstance(x, TorusElement) else TorusElement({(0, 0): x})


def generator_U(power: int = 1) -> TorusElement:
    return TorusElement({(power, 0): 1})


def generator_V(power: int = 1) -> TorusElement:
    return TorusElement({(0, power): 1})


def torus_mul(x, y):
    """Product on the torus or on S^3_theta; normal form ``U^a V^b``."""
    if isinstance(x, S3Element) or isinstance(y, S3Element):
        return _as_s3(x) * _as_s3(y)
    out: dict[tuple[int, int], PhaseScalar] = {}
    for (a, b), u in x._t.items():
        for (c, d), v in y._t.items():
            _acc(out, (a + c, b + d), (u * v).shift(_commute_phase(b, c)))
    return TorusElement._raw(out)


# --- three-sphere ------------------------------------------------------------

S3Key = tuple[int, int, int, int]  # (a, b, j, k): U^a V^b c^j s^k, j in {0, 1}


def _reduce_trig(j: int, k: int) -> list[tuple[int, int, int]]:
    """Rewrite c^j s^k with c^2 = 1 - s^2 as sum of (coeff, j', k'), j' <= 1."""
    out = {(j % 2, k): 1}
    for _ in range(j // 2):
        nxt: dict[tuple[int, int], int] = {}
        for (jj, kk), c in out.items():
            nxt[(jj, kk)] = nxt.get((jj, kk), 0) + c
            nxt[(jj, kk + 2)] = nxt.get((jj, kk + 2), 0) - c
        out = nxt
    return [(c, jj, kk) for (jj, kk), c in out.items() if c]


class S3Element:
    """Element of S^3_theta: sums of ``U^a V^b c^j s^k`` with ``j <= 1``."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[int, int, int, int], object] | None = None):
        t: dict[S3Key, PhaseScalar] = {}
        for key, v in (terms or {}).items():
            a, b, j, k = (int(x) for x in key)
            if j < 0 or k < 0:
                raise ValueError("negative trig power")
            for c, jj, kk in _reduce_trig(j, k):
                _acc(t, (a, b, jj, kk), PhaseScalar.lift(v) * c)
        self._t = t

    @classmethod
    def _raw(cls, t):
        e = cls.__new__(cls)
        e._t = t
        return e

    @property
    def terms(self) -> dict[S3Key, PhaseScalar]:
        return dict(self._t)

    def __add__(self, other):
        out = dict(self._t)
        for key, v in _as_s3(other)._t.items():
            _acc(out, key, v)
        return S3Element._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return S3Element._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-_as_s3(other))

    def __rsub__(self, other):
        return _as_s3(other) - self

    def __mul__(self, other):
        if isinstance(other, (S3Element, TorusElement)):
            other = _as_s3(other)
            out: dict[S3Key, PhaseScalar] = {}
            for (a, b, j, k), u in self._t.items():
                for (c, d, j2, k2), v in other._t.items():
                    ph = (u * v).shift(_commute_phase(b, c))
                    for w, jj, kk in _reduce_trig(j + j2, k + k2):
                        _acc(out, (a + c, b + d, jj, kk), ph * w)
            return S3Element._raw(out)
        c = PhaseScalar.lift(other)
        return S3Element._raw({k: v * c for k, v in self._t.items() if v * c})

    def __rmul__(self, other):
        return self * other

    def star(self) -> "S3Element":
        return S3Element._raw({(-a, -b, j, k): v.conj().shift(_commute_phase(-b, -a))
                               for (a, b, j, k), v in self._t.items()})

    def u1_weights(self) -> set[int]:
        """Weights under alpha -> lambda alpha, beta -> lambda^{-1} beta."""
        return {a - b for (a, b, _, _) in self._t}

    def is_u1_invariant(self) -> bool:
        return self.u1_weights() <= {0}

    def at_theta_zero(self) -> dict[S3Key, Gauss]:
        out = {}
        for key, v in self._t.items():
            g = v.at_one()
            if g:
                out[key] = g
        return out

    def __eq__(self, other):
        if isinstance(other, S3Element):
            return self._t == other._t
        return self == _as_s3(other)

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for (a, b, j, k), v in sorted(self._t.items()):
            mono = "*".join(s for s in (
                f"U^{a}" if a else "", f"V^{b}" if b else "",
                "c" if j else "", (f"s^{k}" if k > 1 else "s") if k else "") if s)
            parts.append(f"({v})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


def _as_s3(x) -> S3Element:
    if isinstance(x, S3Element):
        return x
    if isinstance(x, TorusElement):
        return S3Element._raw({(a, b, 0, 0): v for (a, b), v in x._t.items()})
    return S3Element({(0, 0, 0, 0): x})


def alpha() -> S3Element:
    return S3Element({(1, 0, 1, 0): 1})


def beta() -> S3Element:
    return S3Element({(0, 1, 0, 1): 1})


def _q_power(k: int) -> PhaseScalar:
    return PhaseScalar.p_power(2 * k)


def s3_relations_report() -> Report:
    """The five defining relations of S^3_theta, checked in the phase ring."""
    a, b = alpha(), beta()
    rep = Report("S^3_theta relations")
    checks = [
        ("alpha beta - q beta alpha = 0", a * b - b * a * _q_power(1), 0),
        ("alpha^* beta - q^-1 beta alpha^* = 0", a.star() * b - b * a.star() * _q_power(-1), 0),
        ("alpha^* alpha = alpha alpha^*", a.star() * a - a * a.star(), 0),
        ("beta^* beta = beta beta^*", b.star() * b - b * b.star(), 0),
        ("alpha alpha^* + beta beta^* = 1", a * a.star() + b * b.star(), 1),
    ]
    for name, lhs, rhs in checks:
        rhs = _as_s3(rhs)
        rep.add(name, lhs == rhs, expected=str(rhs), computed=str(lhs))
    return rep


def invariant_gens() -> tuple[S3Element, S3Element, Report]:
    """``X = beta alpha`` and ``Y = alpha alpha^* - 1/2`` with their relations."""
    a, b = alpha(), beta()
    X = b * a
    Xs = a.star() * b.star()
    Y = a * a.star() - Fraction(1, 2)
    rep = Report("U(1)-invariant generators")
    quarter = _as_s3(Fraction(1, 4))
    rep.add("X^* = (beta alpha)^*", X.star() == Xs)
    rep.add("XY = YX", X * Y == Y * X)
    rep.add("YX^* = X^*Y", Y * Xs == Xs * Y)
    rep.add("XX^* = X^*X", X * Xs == Xs * X)
    lhs = Y * Y + X * Xs
    rep.add("Y^2 + XX^* = 1/4", lhs == quarter, expected=str(quarter), computed=str(lhs))
    rep.add("X, X^*, Y are U(1)-invariant",
            X.is_u1_invariant() and Xs.is_u1_invariant() and Y.is_u1_invariant())
    return X, Y, rep


# --- component-wise theta product -------------------------------------------

def theta_component_product(f: tuple[int, int, object], h: tuple[int, int, object]):
    """``(n, m, f) * (k, r, h) = (n+k, m+r, p^{nr - mk} f h)``."""
    n, m, fv = f
    k, r, hv = h
    return (n + k, m + r, PhaseScalar.lift(fv) * PhaseScalar.lift(hv) * PhaseScalar.p_power(n * r - m * k))


class ThetaElement:
    """Finite sum of torus-graded components under the theta product."""

    __slots__ = ("_t",)

    def __init__(self, comps: Mapping[tuple[int, int], object] | None = None):
        t: dict[tuple[int, int], PhaseScalar] = {}
        for key, v in (comps or {}).items():
            _acc(t, (int(key[0]), int(key[1])), PhaseScalar.lift(v))
        self._t = t

    @property
    def components(self) -> dict[tuple[int, int], PhaseScalar]:
        return dict(self._t)

    def __add__(self, other: "ThetaElement"):
        out = dict(self._t)
        for k, v in other._t.items():
            _acc(out, k, v)
        e = ThetaElement()
        e._t = out
        return e

    def __mul__(self, other: "ThetaElement"):
        out: dict[tuple[int, int], PhaseScalar] = {}
        for (n, m), f in self._t.items():
            for (k, r), h in other._t.items():
                a, b, v = theta_component_product((n, m, f), (k, r, h))
                _acc(out, (a, b), v)
        e = ThetaElement()
        e._t = out
        return e

    def __eq__(self, other):
        return isinstance(other, ThetaElement) and self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))


# --- restriction to a torus --------------------------------------------------

def restrict_to_torus(x: S3Element, c0, s0) -> TorusElement:
    """Specialize ``c -> c0``, ``s -> s0`` for a rational point on the circle."""
    c0, s0 = Fraction(c0), Fraction(s0)
    if c0 * c0 + s0 * s0 != 1:
        raise ValueError(f"({c0}, {s0}) is not on the unit circle")
    out: dict[tuple[int, int], PhaseScalar] = {}
    for (a, b, j, k), v in _as_s3(x)._t.items():
        f = c0 ** j * s0 ** k
        if f:
            _acc(out, (a, b), v * f)
    return TorusElement._raw(out)
