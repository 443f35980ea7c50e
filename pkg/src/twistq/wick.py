"""Normal-ordered Wick algebra with commuting central variables.

Generators ``zeta_i`` and ``zeta_i^dag`` obey ``[zeta_i, zeta_j^dag] = hbar
delta_ij`` with all other generator pairs commuting.  Central variables come in
conjugate pairs ``z_k``, ``zb_k``.  Elements are stored in normal order: every
daggered factor sits left of every undaggered one, so a monomial is just three
exponent vectors.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple, Sequence

from .report import Report
from .scalars import ONE, ZERO, Gauss, HPoly, I

__all__ = [
    "WickSignature", "WickWord", "WickElement", "normal_order_product",
    "commutator", "adjoint", "named_element", "verify_suite", "zeta",
    "zeta_dag", "central", "evaluate_central", "normal_order_letters", "SUITES",
]


@dataclass(frozen=True)
class WickSignature:
    """Number of oscillator modes and of conjugate central pairs."""

    modes: int
    central_pairs: int = 0

    def __post_init__(self):
        if self.modes < 0 or self.central_pairs < 0:
            raise ValueError("signature sizes must be nonnegative")

    @property
    def n_central(self) -> int:
        return 2 * self.central_pairs


class WickWord(NamedTuple):
    dag: tuple[int, ...]
    und: tuple[int, ...]
    cen: tuple[int, ...]

    def degree(self) -> int:
        return sum(self.dag) + sum(self.und) + sum(self.cen)


def _add_into(acc: dict, key, val: HPoly) -> None:
    cur = acc.get(key)
    s = val if cur is None else cur + val
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class WickElement:
    """Finite sum of normal-ordered words with hbar-polynomial coefficients."""

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: WickSignature, terms: Mapping[WickWord, HPoly] | None = None):
        self.sig = sig
        clean: dict[WickWord, HPoly] = {}
        for w, c in (terms or {}).items():
            w = WickWord(*map(tuple, w))
            if (len(w.dag), len(w.und), len(w.cen)) != (sig.modes, sig.modes, sig.n_central):
                raise ValueError(f"word {w} does not fit signature {sig}")
            if min(w.dag + w.und + w.cen, default=0) < 0:
                raise ValueError("negative exponent")
            if not isinstance(c, HPoly):
                c = HPoly.const(c)
            _add_into(clean, w, c)
        self._terms = clean

    @classmethod
    def _raw(cls, sig, terms) -> "WickElement":
        e = cls.__new__(cls)
        e.sig, e._terms = sig, terms
        return e

    @property
    def terms(self) -> dict[WickWord, HPoly]:
        return dict(self._terms)

    @classmethod
    def zero(cls, sig: WickSignature) -> "WickElement":
        return cls._raw(sig, {})

    @classmethod
    def scalar(cls, sig: WickSignature, c) -> "WickElement":
        w = WickWord((0,) * sig.modes, (0,) * sig.modes, (0,) * sig.n_central)
        return cls(sig, {w: c if isinstance(c, HPoly) else HPoly.const(c)})

    @classmethod
    def hbar(cls, sig: WickSignature) -> "WickElement":
        return cls.scalar(sig, HPoly({1: 1}))

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "WickElement") -> None:
        if self.sig != other.sig:
            raise ValueError("incompatible algebra signatures")

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            _add_into(out, w, c)
        return WickElement._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return WickElement._raw(self.sig, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def _lift(self, other) -> "WickElement":
        if isinstance(other, WickElement):
            return other
        return WickElement.scalar(self.sig, other)

    def __mul__(self, other):
        if isinstance(other, WickElement):
            return normal_order_product(self, other)
        c = other if isinstance(other, HPoly) else HPoly.const(other)
        out = {}
        for w, v in self._terms.items():
            p = v * c
            if p:
                out[w] = p
        return WickElement._raw(self.sig, out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, WickElement):
            return self.sig == other.sig and self._terms == other._terms
        if isinstance(other, (int, Fraction, Gauss, HPoly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, frozenset(self._terms.items())))

    def degree(self) -> int:
        return max((w.degree() for w in self._terms), default=-1)

    def at_hbar_zero(self) -> "WickElement":
        out = {}
        for w, c in self._terms.items():
            v = c.get(0)
            if v:
                out[w] = HPoly.const(v)
        return WickElement._raw(self.sig, out)

    def has_central(self) -> bool:
        return any(any(w.cen) for w in self._terms)

    def sorted_terms(self) -> list[tuple[WickWord, HPoly]]:
        return sorted(self._terms.items(), key=lambda t: (-t[0].degree(), t[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = _word_str(w)
            coef = str(c)
            if len(c) > 1:
                coef = f"({coef})"
            parts.append(coef if not mono else (mono if coef == "1" else f"{coef}*{mono}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"WickElement({self})"

    def to_json(self) -> dict:
        return {
            "signature": {"modes": self.sig.modes, "central_pairs": self.sig.central_pairs},
            "terms": [
                {"dag": list(w.dag), "und": list(w.und), "cen": list(w.cen), "coeff": c.to_list()}
                for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WickElement":
        s = data["signature"]
        sig = WickSignature(int(s["modes"]), int(s.get("central_pairs", 0)))
        terms: dict[WickWord, HPoly] = {}
        for t in data["terms"]:
            w = WickWord(tuple(t["dag"]), tuple(t["und"]), tuple(t.get("cen", [0] * sig.n_central)))
            _add_into(terms, w, HPoly.from_list(t["coeff"]))
        return cls(sig, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _word_str(w: WickWord) -> str:
    parts = []
    k = len(w.cen) // 2
    for i, e in enumerate(w.cen):
        if e:
            name = f"z{i}" if i < k else f"zb{i - k}"
            parts.append(name if e == 1 else f"{name}^{e}")
    for i, e in enumerate(w.dag):
        if e:
            parts.append(f"zeta{i}^dag" if e == 1 else f"(zeta{i}^dag)^{e}")
    for i, e in enumerate(w.und):
        if e:
            parts.append(f"zeta{i}" if e == 1 else f"zeta{i}^{e}")
    return "*".join(parts)


# --- generators --------------------------------------------------------------

def _unit_word(sig: WickSignature, dag=None, und=None, cen=None) -> WickWord:
    z = (0,) * sig.modes
    return WickWord(tuple(dag or z), tuple(und or z), tuple(cen or (0,) * sig.n_central))


def _bump(n: int, i: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def zeta(sig: WickSignature, i: int) -> WickElement:
    if not 0 <= i < sig.modes:
        raise ValueError(f"mode {i} outside signature")
    return WickElement(sig, {_unit_word(sig, und=_bump(sig.modes, i)): 1})


def zeta_dag(sig: WickSignature, i: int) -> WickElement:
    if not 0 <= i < sig.modes:
        raise ValueError(f"mode {i} outside signature")
    return WickElement(sig, {_unit_word(sig, dag=_bump(sig.modes, i)): 1})


def central(sig: WickSignature, k: int, bar: bool = False) -> WickElement:
    """Central variable ``z_k`` (or ``zb_k`` when ``bar``)."""
    if not 0 <= k < sig.central_pairs:
        raise ValueError(f"central pair {k} outside signature")
    idx = k + sig.central_pairs if bar else k
    return WickElement(sig, {_unit_word(sig, cen=_bump(sig.n_central, idx)): 1})


def evaluate_central(x: WickElement, values: Sequence) -> WickElement:
    """Substitute scalars for the central variables (z_0.., then zb_0..)."""
    if len(values) != x.sig.n_central:
        raise ValueError("one value per central variable required")
    vals = [Gauss.coerce(v) for v in values]
    zero_cen = (0,) * x.sig.n_central
    out: dict[WickWord, HPoly] = {}
    for w, c in x._terms.items():
        f = ONE
        for v, e in zip(vals, w.cen):
            f = f * v ** e
        _add_into(out, WickWord(w.dag, w.und, zero_cen), c * f)
    return WickElement._raw(x.sig, out)


# --- multiplication ----------------------------------------------------------

def _mode_expansion(u: int, d: int) -> list[tuple[int, int]]:
    """a^u (a^dag)^d = sum_k weight_k hbar^k (a^dag)^(d-k) a^(u-k)."""
    return [(k, comb(u, k) * comb(d, k) * factorial(k)) for k in range(min(u, d) + 1)]


def _word_product(w1: WickWord, w2: WickWord) -> list[tuple[WickWord, int, int]]:
    """Normal-ordered product of two words as (word, hbar power, integer weight)."""
    per_mode = [_mode_expansion(u, d) for u, d in zip(w1.und, w2.dag)]
    cen = tuple(a + b for a, b in zip(w1.cen, w2.cen))
    out = []
    for choice in itertools.product(*per_mode):
        ks = [k for k, _ in choice]
        weight = 1
        for _, c in choice:
            weight *= c
        dag = tuple(a + b - k for a, b, k in zip(w1.dag, w2.dag, ks))
        und = tuple(a + b - k for a, b, k in zip(w1.und, w2.und, ks))
        out.append((WickWord(dag, und, cen), sum(ks), weight))
    return out


def normal_order_product(x: WickElement, y: WickElement) -> WickElement:
    """Product ``x*y`` brought back to normal order."""
    x._check(y)
    out: dict[WickWord, HPoly] = {}
    for w1, c1 in x._terms.items():
        for w2, c2 in y._terms.items():
            c12 = c1 * c2
            for w, k, weight in _word_product(w1, w2):
                _add_into(out, w, c12.shift(k) * weight)
    return WickElement._raw(x.sig, out)


def commutator(x: WickElement, y: WickElement) -> WickElement:
    return normal_order_product(x, y) - normal_order_product(y, x)


def adjoint(x: WickElement) -> WickElement:
    """Antilinear anti-automorphism swapping zeta_i with zeta_i^dag and z with zb.

    The adjoint of a normal-ordered word is again normal ordered, so no
    rewriting is needed.
    """
    k = x.sig.central_pairs
    out = {}
    for w, c in x._terms.items():
        cen = w.cen[k:] + w.cen[:k]
        out[WickWord(w.und, w.dag, cen)] = c.conj()
    return WickElement._raw(x.sig, out)


# --- letter-level rewriting --------------------------------------------------

Letter = tuple[str, int]  # ("c", k) central, ("d", i) dagger, ("u", i) plain
_RANK = {"c": 0, "d": 1, "u": 2}


def normal_order_letters(sig: WickSignature, letters: Sequence[Letter],
                         rng: random.Random | None = None) -> WickElement:
    """Normal-order a product of letters by adjacent swaps.

    Each step picks one out-of-order adjacent pair (at random when ``rng`` is
    given, otherwise the leftmost) and swaps it, adding ``hbar`` times the
    contracted word whenever ``zeta_i`` passes ``zeta_i^dag``.  Used to test
    that the closed-form product does not depend on the rewrite schedule.
    """
    for kind, i in letters:
        bound = sig.n_central if kind == "c" else sig.modes
        if kind not in _RANK or not 0 <= i < bound:
            raise ValueError(f"bad letter {(kind, i)}")
    pending: dict[tuple[Letter, ...], HPoly] = {tuple(letters): HPoly.const(1)}
    done: dict[WickWord, HPoly] = {}
    key = lambda l: (_RANK[l[0]], l[1])
    while pending:
        words = sorted(pending)
        word = rng.choice(words) if rng else words[0]
        coef = pending.pop(word)
        inv = [j for j in range(len(word) - 1) if key(word[j]) > key(word[j + 1])]
        if not inv:
            dag, und, cen = [0] * sig.modes, [0] * sig.modes, [0] * sig.n_central
            for kind, i in word:
                {"c": cen, "d": dag, "u": und}[kind][i] += 1
            _add_into(done, WickWord(tuple(dag), tuple(und), tuple(cen)), coef)
            continue
        j = rng.choice(inv) if rng else inv[0]
        a, b = word[j], word[j + 1]
        swapped = word[:j] + (b, a) + word[j + 2:]
        _add_into(pending, swapped, coef)
        if a[0] == "u" and b[0] == "d" and a[1] == b[1]:
            _add_into(pending, word[:j] + word[j + 2:], coef.shift(1))
    return WickElement._raw(sig, done)


# --- named elements ----------------------------------------------------------

_HALF = Fraction(1, 2)


def named_element(name: str, sig: WickSignature) -> WickElement:
    """Named elements of the two- and four-mode algebras.

    ``alpha``, ``beta``, ``x``, ``R0sq``, ``R1sq`` need four modes; ``Rsq``
    and ``L1``..``L3`` need two.  ``Z<a>`` and ``Zbar<a>`` (a = 0..3) are the
    tensor-type twistor coordinates ``z_{a//2} * zeta_{a%2}`` and their
    adjoints, needing two modes and two central pairs.
    """
    z = lambda i: zeta(sig, i)
    zd = lambda i: zeta_dag(sig, i)

    def need(modes, pairs=0):
        if sig.modes < modes or sig.central_pairs < pairs:
            raise ValueError(f"{name} needs {modes} modes and {pairs} central pairs; got {sig}")

    if name == "alpha":
        need(4)
        return 2 * (z(0) * zd(2) + z(1) * zd(3))
    if name == "beta":
        need(4)
        return 2 * (z(1) * z(2) - z(0) * z(3))
    if name == "x":
        need(4)
        return z(0) * zd(0) + z(1) * zd(1) - z(2) * zd(2) - z(3) * zd(3)
    if name == "R0sq":
        need(4)
        return zd(0) * z(0) + z(1) * zd(1)
    if name == "R1sq":
        need(4)
        return zd(2) * z(2) + z(3) * zd(3)
    if name == "Rsq":
        need(2)
        return zd(0) * z(0) + z(1) * zd(1)
    if name == "L1":
        need(2)
        return (z(0) * zd(1) + zd(0) * z(1)) * _HALF
    if name == "L2":
        need(2)
        return (z(0) * zd(1) - zd(0) * z(1)) * (I * _HALF)
    if name == "L3":
        need(2)
        return (zd(0) * z(0) - zd(1) * z(1)) * _HALF
    for prefix, bar in (("Zbar", True), ("Z", False)):
        if name.startswith(prefix) and name[len(prefix):] in ("0", "1", "2", "3"):
            need(2, 2)
            a = int(name[len(prefix):])
            if bar:
                return central(sig, a // 2, bar=True) * zd(a % 2)
            return central(sig, a // 2) * z(a % 2)
    raise ValueError(f"unknown element name {name!r}")


# --- identity suites ---------------------------------------------------------

SUITES = ("twistor-commutators", "c4-commutators", "su2-bilinears", "double-commutators")


def _identity(report: Report, name: str, computed: WickElement, expected: WickElement) -> None:
    ok = computed == expected
    kw = {"expected": str(expected), "computed": str(computed)}
    if not ok:
        kw["residual"] = str(computed - expected)
    report.add(name, ok, **kw)


_EPS = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 0, 2): -1, (2, 1, 0): -1, (0, 2, 1): -1}


def verify_suite(suite_id: str) -> Report:
    """Run one exact identity suite; every comparison is symbolic."""
    if suite_id == "twistor-commutators":
        sig = WickSignature(4)
        rep = Report("twistor commutators [Z^a, Zbar_b] = hbar delta")
        Z = [zeta(sig, a) for a in range(4)]
        Zb = [zeta_dag(sig, a) for a in range(4)]
        h, zero = WickElement.hbar(sig), WickElement.zero(sig)
        for a in range(4):
            for b in range(4):
                _identity(rep, f"[Z^{a}, Z^{b}]", commutator(Z[a], Z[b]), zero)
                _identity(rep, f"[Zbar_{a}, Zbar_{b}]", commutator(Zb[a], Zb[b]), zero)
                _identity(rep, f"[Z^{a}, Zbar_{b}]", commutator(Z[a], Zb[b]), h if a == b else zero)
        return rep
    if suite_id == "c4-commutators":
        sig = WickSignature(4)
        rep = Report("four-mode commutators of alpha and beta")
        al, be, x = (named_element(n, sig) for n in ("alpha", "beta", "x"))
        r0, r1 = named_element("R0sq", sig), named_element("R1sq", sig)
        h = WickElement.hbar(sig)
        zero = WickElement.zero(sig)
        _identity(rep, "[alpha, beta] = 0", commutator(al, be), zero)
        _identity(rep, "[alpha, beta^dag] = 0", commutator(al, adjoint(be)), zero)
        c = commutator(al, adjoint(al))
        expected = 4 * h * (r1 - r0)
        ok = c == expected and c == -4 * h * x
        rep.add("[alpha, alpha^dag] = 4 hbar (R1sq - R0sq) = -4 hbar x", ok,
                expected=str(expected), computed=str(c),
                **({} if ok else {"residual": str(c - expected)}))
        _identity(rep, "[beta, beta^dag] = 4 hbar (R0sq + R1sq)",
                  commutator(be, adjoint(be)), 4 * h * (r0 + r1))
        return rep
    if suite_id == "su2-bilinears":
        sig = WickSignature(2)
        rep = Report("Schwinger bilinears [L_a, L_b] = i hbar eps_abc L_c")
        L = [named_element(f"L{a + 1}", sig) for a in range(3)]
        h = WickElement.hbar(sig)
        for a in range(3):
            for b in range(3):
                exp = WickElement.zero(sig)
                for c in range(3):
                    e = _EPS.get((a, b, c), 0)
                    if e:
                        exp = exp + (I * e) * h * L[c]
                _identity(rep, f"[L{a + 1}, L{b + 1}]", commutator(L[a], L[b]), exp)
        return rep
    if suite_id == "double-commutators":
        sig = WickSignature(2, 2)
        rep = Report("tensor twistor coordinates Z^a = z_(a//2) zeta_(a%2)")
        Z = [named_element(f"Z{a}", sig) for a in range(4)]
        Zb = [named_element(f"Zbar{a}", sig) for a in range(4)]
        h, zero = WickElement.hbar(sig), WickElement.zero(sig)
        for a in range(4):
            for b in range(4):
                _identity(rep, f"[Z^{a}, Z^{b}]", commutator(Z[a], Z[b]), zero)
                _identity(rep, f"[Zbar_{a}, Zbar_{b}]", commutator(Zb[a], Zb[b]), zero)
                if (b - a) % 2 == 0:
                    exp = h * central(sig, a // 2) * central(sig, b // 2, bar=True)
                else:
                    exp = zero
                c = commutator(Z[a], Zb[b])
                _identity(rep, f"[Z^{a}, Zbar_{b}]", c, exp)
                _identity(rep, f"[Z^{a}, Zbar_{b}] at z = zb = 1",
                          evaluate_central(c, [1] * sig.n_central),
                          h if (b - a) % 2 == 0 else zero)
        return rep
    raise ValueError(f"unknown suite {suite_id!r}; choose from {', '.join(SUITES)}")
