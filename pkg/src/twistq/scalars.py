"""Gaussian rationals and polynomials in a formal parameter hbar."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]


class Gauss:
    """Exact element re + i*im of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational | "Gauss" = 0, im: Rational = 0):
        if isinstance(re, Gauss):
            self.re, self.im = re.re, re.im
            return
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def coerce(x) -> "Gauss":
        if isinstance(x, Gauss):
            return x
        if isinstance(x, (int, Fraction)):
            return Gauss(x)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        raise TypeError(f"cannot coerce {type(x).__name__} to Gauss")

    def __add__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return o
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return o
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return o
        return Gauss(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return Gauss(a * c)
        return Gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Gauss":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return Gauss(self.re / n, -self.im / n)

    def conj(self) -> "Gauss":
        return Gauss(self.re, -self.im) if self.im else self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _c(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"Gauss({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def to_list(self) -> list[int]:
        """``[re_num, re_den, im_num, im_den]``."""
        return [self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator]

    @classmethod
    def from_list(cls, v: Iterable[int]) -> "Gauss":
        a, b, c, d = v
        return cls(Fraction(a, b), Fraction(c, d))


def _c(x):
    if isinstance(x, Gauss):
        return x
    if isinstance(x, (int, Fraction)):
        return Gauss(x)
    return NotImplemented


ZERO = Gauss(0)
ONE = Gauss(1)
I = Gauss(0, 1)


def parse_scalar(v) -> Gauss:
    """Read a scalar from its JSON form.

    Accepts an integer, a rational string such as ``"-3/2"``, a list
    ``[re_num, re_den, im_num, im_den]`` or ``{"re": ..., "im": ...}``.
    """
    if isinstance(v, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(v, int):
        return Gauss(v)
    if isinstance(v, str):
        return Gauss(Fraction(v))
    if isinstance(v, list) and len(v) == 4 and all(isinstance(t, int) for t in v):
        if v[1] == 0 or v[3] == 0:
            raise ValueError("zero denominator")
        return Gauss.from_list(v)
    if isinstance(v, dict) and set(v) <= {"re", "im"}:
        return Gauss(Fraction(str(v.get("re", 0))), Fraction(str(v.get("im", 0))))
    raise ValueError(f"not a scalar: {v!r}")


def dump_scalar(x: Gauss):
    if x.im:
        return {"re": str(x.re), "im": str(x.im)}
    if x.re.denominator == 1:
        return x.re.numerator
    return str(x.re)


class HPoly(Mapping[int, Gauss]):
    """Polynomial in hbar with Gaussian rational coefficients (immutable)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c: dict[int, Gauss] = {}
        if coeffs:
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("negative hbar power")
                g = Gauss.coerce(v)
                if g:
                    c[k] = g
        self._c = c

    @classmethod
    def const(cls, v) -> "HPoly":
        return cls({0: v})

    @classmethod
    def _raw(cls, c: dict[int, Gauss]) -> "HPoly":
        p = cls.__new__(cls)
        p._c = c
        return p

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def get(self, k, default=ZERO):
        return self._c.get(k, default)

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def __add__(self, other: "HPoly") -> "HPoly":
        out = dict(self._c)
        for k, v in other._c.items():
            s = out.get(k, ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return HPoly._raw(out)

    def __neg__(self):
        return HPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def __mul__(self, other) -> "HPoly":
        if not isinstance(other, HPoly):
            g = Gauss.coerce(other)
            if not g:
                return HPoly._raw({})
            return HPoly._raw({k: v * g for k, v in self._c.items()})
        out: dict[int, Gauss] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                out[a + b] = out.get(a + b, ZERO) + x * y
        return HPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def shift(self, k: int) -> "HPoly":
        """Multiply by hbar**k."""
        return HPoly._raw({a + k: v for a, v in self._c.items()})

    def conj(self) -> "HPoly":
        return HPoly._raw({k: v.conj() for k, v in self._c.items()})

    def at(self, hbar) -> Gauss:
        h = Gauss.coerce(hbar)
        return sum((v * h ** k for k, v in self._c.items()), ZERO)

    def evalf(self, hbar: float) -> complex:
        return sum(complex(v) * hbar ** k for k, v in self._c.items())

    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self._c == other._c
        try:
            return self._c == HPoly.const(other)._c
        except TypeError:
            return False

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"HPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            h = "h" if k == 1 else f"h^{k}"
            if k == 0:
                parts.append(str(v))
            elif v == 1:
                parts.append(h)
            else:
                parts.append(f"{v}*{h}")
        return " + ".join(parts)

    def to_list(self) -> list[list[int]]:
        return [[k] + self._c[k].to_list() for k in sorted(self._c)]

    @classmethod
    def from_list(cls, rows) -> "HPoly":
        out: dict[int, Gauss] = {}
        for row in rows:
            if len(row) != 5:
                raise ValueError(f"coefficient row needs 5 integers: {row!r}")
            k = row[0]
            out[k] = out.get(k, ZERO) + parse_scalar(list(row[1:]))
        return cls(out)


HBAR = HPoly({1: 1})
