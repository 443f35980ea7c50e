"""Exact sparse linear algebra over Q(i).

Vectors are dicts from hashable, totally ordered keys to nonzero ``Gauss``
values.  ``Echelon`` keeps an incrementally built basis of a column span in
echelon form (distinct leading keys, leading coefficient one), optionally
tracking how each basis vector is combined from the inserted columns.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable, Mapping

from .scalars import Gauss

Vec = dict


def axpy(y: dict, a: Gauss, x: Mapping) -> None:
    """``y += a*x`` in place, dropping zeros."""
    for k, v in x.items():
        w = y.get(k)
        w = a * v if w is None else w + a * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def scaled(a: Gauss, x: Mapping) -> dict:
    return {k: a * v for k, v in x.items()} if a else {}


class Echelon:
    """Incremental echelon basis of a span of sparse vectors."""

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots: dict[Hashable, tuple[dict, dict | None]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, v: Mapping, combo: dict | None, full: bool):
        v = dict(v)
        heap = list(v)
        heapq.heapify(heap)
        rest: dict = {}
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            piv = self.pivots.get(k)
            if piv is None:
                if not full:
                    return v, combo, k
                rest[k] = v.pop(k)
                continue
            pvec, pcombo = piv
            for kk, pv in pvec.items():
                w = v.get(kk)
                if w is None:
                    v[kk] = -c * pv
                    heapq.heappush(heap, kk)
                else:
                    w = w - c * pv
                    if w:
                        v[kk] = w
                    else:
                        del v[kk]
            if combo is not None:
                axpy(combo, -c, pcombo)
        return rest, combo, None

    def add(self, v: Mapping, label: Hashable = None) -> bool:
        """Insert a column; returns True when it enlarges the span."""
        combo = {label: Gauss(1)} if self.track else None
        v, combo, lead = self._reduce(v, combo, full=False)
        if lead is None:
            return False
        inv = v[lead].inverse()
        v = {k: x * inv for k, x in v.items()}
        if combo is not None:
            combo = {k: x * inv for k, x in combo.items()}
        self.pivots[lead] = (v, combo)
        return True

    def normal_form(self, v: Mapping) -> tuple[dict, dict | None]:
        """Reduce ``v`` completely.

        Returns ``(r, c)`` with ``r`` supported off the pivot keys and, when
        tracking, ``v = r + sum c[label] * column[label]``.
        """
        combo = {} if self.track else None
        rest, combo, _ = self._reduce(v, combo, full=True)
        if combo is not None:
            combo = {k: -x for k, x in combo.items()}
        return rest, combo

    def contains(self, v: Mapping) -> bool:
        return not self.normal_form(v)[0]

    def solve(self, v: Mapping) -> dict | None:
        """A combination of inserted columns equal to ``v``, or None."""
        if not self.track:
            raise ValueError("solve needs a tracking echelon")
        rest, combo = self.normal_form(v)
        return None if rest else combo


def rank(columns: Iterable[Mapping]) -> int:
    E = Echelon()
    for c in columns:
        E.add(c)
    return E.rank


def kernel(columns: list[Mapping]) -> list[dict]:
    """Basis of ``{x : sum x_j columns[j] = 0}`` as sparse dicts over column indices."""
    E = Echelon(track=True)
    out = []
    for j, c in enumerate(columns):
        if E.add(c, j):
            continue
        _, combo = E.normal_form(c)
        rel = {k: -x for k, x in combo.items()}
        rel[j] = rel.get(j, Gauss(0)) + 1
        out.append({k: x for k, x in rel.items() if x})
    return out
