from __future__ import annotations

import random

import sympy
from hypothesis import given, settings, strategies as st

from twistq.linalg import Echelon, kernel, rank
from twistq.scalars import Gauss


def _random_columns(rnd, rows, cols, density=0.4, complex_entries=False):
    out = []
    for _ in range(cols):
        v = {}
        for r in range(rows):
            if rnd.random() < density:
                im = rnd.randint(-2, 2) if complex_entries else 0
                g = Gauss(rnd.randint(-3, 3), im)
                if g:
                    v[r] = g
        out.append(v)
    return out


def _sympy_rank(cols, rows):
    M = sympy.zeros(rows, len(cols))
    for j, v in enumerate(cols):
        for r, g in v.items():
            M[r, j] = sympy.Rational(g.re.numerator, g.re.denominator) + sympy.I * sympy.Rational(
                g.im.numerator, g.im.denominator)
    return M.rank(simplify=True)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_rank_matches_sympy(seed):
    rnd = random.Random(seed)
    rows, cols = rnd.randint(1, 7), rnd.randint(1, 7)
    C = _random_columns(rnd, rows, cols, complex_entries=seed % 2 == 0)
    assert rank(C) == _sympy_rank(C, rows)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_kernel_vectors_are_relations(seed):
    rnd = random.Random(seed)
    rows, cols = rnd.randint(1, 6), rnd.randint(1, 8)
    C = _random_columns(rnd, rows, cols, complex_entries=True)
    K = kernel(C)
    assert len(K) + rank(C) == cols
    for rel in K:
        total = {}
        for j, c in rel.items():
            for r, x in C[j].items():
                total[r] = total.get(r, Gauss(0)) + c * x
        assert not any(total.values())


def test_solve_reconstructs_target():
    rnd = random.Random(5)
    C = _random_columns(rnd, 6, 4)
    E = Echelon(track=True)
    for j, c in enumerate(C):
        E.add(c, j)
    target = {}
    for j, coef in ((0, Gauss(2)), (2, Gauss(-1, 1))):
        for r, x in C[j].items():
            target[r] = target.get(r, Gauss(0)) + coef * x
    target = {k: v for k, v in target.items() if v}
    combo = E.solve(target)
    rebuilt = {}
    for j, c in combo.items():
        for r, x in C[j].items():
            rebuilt[r] = rebuilt.get(r, Gauss(0)) + c * x
    assert {k: v for k, v in rebuilt.items() if v} == target


def test_normal_form_outside_span():
    E = Echelon()
    E.add({0: Gauss(1), 1: Gauss(1)})
    rest, _ = E.normal_form({1: Gauss(1)})
    assert rest == {1: Gauss(1)}
    assert not E.contains({1: Gauss(1)})
    assert E.contains({0: Gauss(3), 1: Gauss(3)})
