from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from twistq.fockrep import FockSpace, represent
from twistq.scalars import Gauss, HPoly, I
from twistq.wick import (
    SUITES, WickElement, WickSignature, WickWord, adjoint, central, commutator,
    evaluate_central, normal_order_letters, normal_order_product, named_element,
    verify_suite, zeta, zeta_dag,
)

S2, S4 = WickSignature(2), WickSignature(4)


def word(sig, dag=None, und=None, cen=None):
    n, m = sig.modes, sig.n_central
    return WickWord(tuple(dag or (0,) * n), tuple(und or (0,) * n), tuple(cen or (0,) * m))


def random_letters(rnd, sig, max_len):
    kinds = ["d", "u"] + (["c"] if sig.n_central else [])
    out = []
    for _ in range(rnd.randint(0, max_len)):
        k = rnd.choice(kinds)
        out.append((k, rnd.randrange(sig.n_central if k == "c" else sig.modes)))
    return out


def random_element(rnd, sig, max_deg, terms=3):
    x = WickElement.zero(sig)
    for _ in range(rnd.randint(1, terms)):
        w = normal_order_letters(sig, random_letters(rnd, sig, max_deg))
        c = HPoly({rnd.randint(0, 1): Gauss(rnd.randint(-3, 3), rnd.randint(-2, 2))})
        x = x + w * WickElement.scalar(sig, c)
    return x


def test_contraction_of_conjugate_pair():
    got = zeta(S2, 0) * zeta_dag(S2, 0)
    assert got == WickElement(S2, {word(S2, dag=(1, 0), und=(1, 0)): 1, word(S2): HPoly({1: 1})})


def test_normal_word_is_unchanged():
    x = zeta_dag(S2, 0) * zeta(S2, 0)
    assert x.terms == {word(S2, dag=(1, 0), und=(1, 0)): HPoly({0: 1})}


def test_two_mode_product_terms():
    z0, z1, d0, d1 = zeta(S2, 0), zeta(S2, 1), zeta_dag(S2, 0), zeta_dag(S2, 1)
    h = WickElement.hbar(S2)
    expected = d0 * d1 * z0 * z1 + h * d1 * z1 + h * d0 * z0 + h * h
    assert (z0 * z1) * (d0 * d1) == expected


def test_two_mode_product_matches_fock_matrices():
    z0, z1, d0, d1 = zeta(S2, 0), zeta(S2, 1), zeta_dag(S2, 0), zeta_dag(S2, 1)
    F = FockSpace(2, 6, Fraction(1, 2))
    prod = represent((z0 * z1) * (d0 * d1), F)
    A, B = represent(z0 * z1, F).matrix, represent(d0 * d1, F).matrix
    mask = F.interior(4)
    assert np.abs((A @ B - prod.matrix)[:, mask]).max() < 1e-12


def test_commutator_examples():
    assert not commutator(zeta(S2, 0), zeta(S2, 1))
    assert commutator(zeta(S2, 0), zeta_dag(S2, 0)) == WickElement.hbar(S2)
    al, x = named_element("alpha", S4), named_element("x", S4)
    h = WickElement.hbar(S4)
    assert commutator(al, adjoint(al)) == -4 * h * x


def test_alpha_ordering_constants_cancel():
    al, x = named_element("alpha", S4), named_element("x", S4)
    r0, r1 = named_element("R0sq", S4), named_element("R1sq", S4)
    h = WickElement.hbar(S4)
    assert not commutator(al, adjoint(al)) + 4 * h * x
    assert not r1 - r0 + x


def test_adjoint_examples():
    assert adjoint(zeta(S2, 0)) == zeta_dag(S2, 0)
    x = WickElement(S2, {word(S2, dag=(0, 1), und=(1, 0)): I})
    assert adjoint(x) == WickElement(S2, {word(S2, dag=(1, 0), und=(0, 1)): -I})
    S = WickSignature(1, 1)
    assert adjoint(central(S, 0)) == central(S, 0, bar=True)


def test_named_elements():
    z, zd = (lambda i: zeta(S2, i)), (lambda i: zeta_dag(S2, i))
    assert named_element("L3", S2) == (zd(0) * z(0) - zd(1) * z(1)) * Fraction(1, 2)
    z4, zd4 = (lambda i: zeta(S4, i)), (lambda i: zeta_dag(S4, i))
    assert named_element("x", S4) == (z4(0) * zd4(0) + z4(1) * zd4(1)
                                      - z4(2) * zd4(2) - z4(3) * zd4(3))
    S = WickSignature(2, 2)
    assert named_element("Z0", S) == central(S, 0) * zeta(S, 0)
    assert named_element("Zbar3", S) == central(S, 1, bar=True) * zeta_dag(S, 1)


def test_named_element_errors():
    with pytest.raises(ValueError):
        named_element("alpha", S2)
    with pytest.raises(ValueError):
        named_element("gamma", S4)
    with pytest.raises(ValueError):
        named_element("Z0", S2)


@pytest.mark.parametrize("suite", SUITES)
def test_identity_suites_pass(suite):
    rep = verify_suite(suite)
    assert rep.passed, rep.to_text()
    assert len(rep.checks) >= 3


def test_su2_suite_covers_all_pairs():
    assert len(verify_suite("su2-bilinears").checks) == 9


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify_suite("nonsense")


def test_signature_mismatch():
    with pytest.raises(ValueError, match="incompatible algebra signatures"):
        normal_order_product(zeta(S2, 0), zeta(S4, 0))
    with pytest.raises(ValueError):
        commutator(zeta(S2, 0), zeta(S4, 0))


def test_rewrite_order_does_not_matter():
    rnd = random.Random(11)
    for sig in (S2, WickSignature(2, 1)):
        for _ in range(60):
            a, b = random_letters(rnd, sig, 4), random_letters(rnd, sig, 4)
            closed = normal_order_product(normal_order_letters(sig, a), normal_order_letters(sig, b))
            for seed in range(2):
                assert normal_order_letters(sig, a + b, random.Random(seed)) == closed


@pytest.mark.parametrize("sig", [S2, S4])
def test_associativity(sig):
    rnd = random.Random(sig.modes)
    for _ in range(40):
        x, y, z = (random_element(rnd, sig, 3) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_hbar_grading():
    rnd = random.Random(3)
    for _ in range(50):
        a, b = random_letters(rnd, S2, 4), random_letters(rnd, S2, 4)
        d = len(a) + len(b)
        prod = normal_order_letters(S2, a) * normal_order_letters(S2, b)
        for w, c in prod.terms.items():
            for k in c:
                assert w.degree() == d - 2 * k


def test_hbar_zero_is_commutative_product():
    rnd = random.Random(4)
    sig = WickSignature(2, 1)
    for _ in range(50):
        a, b = random_letters(rnd, sig, 4), random_letters(rnd, sig, 4)
        prod = (normal_order_letters(sig, a) * normal_order_letters(sig, b)).at_hbar_zero()
        counts = Counter(a + b)
        w = word(sig, dag=[counts[("d", i)] for i in range(2)],
                 und=[counts[("u", i)] for i in range(2)],
                 cen=[counts[("c", k)] for k in range(2)])
        assert prod == WickElement(sig, {w: 1})


def test_adjoint_reverses_products():
    rnd = random.Random(5)
    sig = WickSignature(2, 1)
    for _ in range(50):
        x, y = random_element(rnd, sig, 3), random_element(rnd, sig, 3)
        assert adjoint(x * y) == adjoint(y) * adjoint(x)
        assert adjoint(adjoint(x)) == x


def test_central_variables_commute():
    S = WickSignature(2, 1)
    c = central(S, 0)
    for g in (zeta(S, 0), zeta_dag(S, 1), central(S, 0, bar=True)):
        assert not commutator(c, g)


def test_evaluate_central():
    S = WickSignature(1, 1)
    x = central(S, 0) * central(S, 0, bar=True) * zeta(S, 0)
    got = evaluate_central(x, [2, I])
    assert got == WickElement(S, {word(S, und=(1,)): Gauss(0, 2)})


def test_json_round_trip():
    rnd = random.Random(6)
    x = random_element(rnd, WickSignature(2, 1), 4)
    assert WickElement.from_json(x.to_json()) == x
