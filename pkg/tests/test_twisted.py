"""Twisted group algebras: products, inverses, center, minimality."""

import random

import pytest

from regdecomp import (
    Cocycle2,
    CocycleError,
    FinAbGroup,
    TwistedGroupAlgebra,
    carry_cocycle,
    cocycle_from_alternating,
    induced_bicharacter,
    sign_cocycle,
)
from regdecomp.bichar import quotient_bicharacter, radical


def _trivial_cocycle(group, spec):
    n = group.order
    return Cocycle2(group, spec, [[spec.one()] * n for _ in range(n)])


def _z2_sign_cocycle(spec):
    g = FinAbGroup((2,))
    one, m1 = spec.one(), spec.from_int(-1)
    return Cocycle2(g, spec, [[one, one], [one, m1]])


# -- multiplication -------------------------------------------------------------


def test_unit_law(gf5):
    g = FinAbGroup((6,))
    algebra = TwistedGroupAlgebra(carry_cocycle(g, [gf5.from_int(3)]))
    one = algebra.one()
    for el in g.elements():
        x = algebra.basis_element(el)
        assert one * x == x and x * one == x


def test_trivial_cocycle_gives_group_algebra(gf5):
    g = FinAbGroup((3, 2))
    algebra = TwistedGroupAlgebra(_trivial_cocycle(g, gf5))
    for a in g.elements():
        for b in g.elements():
            assert algebra.basis_element(a) * algebra.basis_element(b) == algebra.basis_element(a + b)


def test_z2_anticommuting_square(gf5):
    algebra = TwistedGroupAlgebra(_z2_sign_cocycle(gf5))
    x1 = algebra.basis_element(algebra.group.element((1,)))
    assert x1 * x1 == algebra.one().scale(gf5.from_int(-1))


def test_bilinearity_and_sparsity(gf5):
    algebra = TwistedGroupAlgebra(_z2_sign_cocycle(gf5))
    g0, g1 = algebra.group.elements()
    u = algebra.element({g0: gf5.from_int(2), g1: gf5.from_int(3)})
    v = algebra.element({g1: gf5.from_int(4)})
    # (2 x0 + 3 x1)(4 x1) = 8 x1 + 12 alpha(1,1) x0 = 3 x1 + 3 x0 over GF(5)
    w = u * v
    assert w.coeffs[g1] == gf5.from_int(8)
    assert w.coeffs[g0] == gf5.from_int(-12)
    zero = u - u
    assert zero.is_zero() and not zero.coeffs


def test_associativity_random(gf5):
    rng = random.Random(2)
    g = FinAbGroup((2, 4))
    algebra = TwistedGroupAlgebra(sign_cocycle(g, gf5))
    els = list(g.elements())
    for _ in range(200):
        a, b, c = (algebra.basis_element(rng.choice(els)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_algebra_mismatch_rejected(gf5):
    a1 = TwistedGroupAlgebra(_z2_sign_cocycle(gf5))
    a2 = TwistedGroupAlgebra(_trivial_cocycle(FinAbGroup((2,)), gf5))
    with pytest.raises(ValueError):
        a1.one() * a2.one()


def test_invalid_cocycle_rejected(gf5):
    g = FinAbGroup((3,))
    rows = [[gf5.one()] * 3 for _ in range(3)]
    rows[2][1] = gf5.from_int(2)
    with pytest.raises(CocycleError):
        TwistedGroupAlgebra(Cocycle2(g, gf5, rows))


# -- commutation and regularity --------------------------------------------------


def test_basis_commutation_matches_induced_bicharacter(gf5):
    g = FinAbGroup((2, 4))
    alpha = sign_cocycle(g, gf5) * carry_cocycle(g, [gf5.from_int(2), gf5.from_int(3)])
    algebra = TwistedGroupAlgebra(alpha)
    beta = algebra.induced_bicharacter()
    for a in g.elements():
        for b in g.elements():
            xa, xb = algebra.basis_element(a), algebra.basis_element(b)
            assert xa * xb == (xb * xa).scale(beta(a, b))


def test_products_of_basis_words_never_vanish(gf5):
    rng = random.Random(7)
    g = FinAbGroup((4, 10))
    algebra = TwistedGroupAlgebra(sign_cocycle(g, gf5))
    els = list(g.elements())
    for _ in range(50):
        word = [rng.choice(els) for _ in range(rng.randint(1, 6))]
        prod = algebra.one()
        total = g.zero()
        for el in word:
            prod = prod * algebra.basis_element(el)
            total = total + el
        assert list(prod.coeffs) == [total]
        assert not prod.coeffs[total].is_zero()


# -- inverses ---------------------------------------------------------------------


def test_basis_inverse_of_zero_is_unit(gf5):
    algebra = TwistedGroupAlgebra(_z2_sign_cocycle(gf5))
    assert algebra.basis_inverse(algebra.group.zero()) == algebra.one()


def test_z2_inverse_is_minus_x1(gf5):
    algebra = TwistedGroupAlgebra(_z2_sign_cocycle(gf5))
    g1 = algebra.group.element((1,))
    inv = algebra.basis_inverse(g1)
    assert inv == algebra.basis_element(g1).scale(gf5.from_int(-1))


def test_all_basis_inverses_two_sided_on_z6(gf5):
    g = FinAbGroup((6,))
    algebra = TwistedGroupAlgebra(carry_cocycle(g, [gf5.from_int(4)]))
    for el in g.elements():
        inv = algebra.basis_inverse(el)
        x = algebra.basis_element(el)
        assert x * inv == algebra.one() and inv * x == algebra.one()


def test_inverse_scalar_is_symmetric_cocycle_value(gf5):
    # alpha(g, -g) = alpha(-g, g) always, by the cocycle identity
    g = FinAbGroup((2, 4))
    alpha = sign_cocycle(g, gf5) * carry_cocycle(g, [gf5.from_int(2), gf5.from_int(3)])
    for el in g.elements():
        assert alpha(el, -el) == alpha(-el, el)


# -- center and minimality ------------------------------------------------------------


def test_center_of_group_algebra_is_everything(gf5):
    g = FinAbGroup((3, 2))
    algebra = TwistedGroupAlgebra(_trivial_cocycle(g, gf5))
    assert len(algebra.center_basis()) == 6
    assert not algebra.is_minimal()


def test_center_matches_radical_order(gf3):
    g = FinAbGroup((4, 10))
    algebra = TwistedGroupAlgebra(sign_cocycle(g, gf3))
    beta = algebra.induced_bicharacter()
    assert len(algebra.center_basis()) == radical(beta).order == 10
    assert not algebra.is_minimal()


def test_minimal_quotient_instance(gf3):
    g = FinAbGroup((4, 10))
    beta = induced_bicharacter(sign_cocycle(g, gf3))
    beta_bar, _ = quotient_bicharacter(beta, radical(beta))
    algebra = TwistedGroupAlgebra(cocycle_from_alternating(beta_bar))
    assert algebra.is_minimal()
    assert len(algebra.center_basis()) == 1
    c = algebra.center_basis()
    assert c == [algebra.group.zero()]
