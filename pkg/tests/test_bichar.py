"""Bicharacters: evaluation, laws, radical, minimality, quotients, sums."""

import random

import pytest

from regdecomp import (
    Bicharacter,
    FinAbGroup,
    character_sum,
    grassmann_bicharacter,
    is_minimal,
    quotient_bicharacter,
    radical,
    root_of_unity,
    sign_root_bicharacter,
    trivial_bicharacter,
    znxzn_bicharacter,
)
from regdecomp.bichar import validate


def _naive_eval(beta, g, h):
    """Independent evaluation straight from the exponent product."""
    acc = beta.field.one()
    for i, gi in enumerate(g.coords):
        for j, hj in enumerate(h.coords):
            acc = acc * beta.gen_table[i][j] ** (gi * hj)
    return acc


# -- evaluation --------------------------------------------------------------------


def test_trivial_bicharacter_evaluates_to_one(gf5):
    g = FinAbGroup((3, 4))
    beta = trivial_bicharacter(g, gf5)
    for a in g.elements():
        for b in g.elements():
            assert beta(a, b) == gf5.one()


def test_grassmann_value(gf5):
    beta = grassmann_bicharacter(gf5)
    one = beta.group.element((1,))
    assert beta(one, one) == gf5.from_int(-1)
    assert beta(beta.group.zero(), one) == gf5.one()


def test_znxzn_closed_form_n4():
    spec, xi = root_of_unity(5, 4)
    one, m1 = spec.one(), spec.from_int(-1)
    for e in (one, m1):
        for f in (one, m1):
            beta = znxzn_bicharacter(4, e, f, xi)
            g4 = beta.group
            for gg in g4.elements():
                for hh in g4.elements():
                    i, j = gg.coords
                    k, l = hh.coords
                    expected = f ** (i * k) * e ** (j * l) * xi ** (j * k - i * l)
                    assert beta(gg, hh) == expected
                    assert beta(gg, hh) == _naive_eval(beta, gg, hh)


def test_group_mismatch_rejected(gf5):
    beta = grassmann_bicharacter(gf5)
    other = FinAbGroup((3,))
    with pytest.raises(ValueError):
        beta(other.zero(), other.zero())


# -- construction preconditions -------------------------------------------------------


def test_znxzn_rejects_diagonal_sign_on_odd_order(gf5):
    with pytest.raises(ValueError, match="odd n"):
        znxzn_bicharacter(3, gf5.from_int(-1), gf5.one(), gf5.one())


def test_znxzn_rejects_non_root_xi(gf5):
    with pytest.raises(ValueError, match="root of unity"):
        znxzn_bicharacter(3, gf5.one(), gf5.one(), gf5.from_int(2))


def test_gen_table_antisymmetry_enforced(gf5):
    g = FinAbGroup((4, 4))
    one, two = gf5.one(), gf5.from_int(2)
    with pytest.raises(ValueError, match="antisymmetry"):
        Bicharacter(g, gf5, [[one, two], [two, one]])


def test_gcd_order_constraint_enforced(gf5):
    # entries on Z_3 x Z_3 must be cube roots of 1, so -1 is illegal
    g = FinAbGroup((3, 3))
    one, m1 = gf5.one(), gf5.from_int(-1)
    with pytest.raises(ValueError, match="root of unity"):
        Bicharacter(g, gf5, [[one, m1], [m1, one]])


def test_sign_root_bicharacter_parameters():
    beta = sign_root_bicharacter(5, 3)
    assert beta.group.orders == (6, 6)
    assert beta.field.q == 25
    zeta = beta.gen_table[1][0]
    assert zeta.multiplicative_order() == 3
    with pytest.raises(ValueError):
        sign_root_bicharacter(5, 4)  # t not prime
    with pytest.raises(ValueError):
        sign_root_bicharacter(3, 3)  # t = p


def test_sign_root_diagonal_is_sign(gf25):
    beta = sign_root_bicharacter(5, 3)
    one, m1 = beta.field.one(), beta.field.from_int(-1)
    for g in beta.group.elements():
        assert beta(g, g) in (one, m1)


# -- validation -------------------------------------------------------------------


def test_validate_trivial(gf5):
    assert validate(trivial_bicharacter(FinAbGroup((2, 3)), gf5)).ok


def test_validate_section4_exhaustive():
    for p, t in [(5, 3), (3, 5)]:
        report = validate(sign_root_bicharacter(p, t))  # all |G|^3 triples
        assert report.ok


def test_vectorized_and_pure_validation_agree(gf5):
    g = FinAbGroup((2, 4))
    m1 = gf5.from_int(-1)
    beta = Bicharacter(g, gf5, [[gf5.one(), m1], [m1, m1]])
    assert validate(beta).ok
    # independent pure-python route over the same laws
    els = list(g.elements())
    one = gf5.one()
    for a in els:
        for b in els:
            assert beta(a, b) * beta(b, a) == one
            for c in els:
                assert beta(a, b + c) == beta(a, b) * beta(a, c)
                assert beta(a + b, c) == beta(a, c) * beta(b, c)


def test_validate_catches_broken_table(gf5):
    # bypass the constructor checks by mutating a valid table
    g = FinAbGroup((2, 2))
    m1 = gf5.from_int(-1)
    beta = znxzn_bicharacter(2, gf5.one(), gf5.one(), m1)
    object.__setattr__(beta, "gen_table", ((gf5.from_int(2), m1), (m1, gf5.one())))
    report = validate(beta)
    assert not report.ok
    assert report.law in ("antisymmetry", "nth-root", "diagonal-square")
    assert report.witness is not None


def test_antisymmetry_and_bilinearity_random_tables():
    rng = random.Random(11)
    spec, _ = root_of_unity(5, 12)
    for _ in range(10):
        orders = tuple(rng.choice([2, 3, 4, 6]) for _ in range(rng.randint(1, 3)))
        g = FinAbGroup(orders)
        table = [[spec.one()] * g.rank for _ in range(g.rank)]
        import math

        for i in range(g.rank):
            for j in range(i):
                d = math.gcd(orders[i], orders[j])
                roots = [v for v in spec.nonzero_elements() if v**d == spec.one()]
                v = rng.choice(roots)
                table[i][j], table[j][i] = v, v.inverse()
            d = math.gcd(orders[i], 2)
            diag = [v for v in spec.nonzero_elements() if v**d == spec.one() and v ** orders[i] == spec.one()]
            table[i][i] = rng.choice(diag)
        beta = Bicharacter(g, spec, table)
        assert validate(beta, triple_cap=72).ok


# -- radical and minimality -------------------------------------------------------------


def test_radical_of_trivial_is_whole_group(gf5):
    g = FinAbGroup((3, 4))
    assert radical(trivial_bicharacter(g, gf5)).order == 12


def test_radical_of_grassmann_is_trivial(gf5):
    assert radical(grassmann_bicharacter(gf5)).order == 1


def test_radical_of_sign_pairing_on_z4xz10(gf3):
    # beta((i1,i2),(k1,k2)) = (-1)^{i2 k1 - i1 k2}: radical = both-even coords
    g = FinAbGroup((4, 10))
    m1 = gf3.from_int(-1)
    beta = Bicharacter(g, gf3, [[gf3.one(), m1], [m1, gf3.one()]])
    rad = radical(beta)
    assert rad.order == 10
    # independent scan
    expected = {
        el.coords
        for el in g.elements()
        if all(beta(el, x) == gf3.one() for x in g.elements())
    }
    assert {e.coords for e in rad} == expected
    assert expected == {el.coords for el in g.elements() if el.coords[0] % 2 == 0 and el.coords[1] % 2 == 0}


def test_minimality_of_worked_examples(gf5):
    minimal, witness = is_minimal(grassmann_bicharacter(gf5))
    assert minimal and witness is None
    m1 = gf5.from_int(-1)
    nonminimal = znxzn_bicharacter(2, m1, m1, m1)
    minimal, witness = is_minimal(nonminimal)
    assert not minimal
    g, h = witness
    # witness columns really are equal
    for x in nonminimal.group.elements():
        assert nonminimal(x, g) == nonminimal(x, h)


def test_section4_is_minimal():
    beta = sign_root_bicharacter(5, 3)
    minimal, witness = is_minimal(beta)
    assert minimal and witness is None


# -- quotient ---------------------------------------------------------------------------


def test_quotient_of_sign_pairing_is_minimal_on_z2xz2(gf3):
    g = FinAbGroup((4, 10))
    m1 = gf3.from_int(-1)
    beta = Bicharacter(g, gf3, [[gf3.one(), m1], [m1, gf3.one()]])
    rad = radical(beta)
    beta_bar, pres = quotient_bicharacter(beta, rad)
    assert pres.quotient_group.invariant_factors() == (2, 2)
    assert is_minimal(beta_bar)[0]
    # values descend from representatives
    for a in g.elements():
        for b in g.elements():
            assert beta_bar(pres.project(a), pres.project(b)) == beta(a, b)


def test_quotient_by_wrong_subgroup_rejected(gf5):
    beta = grassmann_bicharacter(gf5)  # radical is {0}
    whole = beta.group.subgroup(beta.group.basis())
    with pytest.raises(ValueError, match="not the radical"):
        quotient_bicharacter(beta, whole)


def test_quotient_by_smaller_subgroup_rejected(gf5):
    g = FinAbGroup((2,))
    beta = trivial_bicharacter(g, gf5)  # radical is all of G
    with pytest.raises(ValueError, match="proper subgroup"):
        quotient_bicharacter(beta, g.subgroup([]))


def test_quotient_of_trivial_by_whole_group(gf5):
    g = FinAbGroup((2, 2))
    beta = trivial_bicharacter(g, gf5)
    beta_bar, pres = quotient_bicharacter(beta, radical(beta))
    assert pres.quotient_group.order == 1
    assert radical(beta_bar).order == 1


def test_quotient_of_already_minimal_is_identity_like(gf5):
    beta = grassmann_bicharacter(gf5)
    beta_bar, pres = quotient_bicharacter(beta, radical(beta))
    assert pres.quotient_group.is_isomorphic_to(beta.group)
    one = beta.group.element((1,))
    assert beta_bar(pres.project(one), pres.project(one)) == beta(one, one)


# -- character sums -------------------------------------------------------------------


def test_character_sum_at_zero_is_group_order(gf5):
    g = FinAbGroup((3, 4))
    beta = trivial_bicharacter(g, gf5)
    assert character_sum(beta, g.zero()) == gf5.from_int(12)


def test_character_sum_grassmann(gf5):
    beta = grassmann_bicharacter(gf5)
    assert character_sum(beta, beta.group.element((1,))) == gf5.zero()


def test_character_sum_dichotomy_section4():
    beta = sign_root_bicharacter(5, 3)
    rad = radical(beta)
    order = beta.field.from_int(beta.group.order)
    for a in beta.group.elements():
        s = character_sum(beta, a)
        assert s == (order if a in rad else beta.field.zero())


def test_character_sum_dichotomy_with_nontrivial_radical(gf3):
    g = FinAbGroup((4, 10))
    m1 = gf3.from_int(-1)
    beta = Bicharacter(g, gf3, [[gf3.one(), m1], [m1, gf3.one()]])
    rad = radical(beta)
    order = gf3.from_int(40)
    for a in g.elements():
        s = character_sum(beta, a)
        assert s == (order if a in rad else gf3.zero())
