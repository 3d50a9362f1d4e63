"""Bicharacters beta: G x G -> K* of finite abelian groups.

A bicharacter is multiplicative in both slots with
beta(g, h) = beta(h, g)^{-1}; it encodes the commutation factors of a
regular decomposition.  We store only the r x r table of values on
pairs of cyclic-factor generators: bilinearity makes that table a
complete and compactly validatable description, and evaluation is an
exponent product.

The radical {s : beta(s, x) = 1 for all x} measures how far the
decomposition matrix is from being invertible: the rows of the matrix
are the characters beta(g, .), distinct characters into a field are
linearly independent, so the matrix rank is exactly the index of the
radical.  Minimality (no two equal columns) is therefore equivalent to
the radical being trivial, and both criteria are computed and
cross-asserted here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .ff import FieldElement, FieldSpec, is_prime, root_of_unity
from .groups import FinAbGroup, GroupElement, Subgroup, QuotientPresentation, quotient

# Exhaustive validation bounds: pair laws scale as |G|^2, the triple
# (bilinearity) law as |G|^3, so the triple bound is much smaller.
PAIR_EXHAUSTIVE_CAP = 4096
TRIPLE_EXHAUSTIVE_CAP = 256
_AGREEMENT_CAP = 1024

__all__ = [
    "Bicharacter",
    "BicharValidation",
    "trivial_bicharacter",
    "grassmann_bicharacter",
    "znxzn_bicharacter",
    "sign_root_bicharacter",
    "radical",
    "is_minimal",
    "quotient_bicharacter",
    "character_sum",
    "validate",
]


@dataclass
class BicharValidation:
    """Outcome of a bicharacter law check; ok or first violation."""

    ok: bool
    law: str | None = None
    witness: tuple | None = None
    detail: str | None = None


class Bicharacter:
    """A bicharacter stored by its generator-pair value table.

    gen_table[i][j] = beta(a_i, a_j) on the cyclic-factor basis.  The
    constructor enforces the constraints that make the bilinear
    extension well defined:

      * gen_table[i][j] * gen_table[j][i] = 1,
      * gen_table[i][i]^2 = 1,
      * gen_table[i][j]^{gcd(n_i, n_j)} = 1.
    """

    def __init__(self, group: FinAbGroup, field: FieldSpec, gen_table: Iterable[Iterable[FieldElement]]):
        table = tuple(tuple(row) for row in gen_table)
        r = group.rank
        if len(table) != r or any(len(row) != r for row in table):
            raise ValueError(f"generator table must be {r} x {r}")
        one = field.one()
        for i in range(r):
            for j in range(r):
                v = table[i][j]
                if v.spec != field:
                    raise ValueError("generator table entry from a different field")
                if v.is_zero():
                    raise ValueError(f"bicharacter values must be nonzero (entry {i},{j})")
                if table[i][j] * table[j][i] != one:
                    raise ValueError(f"antisymmetry fails on generators ({i},{j})")
                d = math.gcd(group.orders[i], group.orders[j])
                if v**d != one:
                    raise ValueError(
                        f"value at ({i},{j}) must be a {d}-th root of unity for the "
                        "bilinear extension to be well defined"
                    )
        self.group = group
        self.field = field
        self.gen_table = table

    def __call__(self, g: GroupElement, h: GroupElement) -> FieldElement:
        """beta(g, h) = prod gen_table[i][j]^{g_i h_j}; never zero."""
        if g.group != self.group or h.group != self.group:
            raise ValueError("arguments do not belong to the bicharacter's group")
        acc = self.field.one()
        for i, gi in enumerate(g.coords):
            if not gi:
                continue
            for j, hj in enumerate(h.coords):
                if hj:
                    acc = acc * self.gen_table[i][j] ** (gi * hj)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bicharacter):
            return NotImplemented
        return (
            self.group == other.group
            and self.field == other.field
            and self.gen_table == other.gen_table
        )

    def __hash__(self) -> int:
        return hash((self.group, self.field, self.gen_table))

    def __repr__(self) -> str:
        return f"Bicharacter(on {self.group.describe()} over GF({self.field.p}^{self.field.k}))"

    def is_alternating(self) -> bool:
        """beta(g, g) = 1 for all g; follows from a trivial diagonal."""
        one = self.field.one()
        return all(self.gen_table[i][i] == one for i in range(self.group.rank))

    def diagonal_witness(self) -> GroupElement | None:
        """Some g with beta(g, g) != 1, or None when alternating."""
        one = self.field.one()
        for i in range(self.group.rank):
            if self.gen_table[i][i] != one:
                return self.group.basis()[i]
        return None

    def to_dict(self) -> dict:
        return {
            "group": self.group.describe(),
            "field": self.field.describe(),
            "gen_table": [[v.serialize() for v in row] for row in self.gen_table],
        }


# -- constructors -------------------------------------------------------------


def trivial_bicharacter(group: FinAbGroup, field: FieldSpec) -> Bicharacter:
    one = field.one()
    r = group.rank
    return Bicharacter(group, field, [[one] * r for _ in range(r)])


def grassmann_bicharacter(field: FieldSpec) -> Bicharacter:
    """beta on Z_2 with beta(1, 1) = -1 (anticommuting odd part)."""
    return Bicharacter(FinAbGroup((2,)), field, [[field.from_int(-1)]])


def znxzn_bicharacter(n: int, e: FieldElement, f: FieldElement, xi: FieldElement) -> Bicharacter:
    """The general bicharacter of Z_n x Z_n with parameters

        e  = beta((0,1), (0,1)),   f = beta((1,0), (1,0)),
        xi = beta((0,1), (1,0)),

    i.e. beta((i,j), (k,l)) = f^{ik} e^{jl} xi^{jk - il}.

    Preconditions: e^2 = f^2 = 1, xi^n = 1, and e = f = 1 when n is odd
    (an odd-order bicharacter's diagonal values are forced to 1: they
    are simultaneously n-th roots of unity and squares roots of 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    field = e.spec
    if f.spec != field or xi.spec != field:
        raise ValueError("e, f, xi must live in one field")
    one = field.one()
    if e * e != one or f * f != one:
        raise ValueError("diagonal parameters must square to 1")
    if xi**n != one:
        raise ValueError("xi must be an n-th root of unity")
    if n % 2 == 1 and (e != one or f != one):
        raise ValueError(
            "odd n forces e = f = 1: diagonal values of a bicharacter on "
            "Z_n x Z_n are +-1 and n-th roots of unity simultaneously"
        )
    group = FinAbGroup((n, n))
    return Bicharacter(group, field, [[f, xi.inverse()], [xi, e]])


def sign_root_bicharacter(p: int, t: int) -> Bicharacter:
    """On Z_2t x Z_2t: beta((i,j),(k,l)) = (-1)^{ik + jl} zeta^{jk - il}
    with zeta of exact prime order t in the smallest suitable GF(p^k).

    Well defined because (-1)^{2t} = zeta^{2t} = 1.
    """
    if not is_prime(t) or t <= 2:
        raise ValueError(f"t must be an odd prime, got {t}")
    if t == p:
        raise ValueError("t must differ from the characteristic")
    spec, zeta = root_of_unity(p, t)
    minus_one = spec.from_int(-1)
    return znxzn_bicharacter(2 * t, minus_one, minus_one, zeta)


# -- validation ---------------------------------------------------------------


def validate(
    beta: Bicharacter,
    pair_cap: int = PAIR_EXHAUSTIVE_CAP,
    triple_cap: int = TRIPLE_EXHAUSTIVE_CAP,
) -> BicharValidation:
    """Check the bicharacter laws, exhaustively where affordable.

    Antisymmetry is scanned over all pairs for |G| <= pair_cap and
    bilinearity over all triples for |G| <= triple_cap.  For square
    groups Z_n x Z_n two structural facts are asserted as well: every
    value is an n-th root of unity, and odd n forces a trivial
    diagonal.
    """
    group, field = beta.group, beta.field
    one = field.one()
    els = list(group.elements())
    n = group.order
    fast = field._ensure_tables() and n <= max(pair_cap, triple_cap)
    if fast:
        outcome = _validate_laws_vectorized(beta, els, pair_cap, triple_cap)
        if outcome is not None:
            return outcome
    else:
        if n <= pair_cap:
            for g in els:
                for h in els:
                    if beta(g, h) * beta(h, g) != one:
                        return BicharValidation(False, "antisymmetry", (g.coords, h.coords))
        if n <= triple_cap:
            for g in els:
                for h in els:
                    bgh = beta(g, h)
                    for k in els:
                        if beta(g, h + k) != bgh * beta(g, k):
                            return BicharValidation(False, "bilinearity-right", (g.coords, h.coords, k.coords))
                        if beta(g + h, k) != beta(g, k) * beta(h, k):
                            return BicharValidation(False, "bilinearity-left", (g.coords, h.coords, k.coords))
    if group.rank == 2 and group.orders[0] == group.orders[1]:
        side = group.orders[0]
        for g in els:
            v = beta(g, g)
            if v * v != one:
                return BicharValidation(False, "diagonal-square", (g.coords,))
            for h in els:
                if beta(g, h) ** side != one:
                    return BicharValidation(False, "nth-root", (g.coords, h.coords))
            if side % 2 == 1 and v != one:
                return BicharValidation(False, "odd-diagonal", (g.coords,))
    return BicharValidation(True)


def _validate_laws_vectorized(beta, els, pair_cap: int, triple_cap: int):
    """Pair and triple laws via discrete logs; None when all hold."""
    import numpy as np

    group, spec = beta.group, beta.field
    n = group.order
    q1 = spec.q - 1
    log = np.asarray(spec._log, dtype=np.int32)
    codes = np.empty((n, n), dtype=np.int64)
    for i, g in enumerate(els):
        row = codes[i]
        for j, h in enumerate(els):
            row[j] = beta(g, h).code
    logb = log[codes].astype(np.int32)
    if n <= pair_cap:
        bad = np.argwhere((logb + logb.T) % q1 != 0)
        if bad.size:
            gi, hi = bad[0]
            return BicharValidation(False, "antisymmetry", (els[gi].coords, els[hi].coords))
    if n <= triple_cap:
        add = group.addition_index_table()
        chunk = max(1, min(n, (1 << 22) // max(1, n * n)))
        idx = np.arange(n, dtype=np.int32)
        for g0 in range(0, n, chunk):
            g_idx = np.arange(g0, min(g0 + chunk, n), dtype=np.int32)
            right = (logb[g_idx[:, None, None], add[None, :, :]]
                     - logb[g_idx][:, :, None] - logb[g_idx][:, None, :]) % q1
            bad = np.argwhere(right != 0)
            if bad.size:
                gi, hi, ki = bad[0]
                return BicharValidation(
                    False, "bilinearity-right", (els[g0 + gi].coords, els[hi].coords, els[ki].coords)
                )
            left = (logb[add[g_idx, :][:, :, None], idx[None, None, :]]
                    - logb[g_idx][:, None, :] - logb[None, :, :]) % q1
            bad = np.argwhere(left != 0)
            if bad.size:
                gi, hi, ki = bad[0]
                return BicharValidation(
                    False, "bilinearity-left", (els[g0 + gi].coords, els[hi].coords, els[ki].coords)
                )
    return None


# -- structure ----------------------------------------------------------------


def radical(beta: Bicharacter) -> Subgroup:
    """The subgroup {s : beta(s, x) = 1 for all x}.

    By bilinearity it suffices to test s against the generators.
    """
    one = beta.field.one()
    basis = beta.group.basis()
    members = [s for s in beta.group.elements() if all(beta(s, b) == one for b in basis)]
    sub = Subgroup.generate(beta.group, members)
    if sub.order != len(members):
        raise RuntimeError("radical scan did not produce a subgroup")
    return sub


def is_minimal(beta: Bicharacter) -> tuple[bool, tuple[GroupElement, GroupElement] | None]:
    """No two equal columns in the decomposition matrix.

    Returns (verdict, witness column pair or None) and cross-asserts
    the equivalent radical criterion: columns g and h agree exactly
    when beta(., g - h) = 1 everywhere, i.e. g - h lies in the radical.
    """
    els = list(beta.group.elements())
    seen: dict[tuple, GroupElement] = {}
    witness = None
    for h in els:
        sig = tuple(beta(g, h).code for g in els)
        if sig in seen and witness is None:
            witness = (seen[sig], h)
        seen.setdefault(sig, h)
    verdict = witness is None
    if verdict != (radical(beta).order == 1):
        raise RuntimeError("column and radical minimality criteria disagree: implementation bug")
    return verdict, witness


def quotient_bicharacter(
    beta: Bicharacter, rad: Subgroup
) -> tuple[Bicharacter, QuotientPresentation]:
    """Descend beta to G/rad via (a + rad, b + rad) -> beta(a, b).

    The subgroup must be exactly the radical: descent along anything
    smaller or larger is not well defined, and a witness is reported.
    """
    actual = radical(beta)
    if rad.element_set != actual.element_set:
        one = beta.field.one()
        for s in sorted(rad.element_set ^ actual.element_set, key=beta.group.index):
            for x in beta.group.elements():
                if beta(x, s) != one:
                    raise ValueError(
                        f"not the radical: beta({x.coords}, {s.coords}) != 1, "
                        "so coset values would be ambiguous"
                    )
        raise ValueError("subgroup is a proper subgroup of the radical; quotient would not be minimal")
    pres = quotient(beta.group, rad)
    q = pres.quotient_group
    reps = [pres.representative(b) for b in q.basis()]
    table = [[beta(ri, rj) for rj in reps] for ri in reps]
    beta_bar = Bicharacter(q, beta.field, table)
    if beta.group.order <= _AGREEMENT_CAP:
        for a in beta.group.elements():
            pa = pres.project(a)
            for b in beta.group.elements():
                if beta_bar(pa, pres.project(b)) != beta(a, b):
                    raise RuntimeError("quotient bicharacter disagrees with a representative pair")
    if radical(beta_bar).order != 1:
        raise RuntimeError("quotient bicharacter must have trivial radical")
    return beta_bar, pres


def character_sum(beta: Bicharacter, a: GroupElement) -> FieldElement:
    """sum_g beta(g, a): equals |G| * 1 when a is in the radical and 0
    otherwise (the character beta(., a) is then nontrivial)."""
    acc = beta.field.zero()
    for g in beta.group.elements():
        acc = acc + beta(g, a)
    return acc
