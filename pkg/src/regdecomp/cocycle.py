"""2-cocycles alpha: G x G -> K* on finite abelian groups.

A 2-cocycle satisfies

    alpha(s, t + v) * alpha(t, v) = alpha(s + t, v) * alpha(s, t)

for all s, t, v, which is exactly associativity of the twisted group
algebra it defines.  Unlike bicharacters, cocycles are not bilinear, so
no generator-table shorthand exists: we store the full |G| x |G| value
table, indexed by the canonical element enumeration.

Validation is exhaustive over all |G|^3 triples for |G| <= 256
(vectorized through discrete-log tables when the field carries them)
and seeded-random sampled above that.  The validator is the final
arbiter for constructions whose defining formulas are only conjecturally
cocycles on a given group: the corner sign cocycle built here is a
genuine cocycle when the first two factor orders are even, and the
validator rejects it, with a witness triple, on groups where carry
terms break the identity.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bichar import Bicharacter
from .ff import FieldElement, FieldSpec
from .groups import FinAbGroup, GroupElement

EXHAUSTIVE_TRIPLE_CAP = 256
SAMPLED_TRIPLES = 100_000
_SAMPLE_SEED = 7341
_AGREEMENT_CAP = 1024

__all__ = [
    "Cocycle2",
    "CocycleError",
    "CocycleValidation",
    "validate",
    "carry_cocycle",
    "sign_cocycle",
    "cocycle_from_alternating",
    "induced_bicharacter",
    "pcube_cocycle",
    "count_roots_of_unity",
]


@dataclass
class CocycleValidation:
    """Outcome of a cocycle check: ok, or the first violated law."""

    ok: bool
    law: str | None = None
    witness: tuple | None = None
    mode: str = "exhaustive"
    triples_checked: int = 0

    def describe(self) -> str:
        if self.ok:
            return f"valid ({self.mode}, {self.triples_checked} triples)"
        return f"violates {self.law} at {self.witness}"


class CocycleError(ValueError):
    """A construction whose contract requires a valid cocycle failed."""

    def __init__(self, message: str, report: CocycleValidation | None = None):
        super().__init__(message)
        self.report = report


class Cocycle2:
    """A full-table 2-cochain; validity is checked by validate()."""

    def __init__(self, group: FinAbGroup, field: FieldSpec, table: Sequence[Sequence[FieldElement]]):
        n = group.order
        rows = tuple(tuple(row) for row in table)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"cocycle table must be {n} x {n}")
        for row in rows:
            for v in row:
                if v.spec != field:
                    raise ValueError("table entry from a different field")
                if v.is_zero():
                    raise ValueError("cocycle values must be nonzero")
        self.group = group
        self.field = field
        self.table = rows

    def __call__(self, g: GroupElement, h: GroupElement) -> FieldElement:
        return self.table[self.group.index(g)][self.group.index(h)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cocycle2):
            return NotImplemented
        return self.group == other.group and self.field == other.field and self.table == other.table

    def __repr__(self) -> str:
        return f"Cocycle2(on {self.group.describe()} over GF({self.field.p}^{self.field.k}))"

    def __mul__(self, other: Cocycle2) -> Cocycle2:
        """Pointwise product; a product of cocycles is again a cocycle."""
        if self.group != other.group or self.field != other.field:
            raise ValueError("cocycles live on different carriers")
        n = self.group.order
        return Cocycle2(
            self.group,
            self.field,
            [[self.table[i][j] * other.table[i][j] for j in range(n)] for i in range(n)],
        )

    def is_normalized(self) -> bool:
        one = self.field.one()
        n = self.group.order
        return all(self.table[0][j] == one for j in range(n)) and all(
            self.table[i][0] == one for i in range(n)
        )

    def is_symmetric(self) -> bool:
        n = self.group.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))

    def to_dict(self) -> dict:
        return {
            "group": self.group.describe(),
            "field": self.field.describe(),
            "table": [[v.serialize() for v in row] for row in self.table],
        }


# -- validation ----------------------------------------------------------------


def validate(
    alpha: Cocycle2,
    exhaustive_cap: int = EXHAUSTIVE_TRIPLE_CAP,
    samples: int = SAMPLED_TRIPLES,
    seed: int = _SAMPLE_SEED,
) -> CocycleValidation:
    """Check normalization and the cocycle identity.

    Exhaustive over all triples for |G| <= exhaustive_cap, seeded-random
    sampled (at least `samples` triples) above.  Returns the first
    violating triple as coordinate tuples; never raises.
    """
    group = alpha.group
    one = alpha.field.one()
    n = group.order
    els = list(group.elements())
    for j in range(n):
        if alpha.table[0][j] != one:
            return CocycleValidation(False, "normalization", (els[0].coords, els[j].coords))
    for i in range(n):
        if alpha.table[i][0] != one:
            return CocycleValidation(False, "normalization", (els[i].coords, els[0].coords))
    if n <= exhaustive_cap:
        witness = _identity_witness_exhaustive(alpha, els)
        if witness is not None:
            return CocycleValidation(False, "cocycle-identity", witness, "exhaustive", n**3)
        return CocycleValidation(True, mode="exhaustive", triples_checked=n**3)
    rng = random.Random(seed)
    for count in range(samples):
        s, t, v = (els[rng.randrange(n)] for _ in range(3))
        if alpha(s, t + v) * alpha(t, v) != alpha(s + t, v) * alpha(s, t):
            return CocycleValidation(
                False, "cocycle-identity", (s.coords, t.coords, v.coords), "sampled", count + 1
            )
    return CocycleValidation(True, mode="sampled", triples_checked=samples)


def _identity_witness_exhaustive(alpha: Cocycle2, els: list[GroupElement]) -> tuple | None:
    group = alpha.group
    n = group.order
    spec = alpha.field
    if spec._ensure_tables():
        q1 = spec.q - 1
        add = group.addition_index_table()
        log = np.asarray(spec._log, dtype=np.int32)
        loga = log[np.array([[v.code for v in row] for row in alpha.table], dtype=np.int64)]
        loga = loga.astype(np.int32)
        t_idx = np.arange(n, dtype=np.int32)
        chunk = max(1, min(n, (1 << 22) // max(1, n * n)))
        for s0 in range(0, n, chunk):
            s_idx = np.arange(s0, min(s0 + chunk, n), dtype=np.int32)
            lhs = loga[s_idx[:, None, None], add[None, :, :]] + loga[None, :, :]
            rhs = (
                loga[add[s_idx, :][:, :, None], t_idx[None, None, :]]
                + loga[s_idx[:, None, None], t_idx[None, :, None]]
            )
            bad = np.argwhere((lhs - rhs) % q1 != 0)
            if bad.size:
                si, ti, vi = bad[0]
                return (els[s0 + si].coords, els[ti].coords, els[vi].coords)
        return None
    for s in els:
        for t in els:
            st = s + t
            a_st = alpha(s, t)
            for v in els:
                if alpha(s, t + v) * alpha(t, v) != alpha(st, v) * a_st:
                    return (s.coords, t.coords, v.coords)
    return None


def _validated(alpha: Cocycle2, what: str) -> Cocycle2:
    report = validate(alpha)
    if not report.ok:
        raise CocycleError(f"{what}: {report.describe()}", report)
    return alpha


# -- families ------------------------------------------------------------------


def _carry_table(group: FinAbGroup, lambdas: Sequence[FieldElement], field: FieldSpec) -> Cocycle2:
    rows = []
    for g in group.elements():
        row = []
        for h in group.elements():
            v = field.one()
            for gs, hs, ns, lam in zip(g.coords, h.coords, group.orders, lambdas):
                if gs + hs >= ns:
                    v = v * lam
            row.append(v)
        rows.append(row)
    return Cocycle2(group, field, rows)


def carry_cocycle(group: FinAbGroup, lambdas: Sequence[FieldElement]) -> Cocycle2:
    """The symmetric carry cocycle t_{lambda_1,...,lambda_r}: the value on
    (g, h) picks up the factor lambda_s exactly when adding the s-th
    coordinates overflows the factor order.

    Each lambda_s must be a nonzero field value different from 1; a
    repeated lambda is allowed but flagged, since constructions that
    need the lambdas to separate cosets require them distinct.
    """
    if len(lambdas) != group.rank:
        raise ValueError(f"need one lambda per cyclic factor ({group.rank})")
    field = lambdas[0].spec
    one = field.one()
    for s, lam in enumerate(lambdas):
        if lam.spec != field:
            raise ValueError("lambdas must live in one field")
        if lam.is_zero() or lam == one:
            raise ValueError(f"lambda_{s + 1} must avoid 0 and 1")
    if len({lam.code for lam in lambdas}) != len(lambdas):
        warnings.warn("repeated lambda values: carry factors will not separate factors", stacklevel=2)
    return _validated(_carry_table(group, lambdas, field), "carry cocycle")


def _sign_table(group: FinAbGroup, field: FieldSpec) -> Cocycle2:
    minus_one = field.from_int(-1)
    one = field.one()
    rows = []
    for g in group.elements():
        g2 = g.coords[1]
        row = []
        for h in group.elements():
            row.append(minus_one if (g2 * h.coords[0]) % 2 else one)
        rows.append(row)
    return Cocycle2(group, field, rows)


def sign_cocycle(group: FinAbGroup, field: FieldSpec) -> Cocycle2:
    """The corner sign cochain (g, h) -> (-1)^{g_2 h_1} on canonical
    residues, for groups with at least two cyclic factors.

    The cocycle identity holds whenever the first two factor orders are
    even (carries then contribute even sign exponents).  On other groups
    the exhaustive validator decides; when a carry breaks the identity
    the construction is rejected with the witness triple.
    """
    if group.rank < 2:
        raise ValueError("need at least two cyclic factors")
    alpha = _sign_table(group, field)
    if group.orders[0] % 2 == 0 and group.orders[1] % 2 == 0:
        return alpha
    return _validated(alpha, "sign cocycle on odd factor orders")


def cocycle_from_alternating(beta: Bicharacter) -> Cocycle2:
    """A normalized cocycle inducing a given alternating bicharacter.

    Construction: alpha(g, h) = prod_{i > j} gen_table[i][j]^{g_i h_j}
    in canonical coordinates.  The exponent form is bilinear on
    residues (each table value is a gcd(n_i, n_j)-th root of unity), any
    bilinear map satisfies the cocycle identity, and the ratio
    alpha(g, h) / alpha(h, g) telescopes to beta(g, h) because the
    diagonal is trivial.
    """
    witness = beta.diagonal_witness()
    if witness is None and beta.group.order <= _AGREEMENT_CAP:
        one = beta.field.one()
        for g in beta.group.elements():
            if beta(g, g) != one:
                witness = g
                break
    if witness is not None:
        raise CocycleError(
            f"bicharacter is not alternating: beta({witness.coords}, {witness.coords}) != 1"
        )
    group, field = beta.group, beta.field
    tab = beta.gen_table
    rows = []
    for g in group.elements():
        row = []
        for h in group.elements():
            v = field.one()
            for i in range(1, group.rank):
                gi = g.coords[i]
                if not gi:
                    continue
                for j in range(i):
                    hj = h.coords[j]
                    if hj:
                        v = v * tab[i][j] ** (gi * hj)
            row.append(v)
        rows.append(row)
    alpha = _validated(Cocycle2(group, field, rows), "triangular cocycle")
    if induced_bicharacter(alpha) != beta:
        raise RuntimeError("constructed cocycle does not induce the requested bicharacter")
    return alpha


def induced_bicharacter(alpha: Cocycle2) -> Bicharacter:
    """beta(g, h) = alpha(g, h) * alpha(h, g)^{-1}, as a Bicharacter.

    The generator table is read off at basis pairs; for moderate group
    orders the full tables are compared, so a cochain that fails the
    cocycle identity badly enough to break bilinearity is rejected here
    with a witness pair.  Induced bicharacters are always alternating.
    """
    group, field = alpha.group, alpha.field
    basis = group.basis()
    table = [[alpha(a, b) * alpha(b, a).inverse() for b in basis] for a in basis]
    beta = Bicharacter(group, field, table)
    if group.order <= _AGREEMENT_CAP:
        for g in group.elements():
            for h in group.elements():
                if beta(g, h) != alpha(g, h) * alpha(h, g).inverse():
                    raise CocycleError(
                        f"commutation ratio is not bilinear at ({g.coords}, {h.coords}); "
                        "the cochain is not a cocycle"
                    )
    if not beta.is_alternating():
        raise RuntimeError("induced bicharacter must be alternating")
    return beta


def pcube_cocycle(p: int, field: FieldSpec) -> Cocycle2:
    """The corner-sign-times-carry cochain on Z_p x Z_p x Z_p.

    For p = 3 the carry factor is t_{-1} on the third coordinate; for
    p > 3 it is the carry cocycle with lambdas (2, 3, 4).  The cochain
    is required to validate and to have a commutation radical strictly
    between {0} and the whole group; construction fails with a
    certificate when either requirement cannot be met.
    """
    if field.p != p:
        raise ValueError(f"field characteristic {field.p} does not match p={p}")
    if p <= 2:
        raise ValueError("characteristic must be odd")
    group = FinAbGroup((p, p, p))
    if p == 3:
        lambdas = [field.one(), field.one(), field.from_int(-1)]
    else:
        lambdas = [field.from_int(2), field.from_int(3), field.from_int(4)]
        if len({lam.code for lam in lambdas}) != 3 or any(lam.is_one() for lam in lambdas):
            raise ValueError("2, 3, 4 must be distinct and different from 1 in the field")
    alpha = _sign_table(group, field) * _carry_table(group, lambdas, field)
    alpha = _validated(alpha, f"corner-sign carry cochain on Z_{p}^3")
    beta = induced_bicharacter(alpha)
    from .bichar import radical  # local import to avoid cycle at module load

    rad = radical(beta)
    if rad.order == 1 or rad.order == group.order:
        raise CocycleError(
            f"commutation radical has order {rad.order}, not strictly between 1 and {group.order}"
        )
    return alpha


def count_roots_of_unity(field: FieldSpec, t: int) -> int:
    """Number of solutions of v^t = 1 in the field: gcd(t, q - 1)."""
    import math

    return math.gcd(t, field.q - 1)
