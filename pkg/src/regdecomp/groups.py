"""Finite abelian groups as explicit products of cyclic groups.

Groups are kept in coordinate form (a tuple of cyclic factor orders,
additive notation); elements are tuples of residues.  Subgroups are
generated by closure; quotients are recovered as coordinate groups via
the Smith normal form of the relation matrix, so a quotient can be fed
back into every construction that needs a cyclic basis.

Everything here is an immutable value with pure operations.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

# Exhaustive algorithms refuse to run on larger groups.
MAX_GROUP_ORDER = 65536

# Exhaustive homomorphism / kernel checks for quotients are run below
# these bounds and skipped (trusting the construction) above them.
_HOM_CHECK_CAP = 1024
_KERNEL_CHECK_CAP = 4096

__all__ = [
    "FinAbGroup",
    "GroupElement",
    "Subgroup",
    "QuotientPresentation",
    "quotient",
    "smith_normal_form",
]


class FinAbGroup:
    """Product of cyclic groups Z_n1 x ... x Z_nr, written additively."""

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(n) for n in orders)
        if not orders:
            raise ValueError("need at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {orders}")
        self.orders = orders
        self.order = math.prod(orders)
        if self.order > MAX_GROUP_ORDER:
            raise ValueError(f"group order {self.order} exceeds the guard {MAX_GROUP_ORDER}")
        self.rank = len(orders)
        # lexicographic strides: index(g) = sum coords[i] * strides[i]
        strides = []
        acc = 1
        for n in reversed(orders):
            strides.append(acc)
            acc *= n
        self._strides = tuple(reversed(strides))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinAbGroup) and self.orders == other.orders

    def __hash__(self) -> int:
        return hash(self.orders)

    def __repr__(self) -> str:
        return f"FinAbGroup{self.orders}"

    def describe(self) -> str:
        return " x ".join(f"Z_{n}" for n in self.orders)

    def element(self, coords: Iterable[int]) -> GroupElement:
        coords = tuple(int(c) % n for c, n in zip(coords, self.orders, strict=True))
        return GroupElement(self, coords)

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def basis(self) -> list[GroupElement]:
        """The canonical generators a_1, ..., a_r (unit coordinate vectors)."""
        out = []
        for i in range(self.rank):
            coords = [0] * self.rank
            if self.orders[i] > 1:
                coords[i] = 1
            out.append(GroupElement(self, tuple(coords)))
        return out

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic coordinate order, zero first."""
        for coords in itertools.product(*(range(n) for n in self.orders)):
            yield GroupElement(self, coords)

    def index(self, g: GroupElement) -> int:
        """Lexicographic rank of g in elements()."""
        if g.group != self:
            raise ValueError("element does not belong to this group")
        return sum(c * s for c, s in zip(g.coords, self._strides))

    def subgroup(self, generators: Iterable[GroupElement]) -> Subgroup:
        return Subgroup.generate(self, list(generators))

    def addition_index_table(self):
        """|G| x |G| array A with A[i, j] = index(el_i + el_j), int32.

        Built vectorized; used by the exhaustive law validators.
        """
        import numpy as np

        coords = np.array([g.coords for g in self.elements()], dtype=np.int64)
        acc = np.zeros((self.order, self.order), dtype=np.int64)
        for s, (order, stride) in enumerate(zip(self.orders, self._strides)):
            acc += ((coords[:, None, s] + coords[None, :, s]) % order) * stride
        return acc.astype(np.int32)

    def invariant_factors(self) -> tuple[int, ...]:
        """Canonical d_1 | d_2 | ... presentation, for isomorphism tests."""
        diag = [[self.orders[i] if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]
        d, _, _, _ = smith_normal_form(diag)
        factors = tuple(d[i][i] for i in range(self.rank) if d[i][i] > 1)
        return factors or (1,)

    def is_isomorphic_to(self, other: FinAbGroup) -> bool:
        return self.invariant_factors() == other.invariant_factors()


class GroupElement:
    """An element of a FinAbGroup, coordinates always reduced."""

    __slots__ = ("group", "coords")

    def __init__(self, group: FinAbGroup, coords: tuple[int, ...]):
        self.group = group
        self.coords = coords

    def __repr__(self) -> str:
        return f"GroupElement{self.coords}"

    def serialize(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def _check_same(self, other: GroupElement) -> None:
        if self.group != other.group:
            raise ValueError("elements come from different groups")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.coords == other.coords and self.group == other.group

    def __hash__(self) -> int:
        return hash((self.coords, self.group.orders))

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check_same(other)
        return GroupElement(
            self.group,
            tuple((a + b) % n for a, b, n in zip(self.coords, other.coords, self.group.orders)),
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(
            self.group, tuple((-a) % n for a, n in zip(self.coords, self.group.orders))
        )

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def __rmul__(self, n: int) -> GroupElement:
        return GroupElement(
            self.group,
            tuple((n * a) % m for a, m in zip(self.coords, self.group.orders)),
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def element_order(self) -> int:
        return math.lcm(*(n // math.gcd(n, c) if c else 1 for c, n in zip(self.coords, self.group.orders)))


class Subgroup:
    """A subgroup given by generators plus its enumerated closure."""

    def __init__(self, group: FinAbGroup, generators: tuple[GroupElement, ...], elements: frozenset[GroupElement]):
        self.group = group
        self.generators = generators
        self.element_set = elements
        self.sorted_elements = tuple(sorted(elements, key=group.index))
        self.order = len(elements)

    @classmethod
    def generate(cls, group: FinAbGroup, generators: list[GroupElement]) -> Subgroup:
        """Smallest subgroup containing the generators (closure iteration)."""
        for g in generators:
            if g.group != group:
                raise ValueError("generator does not belong to the group")
        closure = {group.zero()}
        frontier = [group.zero()]
        while frontier:
            cur = frontier.pop()
            for g in generators:
                for nxt in (cur + g, cur - g):
                    if nxt not in closure:
                        closure.add(nxt)
                        frontier.append(nxt)
        return cls(group, tuple(generators), frozenset(closure))

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.element_set

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.sorted_elements)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.group.describe()})"

    def is_closed(self) -> bool:
        """Recheck closure under subtraction (cheap diagnostic)."""
        if self.group.zero() not in self.element_set:
            return False
        if self.order**2 > 1_000_000:
            return True  # trust generate(); recheck would be quadratic
        return all(a - b in self.element_set for a in self.element_set for b in self.element_set)


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Smith normal form D = U A V with unimodular U, V.

    Returns (D, U, U_inverse, V) as lists of lists of ints, with the
    diagonal of D satisfying the divisibility chain d1 | d2 | ...
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    uinv = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in range(rows):  # inverse gets the column op
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def add_row(src, dst, factor):
        # row_dst += factor * row_src ; U likewise; Uinv column_src -= factor * column_dst
        for c in range(cols):
            a[dst][c] += factor * a[src][c]
        for c in range(rows):
            u[dst][c] += factor * u[src][c]
        for r in range(rows):
            uinv[r][src] -= factor * uinv[r][dst]

    def negate_row(i):
        for c in range(cols):
            a[i][c] = -a[i][c]
        for c in range(rows):
            u[i][c] = -u[i][c]
        for r in range(rows):
            uinv[r][i] = -uinv[r][i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def add_col(src, dst, factor):
        for r in range(rows):
            a[r][dst] += factor * a[r][src]
        for r in range(cols):
            v[r][dst] += factor * v[r][src]

    def negate_col(i):
        for r in range(rows):
            a[r][i] = -a[r][i]
        for r in range(cols):
            v[r][i] = -v[r][i]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # find pivot: nonzero entry of smallest absolute value in the block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                add_row(t, i, -(a[i][t] // a[t][t]))
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                add_col(t, j, -(a[t][j] // a[t][t]))
                if a[t][j]:
                    dirty = True
        if dirty:
            continue  # remainders left; pick a smaller pivot next pass
        # enforce divisibility: a[t][t] must divide the rest of the block
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        t += 1
    for i in range(limit):
        if a[i][i] < 0:
            negate_row(i)
    return a, u, uinv, v


class QuotientPresentation:
    """A quotient G/H presented again as a coordinate group.

    Carries the quotient group, the projection homomorphism, and a
    section picking a parent representative for every quotient element.
    """

    def __init__(self, group: FinAbGroup, subgroup: Subgroup):
        if subgroup.group != group:
            raise ValueError("subgroup belongs to a different group")
        if not subgroup.is_closed():
            raise ValueError("not a subgroup: closure check failed")
        self.group = group
        self.subgroup = subgroup

        r = group.rank
        # relation lattice: columns n_i e_i plus a column per subgroup generator
        gens = [g for g in subgroup.generators if not g.is_zero()]
        cols = r + len(gens)
        rel = [[0] * cols for _ in range(r)]
        for i in range(r):
            rel[i][i] = group.orders[i]
        for j, g in enumerate(gens):
            for i in range(r):
                rel[i][r + j] = g.coords[i]
        d, u, uinv, _ = smith_normal_form(rel)
        diag = [d[i][i] for i in range(r)]
        if any(x == 0 for x in diag):
            raise RuntimeError("relation lattice not of full rank")
        self._u = u
        self._uinv = uinv
        self._diag = diag
        self._kept = [i for i in range(r) if diag[i] > 1]
        self.quotient_group = FinAbGroup(tuple(diag[i] for i in self._kept) or (1,))
        if group.order != subgroup.order * self.quotient_group.order:
            raise RuntimeError("order bookkeeping failed: |G| != |H| * |G/H|")
        self._representatives = self._build_representatives()
        self._self_check()

    def project(self, g: GroupElement) -> GroupElement:
        if g.group != self.group:
            raise ValueError("element does not belong to the parent group")
        y = [sum(self._u[i][j] * g.coords[j] for j in range(self.group.rank)) for i in range(self.group.rank)]
        if not self._kept:
            return self.quotient_group.zero()
        return self.quotient_group.element(tuple(y[i] % self._diag[i] for i in self._kept))

    def representative(self, q: GroupElement) -> GroupElement:
        if q.group != self.quotient_group:
            raise ValueError("element does not belong to the quotient group")
        return self._representatives[q]

    def cosets(self) -> dict[GroupElement, list[GroupElement]]:
        """Quotient element -> members of its coset, in canonical order."""
        out: dict[GroupElement, list[GroupElement]] = {}
        for g in self.group.elements():
            out.setdefault(self.project(g), []).append(g)
        return out

    def _build_representatives(self) -> dict[GroupElement, GroupElement]:
        reps = {}
        r = self.group.rank
        for q in self.quotient_group.elements():
            lift = [0] * r
            for pos, i in enumerate(self._kept):
                lift[i] = q.coords[pos]
            x = [sum(self._uinv[i][j] * lift[j] for j in range(r)) for i in range(r)]
            reps[q] = self.group.element(tuple(x))
        return reps

    def _self_check(self) -> None:
        zero_q = self.quotient_group.zero()
        for q, rep in self._representatives.items():
            if self.project(rep) != q:
                raise RuntimeError("section is not a right inverse of the projection")
        if self.group.order <= _KERNEL_CHECK_CAP:
            for g in self.group.elements():
                if (self.project(g) == zero_q) != (g in self.subgroup):
                    raise RuntimeError(f"projection kernel mismatch at {g.coords}")
        if self.group.order <= _HOM_CHECK_CAP:
            els = list(self.group.elements())
            for g in els:
                pg = self.project(g)
                for h in els:
                    if self.project(g + h) != pg + self.project(h):
                        raise RuntimeError("projection is not a homomorphism")


def quotient(group: FinAbGroup, subgroup: Subgroup) -> QuotientPresentation:
    """Coset decomposition of group/subgroup with a coordinate basis."""
    return QuotientPresentation(group, subgroup)
