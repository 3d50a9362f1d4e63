"""Exact linear algebra over GF(p^k): decomposition matrices and their
determinants.

Determinants are computed by plain Gaussian elimination with a
nonzero-pivot search (field inverses are cheap); for dimension at most
five the result is cross-checked against the signed
permutation-expansion sum, which serves as an independent oracle.

The module also builds the factorized commutation matrix

    D(xi, xi^{-1}) = P_sigma (V(xi) (x) V(xi^{-1})),

where V(x) is the Vandermonde matrix on the powers of xi and P_sigma
permutes rows by (i, j) -> (j, i), and verifies entrywise that it
equals the directly built matrix (xi^{jk - il}).  Determinant identities
relating the two constructions are evaluated and reported rather than
assumed: row/column conventions only pin det D up to the sign of
P_sigma, and the Kronecker-factorized determinant
(det V(xi) det V(xi^{-1}))^n is the unconditional oracle.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from typing import Sequence

from .bichar import Bicharacter
from .ff import FieldElement, FieldSpec
from .groups import GroupElement

_PERMANENT_ORACLE_CAP = 5
_DIM_CAP = 4096

__all__ = [
    "SquareMatrix",
    "DecompMatrix",
    "identity_matrix",
    "vandermonde",
    "kron",
    "pair_swap_permutation",
    "direct_twist_matrix",
    "d_matrix",
    "square_identity",
    "square_radical_blocks",
    "pauli_generators",
    "znxzn_det_comparison",
    "DetComparison",
    "d_det_report",
    "DMatrixDetReport",
]


class SquareMatrix:
    """An m x m matrix of field elements, immutable."""

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence[FieldElement]]):
        rows = tuple(tuple(r) for r in rows)
        m = len(rows)
        if m < 1 or m > _DIM_CAP:
            raise ValueError(f"dimension must be in [1, {_DIM_CAP}], got {m}")
        for r in rows:
            if len(r) != m:
                raise ValueError("matrix must be square")
            for v in r:
                if v.spec != field:
                    raise ValueError("entry from a different field")
        self.field = field
        self.n = m
        self.rows = rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SquareMatrix({self.n} x {self.n} over GF({self.field.p}^{self.field.k}))"

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        return self.rows[ij[0]][ij[1]]

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        if self.field != other.field or self.n != other.n:
            raise ValueError("incompatible matrices")
        zero = self.field.zero()
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a.code and b.code:
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return SquareMatrix(self.field, out)

    def scale(self, scalar: FieldElement) -> SquareMatrix:
        return SquareMatrix(self.field, [[scalar * v for v in row] for row in self.rows])

    def permute_rows(self, permutation: Sequence[int]) -> SquareMatrix:
        """Row i of the result is row permutation[i] of self."""
        return SquareMatrix(self.field, [self.rows[permutation[i]] for i in range(self.n)])

    def det(self) -> FieldElement:
        """Exact determinant; cross-checked against the permutation
        expansion for dimensions up to five."""
        d = self._det_elimination()
        if self.n <= _PERMANENT_ORACLE_CAP:
            if d != self.det_permutation_expansion():
                raise RuntimeError("elimination and permutation-expansion determinants disagree")
        return d

    def _det_elimination(self) -> FieldElement:
        field = self.field
        m = [list(r) for r in self.rows]
        n = self.n
        det = field.one()
        for i in range(n):
            pivot = None
            for r in range(i, n):
                if m[r][i].code:
                    pivot = r
                    break
            if pivot is None:
                return field.zero()
            if pivot != i:
                m[i], m[pivot] = m[pivot], m[i]
                det = -det
            det = det * m[i][i]
            inv = m[i][i].inverse()
            for r in range(i + 1, n):
                if m[r][i].code:
                    c = m[r][i] * inv
                    row_r, row_i = m[r], m[i]
                    for col in range(i, n):
                        if row_i[col].code:
                            row_r[col] = row_r[col] - c * row_i[col]
        return det

    def det_permutation_expansion(self) -> FieldElement:
        """Signed sum over permutations; independent of elimination."""
        if self.n > 8:
            raise ValueError("permutation expansion is factorial; refusing n > 8")
        field = self.field
        acc = field.zero()
        for perm in itertools.permutations(range(self.n)):
            term = field.one()
            for i, j in enumerate(perm):
                term = term * self.rows[i][j]
            if _parity(perm):
                term = -term
            acc = acc + term
        return acc

    def rank(self) -> int:
        m = [list(r) for r in self.rows]
        n = self.n
        rank = 0
        for col in range(n):
            pivot = None
            for r in range(rank, n):
                if m[r][col].code:
                    pivot = r
                    break
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            inv = m[rank][col].inverse()
            for r in range(rank + 1, n):
                if m[r][col].code:
                    c = m[r][col] * inv
                    for cc in range(col, n):
                        if m[rank][cc].code:
                            m[r][cc] = m[r][cc] - c * m[rank][cc]
            rank += 1
            if rank == n:
                break
        return rank

    def to_csv(self, row_labels: Sequence[str] | None = None) -> str:
        """Row-major CSV of serialized entries, with a header naming the
        row/column ordering."""
        labels = list(row_labels) if row_labels is not None else [str(i) for i in range(self.n)]
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["entry(row,col)"] + labels)
        for label, row in zip(labels, self.rows):
            writer.writerow([label] + [v.serialize() for v in row])
        return buf.getvalue()


def _parity(perm: tuple[int, ...]) -> bool:
    """True for odd permutations."""
    seen = [False] * len(perm)
    odd = False
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            odd = not odd
    return odd


def identity_matrix(field: FieldSpec, n: int) -> SquareMatrix:
    one, zero = field.one(), field.zero()
    return SquareMatrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)])


class DecompMatrix(SquareMatrix):
    """The |G| x |G| matrix (beta(g, h)) in the canonical lexicographic
    element ordering, rows and columns indexed alike."""

    def __init__(self, field: FieldSpec, rows, ordering: Sequence[GroupElement]):
        super().__init__(field, rows)
        self.ordering = tuple(ordering)
        if len(self.ordering) != self.n:
            raise ValueError("ordering length must match the dimension")

    @classmethod
    def from_bicharacter(cls, beta: Bicharacter) -> DecompMatrix:
        ordering = list(beta.group.elements())
        rows = [[beta(g, h) for h in ordering] for g in ordering]
        return cls(beta.field, rows, ordering)

    def equal_column_pair(self) -> tuple[GroupElement, GroupElement] | None:
        seen: dict[tuple, int] = {}
        for j in range(self.n):
            sig = tuple(self.rows[i][j].code for i in range(self.n))
            if sig in seen:
                return self.ordering[seen[sig]], self.ordering[j]
            seen[sig] = j
        return None

    def to_csv(self, row_labels=None) -> str:
        if row_labels is None:
            row_labels = [g.serialize() for g in self.ordering]
        return super().to_csv(row_labels)


# -- Vandermonde / Kronecker factorization -------------------------------------


def vandermonde(xi: FieldElement, n: int) -> SquareMatrix:
    """V(xi)[i][j] = xi^{i j}: the Vandermonde matrix on nodes
    1, xi, ..., xi^{n-1} (nodes repeat when xi has order < n)."""
    return SquareMatrix(xi.spec, [[xi ** (i * j) for j in range(n)] for i in range(n)])


def kron(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    if a.field != b.field:
        raise ValueError("Kronecker factors over different fields")
    n, m = a.n, b.n
    rows = []
    for i in range(n):
        for k in range(m):
            rows.append([a.rows[i][j] * b.rows[k][l] for j in range(n) for l in range(m)])
    return SquareMatrix(a.field, rows)


def pair_swap_permutation(n: int) -> list[int]:
    """The permutation of {0..n^2-1} induced by (i, j) -> (j, i) on
    row indices written as i*n + j."""
    return [j * n + i for i in range(n) for j in range(n)]


def direct_twist_matrix(xi: FieldElement, n: int) -> SquareMatrix:
    """(xi^{jk - il}) indexed by pairs (i, j), (k, l) in lexicographic
    order; the commutation matrix of the xi-graded matrix algebra."""
    pairs = [(i, j) for i in range(n) for j in range(n)]
    return SquareMatrix(
        xi.spec, [[xi ** (j * k - i * l) for (k, l) in pairs] for (i, j) in pairs]
    )


def d_matrix(xi: FieldElement, n: int) -> SquareMatrix:
    """D(xi, xi^{-1}) = P_sigma (V(xi) (x) V(xi^{-1})).

    Asserts entrywise equality with the directly built (xi^{jk - il}).
    """
    if (xi**n) != xi.spec.one():
        raise ValueError("xi must be an n-th root of unity")
    product = kron(vandermonde(xi, n), vandermonde(xi.inverse(), n))
    d = product.permute_rows(pair_swap_permutation(n))
    if d != direct_twist_matrix(xi, n):
        raise RuntimeError("factorized and direct commutation matrices differ")
    return d


# -- identities -----------------------------------------------------------------


def square_identity(m: DecompMatrix) -> bool:
    """Whether M^2 = |G| I exactly in the field.

    For the matrix of a bicharacter this holds if and only if the
    radical is trivial or |G| vanishes in the field: the (g, h) entry
    of M^2 is the character sum over beta(., h - g), which is |G| on
    radical cosets and 0 elsewhere.
    """
    order = m.field.from_int(m.n)
    return (m @ m) == identity_matrix(m.field, m.n).scale(order)


def square_radical_blocks(m: DecompMatrix, radical_members: set[GroupElement]) -> bool:
    """The unconditional square law: (M^2)[g][h] = |G| when h - g lies
    in the radical and 0 otherwise."""
    sq = m @ m
    order = m.field.from_int(m.n)
    zero = m.field.zero()
    for i, g in enumerate(m.ordering):
        for j, h in enumerate(m.ordering):
            expected = order if (h - g) in radical_members else zero
            if sq.rows[i][j] != expected:
                return False
    return True


# -- generalized Pauli generators -------------------------------------------------


def pauli_generators(n: int, xi: FieldElement) -> tuple[SquareMatrix, SquareMatrix]:
    """X = diag(xi^{n-1}, ..., xi, 1) and the cyclic shift Y with
    XY = xi YX; the n^2 products X^i Y^j are checked to be linearly
    independent, so they span the full matrix algebra."""
    field = xi.spec
    if xi.is_zero() or xi.multiplicative_order() != n:
        raise ValueError(f"xi must have exact multiplicative order {n}")
    zero, one = field.zero(), field.one()
    x = SquareMatrix(field, [[xi ** (n - 1 - i) if i == j else zero for j in range(n)] for i in range(n)])
    y_rows = [[zero] * n for _ in range(n)]
    for i in range(n - 1):
        y_rows[i][i + 1] = one
    y_rows[n - 1][0] = one
    y = SquareMatrix(field, y_rows)
    if x @ y != (y @ x).scale(xi):
        raise RuntimeError("generators do not satisfy XY = xi YX")
    # linear independence of the n^2 products: full rank when flattened
    powers_x = [identity_matrix(field, n)]
    powers_y = [identity_matrix(field, n)]
    for _ in range(n - 1):
        powers_x.append(powers_x[-1] @ x)
        powers_y.append(powers_y[-1] @ y)
    flat = []
    for i in range(n):
        for j in range(n):
            prod = powers_x[i] @ powers_y[j]
            flat.append([prod.rows[a][b] for a in range(n) for b in range(n)])
    if SquareMatrix(field, flat).rank() != n * n:
        raise RuntimeError("products X^i Y^j are linearly dependent")
    return x, y


# -- determinant comparisons ------------------------------------------------------


@dataclass
class DetComparison:
    """det of the (e, f, xi)-bicharacter matrix against det D(xi, xi^{-1})."""

    n: int
    e: FieldElement
    f: FieldElement
    xi: FieldElement
    det_m: FieldElement
    det_d: FieldElement

    @property
    def equal(self) -> bool:
        return self.det_m == self.det_d

    @property
    def equal_up_to_sign(self) -> bool:
        return self.det_m == self.det_d or self.det_m == -self.det_d


def znxzn_det_comparison(n: int, e: FieldElement, f: FieldElement, xi: FieldElement) -> DetComparison:
    """Build the Z_n x Z_n bicharacter with parameters (e, f, xi) and
    compare its decomposition matrix determinant with det D(xi, xi^{-1})."""
    from .bichar import znxzn_bicharacter

    beta = znxzn_bicharacter(n, e, f, xi)
    det_m = DecompMatrix.from_bicharacter(beta).det()
    det_d = d_matrix(xi, n).det()
    return DetComparison(n, e, f, xi, det_m, det_d)


@dataclass
class DMatrixDetReport:
    """det D(xi, xi^{-1}) against its two candidate closed forms.

    kron_oracle = (det V(xi) det V(xi^{-1}))^n is unconditionally valid
    up to the sign of the row permutation.  printed_form is the closed
    form +- xi^{(n-1)^2 (n - n^2) / 2} prod_{i<n} (1 - xi^i), which is
    recorded but not relied upon (it disagrees with the Kronecker
    oracle already at primitive xi for n > 2).
    """

    n: int
    xi: FieldElement
    det_d: FieldElement
    kron_oracle: FieldElement
    printed_form: FieldElement
    xi_is_primitive: bool

    @property
    def matches_kron_up_to_sign(self) -> bool:
        return self.det_d == self.kron_oracle or self.det_d == -self.kron_oracle

    @property
    def matches_printed_up_to_sign(self) -> bool:
        return self.det_d == self.printed_form or self.det_d == -self.printed_form

    @property
    def forced_zero(self) -> bool:
        """Non-primitive xi repeats Vandermonde nodes, killing det D."""
        return not self.xi_is_primitive and self.n > 1


def d_det_report(n: int, xi: FieldElement) -> DMatrixDetReport:
    field = xi.spec
    if xi**n != field.one():
        raise ValueError("xi must be an n-th root of unity")
    d = d_matrix(xi, n)
    det_d = d.det()
    det_v = vandermonde(xi, n).det()
    det_vinv = vandermonde(xi.inverse(), n).det()
    kron_oracle = (det_v * det_vinv) ** n
    prod = field.one()
    for i in range(1, n):
        prod = prod * (field.one() - xi**i)
    exponent = ((n - 1) ** 2 * (n - n * n)) // 2
    printed = (xi**exponent) * prod
    primitive = (not xi.is_zero()) and xi.multiplicative_order() == n if n > 1 else xi.is_one()
    report = DMatrixDetReport(n, xi, det_d, kron_oracle, printed, primitive)
    if report.forced_zero and not det_d.is_zero():
        raise RuntimeError("repeated Vandermonde nodes must force det D = 0")
    if not report.matches_kron_up_to_sign:
        raise RuntimeError("det D must match the Kronecker oracle up to sign")
    return report
