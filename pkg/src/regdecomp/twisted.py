"""Twisted group algebras K^alpha G.

The algebra lives on the basis {x_g : g in G} with product

    x_g x_h = alpha(g, h) x_{g + h},

associative exactly because alpha is a 2-cocycle (the constructor
insists on a validated, normalized cocycle, so x_0 is the unit).  Every
basis element is invertible, basis elements commute up to the induced
bicharacter, and the center is spanned by the x_w whose cocycle values
are symmetric against all of G.

Minimality of the regular decomposition is computed through three
equivalent criteria (no equal columns in the decomposition matrix,
one-dimensional center, trivial radical of the induced bicharacter)
which are cross-asserted on every call.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .bichar import Bicharacter, is_minimal as _bichar_minimal, radical as _bichar_radical
from .cocycle import Cocycle2, CocycleError, induced_bicharacter, validate as validate_cocycle
from .ff import FieldElement
from .groups import GroupElement

__all__ = ["TwistedGroupAlgebra", "AlgebraElement"]


class TwistedGroupAlgebra:
    """K^alpha G for a validated normalized 2-cocycle alpha."""

    def __init__(self, cocycle: Cocycle2):
        report = validate_cocycle(cocycle)
        if not report.ok:
            raise CocycleError(f"cannot build a twisted group algebra: {report.describe()}", report)
        if not cocycle.is_normalized():
            raise CocycleError("cocycle must be normalized so that x_0 is the unit")
        self.cocycle = cocycle
        self.group = cocycle.group
        self.field = cocycle.field
        self._induced: Bicharacter | None = None

    def __repr__(self) -> str:
        return f"TwistedGroupAlgebra({self.group.describe()} over GF({self.field.p}^{self.field.k}))"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistedGroupAlgebra):
            return NotImplemented
        return self.cocycle == other.cocycle

    # -- elements -----------------------------------------------------------

    def element(self, coeffs: Mapping[GroupElement, FieldElement] | Iterable[tuple[GroupElement, FieldElement]]) -> AlgebraElement:
        return AlgebraElement(self, dict(coeffs))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.basis_element(self.group.zero())

    def basis_element(self, g: GroupElement) -> AlgebraElement:
        return AlgebraElement(self, {g: self.field.one()})

    def basis(self) -> list[AlgebraElement]:
        return [self.basis_element(g) for g in self.group.elements()]

    # -- structure ------------------------------------------------------------

    def basis_inverse(self, g: GroupElement) -> AlgebraElement:
        """x_g^{-1} = alpha(g, -g)^{-1} x_{-g}; checked two-sided.

        alpha(g, -g) = alpha(-g, g) by the cocycle identity, so the same
        scalar works on both sides.
        """
        inv = AlgebraElement(self, {-g: self.cocycle(g, -g).inverse()})
        xg = self.basis_element(g)
        if xg * inv != self.one() or inv * xg != self.one():
            raise RuntimeError(f"basis inverse failed for {g.coords}")
        return inv

    def induced_bicharacter(self) -> Bicharacter:
        if self._induced is None:
            self._induced = induced_bicharacter(self.cocycle)
        return self._induced

    def center_basis(self) -> list[GroupElement]:
        """The w with alpha(g, w) = alpha(w, g) for all g; their x_w span
        the center.  Each returned element is re-verified to commute with
        every basis element."""
        members = []
        for w in self.group.elements():
            if all(self.cocycle(g, w) == self.cocycle(w, g) for g in self.group.elements()):
                members.append(w)
        for w in members:
            xw = self.basis_element(w)
            for g in self.group.elements():
                xg = self.basis_element(g)
                if xw * xg != xg * xw:
                    raise RuntimeError(f"center scan returned a non-central element {w.coords}")
        return members

    def is_minimal(self) -> bool:
        """All three minimality criteria, cross-asserted.

        (a) no equal columns in the decomposition matrix,
        (b) dim Z(B) = 1,
        (c) the radical of the induced bicharacter is trivial.
        """
        beta = self.induced_bicharacter()
        by_columns, _ = _bichar_minimal(beta)
        by_center = len(self.center_basis()) == 1
        by_radical = _bichar_radical(beta).order == 1
        if not (by_columns == by_center == by_radical):
            raise RuntimeError(
                "minimality criteria disagree "
                f"(columns={by_columns}, center={by_center}, radical={by_radical})"
            )
        return by_columns


class AlgebraElement:
    """A sparse K-linear combination of basis elements x_g."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: TwistedGroupAlgebra, coeffs: dict[GroupElement, FieldElement]):
        clean = {}
        for g, c in coeffs.items():
            if g.group != algebra.group:
                raise ValueError("basis index from a different group")
            if c.spec != algebra.field:
                raise ValueError("coefficient from a different field")
            if not c.is_zero():
                clean[g] = c
        self.algebra = algebra
        self.coeffs = clean

    def __repr__(self) -> str:
        if not self.coeffs:
            return "AlgebraElement(0)"
        parts = [f"{c.coeffs}*x{g.coords}" for g, c in self._sorted()]
        return "AlgebraElement(" + " + ".join(parts) + ")"

    def _sorted(self) -> list[tuple[GroupElement, FieldElement]]:
        return sorted(self.coeffs.items(), key=lambda gc: self.algebra.group.index(gc[0]))

    def _check_same(self, other: AlgebraElement) -> None:
        # identity fast path; the fallback compares full cocycle tables
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise ValueError("elements from different algebras")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            return False
        return self.coeffs == other.coeffs

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_same(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out[g] + c if g in out else c
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_same(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out[g] - c if g in out else -c
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {g: -c for g, c in self.coeffs.items()})

    def scale(self, scalar: FieldElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, {g: scalar * c for g, c in self.coeffs.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of x_g x_h = alpha(g, h) x_{g+h}."""
        self._check_same(other)
        alpha = self.algebra.cocycle
        out: dict[GroupElement, FieldElement] = {}
        for g, c in self.coeffs.items():
            for h, d in other.coeffs.items():
                k = g + h
                term = c * d * alpha(g, h)
                out[k] = out[k] + term if k in out else term
        return AlgebraElement(self.algebra, out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def serialize(self) -> list[tuple[str, str]]:
        """(group element, field element) string pairs in canonical order."""
        return [(g.serialize(), c.serialize()) for g, c in self._sorted()]
