"""End-to-end scenario runners emitting machine-readable certificates.

Each runner builds one construction, computes the facts about it
(minimality, radical, center, determinant), restates what the source
construction claims those facts should be, and reports both.  The
conjecture verdict is recomputed from the raw fields at emission time:

    counterexample  iff  (minimal and det = 0) or (not minimal and det != 0)

A scenario whose claimed facts disagree with the computed ones carries
the failing claims in its certificates; the CLI turns that into exit
code 2.  Reports are byte-stable across runs for fixed parameters and
seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator

from . import bichar
from .bichar import Bicharacter, quotient_bicharacter, sign_root_bicharacter, znxzn_bicharacter
from .cocycle import (
    Cocycle2,
    CocycleError,
    carry_cocycle,
    cocycle_from_alternating,
    count_roots_of_unity,
    induced_bicharacter,
    pcube_cocycle,
    sign_cocycle,
)
from .ff import FieldElement, is_prime, make_field, root_of_unity
from .groups import FinAbGroup
from .matrices import (
    DecompMatrix,
    SquareMatrix,
    d_matrix,
    pauli_generators,
    square_identity,
    square_radical_blocks,
    znxzn_det_comparison,
)
from .twisted import TwistedGroupAlgebra

__all__ = [
    "ScenarioReport",
    "ScenarioResult",
    "UsageError",
    "run_counterexample_zn",
    "run_counterexample_quotient",
    "run_positive_example",
    "run_examples_suite",
    "run_scan",
]


class UsageError(ValueError):
    """Parameter violation; the CLI maps this to exit code 1."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


@dataclass
class ScenarioReport:
    """Flat certificate record for one scenario run."""

    scenario: str
    parameters: dict
    field: str | None = None
    group: str | None = None
    minimal: bool | None = None
    det_is_zero: bool | None = None
    det: str | None = None
    certificates: dict = dataclass_field(default_factory=dict)

    @property
    def conjecture_verdict(self) -> str | None:
        if self.minimal is None or self.det_is_zero is None:
            return None
        if (self.minimal and self.det_is_zero) or (not self.minimal and not self.det_is_zero):
            return "counterexample"
        return "consistent"

    @property
    def claim_failures(self) -> list[str]:
        return list(self.certificates.get("claim_failures", []))

    @property
    def failed(self) -> bool:
        return bool(self.claim_failures) or "failure" in self.certificates

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "parameters": self.parameters,
            "field": self.field,
            "group": self.group,
            "minimal": self.minimal,
            "det_is_zero": self.det_is_zero,
            "det": self.det,
            "certificates": self.certificates,
            "conjecture_verdict": self.conjecture_verdict,
        }


@dataclass
class ScenarioResult:
    """A report plus the matrices it certifies, for dumping."""

    report: ScenarioReport
    matrices: dict[str, SquareMatrix] = dataclass_field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 2 if self.report.failed else 0


def _finish_claims(certificates: dict, claimed: dict, actual: dict) -> None:
    certificates["claimed"] = claimed
    certificates["claim_failures"] = [
        name for name, want in claimed.items() if actual.get(name) != want
    ]


# -- scenario: counterexample-zn ------------------------------------------------


def run_counterexample_zn(p: int, t: int) -> ScenarioResult:
    """Z_2t x Z_2t with beta = (-1)^{ik+jl} zeta^{jk-il}, zeta of order t.

    The construction claims the decomposition is minimal while the
    decomposition matrix is singular.  Minimality is confirmed; the
    determinant, however, is computed exactly and reported as found.
    """
    _require(is_prime(p) and p > 2, "p must be an odd prime")
    _require(is_prime(t) and t > 2, "t must be an odd prime > 2")
    _require(p != t, "t must be a prime different from p")
    beta = sign_root_bicharacter(p, t)
    n = 2 * t
    zeta = beta.gen_table[1][0]
    matrix = DecompMatrix.from_bicharacter(beta)
    minimal, witness = bichar.is_minimal(beta)
    rad = bichar.radical(beta)
    det = matrix.det()
    det_d = d_matrix(zeta, n).det()
    certificates = {
        "equal_column_pair": [g.serialize() for g in witness] if witness else None,
        "radical_order": rad.order,
        "center_dimension": None,
        "square_identity": None,
        "matrix_dimension": n * n,
        "zeta": zeta.serialize(),
        "det_d_matrix": det_d.serialize(),
        "det_d_matrix_is_zero": det_d.is_zero(),
        "bicharacter": beta.to_dict(),
    }
    _finish_claims(
        certificates,
        claimed={"minimal": True, "det_is_zero": True},
        actual={"minimal": minimal, "det_is_zero": det.is_zero()},
    )
    report = ScenarioReport(
        scenario="counterexample-zn",
        parameters={"p": p, "t": t, "n": n},
        field=beta.field.describe(),
        group=beta.group.describe(),
        minimal=minimal,
        det_is_zero=det.is_zero(),
        det=det.serialize(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"decomposition_matrix": matrix})


# -- the shared quotient pipeline ------------------------------------------------


def _quotient_pipeline(alpha: Cocycle2) -> tuple[dict, DecompMatrix, bool, FieldElement]:
    """Radical -> quotient -> triangular cocycle -> twisted algebra.

    Returns (certificates, decomposition matrix of the quotient algebra,
    minimal verdict, determinant).
    """
    beta = induced_bicharacter(alpha)
    rad = bichar.radical(beta)
    beta_bar, pres = quotient_bicharacter(beta, rad)
    delta = cocycle_from_alternating(beta_bar)
    algebra = TwistedGroupAlgebra(delta)
    minimal = algebra.is_minimal()
    matrix = DecompMatrix.from_bicharacter(beta_bar)
    det = matrix.det()
    certificates = {
        "radical_order": rad.order,
        "quotient_group": pres.quotient_group.describe(),
        "quotient_order": pres.quotient_group.order,
        "center_dimension": len(algebra.center_basis()),
        "equal_column_pair": None if minimal else [g.serialize() for g in bichar.is_minimal(beta_bar)[1]],
        "square_identity": square_identity(matrix),
        "quotient_bicharacter": beta_bar.to_dict(),
    }
    return certificates, matrix, minimal, det


def run_counterexample_quotient(p: int) -> ScenarioResult:
    """Z_p^3 with the corner-sign carry cochain, quotiented to a claimed
    minimal algebra with singular decomposition matrix.

    Construction of the cochain requires it to pass exhaustive cocycle
    validation and to have a proper nontrivial radical; when that fails
    the scenario aborts with the failing certificate.
    """
    _require(is_prime(p) and p > 2, "p must be an odd prime (characteristic 2 is excluded)")
    spec = make_field(p, 1)
    group = FinAbGroup((p, p, p))
    parameters = {"p": p}
    claimed = {
        "cocycle_valid": True,
        "radical_proper_nontrivial": True,
        "minimal": True,
        "p_divides_quotient_order": True,
        "det_is_zero": True,
    }
    try:
        alpha = pcube_cocycle(p, spec)
    except CocycleError as err:
        certificates = {
            "failure": {
                "stage": "cocycle-construction",
                "law": err.report.law if err.report else None,
                "witness": list(err.report.witness) if err.report and err.report.witness else None,
                "detail": str(err),
                "roots_of_unity_of_order_p_in_field": count_roots_of_unity(spec, p),
                "diagnosis": (
                    "the field has no p-th roots of unity besides 1 in characteristic p, "
                    "so every commutation ratio on a group of exponent p is trivial and "
                    "the radical is the whole group for every valid cocycle"
                ),
            }
        }
        _finish_claims(certificates, claimed, actual={})
        report = ScenarioReport(
            scenario="counterexample-quotient",
            parameters=parameters,
            field=spec.describe(),
            group=group.describe(),
            certificates=certificates,
        )
        return ScenarioResult(report)
    certificates, matrix, minimal, det = _quotient_pipeline(alpha)
    rad_order = certificates["radical_order"]
    _finish_claims(
        certificates,
        claimed,
        actual={
            "cocycle_valid": True,
            "radical_proper_nontrivial": 1 < rad_order < group.order,
            "minimal": minimal,
            "p_divides_quotient_order": certificates["quotient_order"] % p == 0,
            "det_is_zero": det.is_zero(),
        },
    )
    report = ScenarioReport(
        scenario="counterexample-quotient",
        parameters=parameters,
        field=spec.describe(),
        group=group.describe(),
        minimal=minimal,
        det_is_zero=det.is_zero(),
        det=det.serialize(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"decomposition_matrix": matrix})


def run_positive_example(p: int, q: int, q1: int) -> ScenarioResult:
    """Z_{q-1} x Z_{q1-1} with the corner sign cocycle, quotiented by its
    radical: a minimal algebra whose matrix determinant is provably
    nonzero (the quotient order is prime to the characteristic)."""
    _require(is_prime(p) and p > 2, "p must be an odd prime")
    _require(is_prime(q) and is_prime(q1), "q and q1 must be primes")
    _require(q != q1, "q and q1 must be distinct")
    _require(q != p and q1 != p, "q and q1 must differ from p")
    _require(math.gcd(p, q - 1) == 1, f"gcd(p, q-1) must be 1, got gcd({p},{q - 1})")
    _require(math.gcd(p, q1 - 1) == 1, f"gcd(p, q1-1) must be 1, got gcd({p},{q1 - 1})")
    spec = make_field(p, 1)
    group = FinAbGroup((q - 1, q1 - 1))
    alpha = sign_cocycle(group, spec)
    certificates, matrix, minimal, det = _quotient_pipeline(alpha)
    quotient_order = certificates["quotient_order"]
    det_squared = det * det
    expected_square = spec.from_int(quotient_order) ** quotient_order
    certificates["det_squared"] = det_squared.serialize()
    certificates["group_order_power"] = expected_square.serialize()
    _finish_claims(
        certificates,
        claimed={
            "minimal": True,
            "p_coprime_to_quotient_order": True,
            "det_nonzero": True,
            "det_squared_is_order_power": True,
            "square_identity": True,
        },
        actual={
            "minimal": minimal,
            "p_coprime_to_quotient_order": quotient_order % p != 0,
            "det_nonzero": not det.is_zero(),
            "det_squared_is_order_power": det_squared == expected_square,
            "square_identity": certificates["square_identity"],
        },
    )
    report = ScenarioReport(
        scenario="positive-example",
        parameters={"p": p, "q": q, "q1": q1},
        field=spec.describe(),
        group=group.describe(),
        minimal=minimal,
        det_is_zero=det.is_zero(),
        det=det.serialize(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"decomposition_matrix": matrix})


# -- scenario: the worked examples ------------------------------------------------


def run_examples_suite() -> list[ScenarioResult]:
    """Reproduce every worked example and record whether each matches
    its source: the anticommuting two-part decomposition, the
    nonminimal 4 x 4 matrix and its coarsening, the generalized Pauli
    gradings, the sign-twisted tensor square, and the determinant
    comparison sweep."""
    results = [
        _example_grassmann(),
        _example_nonminimal(),
        _example_twisted_tensor(),
    ]
    results.extend(_example_pauli(n) for n in (2, 3, 4))
    results.extend(_example_det_sweep(n) for n in (2, 4))
    return results


def _example_grassmann() -> ScenarioResult:
    spec = make_field(5, 1)
    beta = bichar.grassmann_bicharacter(spec)
    matrix = DecompMatrix.from_bicharacter(beta)
    minimal, _ = bichar.is_minimal(beta)
    det = matrix.det()
    one, minus_one = spec.one(), spec.from_int(-1)
    expected = ((one, one), (one, minus_one))
    certificates = {
        "radical_order": bichar.radical(beta).order,
        "equal_column_pair": None,
        "center_dimension": None,
        "square_identity": None,
        "matrix": [[v.serialize() for v in row] for row in matrix.rows],
    }
    _finish_claims(
        certificates,
        claimed={"matrix_matches": True, "minimal": True, "det_is_minus_two": True},
        actual={
            "matrix_matches": matrix.rows == expected,
            "minimal": minimal,
            "det_is_minus_two": det == spec.from_int(-2),
        },
    )
    report = ScenarioReport(
        scenario="example-anticommuting-z2",
        parameters={"p": 5},
        field=spec.describe(),
        group=beta.group.describe(),
        minimal=minimal,
        det_is_zero=det.is_zero(),
        det=det.serialize(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"decomposition_matrix": matrix})


def _example_nonminimal() -> ScenarioResult:
    spec = make_field(5, 1)
    minus_one = spec.from_int(-1)
    beta = znxzn_bicharacter(2, minus_one, minus_one, minus_one)
    matrix = DecompMatrix.from_bicharacter(beta)
    minimal, witness = bichar.is_minimal(beta)
    det = matrix.det()
    one = spec.one()
    expected = (
        (one, one, one, one),
        (one, minus_one, minus_one, one),
        (one, minus_one, minus_one, one),
        (one, one, one, one),
    )
    rad = bichar.radical(beta)
    beta_bar, _ = quotient_bicharacter(beta, rad)
    coarse = DecompMatrix.from_bicharacter(beta_bar)
    coarse_expected = ((one, one), (one, minus_one))
    certificates = {
        "radical_order": rad.order,
        "equal_column_pair": [g.serialize() for g in witness] if witness else None,
        "center_dimension": None,
        "square_identity": None,
        "matrix": [[v.serialize() for v in row] for row in matrix.rows],
        "coarsened_matrix": [[v.serialize() for v in row] for row in coarse.rows],
    }
    _finish_claims(
        certificates,
        claimed={
            "matrix_matches": True,
            "nonminimal": True,
            "det_is_zero": True,
            "coarsening_matches": True,
        },
        actual={
            "matrix_matches": matrix.rows == expected,
            "nonminimal": not minimal,
            "det_is_zero": det.is_zero(),
            "coarsening_matches": coarse.rows == coarse_expected,
        },
    )
    report = ScenarioReport(
        scenario="example-nonminimal-z2xz2",
        parameters={"p": 5, "n": 2},
        field=spec.describe(),
        group=beta.group.describe(),
        minimal=minimal,
        det_is_zero=det.is_zero(),
        det=det.serialize(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"decomposition_matrix": matrix, "coarsened_matrix": coarse})


def _example_twisted_tensor() -> ScenarioResult:
    spec = make_field(5, 1)
    one = spec.one()
    beta = znxzn_bicharacter(2, one, one, spec.from_int(-1))
    matrix = DecompMatrix.from_bicharacter(beta)
    minimal, _ = bichar.is_minimal(beta)
    det = matrix.det()
    els = list(beta.group.elements())
    formula_ok = all(
        beta(g, h) == spec.from_int(-1) ** (g.coords[1] * h.coords[0] - g.coords[0] * h.coords[1])
        for g in els
        for h in els
    )
    certificates = {
        "radical_order": bichar.radical(beta).order,
        "equal_column_pair": None,
        "center_dimension": None,
        "square_identity": None,
    }
    _finish_claims(
        certificates,
        claimed={"formula_matches": True, "minimal": True, "det_nonzero": True},
        actual={"formula_matches": formula_ok, "minimal": minimal, "det_nonzero": not det.is_zero()},
    )
    report = ScenarioReport(
        scenario="example-twisted-tensor-square",
        parameters={"p": 5, "n": 2},
        field=spec.describe(),
        group=beta.group.describe(),
        minimal=minimal,
        det_is_zero=det.is_zero(),
        det=det.serialize(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"decomposition_matrix": matrix})


def _example_pauli(n: int) -> ScenarioResult:
    spec, xi = root_of_unity(5, n) if n > 2 else (make_field(5, 1), make_field(5, 1).from_int(-1))
    x, y = pauli_generators(n, xi)
    ident = x @ x
    for _ in range(n - 2):
        ident = ident @ x
    x_pow_n = ident
    y_pow_n = y
    for _ in range(n - 1):
        y_pow_n = y_pow_n @ y
    from .matrices import identity_matrix

    eye = identity_matrix(spec, n)
    certificates = {
        "xi": xi.serialize(),
        "commutation": True,
        "span_rank": n * n,
    }
    _finish_claims(
        certificates,
        claimed={"commutation_holds": True, "powers_return_to_identity": True},
        actual={
            "commutation_holds": x @ y == (y @ x).scale(xi),
            "powers_return_to_identity": x_pow_n == eye and y_pow_n == eye,
        },
    )
    report = ScenarioReport(
        scenario=f"example-pauli-grading-n{n}",
        parameters={"p": 5, "n": n},
        field=spec.describe(),
        group=FinAbGroup((n, n)).describe(),
        certificates=certificates,
    )
    return ScenarioResult(report, {"pauli_x": x, "pauli_y": y})


def _example_det_sweep(n: int) -> ScenarioResult:
    spec, _ = root_of_unity(5, n) if n > 2 else (make_field(5, 1), None)
    one = spec.one()
    roots = [v for v in spec.nonzero_elements() if v**n == one]
    rows = []
    mismatches = []
    for e in (one, spec.from_int(-1)):
        for f in (one, spec.from_int(-1)):
            for xi in roots:
                cmp = znxzn_det_comparison(n, e, f, xi)
                row = {
                    "e": e.serialize(),
                    "f": f.serialize(),
                    "xi": xi.serialize(),
                    "det_matrix": cmp.det_m.serialize(),
                    "det_d_matrix": cmp.det_d.serialize(),
                    "equal": cmp.equal,
                    "equal_up_to_sign": cmp.equal_up_to_sign,
                }
                rows.append(row)
                if not cmp.equal:
                    mismatches.append(row)
    certificates = {"rows": rows, "mismatches": len(mismatches)}
    _finish_claims(
        certificates,
        claimed={"determinants_agree_everywhere": True},
        actual={"determinants_agree_everywhere": not mismatches},
    )
    report = ScenarioReport(
        scenario=f"example-det-comparison-n{n}",
        parameters={"p": 5, "n": n, "cases": len(rows)},
        field=spec.describe(),
        group=FinAbGroup((n, n)).describe(),
        certificates=certificates,
    )
    return ScenarioResult(report)


# -- scenario: empirical scan ------------------------------------------------------


def _factor_lists(max_order: int) -> Iterator[tuple[int, ...]]:
    """All non-decreasing cyclic factor lists with product in [2, max]."""

    def rec(prefix: tuple[int, ...], product: int, start: int) -> Iterator[tuple[int, ...]]:
        for n in range(start, max_order + 1):
            if product * n > max_order:
                break
            yield prefix + (n,)
            yield from rec(prefix + (n,), product * n, n)

    yield from rec((), 1, 2)


def _random_alternating(group: FinAbGroup, spec, rng: random.Random) -> Bicharacter:
    """A uniformly chosen valid alternating generator table."""
    r = group.rank
    one = spec.one()
    table = [[one for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for j in range(i):
            d = math.gcd(group.orders[i], group.orders[j])
            candidates = [v for v in spec.nonzero_elements() if v**d == one]
            v = rng.choice(candidates)
            table[i][j] = v
            table[j][i] = v.inverse()
    return Bicharacter(group, spec, table)


def run_scan(max_order: int, p: int, k: int = 1, seed: int = 0) -> list[ScenarioResult]:
    """Sweep twisted group algebras over groups of order <= max_order:
    for each group, the trivial cocycle, a carry cocycle, the corner
    sign cocycle where valid, their product, and a seeded random
    alternating table, each classified as (minimal?, det = 0?)."""
    _require(is_prime(p) and p > 2, "p must be an odd prime")
    _require(k >= 1, "k must be >= 1")
    _require(2 <= max_order <= 64, "max order must be in [2, 64]")
    spec = make_field(p, k)
    rng = random.Random(seed)
    results = []
    for orders in _factor_lists(max_order):
        group = FinAbGroup(orders)
        instances: list[tuple[str, Cocycle2]] = []
        one = spec.one()
        n_all = group.order
        trivial = Cocycle2(group, spec, [[one] * n_all for _ in range(n_all)])
        instances.append(("trivial", trivial))
        if spec.q - 2 >= group.rank:
            codes = rng.sample(range(2, spec.q), group.rank)
            lambdas = [spec.element(_int_coeffs(c, spec)) for c in codes]
            instances.append(("carry", carry_cocycle(group, lambdas)))
        if group.rank >= 2 and orders[0] % 2 == 0 and orders[1] % 2 == 0:
            gamma = sign_cocycle(group, spec)
            instances.append(("sign", gamma))
            if len(instances) > 1 and instances[1][0] == "carry":
                instances.append(("sign*carry", gamma * instances[1][1]))
        instances.append(("random", cocycle_from_alternating(_random_alternating(group, spec, rng))))
        for family, alpha in instances:
            algebra = TwistedGroupAlgebra(alpha)
            beta = algebra.induced_bicharacter()
            rad = bichar.radical(beta)
            matrix = DecompMatrix.from_bicharacter(beta)
            det = matrix.det()
            minimal = algebra.is_minimal()
            certificates = {
                "radical_order": rad.order,
                "center_dimension": len(algebra.center_basis()),
                "equal_column_pair": None,
                "square_identity": square_identity(matrix),
                "square_radical_blocks": square_radical_blocks(matrix, rad.element_set),
                "p_divides_group_order": group.order % p == 0,
                "claim_failures": [],
            }
            if not minimal:
                certificates["equal_column_pair"] = [
                    g.serialize() for g in bichar.is_minimal(beta)[1]
                ]
            report = ScenarioReport(
                scenario="scan",
                parameters={
                    "group": group.describe(),
                    "family": family,
                    "p": p,
                    "k": k,
                    "seed": seed,
                },
                field=spec.describe(),
                group=group.describe(),
                minimal=minimal,
                det_is_zero=det.is_zero(),
                det=det.serialize(),
                certificates=certificates,
            )
            results.append(ScenarioResult(report))
    return results


def _int_coeffs(code: int, spec) -> tuple[int, ...]:
    out = []
    for _ in range(spec.k):
        out.append(code % spec.p)
        code //= spec.p
    return tuple(out)
