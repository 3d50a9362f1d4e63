"""Exact arithmetic in GF(p^k) for odd prime p.

Elements of GF(p^k) are residues of univariate polynomials over GF(p)
modulo a fixed monic irreducible modulus of degree k, stored as
coefficient tuples (coefficient of x^i at position i).  The modulus is
always the lexicographically smallest monic irreducible of its degree,
so serialized fixtures are reproducible across runs.

Field specs and elements are immutable values; all operations are pure
and safe to share across threads.  For fields with at most 2^16
elements a discrete-log table over a fixed generator is built lazily,
making multiplication, inversion and exponentiation O(1).
"""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterator

_TABLE_CAP = 1 << 16
_ROOT_SEARCH_SEED = 20240

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "root_of_unity",
    "is_prime",
    "factorize",
]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (inputs here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FieldSpec:
    """A concrete finite field GF(p^k), p an odd prime.

    Owns the modulus and (lazily) the interned element table plus
    discrete-log tables used for fast multiplicative arithmetic.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p) or p <= 2:
            raise ValueError(f"characteristic must be an odd prime, got {p}")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        if len(modulus) != k + 1 or modulus[k] != 1:
            raise ValueError("modulus must be monic of degree k")
        modulus = tuple(c % p for c in modulus[:-1]) + (1,)
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self._elements: list[FieldElement] | None = None
        self._log: list[int] | None = None
        self._exp: list[FieldElement] | None = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.k}), modulus={list(self.modulus)})"

    def describe(self) -> str:
        return f"GF({self.p}^{self.k}) mod {list(self.modulus)}"

    # -- element construction ---------------------------------------------

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.k:
            raise ValueError(f"need {self.k} coefficients, got {len(coeffs)}")
        if self._elements is not None:
            return self._elements[_encode(coeffs, self.p)]
        return FieldElement(self, coeffs)

    def from_int(self, n: int) -> FieldElement:
        return self.element((n,) + (0,) * (self.k - 1))

    def zero(self) -> FieldElement:
        return self.from_int(0)

    def one(self) -> FieldElement:
        return self.from_int(1)

    def elements(self) -> Iterator[FieldElement]:
        """All q elements, ordered by their base-p code (zero first)."""
        for code in range(self.q):
            yield self.element(_decode(code, self.p, self.k))

    def nonzero_elements(self) -> Iterator[FieldElement]:
        return itertools.islice(self.elements(), 1, None)

    # -- raw polynomial arithmetic ------------------------------------------

    def _mul_coeffs(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k, m = self.p, self.k, self.modulus
        if k == 1:
            return ((a[0] * b[0]) % p,)
        res = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] = (res[i + j] + ai * bj) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(k):
                    res[i - k + j] = (res[i - k + j] - c * m[j]) % p
        return tuple(res[:k])

    # -- discrete-log tables -------------------------------------------------

    def _ensure_tables(self) -> bool:
        """Build interned elements and log/exp tables once (q <= 2^16)."""
        if self._log is not None:
            return True
        if self.q > _TABLE_CAP:
            return False
        p, k, q = self.p, self.k, self.q
        elements = [FieldElement(self, _decode(c, p, k)) for c in range(q)]
        gen = self._find_generator(elements)
        exp: list[FieldElement] = [elements[_encode((1,) + (0,) * (k - 1), p)]]
        for _ in range(q - 2):
            exp.append(elements[_encode(self._mul_coeffs(exp[-1].coeffs, gen.coeffs), p)])
        log = [0] * q
        for i, el in enumerate(exp):
            log[el.code] = i
        self._elements = elements
        self._exp = exp
        self._log = log
        return True

    def _find_generator(self, elements: list[FieldElement]) -> FieldElement:
        n = self.q - 1
        prime_divisors = list(factorize(n))
        for el in elements[1:]:
            if all(self._pow_coeffs(el.coeffs, n // ell) != self.one_coeffs() for ell in prime_divisors):
                return el
        raise RuntimeError("no multiplicative generator found (not a field?)")

    def one_coeffs(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    def _pow_coeffs(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = self.one_coeffs()
        base = a
        while e:
            if e & 1:
                result = self._mul_coeffs(result, base)
            base = self._mul_coeffs(base, base)
            e >>= 1
        return result


class FieldElement:
    """An element of a fixed GF(p^k), immutable.

    Supports +, -, *, /, ** (integer exponents, negative allowed via
    inversion), unary negation, equality and hashing.
    """

    __slots__ = ("spec", "coeffs", "code")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs
        self.code = _encode(coeffs, spec.p)

    def __repr__(self) -> str:
        return f"FieldElement{self.coeffs}@GF({self.spec.p}^{self.spec.k})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code and (self.spec is other.spec or self.spec == other.spec)

    def __hash__(self) -> int:
        return hash((self.code, self.spec.p, self.spec.k))

    def __bool__(self) -> bool:
        return self.code != 0

    def is_zero(self) -> bool:
        return self.code == 0

    def is_one(self) -> bool:
        return self.coeffs == self.spec.one_coeffs()

    def _check_same(self, other: FieldElement) -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise ValueError(f"mixed fields: {self.spec} vs {other.spec}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check_same(other)
        p = self.spec.p
        return self.spec.element(tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check_same(other)
        p = self.spec.p
        return self.spec.element(tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.spec.p
        return self.spec.element(tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check_same(other)
        spec = self.spec
        if spec._ensure_tables():
            if self.code == 0 or other.code == 0:
                return spec._elements[0]
            i = spec._log[self.code] + spec._log[other.code]
            return spec._exp[i % (spec.q - 1)]
        return spec.element(spec._mul_coeffs(self.coeffs, other.coeffs))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def inverse(self) -> FieldElement:
        if self.code == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.spec.p}^{self.spec.k})")
        spec = self.spec
        if spec._ensure_tables():
            return spec._exp[-spec._log[self.code] % (spec.q - 1)]
        return spec.element(spec._pow_coeffs(self.coeffs, spec.q - 2))

    def __pow__(self, e: int) -> FieldElement:
        spec = self.spec
        if e < 0:
            return self.inverse() ** (-e)
        if spec._ensure_tables():
            if self.code == 0:
                return spec.one() if e == 0 else spec.zero()
            return spec._exp[(spec._log[self.code] * e) % (spec.q - 1)]
        return spec.element(spec._pow_coeffs(self.coeffs, e))

    def multiplicative_order(self) -> int:
        """Smallest m >= 1 with self^m = 1; divides q - 1."""
        if self.code == 0:
            raise ValueError("zero has no multiplicative order")
        m = self.spec.q - 1
        for ell, mult in factorize(m).items():
            for _ in range(mult):
                if self ** (m // ell) == self.spec.one():
                    m //= ell
                else:
                    break
        return m

    def serialize(self) -> str:
        """Stable text form used verbatim in JSON reports."""
        spec = self.spec
        cs = ",".join(str(c) for c in self.coeffs)
        ms = ",".join(str(c) for c in spec.modulus)
        return f"coeffs=[{cs}] mod ({ms}) over GF({spec.p})"


# -- modulus search ----------------------------------------------------------


def _encode(coeffs: tuple[int, ...], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _decode(code: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(code % p)
        code //= p
    return tuple(out)


def _poly_mul_mod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(k):
                res[i - k + j] = (res[i - k + j] - c * modulus[j]) % p
    return res[:k]


def _poly_gcd_is_constant(a: list[int], b: list[int], p: int) -> bool:
    a, b = list(a), list(b)

    def deg(c: list[int]) -> int:
        d = len(c) - 1
        while d >= 0 and c[d] % p == 0:
            d -= 1
        return d

    while True:
        db = deg(b)
        if db < 0:
            return deg(a) <= 0
        da = deg(a)
        if da < db:
            a, b = b, a
            continue
        c = a[da] * pow(b[db], p - 2, p) % p
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """gcd test: a factor of degree i <= k/2 would divide x^{p^i} - x."""
    k = len(modulus) - 1
    if k == 1:
        return True
    if modulus[0] == 0:
        return False
    for i in range(1, k // 2 + 1):
        # x^{p^i} mod modulus, by square-and-multiply on x
        result = [1] + [0] * (k - 1)
        base = [0, 1] + [0] * (k - 2)
        e = p**i
        while e:
            if e & 1:
                result = _poly_mul_mod(result, base, modulus, p)
            base = _poly_mul_mod(base, base, modulus, p)
            e >>= 1
        diff = list(result)
        diff[1] = (diff[1] - 1) % p
        if not _poly_gcd_is_constant(list(modulus), diff, p):
            return False
    return True


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldSpec:
    """Construct GF(p^k) with the lexicographically smallest monic
    irreducible modulus of degree k over GF(p).

    Deterministic: equal (p, k) always yield identical moduli.
    """
    if not is_prime(p) or p <= 2:
        raise ValueError(f"characteristic must be an odd prime, got {p}")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for tail in itertools.product(range(p), repeat=k):
        modulus = tail + (1,)
        if _is_irreducible(modulus, p):
            return FieldSpec(p, k, modulus)
    raise RuntimeError(f"no irreducible of degree {k} over GF({p})")  # unreachable


def root_of_unity(p: int, t: int) -> tuple[FieldSpec, FieldElement]:
    """Smallest GF(p^k) containing an element of exact order t, plus one
    such element zeta.

    k is minimal with t | p^k - 1.  The element is found by raising
    seeded random nonzero elements to (p^k - 1)/t until the exact order
    comes out as t, which makes the choice deterministic across runs.
    """
    if t < 2:
        raise ValueError(f"order t must be >= 2, got {t}")
    import math

    if math.gcd(t, p) != 1:
        raise ValueError(f"t must be coprime to the characteristic: gcd({t},{p}) != 1")
    k = 1
    while (p**k - 1) % t != 0:
        k += 1
    spec = make_field(p, k)
    rng = random.Random(_ROOT_SEARCH_SEED)
    cofactor = (spec.q - 1) // t
    while True:
        code = rng.randrange(1, spec.q)
        zeta = spec.element(_decode(code, p, k)) ** cofactor
        if not zeta.is_zero() and zeta.multiplicative_order() == t:
            return spec, zeta
