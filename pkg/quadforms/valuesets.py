"""
Value sets of forms: exact representation decisions with witnesses, windows of
represented values, residue images and square counts.

An integer n != 0 is represented by a primitive form f of discriminant d iff
for some k with k^2 | n the quotient m = n/k^2 is primitively represented, and
m is primitively represented iff f is properly equivalent to (m, b, (b^2-d)/4m)
for a square root b of d modulo 4|m|.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from django.conf import settings
from sympy import isprime, primerange, sqrt_mod

from .errors import (
    BoundExceededError,
    ImprimitiveFormError,
    NotPrimeError,
    PreconditionError,
)
from .forms_core import Form
from .pell_units import unit_parity_criterion
from .reduction import automorph, is_sl2_equivalent, require_nonsquare, sl2_transform

logger = logging.getLogger(__name__)

RESTRICTIONS = ("all", "coprime", "same-parity", "even-first")

Witness = Tuple[int, int]


@dataclass(frozen=True)
class Representation:
    """Outcome of a representation query; truthy when n is represented."""

    represented: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.represented

    def to_json(self):
        return {
            "represented": self.represented,
            "witness": list(self.witness) if self.witness else None,
        }


@dataclass(frozen=True)
class ValueWindow:
    form: Form
    bound: int
    values: Tuple[int, ...]
    primitive: bool = False
    complete: bool = True

    def __contains__(self, n: int) -> bool:
        return n in self.values

    def to_json(self):
        return list(self.values)


@dataclass(frozen=True)
class ResidueImage:
    modulus: int
    values: Tuple[int, ...]
    restriction: str = "all"

    def to_json(self):
        return {
            "modulus": self.modulus,
            "restriction": self.restriction,
            "values": list(self.values),
        }


def _require_primitive(f: Form) -> int:
    d = require_nonsquare(f)
    if not f.is_primitive():
        raise ImprimitiveFormError(
            f"form {f} has content {f.content}; divide by the content first"
        )
    return d


def _witness_key(point: Witness):
    x, y = point
    return (abs(x), abs(y), x < 0, y < 0)


def _solutions_at(f: Form, d: int, n: int, x: int) -> List[Witness]:
    """Integer y with f(x, y) = n, from c*y^2 + b*x*y + (a*x^2 - n) = 0."""
    delta = d * x * x + 4 * f.c * n
    if delta < 0:
        return []
    root = math.isqrt(delta)
    if root * root != delta:
        return []
    found = []
    for numerator in {-f.b * x + root, -f.b * x - root}:
        if numerator % (2 * f.c) == 0:
            found.append((x, numerator // (2 * f.c)))
    return found


def _scan(f: Form, d: int, n: int, x_bound: int, primitive: bool) -> Optional[Witness]:
    """Lexicographically smallest (|x|, |y|, sign) solution with |x| <= x_bound."""
    for x_abs in range(0, x_bound + 1):
        candidates = []
        for x in {x_abs, -x_abs}:
            candidates.extend(_solutions_at(f, d, n, x))
        if primitive:
            candidates = [p for p in candidates if math.gcd(*p) == 1]
        if candidates:
            return min(candidates, key=_witness_key)
    return None


def _definite_x_bound(f: Form, d: int, n: int) -> int:
    # d x^2 + 4cn >= 0
    return math.isqrt(4 * f.c * n // -d)


@lru_cache(maxsize=65536)
def _root_forms(d: int, m: int) -> Tuple[Form, ...]:
    """Primitive forms (m, b, c) of discriminant d with b running mod 2|m|."""
    modulus = 4 * abs(m)
    roots = sqrt_mod(d % modulus, modulus, all_roots=True) or []
    forms = []
    for b in sorted({root % (2 * abs(m)) for root in roots}):
        g = Form(m, b, (b * b - d) // (4 * m))
        if g.is_primitive():
            forms.append(g)
    return tuple(forms)


def _square_divisors(n: int) -> Iterator[int]:
    for k in range(1, math.isqrt(abs(n)) + 1):
        if n % (k * k) == 0:
            yield k


def _definite_represents(f: Form, d: int, n: int, primitive: bool) -> Representation:
    if n * f.a < 0:
        return Representation(False)
    witness = _scan(f, d, n, _definite_x_bound(f, d, n), primitive)
    return Representation(witness is not None, witness)


def _indefinite_witness(f: Form, d: int, n: int, k: int, g: Form, primitive: bool) -> Witness:
    witness = _scan(f, d, n, settings.QF_WITNESS_SCAN, primitive)
    if witness is not None:
        return witness
    logger.debug(f"no witness for {n} by {f} within the scan; using the class transform")
    m = sl2_transform(f, g)
    return (k * m.alpha, k * m.gamma)


def _indefinite_represents(
    f: Form, d: int, n: int, primitive: bool, with_witness: bool
) -> Representation:
    ks = [1] if primitive else _square_divisors(n)
    for k in ks:
        m = n // (k * k)
        for g in _root_forms(d, m):
            if is_sl2_equivalent(f, g):
                witness = _indefinite_witness(f, d, n, k, g, primitive) if with_witness else None
                return Representation(True, witness)
    return Representation(False)


def represents_exact(f: Form, n: int, with_witness: bool = True) -> Representation:
    """Whether n = f(x, y) for some integers x, y."""
    d = _require_primitive(f)
    if n == 0:
        return Representation(True, (0, 0))
    if d < 0:
        return _definite_represents(f, d, n, primitive=False)
    return _indefinite_represents(f, d, n, primitive=False, with_witness=with_witness)


def represents_primitively(f: Form, n: int, with_witness: bool = True) -> Representation:
    """Whether n = f(x, y) for some x, y with gcd(x, y) = 1."""
    d = _require_primitive(f)
    if n == 0:
        return Representation(False)
    if d < 0:
        return _definite_represents(f, d, n, primitive=True)
    return _indefinite_represents(f, d, n, primitive=True, with_witness=with_witness)


def evenize_representation(f: Form, x: int, y: int) -> Witness:
    """
    Another representation (x', y') of f(x, y) with x' even. For d > 0 it is the
    image of (x, y) under the automorph of f applied at most twice.
    """
    d = _require_primitive(f)
    if d % 8 != 5 or not unit_parity_criterion(d):
        raise PreconditionError(
            f"form {f} of discriminant {d} does not meet the unit parity criterion"
        )
    if x % 2 == 0:
        return (x, y)
    n = f.evaluate(x, y)
    if d < 0:
        candidates = []
        for x_abs in range(0, _definite_x_bound(f, d, n) + 1, 2):
            for x_even in {x_abs, -x_abs}:
                candidates.extend(_solutions_at(f, d, n, x_even))
        if not candidates:
            raise PreconditionError(f"no even-first representation of {n} by {f}")
        return min(candidates, key=_witness_key)

    m = automorph(f)
    point = (x, y)
    for _ in range(2):
        point = m.apply(*point)
        if point[0] % 2 == 0:
            return point
    raise PreconditionError(f"automorph of {f} did not reach an even first coordinate")


def image_mod(f: Form, m: int, restriction: str = "all") -> ResidueImage:
    """Residues f(alpha, beta) mod m over the pairs allowed by the restriction."""
    if m < 2:
        raise PreconditionError(f"modulus {m} must be at least 2")
    if restriction not in RESTRICTIONS:
        raise PreconditionError(
            f"unknown restriction {restriction!r}; expected one of {', '.join(RESTRICTIONS)}"
        )
    if restriction in ("same-parity", "even-first") and m % 2:
        raise PreconditionError(f"parity restrictions need an even modulus, got {m}")

    def allowed(alpha, beta):
        if restriction == "coprime":
            return math.gcd(alpha, beta, m) == 1
        if restriction == "same-parity":
            return (alpha - beta) % 2 == 0
        if restriction == "even-first":
            return alpha % 2 == 0
        return True

    values = {
        f.evaluate(alpha, beta) % m
        for alpha in range(m)
        for beta in range(m)
        if allowed(alpha, beta)
    }
    return ResidueImage(modulus=m, values=tuple(sorted(values)), restriction=restriction)


def squares_mod(m: int) -> Tuple[int, ...]:
    return tuple(sorted({z * z % m for z in range(m)}))


def square_count(q: int, k: int) -> int:
    """Number of squares modulo q^k for a prime q."""
    if not isprime(q):
        raise NotPrimeError(f"{q} is not prime")
    if k < 1:
        raise PreconditionError(f"exponent {k} must be positive")
    if q == 2:
        return (2 ** (k - 1) + (4 if k % 2 == 0 else 5)) // 3
    if k % 2 == 0:
        return (q ** (k + 1) + q + 2) // (2 * (q + 1))
    return (q ** (k + 1) + 2 * q + 1) // (2 * (q + 1))


def value_window(f: Form, bound: int, primitive: bool = False) -> ValueWindow:
    """All n with |n| <= bound represented (primitively, if asked) by f."""
    _require_primitive(f)
    if bound < 0:
        raise PreconditionError(f"window bound {bound} is negative")
    if bound > settings.QF_WINDOW_CAP:
        raise BoundExceededError(
            f"window bound {bound} exceeds QF_WINDOW_CAP={settings.QF_WINDOW_CAP}"
        )
    test = represents_primitively if primitive else represents_exact
    values = tuple(
        n for n in range(-bound, bound + 1) if test(f, n, with_witness=False)
    )
    return ValueWindow(form=f, bound=bound, values=values, primitive=primitive)


def prime_density_estimate(f: Form, limit: int) -> Fraction:
    """Share of primes p <= limit, p not dividing 2d, represented by f."""
    d = _require_primitive(f)
    if limit > settings.QF_PRIME_CAP:
        raise BoundExceededError(
            f"prime bound {limit} exceeds QF_PRIME_CAP={settings.QF_PRIME_CAP}"
        )
    total = hits = 0
    for p in primerange(3, limit + 1):
        if d % p == 0:
            continue
        total += 1
        if represents_exact(f, p, with_witness=False):
            hits += 1
    if total == 0:
        return Fraction(0)
    return Fraction(hits, total)
