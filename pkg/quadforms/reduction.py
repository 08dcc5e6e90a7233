"""
Reduction theory for binary quadratic forms.

Definite forms reduce to the unique representative with |b| <= a <= c (b >= 0
when |b| = a or a = c); negative definite forms are reduced through their
negation. Indefinite forms are walked with the rho operator until they satisfy

    0 < b < sqrt(d)  and  sqrt(d) - b < 2|a| < sqrt(d) + b

and the reduced forms of one SL2 class form a closed cycle under rho.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from django.conf import settings
from sympy import divisors

from .errors import (
    ImprimitiveFormError,
    InvalidDiscriminantError,
    PeriodLimitError,
    SquareDiscriminantError,
    ZeroFormError,
)
from .forms_core import (
    Form,
    IntegerMatrix,
    UnimodularMatrix,
    is_square_discriminant,
)
from .pell_units import pell4

logger = logging.getLogger(__name__)

_FLIP = UnimodularMatrix(1, 0, 0, -1)


def require_nonsquare(f: Form) -> int:
    """Return disc(f), raising for the zero form and for square discriminants."""
    if f.a == f.b == f.c == 0:
        raise ZeroFormError("the zero form cannot be reduced")
    d = f.discriminant
    if is_square_discriminant(d):
        raise SquareDiscriminantError(f"form {f} has square discriminant {d}")
    return d


@dataclass(frozen=True)
class ReducedCycle:
    """The closed rho-cycle of reduced indefinite forms of one SL2 class."""

    forms: Tuple[Form, ...]
    discriminant: int

    def __len__(self):
        return len(self.forms)

    def __contains__(self, f: Form) -> bool:
        return f in self.forms

    def __iter__(self):
        return iter(self.forms)

    def to_json(self):
        return [f.to_json() for f in self.forms]


# Definite forms


def _reduce_positive_definite(f: Form) -> Tuple[Form, UnimodularMatrix]:
    a, b, c = f
    m = UnimodularMatrix.identity()

    def normalize(a, b, c, m):
        r = (a - b) // (2 * a)
        return a, b + 2 * r * a, a * r * r + b * r + c, m @ UnimodularMatrix(1, r, 0, 1)

    if not -a < b <= a:
        a, b, c, m = normalize(a, b, c, m)
    while a > c or (a == c and b < 0):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
        m = m @ UnimodularMatrix(0, -1, 1, s)
    return Form(a, b, c), m


def _reduce_definite(f: Form) -> Tuple[Form, UnimodularMatrix]:
    if f.a > 0:
        return _reduce_positive_definite(f)
    g, m = _reduce_positive_definite(f.negate())
    return g.negate(), m


# Indefinite forms


def is_reduced_indefinite(f: Form) -> bool:
    d = f.discriminant
    r = math.isqrt(d)
    two_a = 2 * abs(f.a)
    return 0 < f.b <= r and two_a + f.b > r and two_a - f.b <= r


def _rho_tracked(f: Form) -> Tuple[Form, UnimodularMatrix]:
    a, b, c = f
    d = f.discriminant
    r = math.isqrt(d)
    width = 2 * abs(c)
    low = r - width if abs(c) <= r else -abs(c)
    # b' = -b mod 2|c|, chosen in (low, low + 2|c|]
    b_next = low + 1 + (-b - low - 1) % width
    t = (b + b_next) // (2 * c)
    return Form(c, b_next, (b_next * b_next - d) // (4 * c)), UnimodularMatrix(0, -1, 1, t)


def rho(f: Form) -> Form:
    """One step (a, b, c) -> (c, b', (b'^2 - d)/4c) of indefinite reduction."""
    return _rho_tracked(f)[0]


def _reduce_indefinite(f: Form) -> Tuple[Form, UnimodularMatrix]:
    m = UnimodularMatrix.identity()
    steps = 0
    while not is_reduced_indefinite(f):
        f, step = _rho_tracked(f)
        m = m @ step
        steps += 1
        if steps > settings.QF_PERIOD_CAP:
            raise PeriodLimitError(f"reduction of {f} did not finish in {steps} steps")
    return f, m


def reduce_tracked(f: Form) -> Tuple[Form, UnimodularMatrix]:
    """Reduced form g together with a determinant +1 matrix M such that f.act(M) == g."""
    d = require_nonsquare(f)
    if d < 0:
        return _reduce_definite(f)
    return _reduce_indefinite(f)


def reduce(f: Form) -> Form:
    return reduce_tracked(f)[0]


@lru_cache(maxsize=4096)
def _cycle_from_reduced(start: Form, cap: int) -> Tuple[Form, ...]:
    forms = [start]
    current = rho(start)
    while current != start:
        forms.append(current)
        if len(forms) > cap:
            raise PeriodLimitError(
                f"cycle of {start} is longer than {cap} forms"
            )
        current = rho(current)
    return tuple(forms)


def cycle(f: Form) -> ReducedCycle:
    """The full reduction cycle containing reduce(f)."""
    d = require_nonsquare(f)
    if d < 0:
        raise InvalidDiscriminantError(f"form {f} is definite; cycles need d > 0")
    forms = _cycle_from_reduced(reduce(f), settings.QF_PERIOD_CAP)
    return ReducedCycle(forms=forms, discriminant=d)


# Equivalence


def _same_invariants(f: Form, g: Form) -> bool:
    return f.discriminant == g.discriminant and f.content == g.content


def sl2_transform(f: Form, g: Form) -> Optional[UnimodularMatrix]:
    """
    A determinant +1 matrix M with f.act(M) == g, or None when f and g are not
    properly equivalent.
    """
    d = require_nonsquare(f)
    require_nonsquare(g)
    if not _same_invariants(f, g):
        return None
    f1, g1 = f.primitive_part(), g.primitive_part()
    rf, mf = reduce_tracked(f1)
    rg, mg = reduce_tracked(g1)
    if d < 0:
        if rf != rg:
            return None
        return mf @ mg.inverse()
    step_matrix = UnimodularMatrix.identity()
    current = rf
    for _ in range(len(_cycle_from_reduced(rf, settings.QF_PERIOD_CAP))):
        if current == rg:
            return mf @ step_matrix @ mg.inverse()
        current, step = _rho_tracked(current)
        step_matrix = step_matrix @ step
    logger.debug(f"{f} and {g} share invariants but lie in different classes")
    return None


def gl2_transform(f: Form, g: Form) -> Optional[UnimodularMatrix]:
    """A matrix of determinant +1 or -1 carrying f to g, or None."""
    m = sl2_transform(f, g)
    if m is not None:
        return m
    m = sl2_transform(f, g.opposite())
    if m is not None:
        return m @ _FLIP
    return None


def is_sl2_equivalent(f: Form, g: Form) -> bool:
    d = require_nonsquare(f)
    require_nonsquare(g)
    if not _same_invariants(f, g):
        return False
    f1, g1 = f.primitive_part(), g.primitive_part()
    if d < 0:
        return reduce(f1) == reduce(g1)
    return reduce(g1) in cycle(f1)


def is_gl2_equivalent(f: Form, g: Form) -> bool:
    return is_sl2_equivalent(f, g) or is_sl2_equivalent(f, g.opposite())


# Automorphs


def automorph(f: Form) -> UnimodularMatrix:
    """
    The automorph ((t - bu)/2, -cu; au, (t + bu)/2) built from the fundamental
    solution of t^2 - du^2 = 4. It fixes f and has infinite order.
    """
    d = require_nonsquare(f)
    if d < 0:
        raise InvalidDiscriminantError(f"form {f} is definite; automorphs need d > 0")
    if not f.is_primitive():
        raise ImprimitiveFormError(f"form {f} has content {f.content}")
    t, u = pell4(d)
    return UnimodularMatrix(
        (t - f.b * u) // 2, -f.c * u, f.a * u, (t + f.b * u) // 2
    )


# Containment


def sublattice_bases(k: int) -> List[IntegerMatrix]:
    """Hermite normal form bases ((p, q), (0, s)) of the index-k sublattices of Z^2."""
    bases = []
    for p in divisors(k):
        s = k // p
        for q in range(p):
            bases.append(IntegerMatrix(p, q, 0, s))
    return bases


def is_contained(f: Form, big: Form) -> bool:
    """
    Whether f = big o gamma for some integer matrix gamma, i.e. f is the
    restriction of big to a sublattice of index k with k^2 = disc f / disc big.
    """
    d = require_nonsquare(f)
    big_d = require_nonsquare(big)
    if d % big_d:
        return False
    ratio = d // big_d
    if ratio <= 0:
        return False
    k = math.isqrt(ratio)
    if k * k != ratio:
        return False
    return any(is_gl2_equivalent(f, big.act(basis)) for basis in sublattice_bases(k))
