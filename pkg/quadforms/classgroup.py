"""
Class enumeration per discriminant: h+(d), h(d) and h*(d).

Representatives are the reduced primitive forms (positive definite only for
d < 0, one per rho-cycle for d > 0). Results are memoised in the Django cache.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from django.conf import settings
from django.core.cache import cache
from sympy import divisors

from .errors import BoundExceededError
from .forms_core import Form, check_discriminant
from .pell_units import fundamental_unit
from .reduction import reduce, rho

logger = logging.getLogger(__name__)

CLASS_DATA_CACHE_KEY = "quadforms:class_data:{d}"


@dataclass(frozen=True)
class ClassData:
    d: int
    reps: Tuple[Form, ...]
    h_plus: int
    h_ord: int
    h_star: int
    unit_norm: Optional[int] = None
    ambiguous: Tuple[Form, ...] = field(default=())

    def to_json(self):
        return {
            "d": self.d,
            "h_plus": self.h_plus,
            "h": self.h_ord,
            "h_star": self.h_star,
            "unit_norm": self.unit_norm,
            "reps": [rep.to_json() for rep in self.reps],
            "ambiguous": [rep.to_json() for rep in self.ambiguous],
        }


def opposite(f: Form) -> Form:
    """(a, -b, c), the inverse class."""
    return f.opposite()


def _reduced_definite_forms(d: int) -> List[Form]:
    forms = []
    for a in range(1, math.isqrt(-d // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            numerator = b * b - d
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if math.gcd(a, b, c) == 1:
                forms.append(Form(a, b, c))
    return forms


def _reduced_indefinite_forms(d: int) -> List[Form]:
    r = math.isqrt(d)
    forms = []
    for b in range(2 - d % 2, r + 1, 2):
        n = (d - b * b) // 4
        for a_abs in divisors(n):
            if 2 * a_abs <= r - b:
                continue
            if 2 * a_abs > r + b:
                break
            for a in (a_abs, -a_abs):
                c = -n // a
                if math.gcd(a, b, c) == 1:
                    forms.append(Form(a, b, c))
    return forms


def _group_cycles(forms: List[Form]) -> Tuple[List[Form], Dict[Form, int]]:
    """Split reduced indefinite forms into rho-cycles; pick min (a, b) with a > 0 per cycle."""
    remaining = set(forms)
    index: Dict[Form, int] = {}
    reps: List[Form] = []
    for start in sorted(forms, key=lambda f: (f.a <= 0, abs(f.a), f.b)):
        if start not in remaining:
            continue
        members = []
        current = start
        while True:
            members.append(current)
            remaining.discard(current)
            current = rho(current)
            if current == start:
                break
        for member in members:
            index[member] = len(reps)
        reps.append(min((m for m in members if m.a > 0), key=lambda m: (m.a, m.b)))
    return reps, index


def _count_involution_orbits(partner: List[int]) -> Tuple[int, List[int]]:
    seen = set()
    orbits = 0
    fixed = []
    for i, j in enumerate(partner):
        if i in seen:
            continue
        orbits += 1
        seen.update((i, j))
        if i == j:
            fixed.append(i)
    return orbits, fixed


def _compute_class_data(d: int) -> ClassData:
    if d < 0:
        reps = sorted(_reduced_definite_forms(d), key=lambda f: (f.a, f.b))
        index = {rep: i for i, rep in enumerate(reps)}
        unit_norm = None
    else:
        reps, index = _group_cycles(_reduced_indefinite_forms(d))
        unit_norm = fundamental_unit(d).norm

    partner = [index[reduce(opposite(rep))] for rep in reps]
    h_star, fixed = _count_involution_orbits(partner)
    h_plus = len(reps)
    if d > 0 and unit_norm == 1:
        h_ord = h_plus // 2
    else:
        h_ord = h_plus
    return ClassData(
        d=d,
        reps=tuple(reps),
        h_plus=h_plus,
        h_ord=h_ord,
        h_star=h_star,
        unit_norm=unit_norm,
        ambiguous=tuple(reps[i] for i in fixed),
    )


def class_data(d: int) -> ClassData:
    """Class representatives and class numbers of discriminant d."""
    check_discriminant(d)
    if abs(d) > settings.QF_CLASS_BOUND:
        raise BoundExceededError(
            f"|d| = {abs(d)} exceeds QF_CLASS_BOUND={settings.QF_CLASS_BOUND}"
        )
    key = CLASS_DATA_CACHE_KEY.format(d=d)
    data = cache.get(key)
    if data is not None:
        logger.debug(f"class data cache hit for d={d}")
        return data

    data = _compute_class_data(d)
    cache.set(key, data)
    logger.info(f"class data for d={d}: h+={data.h_plus} h={data.h_ord} h*={data.h_star}")
    return data


def h_plus(d: int) -> int:
    return class_data(d).h_plus


def ambiguous_classes(d: int) -> Tuple[Form, ...]:
    """Representatives of the classes fixed by f -> opposite(f)."""
    return class_data(d).ambiguous


def schering_class_counts(delta: int) -> Tuple[int, int]:
    """
    Numbers of properly and improperly primitive SL2 classes of Schering forms
    aX^2 + 2bXY + cY^2 with determinant delta = b^2 - ac.
    """
    proper = h_plus(4 * delta)
    improper = h_plus(delta) if delta % 4 == 1 else 0
    return proper, improper
