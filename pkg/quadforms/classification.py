"""
Ordinary and extraordinary forms.

A primitive form f of discriminant d is lower extraordinary when d = 5 mod 8
and h+(d) = h+(4d); its value set then equals that of f(2X, Y). A primitive
form F of discriminant D is upper extraordinary when D = 20 mod 32 and
h+(D) = h+(D/4), and then F is GL2-equivalent to f(2X, Y) for a lower
extraordinary f of discriminant D/4. Every other form is ordinary: its value
set class is its GL2 class. Imprimitive forms are classified through
d / content^2.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from django.conf import settings

from .classgroup import class_data, h_plus, schering_class_counts
from .errors import PreconditionError
from .forms_core import Form, ScheringForm
from .pell_units import unit_residues
from .reduction import is_contained, is_gl2_equivalent, require_nonsquare
from .valuesets import represents_exact

logger = logging.getLogger(__name__)

ORDINARY_RESIDUES_MOD_32 = (0, 4, 8, 12, 16, 24, 28)


class Verdict(str, enum.Enum):
    ORDINARY = "Ordinary"
    LOWER = "LowerExtraordinary"
    UPPER = "UpperExtraordinary"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    partner: Optional[Form] = None
    certificate: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_extraordinary(self) -> bool:
        return self.verdict != Verdict.ORDINARY

    def to_json(self):
        return {
            "verdict": self.verdict.value,
            "partner": self.partner.to_json() if self.partner else None,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class ValueComparison:
    equal: bool
    reason: str
    witness: Optional[Dict[str, Any]] = None

    def __bool__(self):
        return self.equal

    def to_json(self):
        payload = {"equal": self.equal, "reason": self.reason}
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


def _unit_parity(d: int) -> Optional[str]:
    """Parity of y_d for d > 0; None for definite discriminants."""
    if d < 0:
        return None
    return "odd" if unit_residues(d, 2)[1] else "even"


def _lower_criterion(d: int) -> bool:
    return d % 8 == 5 and h_plus(d) == h_plus(4 * d)


def _upper_criterion(d: int) -> bool:
    return d % 32 == 20 and h_plus(d) == h_plus(d // 4)


def classify(f: Form) -> Classification:
    """Ordinary, lower extraordinary or upper extraordinary, with the partner form."""
    d = require_nonsquare(f)
    content = f.content
    d_bar = d // (content * content)
    certificate: Dict[str, Any] = {
        "d": d,
        "content": content,
        "reduced_d": d_bar,
    }

    if d_bar % 8 == 5:
        pair = [h_plus(d_bar), h_plus(4 * d_bar)]
        certificate.update(
            congruence="d ≡ 5 mod 8",
            h_plus_pair=pair,
            unit_parity=_unit_parity(d_bar),
        )
        if pair[0] == pair[1]:
            return Classification(Verdict.LOWER, f.dag(), certificate)
        certificate["reason"] = "h+(4d) = 3h+(d)"
        return Classification(Verdict.ORDINARY, None, certificate)

    if d_bar % 32 == 20:
        pair = [h_plus(d_bar), h_plus(d_bar // 4)]
        certificate.update(
            congruence="d ≡ 20 mod 32",
            h_plus_pair=pair,
            unit_parity=_unit_parity(d_bar // 4),
        )
        if pair[0] == pair[1]:
            return Classification(Verdict.UPPER, upper_to_lower(f), certificate)
        certificate["reason"] = "h+(d) ≠ h+(d/4)"
        return Classification(Verdict.ORDINARY, None, certificate)

    if d_bar % 8 == 1:
        certificate.update(congruence="d ≡ 1 mod 8", reason="d ≡ 1 mod 8")
    else:
        residue = d_bar % 32
        assert residue in ORDINARY_RESIDUES_MOD_32
        certificate.update(
            congruence=f"d ≡ {residue} mod 32", reason="d mod 32 in {0,4,8,12,16,24,28}"
        )
    return Classification(Verdict.ORDINARY, None, certificate)


def lower_to_upper(f: Form) -> Form:
    """f(2X, Y) for a lower extraordinary f."""
    require_nonsquare(f)
    d_bar = f.discriminant // f.content ** 2
    if not _lower_criterion(d_bar):
        raise PreconditionError(f"form {f} is not lower extraordinary")
    return f.dag()


def upper_to_lower(big: Form) -> Form:
    """
    The form f of discriminant disc(big)/4, unique up to GL2, with
    f(2X, Y) GL2-equivalent to big.
    """
    require_nonsquare(big)
    content = big.content
    primitive = big.primitive_part()
    d = primitive.discriminant
    if not _upper_criterion(d):
        raise PreconditionError(f"form {big} is not upper extraordinary")
    sign = 1
    if d < 0 and primitive.a < 0:
        primitive, sign = primitive.negate(), -1
    for rep in class_data(d // 4).reps:
        if is_gl2_equivalent(rep.dag(), primitive):
            return rep.scale(sign * content)
    raise PreconditionError(f"no form of discriminant {d // 4} is carried onto {big}")


def _represents(f: Form, n: int) -> bool:
    k = f.content
    if n % k:
        return False
    return bool(represents_exact(f.primitive_part(), n // k, with_witness=False))


def separating_value(f: Form, g: Form, bound: int) -> Optional[Dict[str, Any]]:
    """The smallest |n| <= bound (positive first) in exactly one of Im(f), Im(g)."""
    for magnitude in range(1, bound + 1):
        for n in (magnitude, -magnitude):
            in_f, in_g = _represents(f, n), _represents(g, n)
            if in_f != in_g:
                return {"n": n, "represented_by": "first" if in_f else "second"}
    return None


def _compare(f: Form, g: Form) -> ValueComparison:
    df, dg = f.discriminant, g.discriminant
    if (df < 0) != (dg < 0):
        return ValueComparison(False, "definite and indefinite")
    if df < 0 and (f.a > 0) != (g.a > 0):
        return ValueComparison(False, "positive and negative definite")

    if df == dg:
        if f.content != g.content:
            return ValueComparison(False, "contents differ")
        if is_gl2_equivalent(f, g):
            return ValueComparison(True, "GL2-equivalent")
        return ValueComparison(False, "same discriminant, GL2-inequivalent")

    if dg == 4 * df or df == 4 * dg:
        small, large = (f, g) if dg == 4 * df else (g, f)
        d_bar = small.discriminant // small.content ** 2
        if d_bar % 8 == 1:
            return ValueComparison(False, "d ≡ 1 mod 8")
        if d_bar % 8 != 5:
            return ValueComparison(False, "d ≢ 5 mod 8")
        if f.content != g.content:
            return ValueComparison(False, "contents differ")
        if h_plus(d_bar) != h_plus(4 * d_bar):
            return ValueComparison(False, "h+(4d) = 3h+(d)")
        if is_gl2_equivalent(small.dag(), large):
            return ValueComparison(True, "extraordinary pair")
        return ValueComparison(False, "not GL2-equivalent to f(2X, Y)")

    return ValueComparison(False, "discriminant ratio not in {1/4, 1, 4}")


def val_equivalent(f: Form, g: Form, with_witness: bool = True) -> ValueComparison:
    """Whether Im(f) = Im(g), decided structurally, with a separating value when not."""
    require_nonsquare(f)
    require_nonsquare(g)
    result = _compare(f, g)
    if result.equal or not with_witness:
        return result
    witness = separating_value(f, g, settings.QF_WITNESS_BOUND)
    if witness is None:
        logger.warning(
            f"no separating value for {f} and {g} within |n| <= {settings.QF_WITNESS_BOUND}"
        )
    return ValueComparison(result.equal, result.reason, witness)


def schering_equivalent(f: ScheringForm, big: ScheringForm) -> bool:
    """Schering's four conditions for equal value sets of even-middle forms."""
    small_form, big_form = f.to_form(), big.to_form()
    if not (is_contained(small_form, big_form) or is_contained(big_form, small_form)):
        return False
    o, e, d = f.order, f.species, f.determinant
    big_o, big_e, big_d = big.order, big.species, big.determinant
    if o * e != big_o * big_e:
        return False
    if e * e * d != big_e * big_e * big_d:
        return False
    if e != big_e:
        delta = big_d // (big_o * big_o)
        if delta % 8 != 5:
            return False
        proper, improper = schering_class_counts(delta)
        return proper == improper
    return True
