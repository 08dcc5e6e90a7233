"""
Fundamental units of real quadratic orders.

The order of discriminant d is Z[omega] with omega = (1 + sqrt d)/2 when
d = 1 mod 4 and omega = sqrt(d/4) when d = 0 mod 4. Units are found from the
continued fraction of omega - (d mod 2) = (P0 + sqrt d)/Q0 with P0 = -(d mod 2)
and Q0 = 2, run in exact integer arithmetic on the states (P, Q): the
convergent p/q before the first later state with |Q| = 2 gives the
fundamental unit p + q*omega, of norm (-1)^k * Q_k / 2.

Stopping at the first |Q| = 2 finds the same period as waiting for the state
(P, Q) to repeat: the states are purely periodic from the first reduced one,
and |Q| = 2 occurs only where the period (or the half period, for norm -1)
closes.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Tuple

from django.conf import settings
from django.core.cache import cache

from .errors import InvalidDiscriminantError, PeriodLimitError
from .forms_core import check_discriminant

logger = logging.getLogger(__name__)

UNIT_CACHE_KEY = "quadforms:unit:{d}"


@dataclass(frozen=True)
class FundamentalUnit:
    """epsilon_d = x + y*omega_d with its norm."""

    d: int
    x: int
    y: int
    norm: int

    @property
    def sigma(self) -> int:
        return self.d % 2

    def exact_norm(self) -> int:
        """N(x + y*omega) = x^2 + sigma*xy + y^2 (sigma - d)/4."""
        s = self.sigma
        return self.x * self.x + s * self.x * self.y + self.y * self.y * (s - self.d) // 4

    def to_json(self):
        return {"d": self.d, "x": self.x, "y": self.y, "norm": self.norm}


def _check_real(d: int) -> int:
    if d <= 0:
        raise InvalidDiscriminantError(f"discriminant {d} is not positive")
    return check_discriminant(d)


def _expansion_states(d: int) -> Iterator[Tuple[int, int, int]]:
    """Yield (k, a_k, Q_{k+1}) along the continued fraction of omega - sigma."""
    r = math.isqrt(d)
    p, q = -(d % 2), 2
    k = 0
    while True:
        if q > 0:
            a = (p + r) // q
        else:
            a = -((p + r) // -q) - 1
        p = a * q - p
        q = (d - p * p) // q
        yield k, a, q
        k += 1


def _expand(d: int, modulus: int = 0) -> Tuple[int, int, int]:
    """
    Run the expansion of omega_d until |Q| = 2. Convergents are kept exactly, or
    reduced mod ``modulus`` when it is positive.
    """
    cap = settings.QF_PERIOD_CAP
    p_prev, p_cur = 1, 0
    q_prev, q_cur = 0, 1
    started = False
    for k, a, q_next in _expansion_states(d):
        if not started:
            p_cur, q_cur = a, 1
            started = True
        else:
            p_prev, p_cur = p_cur, a * p_cur + p_prev
            q_prev, q_cur = q_cur, a * q_cur + q_prev
        if modulus:
            p_cur, q_cur = p_cur % modulus, q_cur % modulus
            p_prev, q_prev = p_prev % modulus, q_prev % modulus
        if abs(q_next) == 2:
            sign = -1 if (k + 1) % 2 else 1
            return p_cur, q_cur, sign * q_next // 2
        if k >= cap:
            raise PeriodLimitError(
                f"continued fraction for d={d} did not close within {cap} steps"
            )


def fundamental_unit(d: int) -> FundamentalUnit:
    """The minimal unit > 1 of the order of discriminant d > 0."""
    _check_real(d)
    key = UNIT_CACHE_KEY.format(d=d)
    cached = cache.get(key)
    if cached is not None:
        logger.debug(f"unit cache hit for d={d}")
        return cached

    x, y, norm = _expand(d)
    unit = FundamentalUnit(d=d, x=x, y=y, norm=norm)
    cache.set(key, unit)
    logger.debug(f"fundamental unit for d={d}: x={x} y={y} norm={norm}")
    return unit


def unit_residues(d: int, modulus: int) -> Tuple[int, int, int]:
    """(x_d mod m, y_d mod m, norm) without materialising the unit."""
    _check_real(d)
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    return _expand(d, modulus)


def unit_parity_criterion(d: int) -> bool:
    """
    For d = 5 mod 8: whether y_d is odd (d > 0), or whether d = -3 (d < 0).
    Equivalent to h+(d) = h+(4d).
    """
    if d % 8 != 5:
        raise InvalidDiscriminantError(f"discriminant {d} is not 5 mod 8")
    if d < 0:
        return d == -3
    return unit_residues(d, 2)[1] == 1


def pell4(d: int) -> Tuple[int, int]:
    """Minimal positive solution (t, u) of t^2 - d u^2 = 4."""
    unit = fundamental_unit(d)
    t0 = 2 * unit.x + unit.sigma * unit.y
    u0 = unit.y
    if unit.norm == 1:
        return t0, u0
    return (t0 * t0 + d * u0 * u0) // 2, t0 * u0


def unit_power(unit: FundamentalUnit, k: int) -> Tuple[int, int]:
    """Coordinates of epsilon^k (k >= 0) in the basis [1, omega]."""
    if k < 0:
        raise ValueError("only non-negative powers are supported")
    s, d = unit.sigma, unit.d
    x, y = 1, 0
    for _ in range(k):
        x, y = (
            x * unit.x + y * unit.y * (d - s) // 4,
            x * unit.y + y * unit.x + s * y * unit.y,
        )
    return x, y


def in_order_4d(x: int, y: int) -> bool:
    """Whether x + y*omega_d lies in the order of discriminant 4d, i.e. Z + 2Z*omega_d."""
    return y % 2 == 0


def rebase(unit: FundamentalUnit, sign: int, shift: int) -> Tuple[int, int]:
    """Coordinates of epsilon_d in the basis [1, sign*omega_d + shift]."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return unit.x - sign * shift * unit.y, sign * unit.y


def norm_transfer_check(d: int) -> bool:
    """Whether N(epsilon_d) = N(epsilon_4d) for d = 1 mod 4."""
    if d % 4 != 1:
        raise InvalidDiscriminantError(f"discriminant {d} is not 1 mod 4")
    return fundamental_unit(d).norm == fundamental_unit(4 * d).norm
