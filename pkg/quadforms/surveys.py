"""
Discriminant surveys over d = 5 mod 8, d <= x.

    D58  d with h+(d) = h+(4d)
    S58  squarefree members of D58
    G58  squarefree d
    E    squarefree d with h+(4d) = 3h+(d) (the Eisenstein set)

Membership comes from the parity of y_d (fast path); a deterministic sample
is re-checked with two class number computations.
"""

import asyncio
import csv
import logging
import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from asgiref.sync import async_to_sync, sync_to_async
from django.conf import settings

from .classgroup import h_plus
from .errors import BoundExceededError
from .pell_units import unit_residues

logger = logging.getLogger(__name__)

PASS, WARN, FAIL = "PASS", "WARN", "FAIL"

INV_PI_SQUARED = 1 / math.pi ** 2

CSV_COLUMNS = ["d", "squarefree", "y_parity", "in_D58", "in_S58", "in_E"]


@dataclass(frozen=True)
class SurveyRow:
    d: int
    squarefree: bool
    x_parity: int
    y_parity: int

    @property
    def in_d58(self) -> bool:
        return self.y_parity == 1

    @property
    def in_s58(self) -> bool:
        return self.squarefree and self.in_d58

    @property
    def in_e(self) -> bool:
        return self.squarefree and not self.in_d58

    def to_csv(self) -> List[Any]:
        return [
            self.d,
            int(self.squarefree),
            "odd" if self.y_parity else "even",
            int(self.in_d58),
            int(self.in_s58),
            int(self.in_e),
        ]


@dataclass(frozen=True)
class SurveyCheck:
    name: str
    status: str
    observed: Any
    expected: Any

    def to_json(self):
        return {
            "name": self.name,
            "status": self.status,
            "observed": self.observed,
            "expected": self.expected,
        }


def ratio_json(value: Fraction) -> Dict[str, Any]:
    """An exact ratio as [numerator, denominator] plus six decimal digits."""
    return {
        "exact": [value.numerator, value.denominator],
        "decimal": f"{value.numerator / value.denominator:.6f}",
    }


def _ratio(num: int, den: int) -> Fraction:
    return Fraction(num, den) if den else Fraction(0)


@dataclass
class SurveyReport:
    x: int
    d58: int
    s58: int
    g58: int
    e: int
    d20_32: int
    mobius_g58: int
    unit_image: Dict[str, int]
    sample_size: int
    sample_mismatches: List[int]
    checks: List[SurveyCheck] = field(default_factory=list)
    rows: Optional[List[SurveyRow]] = None
    elapsed_ms: int = 0

    @property
    def d58_ratio(self) -> Fraction:
        return _ratio(self.d58, self.x)

    @property
    def g58_ratio(self) -> Fraction:
        return _ratio(self.g58, self.x)

    @property
    def s58_share(self) -> Fraction:
        return _ratio(self.s58, self.g58)

    @property
    def eisenstein_share(self) -> Fraction:
        return _ratio(self.e, self.g58)

    @property
    def failed(self) -> bool:
        return any(check.status == FAIL for check in self.checks)

    def to_json(self, include_rows: bool = False):
        payload = {
            "x": self.x,
            "counts": {
                "D58": self.d58,
                "S58": self.s58,
                "G58": self.g58,
                "E": self.e,
                "D20_32": self.d20_32,
                "G58_mobius": self.mobius_g58,
            },
            "ratios": {
                "D58/x": ratio_json(self.d58_ratio),
                "G58/x": ratio_json(self.g58_ratio),
                "S58/G58": ratio_json(self.s58_share),
                "E/G58": ratio_json(self.eisenstein_share),
            },
            "unit_image_mod_2": self.unit_image,
            "sample": {"size": self.sample_size, "mismatches": self.sample_mismatches},
            "checks": [check.to_json() for check in self.checks],
        }
        if include_rows and self.rows is not None:
            payload["rows"] = [dict(zip(CSV_COLUMNS, row.to_csv())) for row in self.rows]
        return payload


# Sieves


def squarefree_sieve(x: int) -> np.ndarray:
    """Boolean array s of length x + 1 with s[n] true iff n >= 1 is squarefree."""
    flags = np.ones(x + 1, dtype=bool)
    flags[0] = False
    for k in range(2, math.isqrt(x) + 1):
        flags[k * k :: k * k] = False
    return flags


def mobius_sieve(n: int) -> np.ndarray:
    """int8 array mu of length n + 1 with mu[k] the Mobius function of k."""
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, n + 1):
        if not is_prime[p]:
            continue
        is_prime[p * p :: p] = False
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def mobius_g58(x: int) -> int:
    """G58(x) as the sum over odd k of mu(k) * #{m <= x/k^2 : m = 5 mod 8}."""
    root = math.isqrt(x)
    mu = mobius_sieve(root)
    return sum(int(mu[k]) * ((x // (k * k) + 3) // 8) for k in range(1, root + 1, 2))


# Sweep


def _scan_chunk(ds: Sequence[int], squarefree: np.ndarray) -> List[SurveyRow]:
    rows = []
    for d in ds:
        x_mod, y_mod, _ = unit_residues(d, 2)
        rows.append(SurveyRow(d=d, squarefree=bool(squarefree[d]), x_parity=x_mod, y_parity=y_mod))
    return rows


async def _sweep(ds: List[int], squarefree: np.ndarray, workers: int) -> List[SurveyRow]:
    size = max(1, math.ceil(len(ds) / workers))
    chunks = [ds[i : i + size] for i in range(0, len(ds), size)]
    scan = sync_to_async(_scan_chunk, thread_sensitive=False)
    results = await asyncio.gather(*(scan(chunk, squarefree) for chunk in chunks))
    rows = [row for chunk_rows in results for row in chunk_rows]
    rows.sort(key=lambda row: row.d)
    return rows


def _cross_check(rows: List[SurveyRow]) -> Tuple[int, List[int]]:
    """Re-derive D58 membership for a seeded sample from h+(d) and h+(4d)."""
    if not rows:
        return 0, []
    rng = random.Random(settings.QF_SURVEY_SEED)
    size = max(1, round(len(rows) * settings.QF_SURVEY_SAMPLE_RATE))
    sample = sorted(rng.sample(rows, size), key=lambda row: row.d)
    mismatches = [
        row.d for row in sample if (h_plus(row.d) == h_plus(4 * row.d)) != row.in_d58
    ]
    return size, mismatches


def _check(name: str, ok: bool, observed, expected, soft: bool) -> SurveyCheck:
    if ok:
        status = PASS
    else:
        status = WARN if soft else FAIL
        log = logger.warning if soft else logger.error
        log(f"survey check {name} {status}: observed {observed}, expected {expected}")
    return SurveyCheck(name=name, status=status, observed=observed, expected=expected)


def _evaluate(report: SurveyReport) -> List[SurveyCheck]:
    tolerance = settings.QF_SURVEY_TOLERANCE
    g58_density = float(report.g58_ratio)
    d58_density = float(report.d58_ratio)
    s58_share = float(report.s58_share)
    e_share = float(report.eisenstein_share)
    d58_floor = (1 - tolerance) / (2 * math.pi ** 2)
    return [
        _check("S58+E=G58", report.s58 + report.e == report.g58,
               report.s58 + report.e, report.g58, soft=False),
        _check("S58<=D58", report.s58 <= report.d58, report.s58, f"<= {report.d58}", soft=False),
        _check("G58 sieve = Mobius sum", report.g58 == report.mobius_g58,
               report.g58, report.mobius_g58, soft=False),
        _check("fast path = class numbers", not report.sample_mismatches,
               report.sample_mismatches, [], soft=False),
        _check("G58/x ~ 1/pi^2", abs(g58_density - INV_PI_SQUARED) <= 0.02 * INV_PI_SQUARED,
               f"{g58_density:.6f}", f"{INV_PI_SQUARED:.6f} ± 2%", soft=True),
        _check("D58/x >= 1/(2pi^2)", d58_density >= d58_floor,
               f"{d58_density:.6f}", f">= {d58_floor:.6f}", soft=True),
        _check("S58/G58 >= 1/2", s58_share >= 0.5 - tolerance,
               f"{s58_share:.6f}", f">= {0.5 - tolerance:.6f}", soft=True),
        _check("E/G58 ~ 1/3", 0.25 < e_share < 0.45,
               f"{e_share:.6f}", "in (0.25, 0.45)", soft=True),
        _check("E members", report.e >= 50, report.e, ">= 50", soft=True),
    ]


def survey(x: int, keep_rows: bool = False) -> SurveyReport:
    """Count D58, S58, G58 and E up to x and evaluate the density checks."""
    if x > settings.QF_SURVEY_CAP:
        raise BoundExceededError(f"survey bound {x} exceeds QF_SURVEY_CAP={settings.QF_SURVEY_CAP}")
    started = time.monotonic()
    x = max(x, 0)
    squarefree = squarefree_sieve(x)
    ds = list(range(5, x + 1, 8))
    rows = async_to_sync(_sweep)(ds, squarefree, max(1, settings.QF_SURVEY_WORKERS))

    d58 = sum(row.in_d58 for row in rows)
    s58 = sum(row.in_s58 for row in rows)
    g58 = sum(row.squarefree for row in rows)
    e = sum(row.in_e for row in rows)
    d20_32 = sum(row.in_d58 for row in rows if 4 * row.d <= x)
    image = Counter(f"({row.x_parity},{row.y_parity})" for row in rows if row.squarefree)
    sample_size, mismatches = _cross_check(rows)

    report = SurveyReport(
        x=x,
        d58=d58,
        s58=s58,
        g58=g58,
        e=e,
        d20_32=d20_32,
        mobius_g58=mobius_g58(x) if x else 0,
        unit_image=dict(sorted(image.items())),
        sample_size=sample_size,
        sample_mismatches=mismatches,
        rows=rows if keep_rows else None,
    )
    report.checks = _evaluate(report)
    report.elapsed_ms = int((time.monotonic() - started) * 1000)
    logger.info(
        f"survey x={x}: D58={d58} S58={s58} G58={g58} E={e} in {report.elapsed_ms} ms"
    )
    return report


def eisenstein_ratio(x: int) -> Fraction:
    """|E cap [1, x]| / G58(x)."""
    return survey(x).eisenstein_share


def write_csv(rows: Sequence[SurveyRow], path) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.to_csv())
