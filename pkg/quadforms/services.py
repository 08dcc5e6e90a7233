"""
Service layer shared by the management commands and the REST API.
Parses textual inputs, runs the library operations and shapes JSON payloads.
"""

import logging
from typing import Any, Dict, List, Optional

from django.db.models import Count, Max, Sum

from .classgroup import class_data
from .classification import classify, schering_equivalent, val_equivalent
from .errors import FormatError
from .forms_core import Form, ScheringForm, schering_invariants
from .models import SurveyRun
from .pell_units import fundamental_unit, pell4, unit_parity_criterion
from .reduction import is_contained
from .surveys import FAIL, PASS, WARN, SurveyReport, ratio_json, survey, write_csv
from .valuesets import image_mod, value_window

logger = logging.getLogger(__name__)


def parse_form(text: str) -> Form:
    if text is None:
        raise FormatError("a form 'a,b,c' is required")
    return Form.parse(text)


def parse_int(text: Any, name: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise FormatError(f"{name} must be an integer, got {text!r}")


class QuadraticFormService:
    """
    Builds the payload of every subcommand. Payload keys are the ones both the
    CLI and the HTTP endpoints emit.
    """

    def classify(self, form_text: str) -> Dict[str, Any]:
        f = parse_form(form_text)
        result = classify(f)
        logger.debug(f"classified {f} as {result.verdict.value}")
        return {"form": f.to_json(), **result.to_json()}

    def valequiv(self, first_text: str, second_text: str) -> Dict[str, Any]:
        f, g = parse_form(first_text), parse_form(second_text)
        comparison = val_equivalent(f, g)
        return {"forms": [f.to_json(), g.to_json()], **comparison.to_json()}

    def classnum(self, d: int) -> Dict[str, Any]:
        return class_data(d).to_json()

    def unit(self, d: int) -> Dict[str, Any]:
        unit = fundamental_unit(d)
        t, u = pell4(d)
        return {
            **unit.to_json(),
            "pell4": [t, u],
            "parity_criterion": unit_parity_criterion(d) if d % 8 == 5 else None,
        }

    def valueset(self, form_text: str, bound: int, primitive: bool = False) -> List[int]:
        f = parse_form(form_text)
        return value_window(f, bound, primitive=primitive).to_json()

    def imagemod(self, form_text: str, m: int, restriction: str = "all") -> Dict[str, Any]:
        f = parse_form(form_text)
        return {"form": f.to_json(), **image_mod(f, m, restriction).to_json()}

    def schering(self, first_text: str, second_text: Optional[str] = None) -> Dict[str, Any]:
        first = ScheringForm.parse(first_text)
        payload = {"first": self._schering_json(first)}
        if second_text is not None:
            second = ScheringForm.parse(second_text)
            payload["second"] = self._schering_json(second)
            small, big = first.to_form(), second.to_form()
            payload["contained"] = is_contained(small, big) or is_contained(big, small)
            payload["equal_values"] = schering_equivalent(first, second)
        return payload

    def _schering_json(self, f: ScheringForm) -> Dict[str, Any]:
        determinant, order, species = schering_invariants(f)
        return {
            "form": f.to_json(),
            "determinant": determinant,
            "order": order,
            "species": species,
        }

    def survey(
        self,
        bound: int,
        rows: bool = False,
        csv_path: Optional[str] = None,
        record: bool = False,
    ) -> Dict[str, Any]:
        report = survey(bound, keep_rows=rows or bool(csv_path))
        payload = report.to_json(include_rows=rows)
        if csv_path:
            write_csv(report.rows, csv_path)
            payload["csv"] = str(csv_path)
        if record:
            run = self.record_survey(report)
            payload["run_id"] = run.pk
        return payload

    def record_survey(self, report: SurveyReport) -> SurveyRun:
        statuses = {check.status for check in report.checks}
        status = FAIL if FAIL in statuses else WARN if WARN in statuses else PASS
        run = SurveyRun.objects.create(
            bound=report.x,
            d58=report.d58,
            s58=report.s58,
            g58=report.g58,
            eisenstein=report.e,
            d20_32=report.d20_32,
            ratios={
                "D58/x": ratio_json(report.d58_ratio),
                "G58/x": ratio_json(report.g58_ratio),
                "S58/G58": ratio_json(report.s58_share),
                "E/G58": ratio_json(report.eisenstein_share),
            },
            checks=[check.to_json() for check in report.checks],
            status=status,
            sample_size=report.sample_size,
            elapsed_ms=report.elapsed_ms,
        )
        logger.info(f"Recorded survey run {run.pk} to {run.bound}: {status}")
        return run

    def recent_surveys(self, limit: int = 10) -> Dict[str, Any]:
        runs = SurveyRun.objects.all()[:limit]
        totals = SurveyRun.objects.aggregate(
            total_runs=Count("id"),
            largest_bound=Max("bound"),
            total_elapsed_ms=Sum("elapsed_ms"),
        )
        by_status = dict(
            SurveyRun.objects.values_list("status").annotate(count=Count("id"))
        )
        return {
            "total": {
                "runs": totals["total_runs"] or 0,
                "largest_bound": totals["largest_bound"] or 0,
                "elapsed_ms": totals["total_elapsed_ms"] or 0,
                "by_status": {key: by_status.get(key, 0) for key in (PASS, WARN, FAIL)},
            },
            "runs": [
                {
                    "id": run.pk,
                    "bound": run.bound,
                    "status": run.status,
                    "counts": {
                        "D58": run.d58,
                        "S58": run.s58,
                        "G58": run.g58,
                        "E": run.eisenstein,
                        "D20_32": run.d20_32,
                    },
                    "ratios": run.ratios,
                    "eisenstein_share": run.eisenstein_share,
                    "created_at": run.created_at.isoformat() if run.created_at else None,
                }
                for run in runs
            ],
        }


_service = None


def get_service() -> QuadraticFormService:
    """Get or create the shared service instance."""
    global _service
    if _service is None:
        _service = QuadraticFormService()
    return _service
