"""
REST API for the quadratic form library. Each view mirrors one subcommand and
returns the same payload the management command prints.
"""

import logging
from typing import Any, Callable

from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from .errors import QuadraticFormError
from .services import get_service, parse_int

logger = logging.getLogger(__name__)


def _run(label: str, build: Callable[[], Any]) -> Response:
    """Map domain errors to 400 and anything else to 500."""
    try:
        return Response(build())
    except QuadraticFormError as e:
        return Response(e.to_payload(), status=status.HTTP_400_BAD_REQUEST)
    except Exception as e:
        logger.error(f"Unexpected error in {label}: {e}")
        return Response(
            {
                "error": "internal_error",
                "message": "An unexpected error occurred while processing your request",
            },
            status=status.HTTP_500_INTERNAL_SERVER_ERROR,
        )


class ClassifyView(APIView):
    """
    Endpoint: GET /api/classify/?form=a,b,c
    """

    def get(self, request):
        form = request.GET.get("form")
        return _run("classify", lambda: get_service().classify(form))


class ValEquivView(APIView):
    """
    Endpoint: GET /api/valequiv/?f=a,b,c&g=A,B,C
    """

    def get(self, request):
        f, g = request.GET.get("f"), request.GET.get("g")
        return _run("valequiv", lambda: get_service().valequiv(f, g))


class ClassNumberView(APIView):
    """
    Endpoint: GET /api/classnum/<d>/
    """

    def get(self, request, d: int):
        return _run("classnum", lambda: get_service().classnum(d))


class UnitView(APIView):
    """
    Endpoint: GET /api/unit/<d>/
    """

    def get(self, request, d: int):
        return _run("unit", lambda: get_service().unit(d))


class ValueSetView(APIView):
    """
    Endpoint: GET /api/valueset/?form=a,b,c&max=M[&primitive=1]

    Returns the sorted list of represented values with |n| <= M.
    """

    def get(self, request):
        form = request.GET.get("form")
        primitive = request.GET.get("primitive", "").lower() in ("1", "true", "yes")
        return _run(
            "valueset",
            lambda: get_service().valueset(
                form, parse_int(request.GET.get("max"), "max"), primitive
            ),
        )


class ImageModView(APIView):
    """
    Endpoint: GET /api/imagemod/?form=a,b,c&m=32[&restriction=same-parity]
    """

    def get(self, request):
        form = request.GET.get("form")
        restriction = request.GET.get("restriction", "all")
        return _run(
            "imagemod",
            lambda: get_service().imagemod(
                form, parse_int(request.GET.get("m"), "m"), restriction
            ),
        )


class SurveyView(APIView):
    """
    Endpoint: GET /api/surveys/        recent recorded runs with totals
              POST /api/surveys/       body {"max": X}; runs and records a survey
    """

    def get(self, request):
        try:
            limit = int(request.GET.get("limit", 10))
            limit = min(max(limit, 1), 100)
        except ValueError:
            limit = 10
        return _run("surveys", lambda: get_service().recent_surveys(limit))

    def post(self, request):
        def build():
            bound = parse_int(request.data.get("max"), "max")
            return get_service().survey(bound, record=True)

        response = _run("surveys", build)
        if response.status_code == status.HTTP_200_OK:
            response.status_code = status.HTTP_201_CREATED
        return response


class HealthView(APIView):
    """
    Endpoint: GET /api/health/
    """

    def get(self, request):
        try:
            from django.db import connection

            with connection.cursor() as cursor:
                cursor.execute("SELECT 1")
            db_status = "healthy"
        except Exception as e:
            logger.error(f"Database health check failed: {e}")
            db_status = "unhealthy"

        try:
            from django.core.cache import cache

            cache.set("health_check", "test", 10)
            cache_status = "healthy" if cache.get("health_check") == "test" else "unhealthy"
        except Exception as e:
            logger.error(f"Cache health check failed: {e}")
            cache_status = "unhealthy"

        overall = "healthy" if db_status == cache_status == "healthy" else "degraded"
        response_data = {
            "status": overall,
            "service": "Quadratic forms API",
            "components": {"database": db_status, "cache": cache_status},
            "endpoints": {
                "classify": "/api/classify/?form=a,b,c",
                "valequiv": "/api/valequiv/?f=a,b,c&g=A,B,C",
                "classnum": "/api/classnum/<d>/",
                "unit": "/api/unit/<d>/",
                "valueset": "/api/valueset/?form=a,b,c&max=M",
                "imagemod": "/api/imagemod/?form=a,b,c&m=M",
                "surveys": "/api/surveys/",
            },
        }
        if overall == "healthy":
            return Response(response_data)
        return Response(response_data, status=status.HTTP_503_SERVICE_UNAVAILABLE)
