"""
URL configuration for the qfsite project.
"""

from django.http import JsonResponse
from django.urls import include, path


def health_check(request):
    """
    Liveness probe: returns 200 as soon as the project is importable.
    """
    return JsonResponse({"status": "healthy", "message": "Service is up and running"})


urlpatterns = [
    path("health/", health_check, name="health_check"),
    path("api/", include("quadforms.urls")),
]
