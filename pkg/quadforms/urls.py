"""
URL configuration for the quadforms app.
"""

from django.urls import path, register_converter

from . import views


class SignedIntConverter:
    regex = r"-?\d+"

    def to_python(self, value):
        return int(value)

    def to_url(self, value):
        return str(value)


register_converter(SignedIntConverter, "sint")

app_name = "quadforms"

urlpatterns = [
    path("classify/", views.ClassifyView.as_view(), name="classify"),
    path("valequiv/", views.ValEquivView.as_view(), name="valequiv"),
    path("classnum/<sint:d>/", views.ClassNumberView.as_view(), name="classnum"),
    path("unit/<sint:d>/", views.UnitView.as_view(), name="unit"),
    path("valueset/", views.ValueSetView.as_view(), name="valueset"),
    path("imagemod/", views.ImageModView.as_view(), name="imagemod"),
    path("surveys/", views.SurveyView.as_view(), name="surveys"),
    path("health/", views.HealthView.as_view(), name="api_health"),
]
