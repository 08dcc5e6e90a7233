from django.apps import AppConfig


class QuadformsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "quadforms"
    verbose_name = "Binary quadratic forms"
