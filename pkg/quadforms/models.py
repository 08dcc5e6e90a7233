"""
Django models for recorded discriminant surveys.
"""

from django.db import models


class SurveyRun(models.Model):
    """
    Summary of one survey sweep up to ``bound``.
    """

    STATUS_CHOICES = [
        ("PASS", "All checks passed"),
        ("WARN", "Soft checks missed"),
        ("FAIL", "An exact identity failed"),
    ]

    bound = models.PositiveIntegerField(db_index=True)

    # Counts
    d58 = models.PositiveIntegerField()
    s58 = models.PositiveIntegerField()
    g58 = models.PositiveIntegerField()
    eisenstein = models.PositiveIntegerField()
    d20_32 = models.PositiveIntegerField(default=0)

    # Ratios as {"name": {"exact": [num, den], "decimal": "0.123456"}}
    ratios = models.JSONField(default=dict, blank=True)
    checks = models.JSONField(default=list, blank=True)
    status = models.CharField(max_length=4, choices=STATUS_CHOICES, db_index=True)

    sample_size = models.PositiveIntegerField(default=0)
    elapsed_ms = models.IntegerField(blank=True, null=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        db_table = "survey_runs"
        ordering = ["-created_at"]
        indexes = [
            models.Index(fields=["bound"], name="survey_runs_bound_5c1e2a_idx"),
            models.Index(fields=["created_at"], name="survey_runs_created_9b7d41_idx"),
        ]

    def __str__(self):
        return f"Survey to {self.bound}: {self.status} (G58={self.g58}, E={self.eisenstein})"

    @property
    def eisenstein_share(self):
        """E / G58 as a float, 0 when G58 is empty."""
        if self.g58 == 0:
            return 0.0
        return self.eisenstein / self.g58
