from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="SurveyRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                ("bound", models.PositiveIntegerField(db_index=True)),
                ("d58", models.PositiveIntegerField()),
                ("s58", models.PositiveIntegerField()),
                ("g58", models.PositiveIntegerField()),
                ("eisenstein", models.PositiveIntegerField()),
                ("d20_32", models.PositiveIntegerField(default=0)),
                ("ratios", models.JSONField(blank=True, default=dict)),
                ("checks", models.JSONField(blank=True, default=list)),
                (
                    "status",
                    models.CharField(
                        choices=[
                            ("PASS", "All checks passed"),
                            ("WARN", "Soft checks missed"),
                            ("FAIL", "An exact identity failed"),
                        ],
                        db_index=True,
                        max_length=4,
                    ),
                ),
                ("sample_size", models.PositiveIntegerField(default=0)),
                ("elapsed_ms", models.IntegerField(blank=True, null=True)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "db_table": "survey_runs",
                "ordering": ["-created_at"],
                "indexes": [
                    models.Index(fields=["bound"], name="survey_runs_bound_5c1e2a_idx"),
                    models.Index(
                        fields=["created_at"], name="survey_runs_created_9b7d41_idx"
                    ),
                ],
            },
        ),
    ]
