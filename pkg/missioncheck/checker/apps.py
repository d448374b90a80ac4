from django.apps import AppConfig


class CheckerAppConfig(AppConfig):
    name = "missioncheck.checker"
    verbose_name = "CTL checker"
