from django.apps import AppConfig


class SimAppConfig(AppConfig):
    name = "missioncheck.sim"
    verbose_name = "Multi-UAV search simulator"
