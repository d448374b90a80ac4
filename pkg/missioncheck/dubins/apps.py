from django.apps import AppConfig


class DubinsAppConfig(AppConfig):
    name = "missioncheck.dubins"
    verbose_name = "Dubins planner"
