from django.apps import AppConfig


class MissionAppConfig(AppConfig):
    name = "missioncheck.mission"
    verbose_name = "UAV search mission"
