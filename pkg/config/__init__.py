# The mission and sim shared_task jobs bind to this app once Django is set up.
from .celery_app import app as celery_app

__all__ = ("celery_app",)
