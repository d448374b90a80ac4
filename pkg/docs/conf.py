# ruff: noqa: PTH100
# Sphinx configuration for the missioncheck documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

import django

sys.path.insert(0, os.path.abspath(".."))
if os.getenv("READTHEDOCS", default="False") == "True":
    os.environ["DJANGO_READ_DOT_ENV_FILE"] = "True"
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")
# autodoc imports the management commands and tasks, which need the app registry
django.setup()

# -- Project information -----------------------------------------------------

project = "missioncheck"
copyright = """2025, Guillermo Follana Berna"""  # noqa: A001
author = "Guillermo Follana Berna"


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]
autodoc_member_order = "bysource"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
html_title = "missioncheck"
