"""Sphinx-Konfiguration für die resetlab-Dokumentation."""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.abspath("../src"))

from resetlab.constants import VERSION

project = "resetlab"
author = "Dynamical Systems Lab"
release = VERSION
version = ".".join(VERSION.split(".")[:2])
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.mathjax",
]
autosectionlabel_prefix_document = True
autodoc_typehints = "description"
autodoc_member_order = "bysource"
html_theme = "alabaster"
exclude_patterns: list[str] = []
napoleon_google_docstring = True
napoleon_numpy_docstring = False
language = "de"
