# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import sys
import os

sys.path.insert(0, os.path.abspath('../'))

# -- Project information -----------------------------------------------------

project = u'Herbrand Lab'
copyright = u'2024, Herbrand Lab developers'
author = u'Herbrand Lab developers'

# The short X.Y version
version = u'0.3'
# The full version, including alpha/beta/rc tags
release = u'0.3.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.githubpages',
    'sphinxarg.ext',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']

source_suffix = ['.rst']

master_doc = 'index'

language = None

exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"

html_static_path = ['_static']


# -- Options for HTMLHelp output ---------------------------------------------

htmlhelp_basename = 'Herbrand_Lab_Libdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'Herbrand_Lab.tex', u'Herbrand Lab Documentation',
     u'Herbrand Lab developers', 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'herbrand_lab', u'Herbrand Lab Documentation',
     [author], 1)
]


# -- Options for Texinfo output ----------------------------------------------

texinfo_documents = [
    (master_doc, 'Herbrand_Lab', u'Herbrand Lab Documentation',
     author, 'Herbrand_Lab',
     'Herbrand functions, Swan conductors and adjoint slopes.',
     'Miscellaneous'),
]


# -- Options for todo extension ----------------------------------------------

todo_include_todos = True
