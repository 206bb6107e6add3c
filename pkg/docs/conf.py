#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SJO documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
import os
import sys
import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('../'))
import sjo

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.doctest',
]

napoleon_use_ivar = True
autodoc_member_order = 'bysource'
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
    }

doctest_global_setup = """
import sjo
import warnings
warnings.filterwarnings("ignore")
sjo.logger.setConsoleLevel('ERROR')
"""

# Add any paths that contain templates here, relative to this directory.
templates_path = ['.templates']

source_parsers = {
    '.md': 'recommonmark.parser.CommonMarkParser',
}
source_suffix = ['.rst', '.md']

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'SJO'
copyright = '2017, EAVISE'
author = 'EAVISE'

# The short X.Y version.
version = sjo.__version__
# The full version, including alpha/beta/rc tags.
release = sjo.__version__

language = None

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['.build', 'Thumbs.db', '.DS_Store']

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# If true, `todo` and `todoList` produce output, else they produce nothing.
todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_theme_options = {
    'collapse_navigation': False,
    'display_version': True,
}

html_sidebars = {
    '**': [
        'relations.html',  # needs 'show_related': True theme option to display
        'searchbox.html',
    ]
}


# -- Options for HTMLHelp output ------------------------------------------

htmlhelp_basename = 'SJOdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'SJO.tex', 'SJO Documentation',
     'EAVISE', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'sjo', 'SJO Documentation',
     [author], 1)
]
