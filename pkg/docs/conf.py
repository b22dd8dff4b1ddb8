# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'sullivan'
copyright = '2022, sullivan contributors'
author = 'sullivan contributors'

# The short X.Y version
version = '1.0.0'

# The full version, including alpha/beta/rc tags
release = '1.0.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx_autodoc_typehints',
]

language = 'en'

exclude_patterns = ['_build']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_theme_options = {
    'navigation_depth': 3,
    'collapse_navigation': False,
}

# -- Extension configuration -------------------------------------------------

autosummary_generate = True

autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
}

# The command line and the report renderers import these at module level.
autodoc_mock_imports = ['click', 'loguru', 'pyparsing', 'rich']

# sphinx_autodoc_typehints
typehints_fully_qualified = False
always_document_param_types = False
simplify_optional_unions = True

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
}
