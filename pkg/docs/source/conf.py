import os
import sys
sys.path.insert(0, os.path.abspath('../../'))

# Sphinx configuration for the chowlab API reference.

project = 'chowlab'
copyright = '2026, chowlab contributors'
author = 'chowlab contributors'
try:
    from chowlab import __version__
    version = __version__
except ImportError:
    version = '0.0.0'
release = version

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx_rtd_theme',
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}

# Matroid and interlacing docstrings use Google style with inline TeX.
napoleon_google_docstring = True
napoleon_numpy_docstring = False
autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
exclude_patterns = ['_build']

# -- HTML output -------------------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_title = f'chowlab {release}'
