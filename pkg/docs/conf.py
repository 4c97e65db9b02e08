# -*- coding: utf-8 -*-
#
# thsolve documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.coverage',
              'sphinx.ext.mathjax',
              'numpydoc']

numpydoc_class_members_toctree = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'thsolve'
copyright = u'2026 The thsolve developers'

import thsolve
release = thsolve.__version__
version = ".".join(release.split(".")[:2])

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
    ('index', 'thsolve.tex', u'thsolve Documentation',
     u'The thsolve developers', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'thsolve', u'thsolve Documentation',
     [u'The thsolve developers'], 1)
]
