#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# codedit documentation build configuration file.

import sys, os

# Make the package importable from the repository root.
cwd = os.getcwd()
parent = os.path.dirname(cwd)
sys.path.insert(0, parent)

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'codedit'
copyright = u'codedit developers'

version = '0.1.0'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for output ------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'codeditdoc'

latex_documents = [
    ('index', 'codedit.tex', u'codedit Documentation',
     u'codedit developers', 'manual'),
]

man_pages = [
    ('index', 'codedit', u'codedit Documentation',
     [u'codedit developers'], 1),
]
