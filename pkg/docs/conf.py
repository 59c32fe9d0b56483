# -*- coding: utf-8 -*-
#
# pframe documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.todo'
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'pframe'
copyright = u'2026, The pframe developers'

# The version info for the project, read from the file that release.sh
# writes.
with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'version')) as fh:
    release = fh.read().strip()
version = '.'.join(release.split('.')[:2])

exclude_patterns = ['_build']

# The reST default role (used for this markup: `text`) to use for all
# documents. The docstrings write their formulas in single backticks.
default_role = 'math'

pygments_style = 'sphinx'

todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'

html_static_path = []

htmlhelp_basename = 'pframedoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'pframe.tex', u'pframe Documentation',
   u'The pframe developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'pframe', u'pframe Documentation',
     [u'The pframe developers'], 1)
]

# -- Options for autodoc --------------------------------------------------

autodoc_default_options = {"members": True, "show-inheritance": True}
