# -*- coding: utf-8 -*-
#
# PyENM documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.


import os
import sys

sys.path.append('../')

from pyenm.info import __minor_version__
from pyenm.info import __version__
from pyenm.info import __release_date__

import time

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('../pyenm'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autosectionlabel',
              'sphinx.ext.autodoc',
              'sphinx.ext.napoleon',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode',
              'sphinxarg.ext',
              'sphinx.ext.inheritance_diagram',
              'nipype.sphinxext.documenter',
              ]

napoleon_numpy_docstring = True

templates_path = ['_templates']

source_suffix = ['.rst']

master_doc = 'index'

# General information about the project.
project = u'PyENM'
copyright = u'2026-{}, The PyENM developers'.format(time.strftime("%Y"))

# The short X.Y version.
version = __minor_version__
# The full version, including alpha/beta/rc tags.
release = __version__

rst_prolog = """
.. |release| replace:: {}
""".format(release)

exclude_patterns = ['_build']

default_role = 'obj'

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_theme_options = {
    'display_version': True
}

html_short_title = u'PyENM'

html_static_path = []

html_last_updated_fmt = '%b %d, %Y'

html_domain_indices = True

html_use_index = True

htmlhelp_basename = 'PyENMdoc'

html_context = {'release_date': __release_date__}

autosectionlabel_prefix_document = True

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
    'papersize': 'a4paper',
    'pointsize': '10pt',
}

latex_documents = [
    ('index', 'PyENM.tex', u'PyENM Documentation',
     u'The PyENM developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'enmtoolkit', u'PyENM Documentation',
     [u'The PyENM developers'], 1)
]
