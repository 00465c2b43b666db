# -*- coding: utf-8 -*-
#
# tropfano documentation build configuration file.

import sys
import os

# the package lives two levels up
sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'tropfano'
copyright = u'2024, tropfano developers'
author = u'tropfano developers'

version = u'0.1.0'
release = u'0.1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'classic'
html_static_path = ['_static']
htmlhelp_basename = 'tropfanodoc'

latex_elements = {
}
latex_documents = [
    (master_doc, 'tropfano.tex', u'tropfano Documentation',
     u'tropfano developers', 'manual'),
]

man_pages = [
    (master_doc, 'tropfano', u'tropfano Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'tropfano', u'tropfano Documentation',
     author, 'tropfano', 'Tropical Fano schemes in exact arithmetic.',
     'Miscellaneous'),
]
