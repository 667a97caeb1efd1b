# quandles/algebra/__init__.py
"""
The quandle algebra library: words, groups, quandles, presentations and knots.

Modules import each other relative to this package; nothing here pulls in
Django, so the library can be used from plain scripts as well.
"""
