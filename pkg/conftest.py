"""Configure Django for pytest: the tests are Django SimpleTestCases."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'quandle_toolkit.settings')
django.setup()
