import os

import django

# Mirror runtests.py so the suite collects under pytest.
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "tests.test_settings")
django.setup()
