import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "adgraph.settings")
django.setup()
