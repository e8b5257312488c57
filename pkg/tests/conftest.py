import os

import pytest
from hypothesis import settings

settings.register_profile("dev", max_examples=60, deadline=None)
settings.load_profile("dev")

extended = pytest.mark.skipif(
    not os.environ.get("RUN_EXTENDED"),
    reason="extended reproduction; set RUN_EXTENDED=1 to run")
