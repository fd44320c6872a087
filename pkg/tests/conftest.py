import os

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    """Generator seeded from SUPERSPEC_SEED so failures can be replayed."""
    return np.random.default_rng(int(os.environ.get("SUPERSPEC_SEED", "0")))
