import sys

import numpy as np
import pytest
from hypothesis import settings

from minibox_ph.generators import uniform
from minibox_ph.geometry import PointCloud, preprocess

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def random_cloud(n, d, seed):
    return preprocess(uniform(n, d, seed), rng_seed=seed)


def cloud_of(rows):
    return PointCloud(np.array(rows, dtype=np.float64))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
