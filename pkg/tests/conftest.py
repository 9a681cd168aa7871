import logging
import math

import numpy as np
import pytest

from spikyball.coverings import greedy_cover, obtain_cover
from spikyball.geometry import DEFAULT_TOLERANCE
from spikyball.utils.logging import ROOT_LOGGER


@pytest.fixture
def tol():
    return DEFAULT_TOLERANCE


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def circle_cover_pi4():
    """Four evenly spaced points on S^1, certified at radius pi/4."""
    return obtain_cover(1, math.pi / 4)


@pytest.fixture(scope="session")
def circle_cover_pi6():
    return obtain_cover(1, math.pi / 6)


@pytest.fixture(scope="session")
def sphere_cover_pi6():
    """Greedy certified covering of S^2 by pi/6 caps (used in d = 4)."""
    return greedy_cover(2, math.pi / 6, rng_seed=0)


@pytest.fixture(scope="session")
def sphere_cover_pi4():
    return greedy_cover(2, math.pi / 4, rng_seed=0)


@pytest.fixture(autouse=True)
def _restore_package_logger():
    """The CLI configures the package logger; hand it back to caplog afterwards."""
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = True
    logger.disabled = False
    logger.setLevel(logging.NOTSET)
