import math

import pytest

from ruledframe import Interval, LegendreCurve, SampledGrid
from ruledframe.examples import (example1_pair, example2_pair, example3_pair,
                                 helix_curve)


@pytest.fixture(scope="session")
def ex1_curve():
    domain = Interval(0.0, 2.0 * math.pi)
    grid = SampledGrid.uniform(domain, 256)
    gamma, v = example1_pair(domain)
    return LegendreCurve.from_curves(gamma, v, grid)


@pytest.fixture(scope="session")
def ex2_curve():
    domain = Interval(0.0, 2.0 * math.pi)
    grid = SampledGrid.uniform(domain, 256)
    gamma, v = example2_pair(domain)
    return LegendreCurve.from_curves(gamma, v, grid)


@pytest.fixture(scope="session")
def ex3_curve():
    domain = Interval(0.0, math.pi)
    grid = SampledGrid.uniform(domain, 512)
    gamma, v = example3_pair(domain)
    return LegendreCurve.from_curves(gamma, v, grid)


@pytest.fixture(scope="session")
def helix():
    return helix_curve(Interval(0.0, 2.0 * math.pi))
