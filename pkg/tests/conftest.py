from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from whapar.constructors import (cyclic_group, discrete_groupoid, groupoid_algebra, klein_group,
                                 pair_groupoid, sweedler_pair, trivial_group)
from whapar.errors import NotStabilizedError
from whapar.hpar import build_hpar, e_calculus, hpar_presentation

settings.register_profile("whapar", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("whapar")

GROUPOIDS = {
    "trivial": trivial_group,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Klein": klein_group,
    "discrete2": lambda: discrete_groupoid(2),
    "pair2": lambda: pair_groupoid(2),
}
SMALL = ["trivial", "Z2", "Z3", "discrete2", "pair2"]


@lru_cache(maxsize=None)
def groupoid(name):
    return GROUPOIDS[name]()


@lru_cache(maxsize=None)
def algebra(name):
    if name == "sweedler":
        return sweedler_pair()
    return groupoid_algebra(groupoid(name))


@lru_cache(maxsize=None)
def hpar(name):
    return build_hpar(algebra(name))


@lru_cache(maxsize=None)
def ecalc(name):
    return e_calculus(hpar(name))


@lru_cache(maxsize=None)
def hpar_or_presentation(name):
    try:
        return hpar(name)
    except NotStabilizedError:
        return hpar_presentation(algebra(name))


def ok(rep):
    """Assert a report passed, showing its first failures otherwise."""
    assert rep.ok, "%s\n%s" % (rep.summary(), "\n".join(map(str, rep.failures[:5])))
    return rep


@pytest.fixture(params=SMALL)
def small_name(request):
    return request.param


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
