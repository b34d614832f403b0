import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


@pytest.fixture(scope="session")
def am5():
    from fqcurves import artin_mumford
    return artin_mumford(5)


@pytest.fixture(scope="session")
def am7():
    from fqcurves import artin_mumford
    return artin_mumford(7)


@pytest.fixture(scope="session")
def hurwitz17():
    from fqcurves import hurwitz
    return hurwitz(4, 3, 17)


@pytest.fixture(scope="session")
def sextic():
    from fqcurves import product_sextic
    return product_sextic()
