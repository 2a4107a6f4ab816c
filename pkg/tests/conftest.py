import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import pytest

from angulated import validate_params


@pytest.fixture(scope="session")
def p449():
    return validate_params(4, 4, 9)


@pytest.fixture(scope="session")
def p223():
    return validate_params(2, 2, 3)


@pytest.fixture(scope="session")
def p234():
    return validate_params(2, 3, 4)


@pytest.fixture(scope="session", params=[(2, 2, 3), (2, 3, 4), (4, 4, 9)])
def any_params(request):
    return validate_params(*request.param)
