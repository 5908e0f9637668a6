import pytest

from convexcodes import kernels
from convexcodes.code import parse_words


@pytest.fixture
def sample_code():
    return parse_words(4, ["", "12", "34", "123"])


@pytest.fixture
def path_code():
    return parse_words(4, ["", "1", "2", "4", "12", "24", "34"])


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    previous = kernels.backend_name()
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)
