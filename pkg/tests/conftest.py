from functools import lru_cache

import pytest

from hypergf import make_field


@lru_cache(maxsize=None)
def _field(p, r=1):
    return make_field(p, r)


@pytest.fixture
def field():
    """Memoized field constructor shared across the whole test session."""
    return _field
