import pytest

from alcove import build_root_datum, parse_type


@pytest.fixture(scope="session")
def data():
    """Session cache of root data keyed by type name."""
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = build_root_datum(parse_type(name))
        return cache[name]

    return get
