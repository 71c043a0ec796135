import shutil
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def oeis_cache(tmp_path, monkeypatch):
    """A cache dir pre-filled with the frozen b-files; the network is disabled."""
    cache = tmp_path / "oeis"
    cache.mkdir()
    for p in FIXTURES.glob("b*.txt"):
        shutil.copy(p, cache / p.name)
    monkeypatch.setenv("OEIS_CACHE_DIR", str(cache))

    def no_network(*args, **kwargs):
        raise AssertionError("tests must not touch the network")

    monkeypatch.setattr("hankelkit.oeis.http_get", no_network)
    return cache
