import pytest

from qgsurf import corpus, kernel

_scan_cache: dict = {}


def scan_full():
    """Exhaustive kernel scan at the acceptance bounds, computed once."""
    if "result" not in _scan_cache:
        _scan_cache["result"] = kernel.scan_chains(8, 12)
    return _scan_cache["result"]


@pytest.fixture(scope="session")
def corpus_results():
    """All six shipped examples, verified once per session."""
    return {r.name: r for r in corpus.verify_all()}


@pytest.fixture(scope="session")
def full_scan():
    return scan_full()
