import pytest

from pbei.algebra import DEFAULT_PRIME
from pbei.betti import koszul_betti
from pbei.graphs import automorphisms
from pbei.ideals import parity_ideal


def pytest_addoption(parser):
    parser.addoption(
        "--n5",
        action="store_true",
        default=False,
        help="run the opt-in five-vertex spot checks (slow)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--n5"):
        return
    skip = pytest.mark.skip(reason="five-vertex spot checks need --n5")
    for item in items:
        if "n5" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def betti_of():
    """Session-cached parity-ideal Betti tables keyed by (graph, window, prime)."""
    cache = {}

    def compute(g, i_max, j_max, p=DEFAULT_PRIME):
        key = (g, i_max, j_max, p)
        if key not in cache:
            cache[key] = koszul_betti(
                parity_ideal(g, p), i_max, j_max, vertex_symmetries=automorphisms(g)
            )
        return cache[key]

    return compute
