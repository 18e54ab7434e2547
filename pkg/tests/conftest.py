import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from videal.graphs import Graph, complete_graph, cycle_graph, path_graph
from videal.monomials import Monomial, MonomialIdeal, ideal, monomial, prime_ideal


def edge_ideal_of_cycle(n: int) -> MonomialIdeal:
    gens = [
        Monomial(tuple(1 if j in (i, (i + 1) % n) else 0 for j in range(n)))
        for i in range(n)
    ]
    return MonomialIdeal(n, gens)


@pytest.fixture(scope="session")
def triangle_ideal():
    return edge_ideal_of_cycle(3)


@pytest.fixture(scope="session")
def c5_edge_ideal():
    return edge_ideal_of_cycle(5)


@pytest.fixture(scope="session")
def c5_cover_ideal():
    from videal.graphs import cover_ideal

    return cover_ideal(cycle_graph(5))


@pytest.fixture(scope="session")
def small_ideal_corpus():
    """A mixed bag of small ideals used by cross-checking property tests."""
    return [
        prime_ideal(2, [0, 1]),
        prime_ideal(3, [0, 1, 2]),
        ideal(2, monomial(2, x1=2), monomial(2, x1=1, x2=1)),
        ideal(2, monomial(2, x1=3), monomial(2, x1=2, x2=1), monomial(2, x2=2)),
        ideal(3, monomial(3, x1=1, x2=1), monomial(3, x2=1, x3=1)),
        edge_ideal_of_cycle(3),
        edge_ideal_of_cycle(4),
        edge_ideal_of_cycle(5),
        ideal(3, monomial(3, x1=1), monomial(3, x2=1, x3=1)),
        ideal(3, monomial(3, x1=2, x2=1), monomial(3, x2=2, x3=1), monomial(3, x3=2)),
        ideal(4, monomial(4, x1=1, x2=1), monomial(4, x3=1, x4=1)),
        ideal(4, monomial(4, x1=1, x2=1, x3=1), monomial(4, x3=1, x4=1)),
    ]


@pytest.fixture(scope="session")
def squarefree_corpus_3vars():
    from videal.harness import squarefree_ideal_corpus

    return squarefree_ideal_corpus(3, 6)


@pytest.fixture(scope="session")
def squarefree_corpus_4vars():
    from videal.harness import squarefree_ideal_corpus

    return squarefree_ideal_corpus(4, 6)


@pytest.fixture(scope="session")
def small_graphs():
    return {
        "K2": Graph(2, [(0, 1)]),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C3": cycle_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K4": complete_graph(4),
    }
