import pytest

from oracles import brute_minimal_covers, witness_scan_primes
from videal.decomposition import (
    associated_primes,
    c_constant,
    irreducible_decomposition,
    minimal_primes,
    reintersect,
)
from videal.errors import UndefinedInvariantError
from videal.monomials import MonomialIdeal, ideal, monomial, prime_ideal


def test_principal_squarefree_splits_into_variables():
    i = ideal(2, monomial(2, x1=1, x2=1))
    comps = irreducible_decomposition(i)
    assert [dict(c.entries) for c in comps] == [{0: 1}, {1: 1}]


def test_embedded_component_example():
    i = ideal(2, monomial(2, x1=2), monomial(2, x1=1, x2=1))
    comps = irreducible_decomposition(i)
    assert [dict(c.entries) for c in comps] == [{0: 1}, {0: 2, 1: 1}]
    assert reintersect(comps) == i


def test_triangle_edge_ideal_components(triangle_ideal):
    comps = irreducible_decomposition(triangle_ideal)
    assert [dict(c.entries) for c in comps] == [
        {0: 1, 1: 1},
        {0: 1, 2: 1},
        {1: 1, 2: 1},
    ]


def test_reintersection_on_corpus(small_ideal_corpus):
    for i in small_ideal_corpus:
        assert reintersect(irreducible_decomposition(i)) == i


def test_decomposition_rejects_degenerate():
    with pytest.raises(UndefinedInvariantError):
        irreducible_decomposition(MonomialIdeal.zero(2))
    with pytest.raises(UndefinedInvariantError):
        irreducible_decomposition(MonomialIdeal.unit(2))


def test_associated_primes_examples():
    assert associated_primes(ideal(2, monomial(2, x1=1, x2=1))) == {
        frozenset({0}),
        frozenset({1}),
    }
    assert associated_primes(ideal(2, monomial(2, x1=2), monomial(2, x1=1, x2=1))) == {
        frozenset({0}),
        frozenset({0, 1}),
    }
    xy_yz = ideal(3, monomial(3, x1=1, x2=1), monomial(3, x2=1, x3=1))
    assert associated_primes(xy_yz) == {frozenset({1}), frozenset({0, 2})}


def test_associated_primes_match_witness_scan(small_ideal_corpus):
    for i in small_ideal_corpus:
        if i.nvars > 4:
            continue
        assert associated_primes(i) == witness_scan_primes(i)


def test_minimal_primes_examples(triangle_ideal):
    assert minimal_primes(ideal(2, monomial(2, x1=2), monomial(2, x1=1, x2=1))) == {
        frozenset({0})
    }
    assert minimal_primes(triangle_ideal) == {
        frozenset({0, 1}),
        frozenset({1, 2}),
        frozenset({0, 2}),
    }
    assert minimal_primes(prime_ideal(4, range(4))) == {frozenset(range(4))}


def test_minimal_primes_are_minimal_covers(c5_edge_ideal):
    covers = brute_minimal_covers(5, [(i, (i + 1) % 5) for i in range(5)])
    assert minimal_primes(c5_edge_ideal) == covers


def test_minimal_primes_stable_under_powers(small_ideal_corpus):
    for i in small_ideal_corpus[:8]:
        mins = minimal_primes(i)
        for k in (2, 3):
            assert minimal_primes(i.power(k)) == mins


def test_c_constant_is_one(small_ideal_corpus):
    for i in small_ideal_corpus:
        assert c_constant(i) == 1
