import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_rank, naive_reduced_homology
from videal.complexes import (
    SimplicialComplex,
    collapse,
    downward_closure,
    enumerate_faces,
    exact_rank,
    homology_g_vector,
    mask_of,
    maximalize,
    minimal_transversals,
    minimalize_masks,
)


def test_mask_utilities():
    assert mask_of([0, 2]) == 0b101
    assert maximalize([0b01, 0b11, 0b10]) == [0b11]
    assert minimalize_masks([0b01, 0b11, 0b10]) == [0b01, 0b10]


def test_minimal_transversals_of_cycle():
    edges = [mask_of(e) for e in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]]
    trs = minimal_transversals(edges)
    assert len(trs) == 5
    assert all(t.bit_count() == 3 for t in trs)


def test_minimal_transversals_match_brute_force():
    families = [
        [(0, 1)],
        [(0, 1), (1, 2)],
        [(0, 1), (2, 3)],
        [(0, 1, 2), (2, 3), (0, 3)],
        [(0,), (0, 1, 2)],
    ]
    for fam in families:
        n = max(v for e in fam for v in e) + 1
        masks = [mask_of(e) for e in fam]
        got = set(minimal_transversals(masks))
        all_hitting = [
            mask_of(c)
            for size in range(n + 1)
            for c in itertools.combinations(range(n), size)
            if all(mask_of(c) & m for m in masks)
        ]
        want = {
            t for t in all_hitting
            if not any(o != t and o & t == o for o in all_hitting)
        }
        assert got == want


def test_enumerate_faces_counts():
    # Independence complex of an edge: everything except the edge itself.
    faces = enumerate_faces(0b11, [0b11])
    assert sorted(faces) == [0b00, 0b01, 0b10]
    # cap triggers
    assert enumerate_faces(0b1111, [0b1100], cap=3) is None


def test_downward_closure():
    faces = downward_closure([0b111])
    assert len(faces) == 8
    assert downward_closure([0]) == [0]
    assert downward_closure([]) == []


def test_exact_rank_against_dense():
    mats = [
        [[1, 0], [0, 1]],
        [[1, 1], [1, 1]],
        [[2, 4], [1, 2]],
        [[1, -1, 0], [0, 1, -1], [-1, 0, 1]],
        [[3]],
        [[0]],
    ]
    for rows in mats:
        columns = []
        for j in range(len(rows[0])):
            col = {i: rows[i][j] for i in range(len(rows)) if rows[i][j]}
            columns.append(col)
        assert exact_rank(columns) == dense_rank(rows)


def test_homology_circle_and_sphere():
    circle = downward_closure([0b011, 0b110, 0b101])
    assert homology_g_vector(circle) == (0, 0, 1)  # H_1 = Z
    sphere = downward_closure(
        [mask_of(c) for c in itertools.combinations(range(4), 3)]
    )
    assert homology_g_vector(sphere) == (0, 0, 0, 1)  # H_2


def test_homology_conventions():
    assert homology_g_vector([]) == ()            # void
    assert homology_g_vector([0]) == (1,)         # irrelevant: rank 1 in dim -1
    assert homology_g_vector(downward_closure([0b1])) == ()  # point


def test_collapse_preserves_homology():
    complexes = [
        downward_closure([0b011, 0b110, 0b101]),
        downward_closure([0b111]),
        downward_closure([0b0011, 0b0110, 0b1100, 0b1001]),
        downward_closure([0b011, 0b100]),
    ]
    for faces in complexes:
        before = homology_g_vector(faces)
        after = homology_g_vector(collapse(set(faces)))
        assert before == after


@st.composite
def random_complexes(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    count = draw(st.integers(min_value=1, max_value=5))
    facets = [
        draw(st.integers(min_value=0, max_value=(1 << n) - 1)) for _ in range(count)
    ]
    return downward_closure(facets)


@given(random_complexes())
@settings(max_examples=80, deadline=None)
def test_homology_matches_naive(faces):
    got = homology_g_vector(faces)
    want = naive_reduced_homology(
        [frozenset(i for i in range(6) if f >> i & 1) for f in faces]
    )
    want_g = []
    top = max(want) if want else -2
    for d in range(-1, top + 1):
        want_g.append(want.get(d, 0))
    while want_g and want_g[-1] == 0:
        want_g.pop()
    assert list(got) == want_g


@given(random_complexes())
@settings(max_examples=60, deadline=None)
def test_collapse_matches_naive_homology(faces):
    before = homology_g_vector(faces)
    after = homology_g_vector(collapse(set(faces)))
    assert before == after


def test_simplicial_complex_type():
    c = SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)])
    assert c.reduced_homology_rank(1) == 1
    assert c.reduced_homology_rank(0) == 0
    assert c.reduced_homology_rank(5) == 0
    assert c.dim() == 1
    assert c.euler_characteristic() == -1  # circle: chi~ = -(rank H1)

    full = SimplicialComplex(3, [(0, 1, 2)])
    assert all(full.reduced_homology_rank(d) == 0 for d in range(-1, 3))

    two_points = SimplicialComplex(2, [(0,), (1,)])
    assert two_points.reduced_homology_rank(0) == 1

    void = SimplicialComplex(2, [])
    irrelevant = SimplicialComplex(2, [()])
    assert void.is_void
    assert not irrelevant.is_void
    assert irrelevant.reduced_homology_rank(-1) == 1
    assert void != irrelevant


def test_link():
    c = SimplicialComplex(4, [(0, 1, 2), (1, 2, 3)])
    link = c.link((1, 2))
    assert sorted(sorted(f) for f in link.facets) == [[0], [3]]
    assert link.reduced_homology_rank(0) == 1


def test_euler_characteristic_matches_alternating_homology_sum():
    complexes = [
        SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)]),
        SimplicialComplex(4, [(0, 1, 2), (2, 3)]),
        SimplicialComplex(2, [(0,), (1,)]),
        SimplicialComplex(2, [()]),
    ]
    for c in complexes:
        g = c.g_vector()
        # chi~ = sum (-1)^d rank H~_d with g[t] the rank in dimension t-1
        chi = sum((-1) ** (t - 1) * r for t, r in enumerate(g))
        assert c.euler_characteristic() == chi
