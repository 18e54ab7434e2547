"""Graphs, hypergraphs, their ideals, and the graph-theoretic predicates.

Vertices are 0-based.  All searches (covers, independent sets, induced
matchings, odd cycles) are exhaustive with light pruning; corpus sizes stay
small enough that correctness-first enumeration is the right trade.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .complexes import bits, mask_of, maximalize, minimal_transversals, minimalize_masks
from .errors import UnsupportedInputError
from .monomials import Monomial, MonomialIdeal, intersect_all, prime_ideal
from .regularity import is_cohen_macaulay, polarize
from .symbolic import SymbolicPowerVariant, symbolic_power


class Graph:
    """Simple graph: no loops, no multi-edges; isolated vertices allowed."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            es.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def has_edges(self) -> bool:
        return bool(self.edges)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def isolated_vertices(self) -> list[int]:
        seen = set()
        for a, b in self.edges:
            seen.add(a)
            seen.add(b)
        return [v for v in range(self.n) if v not in seen]

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"


class Hypergraph:
    """Simple hypergraph: edge set of inclusion-incomparable vertex subsets."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        masks = []
        for e in edges:
            m = mask_of(e)
            if m == 0:
                raise ValueError("empty hyperedge")
            if m >= 1 << n:
                raise ValueError("hyperedge outside vertex range")
            masks.append(m)
        mins = minimalize_masks(masks)
        if len(mins) != len(set(masks)):
            raise ValueError("hyperedges must be inclusion-incomparable")
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "edges", tuple(frozenset(bits(m)) for m in mins)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @property
    def has_edges(self) -> bool:
        return bool(self.edges)

    def edge_masks(self) -> list[int]:
        return [mask_of(e) for e in self.edges]

    def is_uniform(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    @classmethod
    def from_graph(cls, graph: Graph) -> "Hypergraph":
        return cls(graph.n, graph.edges)

    def __repr__(self) -> str:
        return f"Hypergraph({self.n}, {sorted(sorted(e) for e in self.edges)})"


def hypergraph_of_ideal(ideal: MonomialIdeal) -> Hypergraph:
    """Generator supports of a square-free ideal, as a hypergraph."""
    if not ideal.is_squarefree():
        raise UnsupportedInputError("only square-free ideals define a hypergraph")
    return Hypergraph(ideal.nvars, (g.support() for g in ideal.gens))


# -- ideals from combinatorics --------------------------------------------------


def edge_ideal(hypergraph: Hypergraph) -> MonomialIdeal:
    if not hypergraph.has_edges:
        raise ValueError("edge ideal needs at least one edge")
    gens = [
        Monomial(tuple(1 if v in e else 0 for v in range(hypergraph.n)))
        for e in hypergraph.edges
    ]
    return MonomialIdeal(hypergraph.n, gens)


def graph_edge_ideal(graph: Graph) -> MonomialIdeal:
    return edge_ideal(Hypergraph.from_graph(graph))


def minimal_vertex_covers(graph: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex covers, deterministic order."""
    if not graph.has_edges:
        raise ValueError("vertex covers need at least one edge")
    masks = minimal_transversals([mask_of(e) for e in graph.edges])
    return [frozenset(bits(m)) for m in masks]


def minimal_covers_hypergraph(h: Hypergraph) -> list[frozenset[int]]:
    if not h.has_edges:
        raise ValueError("vertex covers need at least one edge")
    return [frozenset(bits(m)) for m in minimal_transversals(h.edge_masks())]


def cover_ideal(graph: Graph) -> MonomialIdeal:
    """Generated by the minimal-cover monomials; checked against the
    intersection of edge primes, which is the same ideal by duality."""
    if not graph.has_edges:
        raise ValueError("cover ideal needs at least one edge")
    from_covers = MonomialIdeal(
        graph.n,
        [
            Monomial(tuple(1 if v in c else 0 for v in range(graph.n)))
            for c in minimal_vertex_covers(graph)
        ],
    )
    from_primes = intersect_all(
        prime_ideal(graph.n, e) for e in graph.edges
    )
    if from_covers != from_primes:
        raise AssertionError("cover ideal routes disagree; this is a bug")
    return from_covers


# -- independence and well-coveredness ------------------------------------------


def maximal_independent_sets(graph: Graph) -> list[frozenset[int]]:
    covers = minimal_vertex_covers(graph)
    full = frozenset(range(graph.n))
    return [full - c for c in covers]


def independent_sets(graph: Graph) -> list[int]:
    """All independent sets as bitmasks (exhaustive)."""
    adj = graph.adjacency_masks()
    out = [0]

    def rec(start: int, face: int) -> None:
        for v in range(start, graph.n):
            if adj[v] & face:
                continue
            out.append(face | (1 << v))
            rec(v + 1, face | (1 << v))

    rec(0, 0)
    return out


def is_very_well_covered(graph: Graph) -> bool:
    """Even vertex count and every maximal independent set of size n/2."""
    if graph.isolated_vertices():
        raise ValueError("very-well-covered is defined for graphs without isolated vertices")
    if graph.n % 2:
        return False
    half = graph.n // 2
    return all(len(s) == half for s in maximal_independent_sets(graph))


def is_cm_very_well_covered(graph: Graph) -> bool:
    if graph.isolated_vertices():
        raise ValueError("the CM very-well-covered test needs no isolated vertices")
    return is_very_well_covered(graph) and is_cohen_macaulay(graph_edge_ideal(graph))


# -- Fakhari expansion -----------------------------------------------------------


def fakhari_gk(graph: Graph, k: int) -> tuple[Graph, dict[tuple[int, int], int]]:
    """The expansion on vertices (i, p), p <= k, joining copies with p + q <= k + 1.

    Returns the graph and the naming map (i, p) -> vertex index, with copies
    of a vertex consecutive; this matches the variable order produced by
    polarization of the symbolic powers of the cover ideal.
    """
    if k < 1:
        raise ValueError("expansion needs k >= 1")
    naming = {}
    for i in range(graph.n):
        for p in range(1, k + 1):
            naming[(i, p)] = i * k + (p - 1)
    edges = []
    for u, v in graph.edges:
        for p in range(1, k + 1):
            for q in range(1, k + 1):
                if p + q <= k + 1:
                    edges.append((naming[(u, p)], naming[(v, q)]))
    return Graph(graph.n * k, edges), naming


def cover_polarization_check(graph: Graph, k: int) -> bool:
    """Polarizing the k-th symbolic power of J(G) should give J(G_k)."""
    if k < 1:
        raise ValueError("needs k >= 1")
    if graph.isolated_vertices():
        raise ValueError("needs a graph without isolated vertices")
    jg = cover_ideal(graph)
    polarized, pmap = polarize(symbolic_power(jg, k, SymbolicPowerVariant.MIN))
    gk, naming = fakhari_gk(graph, k)
    target = cover_ideal(gk)
    # Re-embed the polarized generators into the vertex set of G_k.
    embedded = []
    for g in polarized.gens:
        exps = [0] * (graph.n * k)
        for new_idx, e in enumerate(g.exponents):
            if e:
                var, copy = pmap.origin[new_idx]
                exps[naming[(var, copy)]] = e
        embedded.append(Monomial(exps))
    return MonomialIdeal(graph.n * k, embedded) == target


# -- matchings, cycles, polymatroids ---------------------------------------------


def _induced_matchings(h: Hypergraph) -> list[list[int]]:
    """All induced matchings (as lists of edge masks), including the empty one."""
    masks = h.edge_masks()
    out: list[list[int]] = [[]]

    def induced(chosen: list[int]) -> bool:
        union = 0
        for m in chosen:
            union |= m
        for m in masks:
            if m & union == m and m not in chosen:
                return False
        return True

    def rec(start: int, chosen: list[int], union: int) -> None:
        for idx in range(start, len(masks)):
            m = masks[idx]
            if m & union:
                continue
            nxt = chosen + [m]
            if induced(nxt):
                out.append(nxt)
            rec(idx + 1, nxt, union | m)

    rec(0, [], 0)
    return out


def induced_matching_number(h: Hypergraph) -> int:
    """Maximum size of a matching that is induced on its vertex union."""
    if not h.has_edges:
        raise ValueError("induced matching needs at least one edge")
    return max(len(m) for m in _induced_matchings(h))


def graph_induced_matching_number(graph: Graph) -> int:
    return induced_matching_number(Hypergraph.from_graph(graph))


def best_induced_matching_weight(h: Hypergraph) -> int:
    """Largest sum of (|E_i| - 1) over induced matchings that contain at
    least one edge of maximum size; 0 when no matching qualifies."""
    if not h.has_edges:
        raise ValueError("induced matching needs at least one edge")
    dmax = max(m.bit_count() for m in h.edge_masks())
    best = 0
    for matching in _induced_matchings(h):
        if not matching:
            continue
        if max(m.bit_count() for m in matching) != dmax:
            continue
        weight = sum(m.bit_count() - 1 for m in matching)
        best = max(best, weight)
    return best


def _odd_cycle_vertex_sets(graph: Graph) -> list[frozenset[int]]:
    """Vertex sets of odd cycles (subsets carrying a Hamiltonian cycle)."""
    adj = graph.adjacency_masks()
    out = []
    for size in range(3, graph.n + 1, 2):
        for combo in itertools.combinations(range(graph.n), size):
            first = combo[0]
            rest = combo[1:]
            found = False
            for perm in itertools.permutations(rest):
                seq = (first,) + perm
                if all(
                    adj[seq[i]] >> seq[(i + 1) % size] & 1 for i in range(size)
                ):
                    found = True
                    break
            if found:
                out.append(frozenset(combo))
    return out


def odd_cycle_condition(graph: Graph) -> bool:
    """Every vertex has a neighbor on every odd cycle (vacuous when bipartite)."""
    adj = graph.adjacency_masks()
    for cycle in _odd_cycle_vertex_sets(graph):
        cm = mask_of(cycle)
        for v in range(graph.n):
            if not adj[v] & cm:
                return False
    return True


def is_bipartite(graph: Graph) -> bool:
    color = [-1] * graph.n
    adj = graph.adjacency_masks()
    for start in range(graph.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in bits(adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_chordal(graph: Graph) -> bool:
    """Perfect-elimination-ordering test by repeated simplicial deletion."""
    adj = {v: set(graph.neighbors(v)) for v in range(graph.n)}
    remaining = set(range(graph.n))
    while remaining:
        for v in sorted(remaining):
            nbrs = adj[v] & remaining
            if all(
                b in adj[a] for a, b in itertools.combinations(sorted(nbrs), 2)
            ):
                remaining.discard(v)
                break
        else:
            return False
    return True


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Two-generator exchange test; requires an equigenerated ideal."""
    if ideal.is_zero or ideal.is_unit:
        return False
    if not ideal.is_equigenerated():
        return False
    gens = set(ideal.gens)
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(ideal.nvars):
                if u.exponents[i] > v.exponents[i]:
                    ok = False
                    for j in range(ideal.nvars):
                        if u.exponents[j] < v.exponents[j]:
                            swapped = list(u.exponents)
                            swapped[i] -= 1
                            swapped[j] += 1
                            if Monomial(swapped) in gens:
                                ok = True
                                break
                    if not ok:
                        return False
    return True


# -- named families ---------------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return Graph(n, list(itertools.combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def whisker_graph(base: Graph) -> Graph:
    """Attach one pendant leaf to every vertex of the base graph."""
    n = base.n
    edges = list(base.edges) + [(v, n + v) for v in range(n)]
    return Graph(2 * n, edges)
