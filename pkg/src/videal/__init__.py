"""videal: exact invariants of monomial ideals and their power filtrations.

v-numbers, symbolic powers under both standard definitions, Waldschmidt
constants and the vertex-maximum delta via exact rational linear
programming, Castelnuovo-Mumford regularity through subset homology, and a
verification harness that turns the governing inequalities into finite,
reproducible checks.
"""

from .complexes import SimplicialComplex
from .decomposition import (
    IrreducibleComponent,
    PrimeSupport,
    associated_primes,
    c_constant,
    irreducible_decomposition,
    minimal_primes,
)
from .errors import (
    AmbientMismatchError,
    InfeasibleError,
    ResourceLimitError,
    UnboundedError,
    UndefinedInvariantError,
    UnsupportedInputError,
)
from .graphs import (
    Graph,
    Hypergraph,
    best_induced_matching_weight,
    complete_graph,
    cover_ideal,
    cycle_graph,
    edge_ideal,
    fakhari_gk,
    graph_edge_ideal,
    induced_matching_number,
    is_cm_very_well_covered,
    is_polymatroidal,
    is_very_well_covered,
    minimal_vertex_covers,
    odd_cycle_condition,
    path_graph,
    whisker_graph,
)
from .linprog import RationalPolyhedron, enumerate_vertices, lp_minimize
from .monomials import Monomial, MonomialIdeal, ideal, minimalize, monomial, prime_ideal
from .regularity import (
    BettiTable,
    betti_numbers,
    is_cohen_macaulay,
    polarize,
    regularity,
    stanley_reisner_complex,
)
from .symbolic import (
    SymbolicPowerVariant,
    delta_invariant,
    has_strong_persistence_upto,
    has_symbolic_strong_persistence_upto,
    symbolic_polyhedron,
    symbolic_power,
    waldschmidt_constant,
)
from .vnumber import VReport, v_number, v_polarization_check, v_sequence

__version__ = "0.1.0"
