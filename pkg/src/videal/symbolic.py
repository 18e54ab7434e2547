"""Symbolic powers of monomial ideals, and the polyhedral invariants they feed.

Both textbook definitions of the k-th symbolic power are supported: the
intersection of localizations at the minimal primes, or at all associated
primes.  They agree whenever Ass(I) = Min(I), in particular for square-free
ideals.  Localization at a monomial prime P is realized as saturation of
I^k by the product of the variables outside P.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .decomposition import associated_primes, minimal_primes
from .errors import UnsupportedInputError
from .linprog import (
    DEFAULT_VERTEX_DIM_CAP,
    RationalPolyhedron,
    enumerate_vertices,
    lp_minimize,
)
from .monomials import Monomial, MonomialIdeal, intersect_all


class SymbolicPowerVariant(enum.Enum):
    MIN = "min"
    ASS = "ass"


def _localization_primes(ideal: MonomialIdeal, variant: SymbolicPowerVariant):
    if variant is SymbolicPowerVariant.MIN:
        return minimal_primes(ideal)
    return associated_primes(ideal)


def symbolic_power(
    ideal: MonomialIdeal,
    k: int,
    variant: SymbolicPowerVariant = SymbolicPowerVariant.MIN,
    base_power: MonomialIdeal | None = None,
) -> MonomialIdeal:
    """k-th symbolic power: intersect saturations of I^k at each prime.

    ``base_power`` lets callers reuse an already computed I^k (it is not
    validated beyond the ambient ring).
    """
    if k < 1:
        raise ValueError("symbolic power needs k >= 1")
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("symbolic power needs a proper non-zero ideal")
    power = base_power if base_power is not None else ideal.power(k)
    n = ideal.nvars
    pieces = []
    for prime in sorted(_localization_primes(ideal, variant), key=sorted):
        outside = [0] * n
        for i in range(n):
            if i not in prime:
                outside[i] = 1
        pieces.append(power.saturate(Monomial(outside)))
    return intersect_all(pieces)


def symbolic_power_squarefree_shortcut(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Oracle route for square-free ideals: intersection of P^k over Min(I)."""
    if not ideal.is_squarefree():
        raise UnsupportedInputError("shortcut only valid for square-free ideals")
    from .decomposition import prime_of

    return intersect_all(
        prime_of(ideal.nvars, p).power(k) for p in minimal_primes(ideal)
    )


def has_symbolic_strong_persistence_upto(
    ideal: MonomialIdeal,
    max_k: int,
    variant: SymbolicPowerVariant = SymbolicPowerVariant.MIN,
) -> bool:
    """Whether (I^(k) : I^(1)) = I^(k-1) holds for all 2 <= k <= max_k."""
    if max_k < 2:
        raise ValueError("persistence window needs max_k >= 2")
    first = symbolic_power(ideal, 1, variant)
    power = ideal
    prev = first
    for k in range(2, max_k + 1):
        power = power.multiply(ideal)
        current = symbolic_power(ideal, k, variant, base_power=power)
        if current.colon(first) != prev:
            return False
        prev = current
    return True


def has_strong_persistence_upto(ideal: MonomialIdeal, max_k: int) -> bool:
    """Whether (I^{k+1} : I) = I^k holds for all 1 <= k < max_k."""
    if max_k < 2:
        raise ValueError("persistence window needs max_k >= 2")
    prev = ideal
    for _ in range(1, max_k):
        nxt = prev.multiply(ideal)
        if nxt.colon(ideal) != prev:
            return False
        prev = nxt
    return True


# -- symbolic polyhedron ------------------------------------------------------


def symbolic_polyhedron(ideal: MonomialIdeal) -> RationalPolyhedron:
    """{y >= 0 : sum_{i in P} y_i >= 1 for each minimal prime P}.

    This is the square-free specialization of intersecting the Newton
    polyhedra of the minimal primary components; general monomial input is
    rejected.
    """
    if not ideal.is_squarefree():
        raise UnsupportedInputError("symbolic polyhedron implemented for square-free ideals")
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("symbolic polyhedron needs a proper non-zero ideal")
    n = ideal.nvars
    constraints = []
    for prime in sorted(minimal_primes(ideal), key=sorted):
        coeffs = [Fraction(1) if i in prime else Fraction(0) for i in range(n)]
        constraints.append((coeffs, Fraction(1)))
    return RationalPolyhedron(n, constraints)


def waldschmidt_constant(ideal: MonomialIdeal) -> Fraction:
    """Minimum coordinate sum over the symbolic polyhedron (exact rational)."""
    poly = symbolic_polyhedron(ideal)
    value, _ = lp_minimize(poly, [Fraction(1)] * poly.dimension)
    return value


def delta_invariant(
    ideal: MonomialIdeal, max_dim: int = DEFAULT_VERTEX_DIM_CAP
) -> Fraction:
    """Maximum coordinate sum over the vertices of the symbolic polyhedron."""
    poly = symbolic_polyhedron(ideal)
    verts = enumerate_vertices(poly, max_dim=max_dim)
    return max(sum(v) for v in verts)
