"""Irreducible decomposition, associated and minimal primes of monomial ideals."""

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet

from .errors import UndefinedInvariantError
from .monomials import Monomial, MonomialIdeal, intersect_all, prime_ideal

# A prime generated by variables is identified with its set of 0-based indices.
PrimeSupport = FrozenSet[int]


class IrreducibleComponent:
    """An irreducible monomial ideal (x_i^{a_i} : i in support).

    entries maps variable index to a positive exponent.
    """

    __slots__ = ("nvars", "entries")

    def __init__(self, nvars: int, entries: dict[int, int]):
        if any(e < 1 for e in entries.values()):
            raise ValueError("irreducible component exponents must be >= 1")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "entries", tuple(sorted(entries.items())))

    def __setattr__(self, name, value):
        raise AttributeError("IrreducibleComponent is immutable")

    def radical(self) -> PrimeSupport:
        return frozenset(i for i, _ in self.entries)

    def to_ideal(self) -> MonomialIdeal:
        gens = []
        for i, a in self.entries:
            exps = [0] * self.nvars
            exps[i] = a
            gens.append(Monomial(exps))
        return MonomialIdeal(self.nvars, gens)

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """Ideal containment other <= self, i.e. every generator of other lies here."""
        mine = dict(self.entries)
        return all(i in mine and mine[i] <= a for i, a in other.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IrreducibleComponent)
            and self.nvars == other.nvars
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.entries))

    def __repr__(self) -> str:
        return f"IrreducibleComponent({self.nvars}, {dict(self.entries)})"


def _check_decomposable(ideal: MonomialIdeal) -> None:
    if ideal.is_zero or ideal.is_unit:
        raise UndefinedInvariantError("decomposition needs a proper non-zero ideal")


def _split_collect(ideal: MonomialIdeal, out: set[IrreducibleComponent],
                   seen: set[MonomialIdeal]) -> None:
    if ideal in seen:
        return
    seen.add(ideal)
    for g in ideal.gens:
        supp = [i for i, e in enumerate(g.exponents) if e > 0]
        if len(supp) > 1:
            # Split on the lexicographically first variable of the first
            # generator that is not a pure power.
            i = supp[0]
            u = [0] * ideal.nvars
            u[i] = g.exponents[i]
            v = list(g.exponents)
            v[i] = 0
            for piece in (u, v):
                extra = MonomialIdeal(ideal.nvars, ideal.gens + (Monomial(piece),))
                _split_collect(extra, out, seen)
            return
    # All generators are pure powers: the ideal itself is irreducible.
    entries: dict[int, int] = {}
    for g in ideal.gens:
        for i, e in enumerate(g.exponents):
            if e > 0:
                entries[i] = e
    out.add(IrreducibleComponent(ideal.nvars, entries))


def _drop_redundant(comps: list[IrreducibleComponent]) -> list[IrreducibleComponent]:
    """Greedily remove components containing the intersection of the others."""
    comps = sorted(set(comps), key=lambda c: c.entries)
    big = 1 + max((a for c in comps for _, a in c.entries), default=1)
    changed = True
    while changed:
        changed = False
        for idx, c in enumerate(comps):
            supp = dict(c.entries)
            # The coordinatewise largest monomial outside c; if it lies in
            # every other component, c is needed, otherwise redundant.
            probe = tuple(
                supp[i] - 1 if i in supp else big for i in range(c.nvars)
            )
            needed = True
            for j, other in enumerate(comps):
                if j == idx:
                    continue
                other_entries = other.entries
                if not any(probe[i] >= a for i, a in other_entries):
                    needed = False
                    break
            if not needed and len(comps) > 1:
                comps.pop(idx)
                changed = True
                break
    return comps


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The unique irredundant irreducible decomposition, canonically ordered."""
    _check_decomposable(ideal)
    out: set[IrreducibleComponent] = set()
    _split_collect(ideal, out, set())
    comps = _drop_redundant(list(out))
    return tuple(sorted(comps, key=lambda c: c.entries))


def reintersect(comps) -> MonomialIdeal:
    """Intersection of components; used to validate decompositions."""
    return intersect_all(c.to_ideal() for c in comps)


def associated_primes(ideal: MonomialIdeal) -> frozenset[PrimeSupport]:
    """Radicals of the irredundant irreducible components."""
    return frozenset(c.radical() for c in irreducible_decomposition(ideal))


def minimal_primes(ideal: MonomialIdeal) -> frozenset[PrimeSupport]:
    ass = associated_primes(ideal)
    return frozenset(
        p for p in ass if not any(q < p for q in ass)
    )


def prime_of(nvars: int, support: PrimeSupport) -> MonomialIdeal:
    return prime_ideal(nvars, support)


def c_constant(ideal: MonomialIdeal) -> int:
    """max of alpha(p) over the minimal primes; 1 for every monomial ideal.

    Computed, not hard-coded: the primes are variable-generated, so each
    alpha is 1, but the maximum is still taken over Min(I).
    """
    _check_decomposable(ideal)
    return max(
        prime_of(ideal.nvars, p).alpha() for p in minimal_primes(ideal)
    )
