"""The v-number of a monomial ideal and v-sequences along power filtrations.

For each associated prime P the local v-number is the least degree of a
monomial f with (I : f) = P.  Witnesses are searched among monomial
divisors of lcm(generators): capping an exponent of f at its maximum over
the generators never changes I : f, so minimal witnesses always divide the
lcm.  The search runs degree by degree but only over monomials of (I : P),
since f P <= I is necessary; ties within a degree go to the
lexicographically smallest witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import PrimeSupport, associated_primes, prime_of
from .errors import ResourceLimitError, UndefinedInvariantError
from .monomials import Monomial, MonomialIdeal, divisors_of_degree
from .regularity import polarize
from .symbolic import SymbolicPowerVariant, symbolic_power


@dataclass(frozen=True)
class VReport:
    """Global v-number plus one (local v, witness) pair per associated prime."""

    global_v: int
    per_prime: dict[PrimeSupport, tuple[int, Monomial]]

    def local(self, prime: PrimeSupport) -> int:
        return self.per_prime[frozenset(prime)][0]

    def witness(self, prime: PrimeSupport) -> Monomial:
        return self.per_prime[frozenset(prime)][1]


def _witness_candidates(colon_by_prime: MonomialIdeal, lcm: Monomial, degree: int):
    """Degree-d divisors of lcm lying in (I : P), sorted lexicographically."""
    seen: set[Monomial] = set()
    for g in colon_by_prime.gens:
        if g.degree > degree or not g.divides(lcm):
            continue
        room = lcm.quotient(g)
        for ext in divisors_of_degree(room, degree - g.degree):
            seen.add(g * ext)
    return sorted(seen)


def v_number(
    ideal: MonomialIdeal,
    ass: frozenset[PrimeSupport] | None = None,
    max_degree: int | None = None,
) -> VReport:
    """v-number report; ``ass`` may carry precomputed associated primes.

    ``max_degree`` is a search budget; exceeding it raises, which for a
    correct Ass set cannot happen (every associated prime of a monomial
    ideal has a monomial witness dividing the lcm of the generators).
    """
    if ideal.is_zero or ideal.is_unit:
        raise UndefinedInvariantError("v-number needs a proper non-zero ideal")
    if ass is None:
        ass = associated_primes(ideal)
    lcm = ideal.lcm_of_gens()
    budget = lcm.degree if max_degree is None else min(max_degree, lcm.degree)
    per_prime: dict[PrimeSupport, tuple[int, Monomial]] = {}
    for prime in sorted(ass, key=sorted):
        prime_ideal_ = prime_of(ideal.nvars, prime)
        colon_by_prime = ideal.colon(prime_ideal_)
        found = None
        for d in range(colon_by_prime.alpha(), budget + 1):
            for f in _witness_candidates(colon_by_prime, lcm, d):
                if ideal.colon(f) == prime_ideal_:
                    found = (d, f)
                    break
            if found:
                break
        if found is None:
            raise ResourceLimitError(
                f"no witness for prime {sorted(prime)} within degree {budget}"
            )
        per_prime[prime] = found
    return VReport(min(v for v, _ in per_prime.values()), per_prime)


def v_polarization_check(ideal: MonomialIdeal) -> bool:
    """True iff the v-number is preserved by polarization."""
    polarized, _ = polarize(ideal)
    return v_number(ideal).global_v == v_number(polarized).global_v


POWER_TYPES = ("ordinary", "symbolic-min", "symbolic-ass")


def filtration_ideal(
    ideal: MonomialIdeal,
    k: int,
    power_type: str,
    base_power: MonomialIdeal | None = None,
) -> MonomialIdeal:
    """I^k or I^(k) under the requested filtration."""
    if power_type == "ordinary":
        return base_power if base_power is not None else ideal.power(k)
    if power_type == "symbolic-min":
        return symbolic_power(ideal, k, SymbolicPowerVariant.MIN, base_power=base_power)
    if power_type == "symbolic-ass":
        return symbolic_power(ideal, k, SymbolicPowerVariant.ASS, base_power=base_power)
    raise ValueError(f"unknown power type {power_type!r}; choose from {POWER_TYPES}")


def _ass_hint(ideal: MonomialIdeal, power_type: str):
    # For square-free I the symbolic powers are intersections of incomparable
    # primary pieces, so Ass(I^(k)) = Min(I) for every k.
    if power_type in ("symbolic-min", "symbolic-ass") and ideal.is_squarefree():
        from .decomposition import minimal_primes

        return minimal_primes(ideal)
    return None


def v_sequence(
    ideal: MonomialIdeal,
    max_k: int,
    power_type: str = "ordinary",
) -> list[int]:
    """[v(I_1), ..., v(I_max_k)] along the chosen filtration."""
    if max_k < 1:
        raise ValueError("v_sequence needs max_k >= 1")
    hint = _ass_hint(ideal, power_type)
    out = []
    power = None
    for k in range(1, max_k + 1):
        power = ideal if power is None else power.multiply(ideal)
        member = filtration_ideal(ideal, k, power_type, base_power=power)
        out.append(v_number(member, ass=hint).global_v)
    return out
