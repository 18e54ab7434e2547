"""Exact arithmetic of monomials and monomial ideals over a fixed variable set.

Monomials are exponent tuples; ideals are kept as minimal generating sets in
a canonical (lexicographic) order, so every operation is deterministic and
all values are immutable once built.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import AmbientMismatchError, UndefinedInvariantError


class Monomial:
    """A monomial, stored as a tuple of non-negative integer exponents."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(exponents)
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be non-negative")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e > 0)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(a, b) for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(k * a for a in self.exponents)

    def quotient(self, other: "Monomial") -> "Monomial":
        """Colon quotient: exponents max(a_i - b_i, 0)."""
        return Monomial(max(a - b, 0) for a, b in zip(self.exponents, other.exponents))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __lt__(self, other: "Monomial") -> bool:
        return self.exponents < other.exponents

    def __le__(self, other: "Monomial") -> bool:
        return self.exponents <= other.exponents

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


def monomial(nvars: int, **kwargs) -> Monomial:
    """Build a monomial from keyword exponents, e.g. monomial(3, x1=2, x3=1)."""
    exps = [0] * nvars
    for name, e in kwargs.items():
        if not name.startswith("x"):
            raise ValueError(f"bad variable name {name!r}")
        exps[int(name[1:]) - 1] = e
    return Monomial(exps)


def _minimalize_exps(exps: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Remove divisibility-redundant exponent tuples; result sorted lex."""
    # Sorting by degree first means a kept tuple can only be divided by an
    # earlier kept one, so one forward pass suffices.
    exps = sorted(set(exps), key=lambda t: (sum(t), t))
    kept: list[tuple[int, ...]] = []
    for t in exps:
        for k in kept:
            if all(a <= b for a, b in zip(k, t)):
                break
        else:
            kept.append(t)
    kept.sort()
    return kept


class MonomialIdeal:
    """A monomial ideal, stored via its unique minimal generating set.

    The zero ideal is the empty generator set; the unit ideal has the single
    generator 1.  Both are representable and flagged via is_zero / is_unit.
    """

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, gens: Iterable[Monomial] = ()):
        exps = []
        for g in gens:
            if g.nvars != nvars:
                raise AmbientMismatchError(
                    f"generator in {g.nvars} variables, ambient ring has {nvars}"
                )
            exps.append(g.exponents)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(
            self, "gens", tuple(Monomial(t) for t in _minimalize_exps(exps))
        )

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _raw(cls, nvars: int, sorted_exps: list[tuple[int, ...]]) -> "MonomialIdeal":
        ideal = cls.__new__(cls)
        object.__setattr__(ideal, "nvars", nvars)
        object.__setattr__(ideal, "gens", tuple(Monomial(t) for t in sorted_exps))
        return ideal

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (Monomial((0,) * nvars),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == 0

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def _exps(self) -> list[tuple[int, ...]]:
        return [g.exponents for g in self.gens]

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.gens:
            out.update(g.support())
        return frozenset(out)

    def lcm_of_gens(self) -> Monomial:
        if self.is_zero:
            raise UndefinedInvariantError("lcm of generators of the zero ideal")
        exps = [0] * self.nvars
        for g in self.gens:
            exps = [max(a, b) for a, b in zip(exps, g.exponents)]
        return Monomial(exps)

    # -- degree invariants ------------------------------------------------

    def alpha(self) -> int:
        """Minimum degree of a non-zero element (= min generator degree)."""
        if self.is_zero:
            raise UndefinedInvariantError("alpha of the zero ideal")
        return min(g.degree for g in self.gens)

    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise UndefinedInvariantError("max generator degree of the zero ideal")
        return max(g.degree for g in self.gens)

    def is_equigenerated(self) -> bool:
        return self.alpha() == self.max_gen_degree()

    # -- lattice operations ------------------------------------------------

    def contains(self, m: Monomial) -> bool:
        me = m.exponents
        for g in self.gens:
            if all(a <= b for a, b in zip(g.exponents, me)):
                return True
        return False

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check_ambient(other)
        return all(self.contains(g) for g in other.gens)

    def _check_ambient(self, other: "MonomialIdeal") -> None:
        if self.nvars != other.nvars:
            raise AmbientMismatchError(
                f"ideals in {self.nvars} and {other.nvars} variables"
            )

    def colon(self, f) -> "MonomialIdeal":
        """(self : f) for a monomial f, or (self : J) for an ideal J."""
        if isinstance(f, MonomialIdeal):
            self._check_ambient(f)
            if f.is_zero:
                return MonomialIdeal.unit(self.nvars)
            out = self.colon(f.gens[0])
            for g in f.gens[1:]:
                out = out.intersect(self.colon(g))
            return out
        fe = f.exponents
        exps = [
            tuple(max(a - b, 0) for a, b in zip(g.exponents, fe)) for g in self.gens
        ]
        return MonomialIdeal._raw(self.nvars, _minimalize_exps(exps))

    def saturate(self, f: Monomial) -> "MonomialIdeal":
        """(self : f^inf); equals the stabilization of iterated colon by f.

        For monomial ideals this closes in one step: every exponent on a
        variable of supp(f) is eventually absorbed, so those coordinates of
        each generator drop to zero.
        """
        supp = f.support()
        exps = [
            tuple(0 if i in supp else a for i, a in enumerate(g.exponents))
            for g in self.gens
        ]
        return MonomialIdeal._raw(self.nvars, _minimalize_exps(exps))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.nvars)
        cands = []
        for a in self._exps():
            for b in other._exps():
                cands.append(tuple(max(x, y) for x, y in zip(a, b)))
        return MonomialIdeal._raw(self.nvars, _minimalize_exps(cands))

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.intersect(other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.nvars)
        cands = []
        for a in self._exps():
            for b in other._exps():
                cands.append(tuple(x + y for x, y in zip(a, b)))
        return MonomialIdeal._raw(self.nvars, _minimalize_exps(cands))

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return MonomialIdeal.unit(self.nvars)
        if self.is_zero:
            return self
        out = self
        for _ in range(k - 1):
            out = out.multiply(self)
        return out

    def __pow__(self, k: int) -> "MonomialIdeal":
        return self.power(k)

    # -- misc ---------------------------------------------------------------

    def monomials_of_degree(self, d: int) -> Iterator[Monomial]:
        """All degree-d monomials of the ambient ring contained in the ideal."""
        for exps in _bounded_tuples(self.nvars, d):
            m = Monomial(exps)
            if self.contains(m):
                yield m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens))

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.nvars}, {self.gens!r})"


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    """The ideal generated by ``gens`` with redundant generators removed."""
    gens = list(gens)
    if not gens:
        raise ValueError("minimalize needs at least one generator; use MonomialIdeal.zero")
    nvars = gens[0].nvars
    return MonomialIdeal(nvars, gens)


def ideal(nvars: int, *gens: Monomial) -> MonomialIdeal:
    return MonomialIdeal(nvars, gens)


def prime_ideal(nvars: int, variables: Iterable[int]) -> MonomialIdeal:
    """The prime ideal generated by the given 0-based variable indices."""
    gens = []
    for i in sorted(set(variables)):
        exps = [0] * nvars
        exps[i] = 1
        gens.append(Monomial(exps))
    return MonomialIdeal(nvars, gens)


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Associative fold of binary intersections, smallest generator sets first."""
    items = sorted(ideals, key=lambda i: (len(i.gens), [g.exponents for g in i.gens]))
    if not items:
        raise ValueError("empty intersection")
    out = items[0]
    for nxt in items[1:]:
        out = out.intersect(nxt)
    return out


def _bounded_tuples(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """All length-n tuples of non-negative integers summing to ``total``."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _bounded_tuples(n - 1, total - first):
            yield (first,) + rest


def divisors(m: Monomial) -> Iterator[Monomial]:
    """All monomial divisors of m, in lexicographic exponent order."""
    ranges = [range(e + 1) for e in m.exponents]
    for exps in itertools.product(*ranges):
        yield Monomial(exps)


def divisors_of_degree(m: Monomial, d: int) -> list[Monomial]:
    """Degree-d divisors of m, sorted lexicographically."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == m.nvars - 1:
            if remaining <= m.exponents[i]:
                out.append(prefix + (remaining,))
            return
        for e in range(min(remaining, m.exponents[i]) + 1):
            rec(i + 1, remaining - e, prefix + (e,))

    if d < 0 or d > m.degree:
        return []
    rec(0, d, ())
    return [Monomial(t) for t in sorted(out)]
