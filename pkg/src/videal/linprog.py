"""Exact rational linear programming and polyhedron vertex enumeration.

Polyhedra are given as {y >= 0 : A y >= b} with Fraction entries.  The
simplex solver uses Bland's rule throughout, so it terminates and is
bit-for-bit reproducible; there is no floating point anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InfeasibleError, ResourceLimitError, UnboundedError

DEFAULT_VERTEX_DIM_CAP = 12


class RationalPolyhedron:
    """Constraint system a . y >= b over the non-negative orthant."""

    __slots__ = ("dimension", "constraints")

    def __init__(
        self,
        dimension: int,
        constraints: Iterable[tuple[Sequence, object]],
    ):
        rows = []
        for coeffs, rhs in constraints:
            row = tuple(Fraction(c) for c in coeffs)
            if len(row) != dimension:
                raise ValueError("constraint length differs from dimension")
            rows.append((row, Fraction(rhs)))
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "constraints", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolyhedron is immutable")

    def contains(self, point: Sequence) -> bool:
        pt = [Fraction(x) for x in point]
        if len(pt) != self.dimension or any(x < 0 for x in pt):
            return False
        return all(
            sum(c * x for c, x in zip(coeffs, pt)) >= rhs
            for coeffs, rhs in self.constraints
        )

    def __repr__(self) -> str:
        return f"RationalPolyhedron(dim={self.dimension}, {len(self.constraints)} constraints)"


def _simplex(tableau: list[list[Fraction]], basis: list[int], ncols: int) -> None:
    """Minimize the cost row in place; Bland's rule on column then ratio ties."""
    m = len(tableau) - 1
    while True:
        cost = tableau[-1]
        enter = -1
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise UnboundedError("objective unbounded below on the polyhedron")
        piv = tableau[leave][enter]
        row = tableau[leave]
        tableau[leave] = [v / piv for v in row]
        for i in range(m + 1):
            if i == leave:
                continue
            f = tableau[i][enter]
            if f:
                src = tableau[leave]
                tableau[i] = [v - f * w for v, w in zip(tableau[i], src)]
        basis[leave] = enter


def lp_minimize(
    poly: RationalPolyhedron, objective: Sequence
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact minimum of objective . y over the polyhedron, with an optimal vertex.

    Two-phase simplex over Fractions.  Raises InfeasibleError or
    UnboundedError when the problem has no optimum.
    """
    n = poly.dimension
    obj = [Fraction(c) for c in objective]
    if len(obj) != n:
        raise ValueError("objective length differs from dimension")
    m = len(poly.constraints)
    # Standard form: A y - s = b with y, s >= 0, rows flipped so b >= 0.
    ncols = n + m
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, (coeffs, b) in enumerate(poly.constraints):
        row = list(coeffs) + [Fraction(0)] * m
        row[n + i] = Fraction(-1)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    # Phase 1: artificial variables, minimize their sum.
    total = ncols + m
    tableau = []
    basis = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * m + [rhs[i]]
        row[ncols + i] = Fraction(1)
        tableau.append(row)
        basis.append(ncols + i)
    cost = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            cost[j] -= tableau[i][j]
    for i in range(m):
        cost[ncols + i] = Fraction(0)
    tableau.append(cost)
    _simplex(tableau, basis, ncols)  # artificials never re-enter
    if -tableau[-1][-1] != 0:
        raise InfeasibleError("polyhedron is empty")

    # Drive any artificial variables out of the basis where possible.
    for i in range(m):
        if basis[i] >= ncols:
            for j in range(ncols):
                if tableau[i][j] != 0:
                    piv = tableau[i][j]
                    tableau[i] = [v / piv for v in tableau[i]]
                    for r in range(m + 1):
                        if r != i and tableau[r][j] != 0:
                            f = tableau[r][j]
                            tableau[r] = [
                                v - f * w for v, w in zip(tableau[r], tableau[i])
                            ]
                    basis[i] = j
                    break

    # Phase 2 on the original objective.
    tableau = [row[:ncols] + [row[-1]] for row in tableau[:-1]]
    cost = obj + [Fraction(0)] * m + [Fraction(0)]
    for i in range(m):
        if basis[i] < ncols and cost[basis[i]] != 0:
            f = cost[basis[i]]
            cost = [v - f * w for v, w in zip(cost, tableau[i])]
    tableau.append(cost)
    _simplex(tableau, basis, ncols)
    value = -tableau[-1][-1]
    point = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            point[basis[i]] = tableau[i][-1]
    return value, tuple(point)


def _solve_square(rows: list[list[Fraction]]) -> list[Fraction] | None:
    """Solve an n x (n+1) augmented system; None when singular."""
    n = len(rows)
    mat = [row[:] for row in rows]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [v / pv for v in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[col])]
    return [mat[i][n] for i in range(n)]


def enumerate_vertices(
    poly: RationalPolyhedron, max_dim: int = DEFAULT_VERTEX_DIM_CAP
) -> tuple[tuple[Fraction, ...], ...]:
    """All vertices, by exhaustive scan of n-subsets of tight constraints.

    Non-negativity facets participate alongside the explicit constraints.
    The scan is capped at ``max_dim`` dimensions.
    """
    n = poly.dimension
    if n > max_dim:
        raise ResourceLimitError(
            f"vertex enumeration capped at dimension {max_dim}, got {n}"
        )
    rows: list[tuple[tuple[Fraction, ...], Fraction]] = list(poly.constraints)
    for i in range(n):
        coeffs = tuple(
            Fraction(1) if j == i else Fraction(0) for j in range(n)
        )
        rows.append((coeffs, Fraction(0)))
    seen: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(range(len(rows)), n):
        system = [list(rows[i][0]) + [rows[i][1]] for i in subset]
        sol = _solve_square(system)
        if sol is None:
            continue
        point = tuple(sol)
        if point in seen:
            continue
        if poly.contains(point):
            seen.add(point)
    return tuple(sorted(seen))
