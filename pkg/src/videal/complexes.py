"""Simplicial complexes and exact rational homology.

Faces are vertex bitmasks.  Reduced homology is computed from boundary-matrix
ranks over the rationals; rank computation eliminates on unit pivots first so
almost all arithmetic stays in (exact) integers, falling back to Fraction
pivots only when no unit entry remains.

Conventions: the void complex (no faces) has no homology at all, while the
irrelevant complex {()} has reduced homology of rank 1 in dimension -1.
Homology vectors are stored shifted by one ("g-vectors", g[t] = rank of
reduced homology in dimension t-1) so that joining complexes is plain
convolution and the irrelevant complex becomes the identity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ResourceLimitError


def bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def maximalize(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    kept.sort()
    return kept


def minimalize_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal elements of a family of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == k for k in kept):
            kept.append(m)
    kept.sort()
    return kept


def minimal_transversals(masks: Sequence[int], node_cap: int = 500_000) -> list[int]:
    """All inclusion-minimal bitmasks hitting every mask in the family.

    Branch on the vertices of the first un-hit set; non-minimal candidates
    are filtered at the end.  node_cap bounds the search tree.
    """
    if any(m == 0 for m in masks):
        return []
    results: set[int] = set()
    nodes = 0

    def rec(chosen: int, remaining: tuple[int, ...]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceLimitError("transversal enumeration exceeded node cap")
        if not remaining:
            results.add(chosen)
            return
        first = remaining[0]
        for v in bits(first):
            b = 1 << v
            rec(chosen | b, tuple(r for r in remaining if not r & b))

    rec(0, tuple(sorted(set(masks))))
    return minimalize_masks(results)


# -- face enumeration ---------------------------------------------------------


def enumerate_faces(
    vertices: int, nonfaces: Sequence[int], cap: int | None = None
) -> list[int] | None:
    """All subsets of ``vertices`` containing no member of ``nonfaces``.

    Returns None when a cap is given and exceeded.  The empty face 0 is
    always included (the nonfaces are assumed non-empty).
    """
    verts = bits(vertices)
    per_vertex: list[list[int]] = [[] for _ in verts]
    pos = {v: i for i, v in enumerate(verts)}
    for s in nonfaces:
        top = s.bit_length() - 1
        per_vertex[pos[top]].append(s)
    out = [0]
    count = 1

    def rec(i: int, face: int) -> bool:
        nonlocal count
        for j in range(i, len(verts)):
            cand = face | (1 << verts[j])
            if any(s & cand == s for s in per_vertex[j]):
                continue
            count += 1
            if cap is not None and count > cap:
                return False
            out.append(cand)
            if not rec(j + 1, cand):
                return False
        return True

    if not rec(0, 0):
        return None
    return out


def count_faces(vertices: int, nonfaces: Sequence[int], cap: int) -> int | None:
    faces = enumerate_faces(vertices, nonfaces, cap)
    return None if faces is None else len(faces)


def downward_closure(facets: Iterable[int]) -> list[int]:
    """All faces of the complex generated by ``facets`` (including 0)."""
    seen: set[int] = set()
    stack = list(set(facets))
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        m = f
        while m:
            low = m & -m
            sub = f & ~low
            if sub not in seen:
                stack.append(sub)
            m ^= low
    if not seen:
        return []
    seen.add(0)
    return sorted(seen)


# -- exact rank ---------------------------------------------------------------


def exact_rank(columns: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given column-wise."""
    # Row-major working copy.
    rows: dict[int, dict[int, object]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = v
    col_rows: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    rank = 0
    active = set(rows)
    while active:
        # Prefer a unit pivot in a short row to limit fill-in.
        pivot_i = pivot_j = None
        best = None
        for i in active:
            row = rows[i]
            if not row:
                continue
            for j, v in row.items():
                unit = 0 if v == 1 or v == -1 else 1
                score = (unit, len(row), len(col_rows.get(j, ())), i, j)
                if best is None or score < best:
                    best = score
                    pivot_i, pivot_j = i, j
            if best is not None and best[0] == 0 and best[1] <= 2:
                break
        if pivot_i is None:
            break
        rank += 1
        prow = rows[pivot_i]
        pval = prow[pivot_j]
        active.discard(pivot_i)
        targets = [t for t in col_rows.get(pivot_j, ()) if t != pivot_i and t in active]
        for t in targets:
            trow = rows[t]
            f = trow[pivot_j]
            if pval == 1:
                factor = f
            elif pval == -1:
                factor = -f
            else:
                factor = Fraction(f, pval)
            for j, w in prow.items():
                nv = trow.get(j, 0) - factor * w
                if nv:
                    trow[j] = nv
                    col_rows.setdefault(j, set()).add(t)
                elif j in trow:
                    del trow[j]
                    col_rows[j].discard(t)
        for j in prow:
            col_rows[j].discard(pivot_i)
    return rank


# -- homology -----------------------------------------------------------------


def _boundary_rank(lower: list[int], upper: list[int]) -> int:
    """Rank of the boundary map from faces ``upper`` to faces ``lower``."""
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    columns = []
    for f in upper:
        col: dict[int, int] = {}
        sign = 1
        m = f
        while m:
            low = m & -m
            col[index[f ^ low]] = sign
            sign = -sign
            m ^= low
        columns.append(col)
    return exact_rank(columns)


def homology_g_vector(faces: Iterable[int]) -> tuple[int, ...]:
    """Shifted reduced homology ranks of the complex with the given faces.

    g[t] is the rank of reduced homology in dimension t-1; the result is
    trimmed of trailing zeros, so the void complex gives () and a
    contractible complex gives () as well.
    """
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    if not by_size:
        return ()
    top = max(by_size)
    for s in by_size.values():
        s.sort()
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        ranks[s] = _boundary_rank(by_size.get(s - 1, []), by_size.get(s, []))
    g = []
    for s in range(top + 1):
        n_s = len(by_size.get(s, []))
        g.append(n_s - ranks[s] - ranks[s + 1])
    while g and g[-1] == 0:
        g.pop()
    return tuple(g)


def collapse(faces: Iterable[int]) -> set[int]:
    """Remove free pairs until none remain; preserves the homotopy type.

    A face is free when it has exactly one face properly above it (then
    necessarily one dimension higher).  A contractible complex may collapse
    all the way to the void complex.
    """
    present = set(faces)
    if not present:
        return present
    universe = 0
    for f in present:
        universe |= f
    vbits = [1 << v for v in bits(universe)]

    def cofaces(f: int) -> list[int]:
        return [f | b for b in vbits if not f & b and (f | b) in present]

    counts = {f: len(cofaces(f)) for f in present}
    queue = [f for f, c in counts.items() if c == 1]
    while queue:
        sigma = queue.pop()
        if sigma not in present or counts.get(sigma) != 1:
            continue
        taus = cofaces(sigma)
        if len(taus) != 1:
            counts[sigma] = len(taus)
            continue
        tau = taus[0]
        present.discard(sigma)
        present.discard(tau)
        for parent in (tau, sigma):
            m = parent
            while m:
                low = m & -m
                sub = parent ^ low
                if sub in present:
                    counts[sub] = counts.get(sub, 0) - 1
                    if counts[sub] == 1:
                        queue.append(sub)
                m ^= low
    return present


def reduced_homology_ranks(faces: Iterable[int], use_collapse: bool = True) -> tuple[int, ...]:
    face_set = set(faces)
    if use_collapse and len(face_set) > 16:
        face_set = collapse(face_set)
    return homology_g_vector(face_set)


# -- public complex type ------------------------------------------------------


class SimplicialComplex:
    """A simplicial complex on vertices 0..n-1, stored by its facets.

    The void complex has no facets at all; the irrelevant complex {()} has
    the single facet frozenset().
    """

    __slots__ = ("vertex_count", "facets")

    def __init__(self, vertex_count: int, facets: Iterable[Iterable[int]]):
        masks = maximalize(mask_of(f) for f in facets)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(
            self,
            "facets",
            tuple(frozenset(bits(m)) for m in masks),
        )

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @property
    def is_void(self) -> bool:
        return not self.facets

    def _facet_masks(self) -> list[int]:
        return [mask_of(f) for f in self.facets]

    def faces(self) -> list[frozenset[int]]:
        return [frozenset(bits(m)) for m in downward_closure(self._facet_masks())]

    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex.  Undefined (error) when void."""
        if self.is_void:
            raise ValueError("dimension of the void complex")
        return max(len(f) for f in self.facets) - 1

    def has_face(self, face: Iterable[int]) -> bool:
        fm = mask_of(face)
        return any(fm & m == fm for m in self._facet_masks())

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        fm = mask_of(face)
        rel = [m & ~fm for m in self._facet_masks() if m & fm == fm]
        return SimplicialComplex(self.vertex_count, (bits(m) for m in maximalize(rel)))

    def g_vector(self) -> tuple[int, ...]:
        return reduced_homology_ranks(downward_closure(self._facet_masks()))

    def reduced_homology_rank(self, d: int) -> int:
        """Rank of reduced homology in dimension d over the rationals."""
        g = self.g_vector()
        t = d + 1
        if t < 0 or t >= len(g):
            return 0
        return g[t]

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic: alternating sum over faces incl. ()."""
        total = 0
        for f in downward_closure(self._facet_masks()):
            total += (-1) ** (f.bit_count() - 1)
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertex_count == other.vertex_count
            and set(self.facets) == set(other.facets)
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, frozenset(self.facets)))

    def __repr__(self) -> str:
        shown = sorted(sorted(f) for f in self.facets)
        return f"SimplicialComplex({self.vertex_count}, {shown})"
