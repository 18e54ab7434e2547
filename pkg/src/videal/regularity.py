"""Polarization, graded Betti numbers, regularity, and the Cohen-Macaulay test.

Betti numbers of R/I for a square-free monomial ideal are assembled from
reduced homology of induced subcomplexes of the Stanley-Reisner complex,
one vertex subset W at a time.  Non-square-free input is polarized first.

The subset scan never materializes the Stanley-Reisner complex globally.
For each W the induced complex is the independence complex of the
generator supports inside W; the scan skips W unless every vertex of W is
covered (otherwise the complex is a cone), splits the rest into join
factors along connected groups of supports, and memoizes homology of the
factors.  When the generator supports are large (cover-type ideals) the
induced complexes are near-full simplices, so the scan instead computes
homology of the within-W Alexander dual, whose "non-faces" are the minimal
transversals of the supports; the two sides give the same Betti numbers
with the homological index re-indexed.  Everything stays over exact
rationals in characteristic 0.
"""

from __future__ import annotations

from .complexes import (
    SimplicialComplex,
    bits,
    count_faces,
    enumerate_faces,
    mask_of,
    minimal_transversals,
    minimalize_masks,
    reduced_homology_ranks,
)
from .errors import ResourceLimitError, UndefinedInvariantError, UnsupportedInputError
from .monomials import Monomial, MonomialIdeal

DEFAULT_BETTI_VARS_CAP = 16
_FACE_CAP = 400_000
_ORIENTATION_CAP = 60_000


# -- polarization -------------------------------------------------------------


class PolarizationMap:
    """Bookkeeping for polarize: which new variable is which (var, copy) pair."""

    __slots__ = ("copies", "origin")

    def __init__(self, copies: tuple[tuple[int, ...], ...]):
        origin = []
        for j, idxs in enumerate(copies):
            for t, idx in enumerate(idxs):
                origin.append((j, t + 1))
        object.__setattr__(self, "copies", copies)
        object.__setattr__(self, "origin", tuple(origin))

    def __setattr__(self, name, value):
        raise AttributeError("PolarizationMap is immutable")

    @property
    def new_nvars(self) -> int:
        return len(self.origin)

    def new_index(self, var: int, copy: int) -> int:
        """0-based new index of copy ``copy`` (1-based) of original ``var``."""
        return self.copies[var][copy - 1]


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Square-free deformation x_j^e -> x_{j,1} ... x_{j,e} in an extended ring.

    Variables never appearing in a generator get no copies.  Betti numbers,
    regularity and the v-number are preserved; square-free input comes back
    unchanged up to renaming.
    """
    if ideal.is_zero:
        raise UndefinedInvariantError("polarization of the zero ideal")
    n = ideal.nvars
    maxexp = [0] * n
    for g in ideal.gens:
        for j, e in enumerate(g.exponents):
            if e > maxexp[j]:
                maxexp[j] = e
    copies: list[tuple[int, ...]] = []
    nxt = 0
    for j in range(n):
        copies.append(tuple(range(nxt, nxt + maxexp[j])))
        nxt += maxexp[j]
    pmap = PolarizationMap(tuple(copies))
    new_gens = []
    for g in ideal.gens:
        exps = [0] * nxt
        for j, e in enumerate(g.exponents):
            for t in range(e):
                exps[copies[j][t]] = 1
        new_gens.append(Monomial(exps))
    return MonomialIdeal(nxt, new_gens), pmap


# -- Stanley-Reisner ----------------------------------------------------------


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces are the square-free monomials outside the ideal, via facets."""
    if not ideal.is_squarefree():
        raise UnsupportedInputError("Stanley-Reisner complex needs a square-free ideal")
    if ideal.is_unit:
        raise UnsupportedInputError("Stanley-Reisner complex of the unit ideal is void")
    n = ideal.nvars
    full = (1 << n) - 1
    supports = sorted({mask_of(g.support()) for g in ideal.gens})
    facets = [full & ~t for t in minimal_transversals(supports)]
    return SimplicialComplex(n, (bits(m) for m in facets))


# -- Betti table --------------------------------------------------------------


class BettiTable:
    """Graded Betti numbers of R/I, as a finitely supported (i, j) -> count map."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[tuple[int, int], int]):
        object.__setattr__(
            self, "entries", {k: v for k, v in sorted(entries.items()) if v}
        )

    def __setattr__(self, name, value):
        raise AttributeError("BettiTable is immutable")

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def generator_counts(self) -> dict[int, int]:
        """Degree -> number of minimal generators (the i = 1 column)."""
        return {j: v for (i, j), v in self.entries.items() if i == 1}

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in self.entries.items()]

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BettiTable({self.entries})"


_component_cache: dict[tuple[int, tuple[int, ...]], tuple[int, ...]] = {}


def clear_homology_cache() -> None:
    _component_cache.clear()


def _squeeze(cmask: int, cons: list[int]) -> tuple[int, tuple[int, ...]]:
    vs = bits(cmask)
    pos = {v: i for i, v in enumerate(vs)}
    out = []
    for s in cons:
        m = 0
        for v in bits(s):
            m |= 1 << pos[v]
        out.append(m)
    return len(vs), tuple(sorted(out))


def _component_g(cmask: int, cons: list[int], face_cap: int) -> tuple[int, ...]:
    key = _squeeze(cmask, cons)
    hit = _component_cache.get(key)
    if hit is None:
        nbits, sq = key
        faces = enumerate_faces((1 << nbits) - 1, sq, cap=face_cap)
        if faces is None:
            raise ResourceLimitError("induced subcomplex exceeded the face cap")
        hit = reduced_homology_ranks(faces)
        _component_cache[key] = hit
    return hit


def _components(active: list[int]) -> list[tuple[int, list[int]]]:
    comps: list[tuple[int, list[int]]] = []
    for s in active:
        mask = s
        group = [s]
        keep = []
        for cm, cl in comps:
            if cm & mask:
                mask |= cm
                group.extend(cl)
            else:
                keep.append((cm, cl))
        keep.append((mask, group))
        comps = keep
    return comps


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _joined_g(active: list[int], face_cap: int) -> tuple[int, ...]:
    g = (1,)
    for cmask, cons in _components(active):
        g = _convolve(g, _component_g(cmask, cons, face_cap))
        if not g:
            return ()
    return g


def _choose_orientation(n: int, supports: list[int]):
    cap = min(_ORIENTATION_CAP, 1 << n)
    direct_count = count_faces((1 << n) - 1, supports, cap)
    try:
        transversals = minimal_transversals(supports)
    except ResourceLimitError:
        transversals = None
    dual_count = None
    if transversals:
        dual_count = count_faces((1 << n) - 1, transversals, cap)
    if dual_count is not None and (direct_count is None or dual_count < direct_count):
        return "dual", transversals
    return "direct", None


def hochster_betti(
    ideal: MonomialIdeal,
    max_vars: int = DEFAULT_BETTI_VARS_CAP,
    face_cap: int = _FACE_CAP,
) -> BettiTable:
    """Betti table of R/I for square-free I, by the vertex-subset scan."""
    if not ideal.is_squarefree():
        raise UnsupportedInputError("Betti numbers require a square-free ideal; polarize first")
    if ideal.is_zero or ideal.is_unit:
        raise UndefinedInvariantError("Betti table needs a proper non-zero ideal")
    n = ideal.nvars
    if n > max_vars:
        raise ResourceLimitError(
            f"Betti computation capped at {max_vars} variables, got {n}"
        )
    supports = sorted({mask_of(g.support()) for g in ideal.gens})
    mode, transversals = _choose_orientation(n, supports)
    table: dict[tuple[int, int], int] = {(0, 0): 1}

    if mode == "direct":
        min_size = min(s.bit_count() for s in supports)
        for w in range(1, 1 << n):
            wsize = w.bit_count()
            if wsize < min_size:
                continue
            active = [s for s in supports if s & w == s]
            if not active:
                continue
            union = 0
            for s in active:
                union |= s
            if union != w:
                continue
            g = _joined_g(active, face_cap)
            for t, cnt in enumerate(g):
                if cnt:
                    key = (wsize - t, wsize)
                    table[key] = table.get(key, 0) + cnt
    else:
        trs = transversals
        for w in range(1, 1 << n):
            active = []
            dead = False
            for t in trs:
                r = t & w
                if not r:
                    dead = True
                    break
                active.append(r)
            if dead:
                continue
            active = minimalize_masks(active)
            union = 0
            for s in active:
                union |= s
            if union != w:
                continue
            wsize = w.bit_count()
            g = _joined_g(active, face_cap)
            for t, cnt in enumerate(g):
                if cnt:
                    key = (t + 1, wsize)
                    table[key] = table.get(key, 0) + cnt
    return BettiTable(table)


def betti_numbers(
    ideal: MonomialIdeal, max_vars: int = DEFAULT_BETTI_VARS_CAP
) -> BettiTable:
    return hochster_betti(ideal, max_vars=max_vars)


def regularity(ideal: MonomialIdeal, max_vars: int = DEFAULT_BETTI_VARS_CAP) -> int:
    """Castelnuovo-Mumford regularity of R/I: max(j - i) over the Betti table.

    Non-square-free ideals are polarized first; polarization preserves the
    table, so the reported value is reg(R/I) itself.
    """
    if ideal.is_zero or ideal.is_unit:
        raise UndefinedInvariantError("regularity needs a proper non-zero ideal")
    if not ideal.is_squarefree():
        ideal, _ = polarize(ideal)
    return hochster_betti(ideal, max_vars=max_vars).regularity()


# -- Cohen-Macaulay -----------------------------------------------------------


def is_cohen_macaulay(ideal: MonomialIdeal) -> bool:
    """Reisner's criterion over the rationals for square-free I.

    True iff for every face F of the Stanley-Reisner complex, the link of F
    has vanishing reduced homology below its own dimension.
    """
    if not ideal.is_squarefree():
        raise UnsupportedInputError("Cohen-Macaulay test implemented for square-free ideals")
    complex_ = stanley_reisner_complex(ideal)
    if complex_.is_void:
        return True
    for face in complex_.faces():
        link = complex_.link(face)
        if link.is_void:
            continue
        d = link.dim()
        g = link.g_vector()
        # g[t] is homology in dimension t-1; require zero strictly below d.
        for t, cnt in enumerate(g):
            if t - 1 < d and cnt:
                return False
    return True
