"""Corpus generation, theorem-window checks, quasi-linear fitting, reports.

Every check maps a paper-shaped statement to a finite, machine-decidable
property.  Limit statements are never asserted literally: slopes are read
off exact quasi-linear fits over a k-window, and "for large k" claims become
trend checks (no violation on the window tail, margins non-shrinking there).
A failing verdict always carries a reproducible witness payload.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .decomposition import minimal_primes
from .errors import ResourceLimitError
from .graphs import (
    Graph,
    Hypergraph,
    best_induced_matching_weight,
    complete_graph,
    cover_ideal,
    cycle_graph,
    graph_edge_ideal,
    hypergraph_of_ideal,
    is_cm_very_well_covered,
    is_polymatroidal,
    path_graph,
    whisker_graph,
)
from .monomials import Monomial, MonomialIdeal
from .regularity import DEFAULT_BETTI_VARS_CAP, regularity
from .symbolic import (
    SymbolicPowerVariant,
    has_strong_persistence_upto,
    symbolic_power,
    waldschmidt_constant,
    delta_invariant,
)
from .vnumber import filtration_ideal, v_number

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Caps:
    """Size limits threaded through the checks."""

    betti_vars: int = DEFAULT_BETTI_VARS_CAP
    vertex_dim: int = 12
    graph_vertices: int = 8
    corpus_graph_vertices: int = 6
    corpus_ideal_vars: int = 5
    corpus_ideal_gens: int = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


@dataclass(frozen=True)
class QuasiLinearFit:
    slope: Fraction
    period: int
    intercepts: tuple[Fraction, ...]  # indexed by k mod period

    def value_at(self, k: int) -> Fraction:
        return self.slope * k + self.intercepts[k % self.period]

    def to_dict(self) -> dict:
        return {
            "slope": _fmt_rational(self.slope),
            "period": self.period,
            "intercepts": [_fmt_rational(b) for b in self.intercepts],
        }


@dataclass
class FiltrationReport:
    """Per-instance record: sequences along a filtration, fit, verdicts."""

    instance: str
    power_type: str
    rows: list[dict] = field(default_factory=list)  # {k, alpha, v, reg?}
    fit: QuasiLinearFit | None = None
    checks: list[CheckResult] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "instance": self.instance,
            "power_type": self.power_type,
            "sequences": [_jsonable(r) for r in self.rows],
            "fit": self.fit.to_dict() if self.fit else None,
            "checks": [c.to_dict() for c in self.checks],
        }


def _fmt_rational(x) -> str:
    return str(Fraction(x))


def _jsonable(value):
    if isinstance(value, Fraction):
        return _fmt_rational(value)
    if isinstance(value, Monomial):
        return str(value)
    if isinstance(value, MonomialIdeal):
        return str(value)
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# -- corpus generation ---------------------------------------------------------


def all_graphs(
    n: int,
    *,
    connected_only: bool = False,
    no_isolated: bool = False,
    min_edges: int = 1,
    caps: Caps = Caps(),
) -> list[Graph]:
    """Every labeled graph on n vertices, in ascending edge-bitmask order."""
    if n > caps.corpus_graph_vertices:
        raise ResourceLimitError(
            f"graph corpus capped at {caps.corpus_graph_vertices} vertices, got {n}"
        )
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < min_edges:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if no_isolated and g.isolated_vertices():
            continue
        if connected_only and not _is_connected(g):
            continue
        out.append(g)
    return out


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    adj = g.adjacency_masks()
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(g.n):
            if adj[u] >> v & 1 and not seen >> v & 1:
                seen |= 1 << v
                stack.append(v)
    return seen == (1 << g.n) - 1


FAMILIES = ("cycle", "complete", "path", "whisker")


def family_graph(family: str, n: int, caps: Caps = Caps()) -> Graph:
    if n > caps.graph_vertices:
        raise ResourceLimitError(
            f"named families capped at {caps.graph_vertices} vertices, got n={n}"
        )
    if family == "cycle":
        return cycle_graph(n)
    if family == "complete":
        return complete_graph(n)
    if family == "path":
        return path_graph(n)
    if family == "whisker":
        return whisker_graph(path_graph(n)) if n >= 2 else whisker_graph(Graph(1, []))
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def squarefree_ideal_corpus(
    max_vars: int, max_gens: int, caps: Caps = Caps()
) -> list[MonomialIdeal]:
    """All square-free ideals using all of 1..n variables, n <= max_vars.

    Requiring full support makes the enumeration canonical: an ideal on
    fewer variables appears once, at its natural variable count.
    """
    if max_vars > caps.corpus_ideal_vars:
        raise ResourceLimitError(
            f"square-free corpus capped at {caps.corpus_ideal_vars} variables"
        )
    if max_gens > caps.corpus_ideal_gens:
        raise ResourceLimitError(
            f"square-free corpus capped at {caps.corpus_ideal_gens} generators"
        )
    out: list[MonomialIdeal] = []
    for n in range(1, max_vars + 1):
        subsets = [
            frozenset(c)
            for size in range(1, n + 1)
            for c in itertools.combinations(range(n), size)
        ]

        def rec(start: int, chosen: list[frozenset[int]], used: int) -> None:
            if chosen and used == (1 << n) - 1:
                gens = [
                    Monomial(tuple(1 if v in g else 0 for v in range(n)))
                    for g in chosen
                ]
                ideal = MonomialIdeal(n, gens)
                if not ideal.is_unit:
                    out.append(ideal)
            if len(chosen) >= max_gens:
                return
            for i in range(start, len(subsets)):
                s = subsets[i]
                if all(not (s <= t or t <= s) for t in chosen):
                    m = 0
                    for v in s:
                        m |= 1 << v
                    chosen.append(s)
                    rec(i + 1, chosen, used | m)
                    chosen.pop()

        rec(0, [], 0)
    return out


def random_nonsquarefree_ideals(
    count: int, max_vars: int = 4, max_exp: int = 3, seed: int = 0
) -> list[MonomialIdeal]:
    """Seeded, deterministic sample of proper non-square-free ideals."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_vars)
        gens = []
        for _ in range(rng.randint(2, 5)):
            exps = [rng.randint(0, max_exp) for _ in range(n)]
            if sum(exps) == 0:
                exps[rng.randrange(n)] = 1
            gens.append(Monomial(tuple(exps)))
        ideal = MonomialIdeal(n, gens)
        if ideal.is_unit or ideal.is_zero or ideal.is_squarefree():
            continue
        out.append(ideal)
    return out


# -- quasi-linear fitting --------------------------------------------------------


def fit_quasilinear(
    seq: Sequence[int], k_min: int, max_period: int = 3
) -> QuasiLinearFit | None:
    """Smallest period d <= max_period with seq[k] = a k + b_{k mod d} exactly
    for every k >= k_min in the window; None when no such fit exists.

    seq[i] is the value at k = i + 1.
    """
    if k_min < 1:
        raise ValueError("k_min must be >= 1")
    if len(seq) < k_min + 4:
        raise ValueError("fit window too short: need len(seq) >= k_min + 4")
    kmax = len(seq)
    for d in range(1, max_period + 1):
        slope = None
        ok = True
        for k in range(k_min, kmax - d + 1):
            a = Fraction(seq[k + d - 1] - seq[k - 1], d)
            if slope is None:
                slope = a
            elif a != slope:
                ok = False
                break
        if not ok or slope is None:
            continue
        intercepts: dict[int, Fraction] = {}
        for k in range(k_min, kmax + 1):
            r = k % d
            b = seq[k - 1] - slope * k
            if intercepts.setdefault(r, b) != b:
                ok = False
                break
        if not ok:
            continue
        filled = tuple(
            intercepts.get(r, Fraction(0)) for r in range(d)
        )
        return QuasiLinearFit(slope, d, filled)
    return None


# -- sequences -------------------------------------------------------------------


def compute_sequence(
    ideal: MonomialIdeal,
    max_k: int,
    power_type: str = "symbolic-min",
    show: Sequence[str] = ("alpha", "v"),
    caps: Caps = Caps(),
) -> list[dict]:
    """Rows (k, alpha?, v?, reg?) along the chosen filtration."""
    from .vnumber import _ass_hint

    hint = _ass_hint(ideal, power_type)
    rows = []
    power = None
    for k in range(1, max_k + 1):
        power = ideal if power is None else power.multiply(ideal)
        member = filtration_ideal(ideal, k, power_type, base_power=power)
        row: dict = {"k": k}
        if "alpha" in show:
            row["alpha"] = member.alpha()
        if "v" in show:
            row["v"] = v_number(member, ass=hint).global_v
        if "reg" in show:
            row["reg"] = regularity(member, max_vars=caps.betti_vars)
        rows.append(row)
    return rows


# -- checks ----------------------------------------------------------------------


def check_slope_theorem(
    ideal: MonomialIdeal, max_k: int, caps: Caps = Caps()
) -> CheckResult:
    """Fitted slope of v(I^(k)) must equal the Waldschmidt constant, and the
    sandwich alpha(I^(k)) - 1 <= v(I^(k)) <= (k-1) d(I) + v(I) must hold at
    every k in the window.  Skips when no quasi-linear fit emerges."""
    name = "slope-theorem"
    if not ideal.is_squarefree():
        return CheckResult(name, "skip", {"reason": "not square-free"})
    mins = minimal_primes(ideal)
    d = ideal.max_gen_degree()
    vs: list[int] = []
    alphas: list[int] = []
    power = None
    for k in range(1, max_k + 1):
        power = ideal if power is None else power.multiply(ideal)
        member = symbolic_power(ideal, k, base_power=power)
        vs.append(v_number(member, ass=mins).global_v)
        alphas.append(member.alpha())
    v1 = vs[0]
    for k in range(1, max_k + 1):
        lower = alphas[k - 1] - 1
        upper = (k - 1) * d + v1
        if not lower <= vs[k - 1] <= upper:
            return CheckResult(
                name,
                "fail",
                {"ideal": ideal, "k": k, "v": vs[k - 1], "lower": lower, "upper": upper},
            )
    fit = None
    for k_min in range(1, len(vs) - 3):
        fit = fit_quasilinear(vs, k_min)
        if fit:
            break
    if fit is None:
        return CheckResult(
            name, "skip", {"reason": f"no quasi-linear fit within k <= {max_k}", "v": vs}
        )
    what = waldschmidt_constant(ideal)
    if fit.slope != what:
        return CheckResult(
            name,
            "fail",
            {"ideal": ideal, "fitted_slope": fit.slope, "waldschmidt": what, "v": vs},
        )
    return CheckResult(
        name,
        "pass",
        {"slope": fit.slope, "period": fit.period, "v": vs, "alpha": alphas},
    )


def check_cover_vs_reg(graph: Graph, max_k: int, caps: Caps = Caps()) -> CheckResult:
    """v(J(G)^(k)) <= reg(R/J(G)^(k)) for every k in the window."""
    name = "cover-v-vs-reg"
    if graph.isolated_vertices():
        return CheckResult(name, "skip", {"reason": "isolated vertices"})
    jg = cover_ideal(graph)
    mins = minimal_primes(jg)
    power = None
    for k in range(1, max_k + 1):
        power = jg if power is None else power.multiply(jg)
        member = symbolic_power(jg, k, base_power=power)
        v = v_number(member, ass=mins).global_v
        try:
            reg = regularity(member, max_vars=caps.betti_vars)
        except ResourceLimitError as exc:
            return CheckResult(name, "skip", {"reason": str(exc), "k": k})
        if v > reg:
            return CheckResult(
                name, "fail", {"graph": repr(graph), "k": k, "v": v, "reg": reg}
            )
    return CheckResult(name, "pass", {"graph": repr(graph), "max_k": max_k})


def check_cmvwc_equivalence(
    graph: Graph, max_k: int, caps: Caps = Caps()
) -> CheckResult:
    """Equality chain v = reg = alpha - 1 against the CM very-well-covered
    predicate.  A CM-VWC graph must satisfy the chain at every k in the
    window; a non-CM-VWC graph should break it at some k, and when the chain
    survives the whole window the verdict is inconclusive rather than fail
    (equality for all k is not finitely checkable)."""
    name = "cmvwc-equality"
    if graph.isolated_vertices():
        return CheckResult(name, "skip", {"reason": "isolated vertices"})
    cmvwc = is_cm_very_well_covered(graph)
    jg = cover_ideal(graph)
    mins = minimal_primes(jg)
    power = None
    breaking = None
    chain_data = []
    for k in range(1, max_k + 1):
        power = jg if power is None else power.multiply(jg)
        member = symbolic_power(jg, k, base_power=power)
        v = v_number(member, ass=mins).global_v
        alpha = member.alpha()
        try:
            reg = regularity(member, max_vars=caps.betti_vars)
        except ResourceLimitError as exc:
            return CheckResult(name, "skip", {"reason": str(exc), "k": k})
        chain_data.append({"k": k, "v": v, "reg": reg, "alpha_minus_1": alpha - 1})
        if not (v == reg == alpha - 1):
            breaking = k
            break
    if cmvwc:
        if breaking is None:
            return CheckResult(
                name, "pass", {"cmvwc": True, "chain": chain_data}
            )
        return CheckResult(
            name,
            "fail",
            {"cmvwc": True, "breaks_at": breaking, "chain": chain_data},
        )
    if breaking is not None:
        return CheckResult(
            name, "pass", {"cmvwc": False, "breaks_at": breaking, "chain": chain_data}
        )
    return CheckResult(
        name,
        "skip",
        {"reason": f"inconclusive-at-{max_k}", "cmvwc": False, "chain": chain_data},
    )


def check_upper_bounds(
    ideal: MonomialIdeal, max_k: int, caps: Caps = Caps()
) -> CheckResult:
    """Window check of the linear upper bounds on v along both filtrations.

    Always: v(I^(k)) <= (k-1) d(I) + v(I).  When v(I) <= d(I) - 1, also
    v(I^(k)) <= k d(I) - 1 <= reg(R/I^(k)).  When the ordinary powers
    persist, also v(I^k) <= (k-1) d(I) + v(I)."""
    name = "upper-bounds"
    if not ideal.is_squarefree():
        return CheckResult(name, "skip", {"reason": "not square-free"})
    d = ideal.max_gen_degree()
    mins = minimal_primes(ideal)
    v1 = v_number(ideal, ass=mins).global_v
    persists = has_strong_persistence_upto(ideal, max_k) if max_k >= 2 else True
    power = None
    for k in range(1, max_k + 1):
        power = ideal if power is None else power.multiply(ideal)
        member = symbolic_power(ideal, k, base_power=power)
        v = v_number(member, ass=mins).global_v
        bound = (k - 1) * d + v1
        if v > bound:
            return CheckResult(
                name, "fail",
                {"ideal": ideal, "k": k, "which": "symbolic", "v": v, "bound": bound},
            )
        if v1 <= d - 1:
            if v > k * d - 1:
                return CheckResult(
                    name, "fail",
                    {"ideal": ideal, "k": k, "which": "kd-1", "v": v, "bound": k * d - 1},
                )
            try:
                reg = regularity(member, max_vars=caps.betti_vars)
            except ResourceLimitError as exc:
                return CheckResult(name, "skip", {"reason": str(exc), "k": k})
            if k * d - 1 > reg:
                return CheckResult(
                    name, "fail",
                    {"ideal": ideal, "k": k, "which": "kd-1<=reg", "reg": reg},
                )
        if persists:
            vo = v_number(power).global_v
            if vo > bound:
                return CheckResult(
                    name, "fail",
                    {"ideal": ideal, "k": k, "which": "ordinary", "v": vo, "bound": bound},
                )
    return CheckResult(name, "pass", {"ideal": ideal, "max_k": max_k})


def _trend_verdict(
    name: str, margins: list[int], payload: dict
) -> CheckResult:
    """Trend semantics for statements quantified over large k: the margin
    must be non-negative and non-shrinking over the last three window points."""
    tail = margins[-3:]
    if any(m < 0 for m in tail):
        return CheckResult(name, "fail", {**payload, "margins": margins})
    if any(tail[i] > tail[i + 1] for i in range(len(tail) - 1)):
        return CheckResult(
            name, "fail", {**payload, "margins": margins, "reason": "shrinking margin"}
        )
    return CheckResult(name, "pass", {**payload, "margins": margins, "mode": "trend"})


def check_criteria_suite(
    ideal: MonomialIdeal, max_k: int = 3, caps: Caps = Caps()
) -> dict[str, CheckResult]:
    """Per-criterion window checks for a square-free ideal.

    Exact-hypothesis criteria are checked on the window; asymptotic
    conclusions are reported with trend semantics."""
    out: dict[str, CheckResult] = {}
    if not ideal.is_squarefree():
        return {"criteria": CheckResult("criteria", "skip", {"reason": "not square-free"})}
    mins = minimal_primes(ideal)
    d = ideal.max_gen_degree()
    v1 = v_number(ideal, ass=mins).global_v

    seq = []
    power = None
    capped = False
    for k in range(1, max_k + 1):
        power = ideal if power is None else power.multiply(ideal)
        member = symbolic_power(ideal, k, base_power=power)
        entry = {
            "k": k,
            "v_sym": v_number(member, ass=mins).global_v,
            "v_ord": v_number(power).global_v,
            "alpha_sym": member.alpha(),
        }
        try:
            entry["reg_sym"] = regularity(member, max_vars=caps.betti_vars)
            entry["reg_ord"] = regularity(power, max_vars=caps.betti_vars)
        except ResourceLimitError:
            capped = True
        seq.append(entry)
    if capped:
        return {
            "criteria": CheckResult(
                "criteria", "skip", {"reason": "regularity cap exceeded"}
            )
        }

    what = waldschmidt_constant(ideal)
    try:
        delta = delta_invariant(ideal, max_dim=caps.vertex_dim)
    except ResourceLimitError:
        delta = None

    # Gap criterion: alpha-hat < delta forces v <= reg for large k.
    if delta is not None:
        if not ideal.is_equigenerated() and not what < delta:
            out["nonequi-gap"] = CheckResult(
                "nonequi-gap", "fail",
                {"ideal": ideal, "waldschmidt": what, "delta": delta},
            )
        elif not ideal.is_equigenerated():
            out["nonequi-gap"] = CheckResult(
                "nonequi-gap", "pass", {"waldschmidt": what, "delta": delta}
            )
        if what < delta:
            margins = [e["reg_sym"] - e["v_sym"] for e in seq]
            out["alpha-delta-trend"] = _trend_verdict(
                "alpha-delta-trend", margins, {"ideal": ideal}
            )

    # Induced-matching criterion.
    h = hypergraph_of_ideal(ideal)
    weight = best_induced_matching_weight(h)
    if v1 <= weight:
        viol = next(
            (e for e in seq if e["v_sym"] > e["reg_sym"]), None
        )
        out["induced-matching"] = CheckResult(
            "induced-matching",
            "fail" if viol else "pass",
            {"ideal": ideal, "weight": weight, **({"at": viol} if viol else {})},
        )
        persists = max_k < 2 or has_strong_persistence_upto(ideal, max_k)
        if persists:
            viol = next((e for e in seq if e["v_ord"] > e["reg_ord"]), None)
            out["induced-matching-ordinary"] = CheckResult(
                "induced-matching-ordinary",
                "fail" if viol else "pass",
                {"ideal": ideal, **({"at": viol} if viol else {})},
            )
        uniform = h.is_uniform()
        if uniform is not None:
            from .graphs import induced_matching_number

            if v1 <= induced_matching_number(h) * (uniform - 1):
                viol = next((e for e in seq if e["v_sym"] > e["reg_sym"]), None)
                out["uniform-matching"] = CheckResult(
                    "uniform-matching",
                    "fail" if viol else "pass",
                    {"ideal": ideal, "d": uniform},
                )

    # Polymatroidal equality chain.
    if is_polymatroidal(ideal):
        bad = None
        for e in seq:
            k = e["k"]
            if not (e["v_ord"] == d * k - 1 == e["reg_ord"]):
                bad = {"k": k, "which": "ordinary", **e}
                break
            if not (e["v_sym"] <= d * k - 1 <= e["reg_sym"]):
                bad = {"k": k, "which": "symbolic", **e}
                break
        out["polymatroidal-chain"] = CheckResult(
            "polymatroidal-chain",
            "fail" if bad else "pass",
            {"ideal": ideal, **({"at": bad} if bad else {})},
        )
    return out


def check_variant_agreement(ideal: MonomialIdeal, max_k: int) -> CheckResult:
    """Square-free ideals: the two symbolic-power definitions must agree."""
    name = "variant-agreement"
    if not ideal.is_squarefree():
        return CheckResult(name, "skip", {"reason": "not square-free"})
    power = None
    for k in range(1, max_k + 1):
        power = ideal if power is None else power.multiply(ideal)
        a = symbolic_power(ideal, k, SymbolicPowerVariant.MIN, base_power=power)
        b = symbolic_power(ideal, k, SymbolicPowerVariant.ASS, base_power=power)
        if a != b:
            return CheckResult(name, "fail", {"ideal": ideal, "k": k})
    return CheckResult(name, "pass", {"ideal": ideal, "max_k": max_k})


def check_persistence(ideal: MonomialIdeal, max_k: int) -> CheckResult:
    """Symbolic colon identity (I^(k) : I^(1)) = I^(k-1) on the window."""
    name = "symbolic-persistence"
    first = symbolic_power(ideal, 1)
    prev = first
    power = ideal
    for k in range(2, max_k + 1):
        power = power.multiply(ideal)
        current = symbolic_power(ideal, k, base_power=power)
        if current.colon(first) != prev:
            return CheckResult(name, "fail", {"ideal": ideal, "k": k})
        prev = current
    return CheckResult(name, "pass", {"ideal": ideal, "max_k": max_k})


def check_ordinary_persistence(ideal: MonomialIdeal, max_k: int) -> CheckResult:
    """(I^{k+1} : I) = I^k on the window."""
    name = "ordinary-persistence"
    prev = ideal
    for k in range(1, max_k):
        nxt = prev.multiply(ideal)
        if nxt.colon(ideal) != prev:
            return CheckResult(name, "fail", {"ideal": ideal, "k": k})
        prev = nxt
    return CheckResult(name, "pass", {"ideal": ideal, "max_k": max_k})


def check_power_multiplicativity(ideal: MonomialIdeal, max_r: int = 3, max_total: int = 6) -> CheckResult:
    """Search r <= max_r with I^(r k) = (I^(r))^k whenever r k <= max_total.

    For ordinary powers this holds with r = 1 by definition; the symbolic
    filtration is searched and the found r reported, or the check skips."""
    name = "power-multiplicativity"
    if not ideal.is_squarefree():
        return CheckResult(name, "skip", {"reason": "not square-free"})
    for r in range(1, max_r + 1):
        base = symbolic_power(ideal, r)
        ok = True
        k = 2
        while r * k <= max_total:
            if symbolic_power(ideal, r * k) != base.power(k):
                ok = False
                break
            k += 1
        if ok and r * 2 <= max_total:
            return CheckResult(name, "pass", {"ideal": ideal, "r": r})
    return CheckResult(
        name, "skip", {"reason": f"not found for r <= {max_r} within {max_total}"}
    )


# -- suites ----------------------------------------------------------------------


def _graph_label(g: Graph) -> str:
    return f"graph(n={g.n}, edges={[(u + 1, v + 1) for u, v in g.edges]})"


def run_cover_suite(n_max: int, max_k: int, caps: Caps = Caps()) -> list[FiltrationReport]:
    reports = []
    for n in range(2, n_max + 1):
        for g in all_graphs(n, no_isolated=True, caps=caps):
            res = check_cover_vs_reg(g, max_k, caps)
            reports.append(
                FiltrationReport(_graph_label(g), "symbolic-min", checks=[res])
            )
    return reports


def run_cmvwc_suite(n_max: int, max_k: int, caps: Caps = Caps()) -> list[FiltrationReport]:
    reports = []
    for n in range(2, n_max + 1):
        for g in all_graphs(n, no_isolated=True, caps=caps):
            res = check_cmvwc_equivalence(g, max_k, caps)
            reports.append(
                FiltrationReport(_graph_label(g), "symbolic-min", checks=[res])
            )
    return reports


def run_slope_suite(max_vars: int, max_k: int, caps: Caps = Caps()) -> list[FiltrationReport]:
    reports = []
    for ideal in squarefree_ideal_corpus(max_vars, 4, caps):
        checks = [check_slope_theorem(ideal, max_k, caps)]
        reports.append(FiltrationReport(str(ideal), "symbolic-min", checks=checks))
    return reports


def run_bounds_suite(max_vars: int, max_k: int, caps: Caps = Caps()) -> list[FiltrationReport]:
    reports = []
    for ideal in squarefree_ideal_corpus(max_vars, 6, caps):
        checks = [check_upper_bounds(ideal, max_k, caps)]
        reports.append(FiltrationReport(str(ideal), "symbolic-min", checks=checks))
    return reports


def run_persistence_suite(
    max_vars: int, max_k: int, caps: Caps = Caps()
) -> list[FiltrationReport]:
    reports = []
    for ideal in squarefree_ideal_corpus(max_vars, 6, caps):
        checks = [check_persistence(ideal, max_k)]
        reports.append(FiltrationReport(str(ideal), "symbolic-min", checks=checks))
    return reports


def run_criteria_suite(max_vars: int, max_k: int, caps: Caps = Caps()) -> list[FiltrationReport]:
    reports = []
    for ideal in squarefree_ideal_corpus(max_vars, 6, caps):
        checks = list(check_criteria_suite(ideal, max_k, caps).values())
        reports.append(FiltrationReport(str(ideal), "symbolic-min", checks=checks))
    return reports


SUITES: dict[str, Callable] = {
    "cover": run_cover_suite,
    "cmvwc": run_cmvwc_suite,
    "slope": run_slope_suite,
    "bounds": run_bounds_suite,
    "persistence": run_persistence_suite,
    "criteria": run_criteria_suite,
}


def aggregate_status(reports: Iterable[FiltrationReport]) -> str:
    worst = "pass"
    for rep in reports:
        for check in rep.checks:
            if check.status == "fail":
                return "fail"
            if check.status == "skip":
                worst = "pass"
    return worst
