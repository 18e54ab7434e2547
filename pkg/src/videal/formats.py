"""Text formats for ideals and graphs, as consumed and emitted by the CLI.

Ideal files:  header line ``ring <n>``, then one generator per line as
``*``-separated tokens ``x<i>^<e>`` (exponent omitted when 1), e.g.
``x1^2*x3``.  A bare ``1`` denotes the unit generator.  Blank lines and
``#`` comments are ignored.

Graph files:  header line ``graph <n>``, then one edge per line as
``u v`` with 1-based vertex indices.  Same comment rules.
"""

from __future__ import annotations

from .graphs import Graph
from .monomials import Monomial, MonomialIdeal


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_ideal(text: str) -> MonomialIdeal:
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("ring"):
        raise ValueError("ideal file must start with a 'ring <n>' header")
    try:
        nvars = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad ring header {lines[0]!r}") from exc
    gens = [parse_monomial(line, nvars) for line in lines[1:]]
    return MonomialIdeal(nvars, gens)


def parse_monomial(token: str, nvars: int) -> Monomial:
    token = token.strip()
    if token == "1":
        return Monomial((0,) * nvars)
    exps = [0] * nvars
    for factor in token.split("*"):
        factor = factor.strip()
        if not factor.startswith("x"):
            raise ValueError(f"bad monomial factor {factor!r}")
        if "^" in factor:
            var, exp = factor[1:].split("^", 1)
            e = int(exp)
        else:
            var, e = factor[1:], 1
        idx = int(var) - 1
        if not 0 <= idx < nvars:
            raise ValueError(f"variable x{var} outside ring with {nvars} variables")
        exps[idx] += e
    return Monomial(exps)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"ring {ideal.nvars}"]
    lines.extend(str(g) for g in ideal.gens)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("graph"):
        raise ValueError("graph file must start with a 'graph <n>' header")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad graph header {lines[0]!r}") from exc
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        u, v = int(parts[0]) - 1, int(parts[1]) - 1
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(graph: Graph) -> str:
    lines = [f"graph {graph.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
