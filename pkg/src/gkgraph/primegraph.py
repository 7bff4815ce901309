"""Prime graphs: vertices are primes, p -- q when some element has order pq."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import UnknownFormat
from .finfield import is_prime, prime_factors


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vertices = tuple(sorted(set(self.vertices)))
        edges = tuple(sorted({(min(e), max(e)) for e in self.edges}))
        for v in vertices:
            if not is_prime(v):
                raise ValueError(f"vertex {v} is not prime")
        vs = set(vertices)
        for p, q in edges:
            if p == q:
                raise ValueError(f"self-loop at {p}")
            if p not in vs or q not in vs:
                raise ValueError(f"edge ({p}, {q}) has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    def adjacent(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def neighbours(self, p: int) -> list[int]:
        return [b if a == p else a for a, b in self.edges if p in (a, b)]

    @property
    def component_count(self) -> int:
        return len(components(self))


def graph_from_spectrum(spec) -> PrimeGraph:
    orders = set(spec.orders)
    primes = sorted({p for n in orders for p in prime_factors(n)})
    edges = [(p, q) for p, q in itertools.combinations(primes, 2) if p * q in orders]
    return PrimeGraph(tuple(primes), tuple(edges))


def components(g: PrimeGraph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbours(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def graphs_equal(a: PrimeGraph, b: PrimeGraph) -> bool:
    """Labelled equality: same primes, same edges (not isomorphism)."""
    return a.vertices == b.vertices and a.edges == b.edges


def edge_difference(a: PrimeGraph, b: PrimeGraph) -> dict:
    return {
        "only_first": [list(e) for e in sorted(set(a.edges) - set(b.edges))],
        "only_second": [list(e) for e in sorted(set(b.edges) - set(a.edges))],
        "vertices_only_first": sorted(set(a.vertices) - set(b.vertices)),
        "vertices_only_second": sorted(set(b.vertices) - set(a.vertices)),
    }


def independence_sets(g: PrimeGraph, size: int) -> list[tuple[int, ...]]:
    if size > len(g.vertices):
        raise ValueError(f"size {size} exceeds the {len(g.vertices)} vertices")
    return [
        s for s in itertools.combinations(g.vertices, size)
        if not any(g.adjacent(p, q) for p, q in itertools.combinations(s, 2))
    ]


def to_json(g: PrimeGraph) -> str:
    return json.dumps(
        {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]},
        separators=(",", ":"),
    )


def to_dot(g: PrimeGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {p} -- {q};" for p, q in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_json(text: str) -> PrimeGraph:
    data = json.loads(text)
    return PrimeGraph(tuple(data["vertices"]), tuple(tuple(e) for e in data["edges"]))


def export(g: PrimeGraph, format: str) -> str:
    if format == "json":
        return to_json(g)
    if format == "dot":
        return to_dot(g)
    raise UnknownFormat(f"unknown graph format {format!r}; expected 'dot' or 'json'")
