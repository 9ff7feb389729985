"""Digit-pair graphs: which pairs an (n, b)-permutiple may use at all.

A pair (d1, d2) can serve as some position's (product digit, multiplicand
digit) only when the least non-negative residue of d1 + (b - n) * d2 modulo
b is at most n - 1.  Collecting every such pair over the digits 0..b-1
gives the mother graph for (n, b); the pairs one witness actually uses form
its class graph, a subgraph.  Edge multisets of permutiples always split
into elementary directed cycles of the mother graph, which is why the cycle
inventory built here is the currency the rest of the package trades in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from ._digraph import elementary_cycles
from .digits import Params, PermutipleWitness

__all__ = [
    "DigitPair",
    "DigitGraph",
    "MotherGraph",
    "ClassGraph",
    "Cycle",
    "edge_allowed",
    "build_mother_graph",
    "graph_of_witness",
    "is_in_class",
    "enumerate_cycles",
    "graph_to_dot",
    "DEFAULT_MAX_CYCLES",
]

DEFAULT_MAX_CYCLES = 10_000


class DigitPair(NamedTuple):
    """Directed edge (d1, d2): d1 the product digit, d2 the multiplicand digit."""

    d1: int
    d2: int

    def __str__(self) -> str:
        return f"({self.d1},{self.d2})"


def edge_allowed(pair: DigitPair | tuple[int, int], p: Params) -> bool:
    """Whether the pair satisfies the residue inequality for (n, b)."""
    d1, d2 = pair
    if not (0 <= d1 < p.b and 0 <= d2 < p.b):
        raise ValueError(f"pair ({d1},{d2}) is not made of base-{p.b} digits")
    return (d1 + (p.b - p.n) * d2) % p.b <= p.n - 1


@dataclass(frozen=True)
class DigitGraph:
    """A set of allowed digit pairs, viewed as a digraph on 0..b-1."""

    params: Params
    edges: tuple[DigitPair, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted({DigitPair(*e) for e in self.edges}))
        object.__setattr__(self, "edges", canon)
        for e in canon:
            if not edge_allowed(e, self.params):
                raise ValueError(f"edge {e} violates the residue inequality for {self.params}")

    @property
    def vertices(self) -> range:
        return range(self.params.b)

    def successors(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.d1].append(e.d2)
        return adj

    def __contains__(self, pair: object) -> bool:
        try:
            return DigitPair(*pair) in set(self.edges)  # type: ignore[misc]
        except TypeError:
            return False


@dataclass(frozen=True)
class MotherGraph(DigitGraph):
    """The full graph of allowed pairs; construction checks completeness."""

    def __post_init__(self) -> None:
        super().__post_init__()
        expected = tuple(
            DigitPair(d1, d2)
            for d1 in range(self.params.b)
            for d2 in range(self.params.b)
            if (d1 + (self.params.b - self.params.n) * d2) % self.params.b
            <= self.params.n - 1
        )
        if self.edges != expected:
            raise ValueError(f"mother graph for {self.params} must hold every allowed pair")


@dataclass(frozen=True)
class ClassGraph(DigitGraph):
    """The pairs some witness actually uses; any subgraph of allowed pairs."""


def build_mother_graph(p: Params) -> MotherGraph:
    """Every allowed digit pair for (n, b), in lexicographic order."""
    edges = tuple(
        DigitPair(d1, d2)
        for d1 in range(p.b)
        for d2 in range(p.b)
        if (d1 + (p.b - p.n) * d2) % p.b <= p.n - 1
    )
    return MotherGraph(p, edges)


def graph_of_witness(w: PermutipleWitness) -> ClassGraph:
    """The digit pairs a witness uses, one edge per distinct pair."""
    pairs = {DigitPair(d, q) for d, q in zip(w.digits.digits, w.permuted.digits)}
    return ClassGraph(w.params, tuple(sorted(pairs)))


def is_in_class(w: PermutipleWitness, g: DigitGraph) -> bool:
    """Whether the witness stays inside the pairs of g."""
    if w.params != g.params:
        return False
    return set(graph_of_witness(w).edges) <= set(g.edges)


@dataclass(frozen=True)
class Cycle:
    """An elementary directed cycle, stored from its smallest vertex.

    edges[i] runs from vertex edges[i].d1 to edges[i].d2 and consecutive
    edges are incident, wrapping around at the end; no vertex repeats.  The
    rotation starting at the smallest vertex is the canonical form, so equal
    cycles compare equal no matter how they were traversed.
    """

    edges: tuple[DigitPair, ...]

    def __post_init__(self) -> None:
        canon = tuple(DigitPair(*e) for e in self.edges)
        object.__setattr__(self, "edges", canon)
        if not canon:
            raise ValueError("a cycle has at least one edge")
        k = len(canon)
        for i in range(k):
            if canon[i].d2 != canon[(i + 1) % k].d1:
                raise ValueError(f"edges {canon[i]} and {canon[(i + 1) % k]} do not chain")
        verts = [e.d1 for e in canon]
        if len(set(verts)) != k:
            raise ValueError("cycle visits a vertex twice")
        if canon[0].d1 != min(verts):
            raise ValueError("cycle must start at its smallest vertex")

    @classmethod
    def from_vertices(cls, vs: Sequence[int]) -> "Cycle":
        """Canonical cycle through the given vertex sequence."""
        i = vs.index(min(vs))
        rot = tuple(vs[i:]) + tuple(vs[:i])
        k = len(rot)
        return cls(tuple(DigitPair(rot[j], rot[(j + 1) % k]) for j in range(k)))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(e.d1 for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return "".join(str(e) for e in self.edges)


def enumerate_cycles(
    g: DigitGraph, max_cycles: int = DEFAULT_MAX_CYCLES
) -> tuple[Cycle, ...]:
    """All elementary cycles of g, sorted by length then edge sequence.

    The position of a cycle in the returned tuple is its canonical index,
    the stable handle everything else uses to name cycles of g.  Works for
    the mother graph and for class graphs alike.  Raises CapExceededError
    when more than max_cycles cycles exist.
    """
    if max_cycles < 1:
        raise ValueError(f"max_cycles must be positive, got {max_cycles}")
    raw = elementary_cycles(g.vertices, g.successors(), limit=max_cycles)
    cycles = [Cycle.from_vertices(vs) for vs in raw]
    cycles.sort(key=lambda c: (len(c.edges), c.edges))
    return tuple(cycles)


def graph_to_dot(
    g: DigitGraph,
    highlight: Iterable[DigitPair | tuple[int, int]] = (),
    name: str = "digit_graph",
) -> str:
    """Graphviz source for a digit graph; highlighted edges are drawn red."""
    marked = {DigitPair(*e) for e in highlight}
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for e in g.edges:
        attr = " [color=red]" if e in marked else ""
        lines.append(f"  {e.d1} -> {e.d2}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
