"""The carry state machine driven by digit pairs.

Reading a product least-significant digit first while multiplying by the
single digit n walks a finite machine whose states are the possible carries
0..n-1.  Every allowed digit pair induces exactly one transition, so the
machine is a labeled directed multigraph with one multiedge per mother-graph
edge; this is the Hoey-Sloane multigraph of (n, b).  The strings the machine
accepts are the label sequences of walks from carry 0 back to carry 0, and
permutiple strings are exactly the accepted strings whose two digit tracks
agree as multisets.

Sub-multigraphs picked out by mother-graph cycles, and multiset unions of
those, are what the Eulerian layer consumes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .digits import CarrySeq, DigitVec, Params, PermutipleWitness, find_permutation
from .errors import NotAnLWalkError, RejectedPairError, UnknownCycleIndexError
from .mothergraph import (
    DEFAULT_MAX_CYCLES,
    Cycle,
    DigitPair,
    build_mother_graph,
    enumerate_cycles,
)

__all__ = [
    "LabeledMultiedge",
    "HSMultigraph",
    "CycleMultiset",
    "PermutipleString",
    "transition",
    "build_hs_multigraph",
    "cycle_multi_image",
    "union_images",
    "string_to_witness",
    "group_by_transition",
    "multigraph_to_dot",
]


class LabeledMultiedge(NamedTuple):
    """One transition of the carry machine: c1 --(d1,d2)--> c2."""

    c1: int
    c2: int
    label: DigitPair


def transition(pair: DigitPair | tuple[int, int], p: Params) -> tuple[int, int]:
    """The unique carry transition (c1, c2) a digit pair induces.

    c1 is the least residue of d1 - n*d2 modulo b; if it lands outside
    0..n-1 the pair is not allowed at all and RejectedPairError is raised.
    c2 then follows from b*c2 = n*d2 - d1 + c1, which divides exactly and
    stays inside 0..n-1 on its own.

    >>> transition((9, 9), Params(4, 10))
    (3, 3)
    """
    d1, d2 = pair
    if not (0 <= d1 < p.b and 0 <= d2 < p.b):
        raise ValueError(f"pair ({d1},{d2}) is not made of base-{p.b} digits")
    c1 = (d1 - p.n * d2) % p.b
    if c1 > p.n - 1:
        raise RejectedPairError(f"pair ({d1},{d2}) is rejected for {p}")
    c2, rem = divmod(p.n * d2 - d1 + c1, p.b)
    assert rem == 0 and 0 <= c2 <= p.n - 1
    return (c1, c2)


@dataclass(frozen=True)
class HSMultigraph:
    """Carry-state multigraph over the states 0..n-1.

    multiedges is kept sorted; repeated entries are how a multiset union
    carries the same labeled transition more than once.  Every entry must
    satisfy the carry recurrence b*c2 - c1 = n*d2 - d1.
    """

    params: Params
    multiedges: tuple[LabeledMultiedge, ...]

    def __post_init__(self) -> None:
        canon = tuple(
            sorted(LabeledMultiedge(c1, c2, DigitPair(*lbl)) for c1, c2, lbl in self.multiedges)
        )
        object.__setattr__(self, "multiedges", canon)
        n, b = self.params.n, self.params.b
        for e in canon:
            if not (0 <= e.c1 < n and 0 <= e.c2 < n):
                raise ValueError(f"state of {e} outside 0..{n - 1}")
            if b * e.c2 - e.c1 != n * e.label.d2 - e.label.d1:
                raise ValueError(f"multiedge {e} breaks the carry recurrence")

    @property
    def states(self) -> range:
        return range(self.params.n)

    def active_states(self) -> tuple[int, ...]:
        """States with at least one incident multiedge, ascending."""
        seen = set()
        for e in self.multiedges:
            seen.add(e.c1)
            seen.add(e.c2)
        return tuple(sorted(seen))

    def label_multiplicities(self) -> Counter:
        return Counter(e.label for e in self.multiedges)

    def union(self, other: "HSMultigraph") -> "HSMultigraph":
        """Multiset union: multiplicities add."""
        if self.params != other.params:
            raise ValueError("cannot union multigraphs over different parameters")
        return HSMultigraph(self.params, self.multiedges + other.multiedges)

    def __len__(self) -> int:
        return len(self.multiedges)


def build_hs_multigraph(p: Params) -> HSMultigraph:
    """The full carry machine: one multiedge per mother-graph edge."""
    mother = build_mother_graph(p)
    edges = []
    for pair in mother.edges:
        c1, c2 = transition(pair, p)
        edges.append(LabeledMultiedge(c1, c2, pair))
    return HSMultigraph(p, tuple(edges))


def cycle_multi_image(cycle: Cycle, p: Params) -> HSMultigraph:
    """The sub-multigraph the carry machine assigns to one digit cycle."""
    edges = []
    for pair in cycle.edges:
        c1, c2 = transition(pair, p)
        edges.append(LabeledMultiedge(c1, c2, pair))
    return HSMultigraph(p, tuple(edges))


@dataclass(frozen=True)
class CycleMultiset:
    """Multiplicities over canonical cycle indices of one inventory."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted((int(i), int(m)) for i, m in self.counts))
        object.__setattr__(self, "counts", canon)
        seen = set()
        for i, m in canon:
            if i < 0:
                raise ValueError(f"cycle index {i} is negative")
            if m < 1:
                raise ValueError(f"multiplicity for cycle {i} must be positive, got {m}")
            if i in seen:
                raise ValueError(f"cycle index {i} listed twice")
            seen.add(i)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "CycleMultiset":
        """Multiset from a plain list of indices, repetition = multiplicity."""
        return cls(tuple(Counter(int(i) for i in indices).items()))

    def items(self) -> tuple[tuple[int, int], ...]:
        return self.counts

    @property
    def total_cycles(self) -> int:
        return sum(m for _, m in self.counts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{i}: {m}" for i, m in self.counts) + "}"


def union_images(
    ms: CycleMultiset,
    p: Params,
    inventory: Sequence[Cycle] | None = None,
    max_cycles: int = DEFAULT_MAX_CYCLES,
) -> HSMultigraph:
    """Multiset union of the multi-images of the cycles named by ms.

    inventory defaults to the canonical cycle inventory of the (n, b) mother
    graph; pass the inventory of a class graph to work inside one class.
    The empty multiset gives the empty multigraph.  Raises
    UnknownCycleIndexError for an index the inventory does not have.
    """
    if inventory is None:
        inventory = enumerate_cycles(build_mother_graph(p), max_cycles=max_cycles)
    edges: list[LabeledMultiedge] = []
    for index, mult in ms.items():
        if index >= len(inventory):
            raise UnknownCycleIndexError(
                f"cycle index {index} outside inventory of {len(inventory)} cycles"
            )
        image = cycle_multi_image(inventory[index], p)
        edges.extend(image.multiedges * mult)
    return HSMultigraph(p, tuple(edges))


@dataclass(frozen=True)
class PermutipleString:
    """A digit-pair string, least significant position first."""

    pairs: tuple[DigitPair, ...]

    def __post_init__(self) -> None:
        canon = tuple(DigitPair(*e) for e in self.pairs)
        object.__setattr__(self, "pairs", canon)
        if not canon:
            raise ValueError("a pair string holds at least one pair")

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return "".join(str(e) for e in self.pairs)


def string_to_witness(s: PermutipleString, p: Params) -> PermutipleWitness:
    """Replay the carry machine over the string and assemble the witness.

    First components spell the product, second components the multiplicand,
    both least significant first.  Raises NotAnLWalkError unless the induced
    walk starts and ends at carry 0 with every step consistent (and
    RejectedPairError if some pair has no transition at all).  Acceptance of
    the walk guarantees the value relation; whether the string is a genuine
    permutiple additionally needs the two digit tracks to agree as multisets,
    which the witness report of the result states.
    """
    carries = [0]
    state = 0
    for i, pair in enumerate(s.pairs):
        c1, c2 = transition(pair, p)
        if c1 != state:
            if i == 0:
                raise NotAnLWalkError(f"walk starts at carry {c1}, not 0")
            raise NotAnLWalkError(
                f"pair {pair} at position {i} needs carry {c1} but the walk is at {state}"
            )
        state = c2
        carries.append(c2)
    if state != 0:
        raise NotAnLWalkError(f"walk ends at carry {state}, not 0")
    digits = DigitVec(tuple(e.d1 for e in s.pairs), p.b)
    permuted = DigitVec(tuple(e.d2 for e in s.pairs), p.b)
    return PermutipleWitness(
        p, digits, permuted, CarrySeq(tuple(carries)), find_permutation(digits, permuted)
    )


def group_by_transition(g: HSMultigraph) -> Mapping[tuple[int, int], tuple[DigitPair, ...]]:
    """Collapse to the classic state-graph view: labels per (c1, c2) arrow.

    Purely a display/reporting convenience; the multigraph itself stays the
    authoritative object because unions need multiplicities.
    """
    grouped: dict[tuple[int, int], list[DigitPair]] = {}
    for e in g.multiedges:
        grouped.setdefault((e.c1, e.c2), []).append(e.label)
    return {k: tuple(v) for k, v in grouped.items()}


def multigraph_to_dot(g: HSMultigraph, name: str = "carry_machine") -> str:
    """Graphviz source: one arrow per multiedge, labels rendered d1,d2.

    State 0 is drawn as the initial/accepting state (doublecircle plus an
    entry arrow) whenever it has positive degree.
    """
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    active = g.active_states()
    if 0 in active:
        lines.append("  __start [shape=point];")
    for s in active:
        shape = "doublecircle" if s == 0 else "circle"
        lines.append(f"  {s} [shape={shape}];")
    if 0 in active:
        lines.append("  __start -> 0;")
    for e in g.multiedges:
        lines.append(f'  {e.c1} -> {e.c2} [label="{e.label.d1},{e.label.d2}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
