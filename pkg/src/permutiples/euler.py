"""When a union of cycle images can be ordered into an accepted string.

A multiset of mother-graph cycles assembles into a permutiple string exactly
when the union of their carry-machine images contains state 0, is strongly
connected on its active states, and has matching indegree and outdegree
everywhere; in that case the strings are precisely the Eulerian circuits
from state 0, read off by their labels.  This module decides the three
conditions, walks the circuits, and counts them two independent ways.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import NamedTuple, Optional

from ._digraph import strongly_connected_components
from .errors import CapExceededError
from .statemachine import HSMultigraph, LabeledMultiedge, PermutipleString

__all__ = [
    "ConditionReport",
    "EnumerationOptions",
    "CircuitCounts",
    "condition_report",
    "enumerate_strings",
    "count_circuits",
    "find_eulerian_circuit",
    "count_sequences_by_arborescences",
    "LABEL_DISTINCT",
    "NUMERICALLY_DISTINCT",
    "ALLOW_LEADING_ZERO",
    "FORBID_LEADING_ZERO",
    "DEFAULT_MAX_STRINGS",
]

LABEL_DISTINCT = "label-distinct"
NUMERICALLY_DISTINCT = "numerically-distinct"
ALLOW_LEADING_ZERO = "allow"
FORBID_LEADING_ZERO = "forbid"
DEFAULT_MAX_STRINGS = 100_000


@dataclass(frozen=True)
class ConditionReport:
    """The three acceptance conditions for a carry-state multigraph.

    degree_deltas lists (state, indegree - outdegree) for every active
    state; strongly_connected is judged on active states only, so isolated
    states never count against it.  The empty multigraph fails because no
    zero state is present.
    """

    contains_zero: bool
    strongly_connected: bool
    balanced: bool
    degree_deltas: tuple[tuple[int, int], ...]

    @property
    def verdict(self) -> bool:
        return self.contains_zero and self.strongly_connected and self.balanced


@dataclass(frozen=True)
class EnumerationOptions:
    """Knobs for circuit enumeration.

    dedup picks what counts as the same string: label-distinct treats
    circuits that only swap identical-label copies as one; numerically
    distinct additionally folds strings that spell the same product value.
    leading_zero decides whether strings whose most significant product
    digit is 0 are kept.  cap bounds the number of results; crossing it
    raises instead of truncating.
    """

    dedup: str = LABEL_DISTINCT
    leading_zero: str = ALLOW_LEADING_ZERO
    cap: int = DEFAULT_MAX_STRINGS

    def __post_init__(self) -> None:
        if self.dedup not in (LABEL_DISTINCT, NUMERICALLY_DISTINCT):
            raise ValueError(f"unknown dedup mode {self.dedup!r}")
        if self.leading_zero not in (ALLOW_LEADING_ZERO, FORBID_LEADING_ZERO):
            raise ValueError(f"unknown leading-zero mode {self.leading_zero!r}")
        if self.cap < 1:
            raise ValueError(f"cap must be positive, got {self.cap}")


class CircuitCounts(NamedTuple):
    edge_sequences_from_zero: int
    label_distinct: int


def _degrees(g: HSMultigraph) -> tuple[Counter, Counter]:
    indeg: Counter = Counter()
    outdeg: Counter = Counter()
    for e in g.multiedges:
        outdeg[e.c1] += 1
        indeg[e.c2] += 1
    return indeg, outdeg


def condition_report(g: HSMultigraph) -> ConditionReport:
    """Decide zero-state presence, strong connectivity, and balance for g."""
    indeg, outdeg = _degrees(g)
    active = sorted(set(indeg) | set(outdeg))
    if active:
        adj: dict[int, list[int]] = {v: [] for v in active}
        for e in g.multiedges:
            adj[e.c1].append(e.c2)
        strongly_connected = len(strongly_connected_components(active, adj)) == 1
    else:
        strongly_connected = True
    deltas = tuple((v, indeg[v] - outdeg[v]) for v in active)
    return ConditionReport(
        contains_zero=0 in set(active),
        strongly_connected=strongly_connected,
        balanced=all(d == 0 for _, d in deltas),
        degree_deltas=deltas,
    )


def _grouped_out_edges(g: HSMultigraph) -> dict[int, list[list]]:
    """Per state: [to, label, multiplicity] rows sorted by (to, label)."""
    groups: dict[int, dict[tuple, list]] = {}
    for e in g.multiedges:
        row = groups.setdefault(e.c1, {}).setdefault((e.c2, e.label), [e.c2, e.label, 0])
        row[2] += 1
    return {v: [rows[k] for k in sorted(rows)] for v, rows in groups.items()}


def enumerate_strings(
    g: HSMultigraph, opts: EnumerationOptions | None = None
) -> tuple[PermutipleString, ...]:
    """Every Eulerian circuit of g from state 0, read as a pair string.

    Returns () whenever the condition report fails.  The walk is
    depth-first over out-edges ordered by (to-state, label), taking one copy
    of a label at a time, so the output order is deterministic and circuits
    differing only in which identical copy they used appear once.  Raises
    CapExceededError rather than silently truncating.
    """
    if opts is None:
        opts = EnumerationOptions()
    if not condition_report(g).verdict:
        return ()
    groups = _grouped_out_edges(g)
    total = len(g.multiedges)
    b = g.params.b
    results: list[PermutipleString] = []
    seen_values: set[int] = set()
    labels: list = []

    def emit() -> None:
        if opts.leading_zero == FORBID_LEADING_ZERO and labels[-1].d1 == 0:
            return
        if opts.dedup == NUMERICALLY_DISTINCT:
            val = 0
            for lab in reversed(labels):
                val = val * b + lab.d1
            if val in seen_values:
                return
            seen_values.add(val)
        if len(results) >= opts.cap:
            raise CapExceededError(f"more than {opts.cap} strings")
        results.append(PermutipleString(tuple(labels)))

    def walk(state: int, used: int) -> None:
        if used == total:
            if state == 0:
                emit()
            return
        for row in groups.get(state, ()):
            if row[2] == 0:
                continue
            row[2] -= 1
            labels.append(row[1])
            walk(row[0], used + 1)
            labels.pop()
            row[2] += 1

    walk(0, 0)
    return tuple(results)


def count_circuits(g: HSMultigraph) -> CircuitCounts:
    """Count Eulerian circuits from state 0, with and without copy identity.

    label_distinct comes from the same backtracking walk the enumerator
    uses; edge_sequences_from_zero treats every copy of a repeated label as
    its own edge and equals label_distinct times the product of factorials
    of label multiplicities.  The arborescence determinant recomputes the
    sequence count independently; any disagreement is a bug and raises.
    """
    if not condition_report(g).verdict:
        return CircuitCounts(0, 0)
    groups = _grouped_out_edges(g)
    total = len(g.multiedges)

    def walk(state: int, used: int) -> int:
        if used == total:
            return 1 if state == 0 else 0
        found = 0
        for row in groups.get(state, ()):
            if row[2] == 0:
                continue
            row[2] -= 1
            found += walk(row[0], used + 1)
            row[2] += 1
        return found

    label_distinct = walk(0, 0)
    copies = 1
    for mult in g.label_multiplicities().values():
        copies *= factorial(mult)
    sequences = label_distinct * copies
    independent = count_sequences_by_arborescences(g)
    if sequences != independent:
        raise RuntimeError(
            f"circuit backtracking found {sequences} edge sequences but the "
            f"determinant formula gives {independent}"
        )
    return CircuitCounts(sequences, label_distinct)


def count_sequences_by_arborescences(g: HSMultigraph) -> int:
    """Eulerian edge sequences from state 0 via spanning in-trees.

    The number of Eulerian circuits of a connected balanced multigraph is
    (in-trees rooted at any vertex) * product((outdeg - 1)!), and fixing the
    start vertex multiplies by its outdegree.  Loops cancel out of the
    Laplacian and the determinant is taken with exact integer arithmetic.
    """
    if not condition_report(g).verdict:
        return 0
    indeg, outdeg = _degrees(g)
    active = sorted(set(indeg) | set(outdeg))
    pos = {v: i for i, v in enumerate(active)}
    k = len(active)
    lap = [[0] * k for _ in range(k)]
    for v in active:
        lap[pos[v]][pos[v]] = outdeg[v]
    for e in g.multiedges:
        lap[pos[e.c1]][pos[e.c2]] -= 1
    root = pos[0]
    minor = [
        [lap[i][j] for j in range(k) if j != root] for i in range(k) if i != root
    ]
    trees = _int_det(minor)
    circuits = trees
    for v in active:
        circuits *= factorial(outdeg[v] - 1)
    return circuits * outdeg[0]


def _int_det(m: list[list[int]]) -> int:
    # Bareiss fraction-free elimination; every division below is exact.
    a = [row[:] for row in m]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def find_eulerian_circuit(
    g: HSMultigraph, start: int = 0
) -> Optional[tuple[LabeledMultiedge, ...]]:
    """One Eulerian circuit from start by Hierholzer splicing, or None.

    Success is equivalent to the condition-report verdict when start is 0;
    the two are played against each other in the test suite, so this stays
    an independent route and never consults condition_report.
    """
    remaining: dict[int, list[LabeledMultiedge]] = {}
    for e in g.multiedges:
        remaining.setdefault(e.c1, []).append(e)
    for outs in remaining.values():
        outs.sort(reverse=True)  # pop() then takes the smallest first
    total = len(g.multiedges)
    if total == 0 or not remaining.get(start):
        return None
    trail: list[LabeledMultiedge] = []
    stack: list[tuple[int, Optional[LabeledMultiedge]]] = [(start, None)]
    while stack:
        v, incoming = stack[-1]
        outs = remaining.get(v)
        if outs:
            e = outs.pop()
            stack.append((e.c2, e))
        else:
            stack.pop()
            if incoming is not None:
                trail.append(incoming)
    trail.reverse()
    if len(trail) != total:
        return None
    state = start
    for e in trail:
        if e.c1 != state:
            return None
        state = e.c2
    if state != start:
        return None
    return tuple(trail)
