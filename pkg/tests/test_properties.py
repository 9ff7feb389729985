"""Cross-route consistency on randomized inputs.

Every test here pits two independently written routes against each other:
closed-form transitions against the defining carry recurrence, backtracking
circuit counts against the determinant formula, the single-circuit search
against the three-condition report, and enumerated strings against direct
verification of the numbers they spell.
"""

from collections import Counter
from functools import lru_cache
from math import factorial

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from permutiples import (
    CycleMultiset,
    EnumerationOptions,
    Params,
    brute_force_search,
    build_hs_multigraph,
    build_mother_graph,
    carry_sequence,
    condition_report,
    count_circuits,
    enumerate_cycles,
    enumerate_strings,
    find_eulerian_circuit,
    string_to_witness,
    transition,
    union_images,
    value,
    verify_witness,
)
from permutiples.euler import NUMERICALLY_DISTINCT

SMALL = [
    Params(2, 3),
    Params(2, 4),
    Params(3, 4),
    Params(2, 5),
    Params(3, 5),
    Params(4, 5),
    Params(2, 6),
    Params(5, 6),
]

ALL_PARAMS_TO_B12 = [Params(n, b) for b in range(3, 13) for n in range(2, b)]


@lru_cache(maxsize=None)
def inventory_for(p):
    return enumerate_cycles(build_mother_graph(p))


def draw_multiset(data):
    p = data.draw(st.sampled_from(SMALL))
    inv = inventory_for(p)
    idx = data.draw(st.lists(st.integers(0, len(inv) - 1), min_size=1, max_size=3))
    # keep the union small: circuit counts grow factorially in the edge total
    assume(sum(len(inv[i].edges) for i in idx) <= 8)
    return p, inv, idx


def test_machine_mirrors_mother_graph_everywhere():
    for p in ALL_PARAMS_TO_B12:
        mother = build_mother_graph(p)
        machine = build_hs_multigraph(p)
        assert len(machine.multiedges) == len(mother.edges)
        assert Counter(e.label for e in machine.multiedges) == Counter(mother.edges)
        for e in machine.multiedges:
            assert 0 <= e.c1 <= p.n - 1
            assert 0 <= e.c2 <= p.n - 1
            assert p.b * e.c2 - e.c1 == p.n * e.label.d2 - e.label.d1


def test_transitions_replay_real_carry_sequences():
    for p, length in [(Params(2, 4), 4), (Params(3, 4), 4), (Params(4, 10), 4)]:
        for w in brute_force_search(p, length):
            carries = carry_sequence(w.digits, w.permuted, p)
            pairs = list(zip(w.digits.digits, w.permuted.digits))
            for j, pair in enumerate(pairs):
                c1, c2 = transition(pair, p)
                assert c1 == carries.carries[j]
                assert c2 == carries.carries[j + 1]
            assert carries.final == 0


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_union_is_a_multiset_homomorphism(data):
    p, inv, idx = draw_multiset(data)
    extra = data.draw(st.lists(st.integers(0, len(inv) - 1), min_size=1, max_size=2))
    whole = union_images(CycleMultiset.from_indices(idx + extra), p, inv)
    left = union_images(CycleMultiset.from_indices(idx), p, inv)
    right = union_images(CycleMultiset.from_indices(extra), p, inv)
    assert left.union(right) == whole
    assert right.union(left) == whole


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_union_preserves_edge_labels_with_multiplicity(data):
    p, inv, idx = draw_multiset(data)
    g = union_images(CycleMultiset.from_indices(idx), p, inv)
    expected = Counter()
    for i in idx:
        expected.update(inv[i].edges)
    assert Counter(e.label for e in g.multiedges) == expected
    assert len(g.multiedges) == sum(len(inv[i].edges) for i in idx)


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_counting_routes_agree(data):
    p, inv, idx = draw_multiset(data)
    g = union_images(CycleMultiset.from_indices(idx), p, inv)
    counts = count_circuits(g)  # raises internally if the two routes disagree
    copies = 1
    for mult in g.label_multiplicities().values():
        copies *= factorial(mult)
    if condition_report(g).verdict:
        assert counts.edge_sequences_from_zero == counts.label_distinct * copies
        assert counts.label_distinct >= 1
    else:
        assert counts == (0, 0)


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_single_circuit_search_agrees_with_report(data):
    p, inv, idx = draw_multiset(data)
    g = union_images(CycleMultiset.from_indices(idx), p, inv)
    trail = find_eulerian_circuit(g)
    assert (trail is not None) == condition_report(g).verdict
    if trail is not None:
        assert Counter(trail) == Counter(g.multiedges)
        assert trail[0].c1 == 0 and trail[-1].c2 == 0
        for a, b in zip(trail, trail[1:]):
            assert a.c2 == b.c1


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_enumerated_strings_all_verify(data):
    p, inv, idx = draw_multiset(data)
    g = union_images(CycleMultiset.from_indices(idx), p, inv)
    strings = enumerate_strings(g)
    assert len(strings) == count_circuits(g).label_distinct
    values = []
    for s in strings:
        w = string_to_witness(s, p)
        assert verify_witness(w).is_permutiple
        assert value(w.digits) == p.n * value(w.permuted)
        assert w.carries.carries[0] == 0 and w.carries.final == 0
        assert all(0 <= c <= p.n - 1 for c in w.carries.carries)
        values.append(value(w.digits))
    assert len(set(values)) == len(values)


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_dedup_modes_coincide_within_one_union(data):
    p, inv, idx = draw_multiset(data)
    g = union_images(CycleMultiset.from_indices(idx), p, inv)
    assert enumerate_strings(g) == enumerate_strings(
        g, EnumerationOptions(dedup=NUMERICALLY_DISTINCT)
    )
