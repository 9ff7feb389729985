"""Content-addressed lookups and brute-force oracles used across test files."""

from permutiples import DigitPair


def cycle_index(inventory, edges):
    """Index of the cycle with exactly this edge set; cycles are matched by
    content so the tests never depend on how the inventory happens to be
    numbered."""
    target = {tuple(e) for e in edges}
    for i, c in enumerate(inventory):
        if {tuple(e) for e in c.edges} == target:
            return i
    raise AssertionError(f"no cycle with edges {sorted(target)}")


def brute_force_cycles(graph):
    """Every elementary cycle by direct path extension, as canonical edge tuples.

    Independent of the package's cycle search: grows simple paths whose first
    vertex is their minimum and closes them when an edge returns to the start.
    Exponential, fine for small bases.
    """
    edges = {tuple(e) for e in graph.edges}
    b = graph.params.b
    found = set()

    def extend(path):
        v = path[-1]
        for w in range(b):
            if (v, w) not in edges:
                continue
            if w == path[0]:
                cyc = tuple(
                    DigitPair(path[i], path[(i + 1) % len(path)]) for i in range(len(path))
                )
                found.add(cyc)
            elif w > path[0] and w not in path:
                extend(path + [w])

    for s in range(b):
        extend([s])
    return found


def peel_cycle_cover(pairs):
    """Split a multiset of digit pairs into elementary cycles by walking until
    a vertex repeats and cutting out the loop.  Returns a list of canonical
    edge tuples, or None when the multiset is not balanced enough to cover."""
    from collections import Counter, defaultdict

    remaining = Counter(tuple(e) for e in pairs)
    cycles = []
    while remaining:
        adj = defaultdict(list)
        for (d1, d2), k in remaining.items():
            if k > 0:
                adj[d1].append(d2)
        start = min(adj)
        path = [start]
        seen = {start: 0}
        while True:
            v = path[-1]
            if not adj.get(v):
                return None
            w = min(adj[v])
            if w in seen:
                cut = path[seen[w] :] + []
                cyc_vertices = cut
                k = len(cyc_vertices)
                edge_list = [
                    (cyc_vertices[i], cyc_vertices[(i + 1) % k]) for i in range(k)
                ]
                for e in edge_list:
                    remaining[e] -= 1
                    if remaining[e] == 0:
                        del remaining[e]
                i0 = cyc_vertices.index(min(cyc_vertices))
                rot = cyc_vertices[i0:] + cyc_vertices[:i0]
                cycles.append(
                    tuple(DigitPair(rot[i], rot[(i + 1) % k]) for i in range(k))
                )
                break
            seen[w] = len(path)
            path.append(w)
            adj[v].remove(w)
    return cycles
