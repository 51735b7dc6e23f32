#!/usr/bin/env python3
"""Count connected P5-free chordal bipartite graphs per vertex count.

Independent of the C++ code: walks the networkx graph atlas (all graphs up
to 7 vertices, one per isomorphism class), filters by brute force, then
grows larger sizes one vertex at a time. Usage: count_in_class.py [max_n]
"""
import itertools
import sys

import networkx as nx


def has_induced(g, k, cyclic):
    for nodes in itertools.combinations(g.nodes, k):
        h = g.subgraph(nodes)
        degs = sorted(d for _, d in h.degree())
        want = [2] * k if cyclic else [1, 1] + [2] * (k - 2)
        if degs == want and nx.is_connected(h):
            return True
    return False


def in_class(g):
    if not nx.is_connected(g) or not nx.is_bipartite(g):
        return False
    n = g.number_of_nodes()
    if any(has_induced(g, k, True) for k in range(6, n + 1, 2)):
        return False
    return not has_induced(g, 5, False)


def extend(level):
    """Next level by adding one vertex in every possible way. The class is
    hereditary and every connected graph has a non-cut vertex, so nothing
    is missed. Isomorphic copies are dropped with networkx's exact test."""
    buckets = {}
    out = []
    for g in level:
        n = g.number_of_nodes()
        for k in range(1, n + 1):
            for nbrs in itertools.combinations(range(n), k):
                h = g.copy()
                h.add_edges_from((n, v) for v in nbrs)
                if not in_class(h):
                    continue
                key = nx.weisfeiler_lehman_graph_hash(h)
                if any(nx.is_isomorphic(h, o) for o in buckets.get(key, [])):
                    continue
                buckets.setdefault(key, []).append(h)
                out.append(h)
    return out


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    counts = [0] * (max_n + 1)
    level = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= min(max_n, 7) and in_class(g):
            counts[n] += 1
            if n == 7:
                level.append(nx.convert_node_labels_to_integers(g))
    for n in range(8, max_n + 1):
        level = extend(level)
        counts[n] = len(level)
    print(" ".join(str(c) for c in counts[1:]))


if __name__ == "__main__":
    main()
