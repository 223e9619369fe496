"""Shared graph builders and independent oracles for the test suite.

The oracles here deliberately avoid the library's BFS machinery: distances
come from Floyd-Warshall over the raw edge list, betweenness from literal
enumeration of all shortest paths, so they can vouch for the fast paths.
"""

from __future__ import annotations

import random
from itertools import combinations

from tieset.graph import Graph, NodeSet, build_graph

INF = 10 ** 9


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_connected(n: int, extra: int, seed: int) -> Graph:
    """Random spanning tree plus ``extra`` random non-tree edges."""
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    present = {tuple(sorted(e)) for e in edges}
    candidates = [e for e in combinations(range(n), 2) if e not in present]
    rng.shuffle(candidates)
    edges.extend(candidates[:extra])
    return build_graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    return random_connected(n, 0, seed)


def fw_distances(g: Graph) -> list[list[int]]:
    """All-pairs hop distances by Floyd-Warshall (INF when unreachable)."""
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for a, b in g.edges():
        d[a][b] = d[b][a] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def fw_eccentricities(g: Graph) -> list[int]:
    return [max(row) for row in fw_distances(g)]


def brute_betweenness(g: Graph) -> list[float]:
    """Betweenness by enumerating every shortest path with plain DFS.

    Exponential; only for tiny graphs.  Each unordered pair contributes, per
    interior node, the fraction of the pair's shortest paths through it.
    """
    d = fw_distances(g)
    score = [0.0] * g.n

    def all_paths(a: int, b: int) -> list[list[int]]:
        if a == b:
            return [[a]]
        out = []
        for w in g.adj[a]:
            if d[w][b] == d[a][b] - 1:
                out.extend([[a] + rest for rest in all_paths(w, b)])
        return out

    for a, b in combinations(range(g.n), 2):
        if d[a][b] >= INF:
            continue
        paths = all_paths(a, b)
        for p in paths:
            for v in p[1:-1]:
                score[v] += 1.0 / len(paths)
    return score


def grow_to_sub_radius_dominating(g: Graph, radius: int, rng: random.Random) -> NodeSet:
    """Random set grown node by node until it covers everything within radius-1."""
    members = set(rng.sample(range(g.n), rng.randint(1, max(1, g.n // 3))))
    d = fw_distances(g)
    while True:
        uncovered = [
            v for v in range(g.n)
            if v not in members and min(d[v][w] for w in members) >= radius
        ]
        if not uncovered:
            return NodeSet(members)
        members.add(rng.choice(uncovered))
