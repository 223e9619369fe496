"""Immutable undirected graphs and their hop-distance metrics.

Nodes are dense integer ids 0..n-1.  Graphs are simple (no self-loops, no
parallel edges) and never mutated after construction, so every algorithm in
this package is a pure function of its inputs.  All tie-breaking picks the
smallest node id.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

UNREACHABLE = math.inf
"""Distance reported for node pairs with no connecting path."""


class GraphError(Exception):
    """Malformed graph input: bad node ids, empty tie set, invalid edges."""


class NotConnectedError(GraphError):
    """Raised by metric operations that require a connected graph."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph: ``n`` nodes, sorted adjacency, ``m`` edges.

    Construct through :func:`build_graph`, which cleans the edge list and
    establishes the invariants (symmetric adjacency, sorted neighbor lists,
    no self-loops or duplicates).  Connectedness is *not* an invariant;
    operations that need it check it.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (a, b) with a < b, ascending."""
        for a in range(self.n):
            for b in self.adj[a]:
                if a < b:
                    yield (a, b)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class NodeSet:
    """Sorted, duplicate-free collection of node ids.

    Used for tie sets, dominating sets, centers and peripheries.  Accepts
    any iterable of ints; order and duplicates are normalized away.
    """

    __slots__ = ("members",)

    members: tuple[int, ...]

    def __init__(self, members: Iterable[int]):
        object.__setattr__(self, "members", tuple(sorted(set(members))))
        if self.members and self.members[0] < 0:
            raise GraphError(f"negative node id {self.members[0]}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NodeSet) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("NodeSet is immutable")

    def __repr__(self) -> str:
        return f"NodeSet({list(self.members)})"


@dataclass(frozen=True, slots=True)
class MetricProfile:
    """Per-node eccentricities with the derived radius/diameter/center/periphery."""

    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: NodeSet
    periphery: NodeSet


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple undirected graph on nodes 0..n-1 from an edge list.

    Self-loops are dropped and duplicate edges deduplicated; ``m`` counts the
    surviving undirected edges.  Raises :class:`GraphError` for ids outside
    0..n-1, naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"node count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if not 0 <= a < n:
            raise GraphError(f"node id {a} out of range in edge ({a}, {b})")
        if not 0 <= b < n:
            raise GraphError(f"node id {b} out of range in edge ({a}, {b})")
        if a == b:
            continue
        nbrs[a].add(b)
        nbrs[b].add(a)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    m = sum(len(row) for row in adj) // 2
    return Graph(n, adj, m)


def _bfs(adj: tuple[tuple[int, ...], ...], source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable nodes."""
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque((source,))
    pop = queue.popleft
    push = queue.append
    while queue:
        v = pop()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                push(w)
    return dist


def _ball(adj: tuple[tuple[int, ...], ...], source: int, max_dist: int) -> list[int]:
    """Nodes within hop distance max_dist of source (source included)."""
    if max_dist < 0:
        return []
    dist = [-1] * len(adj)
    dist[source] = 0
    out = [source]
    queue = deque((source,))
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        if dv > max_dist:
            continue
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                out.append(w)
                queue.append(w)
    return out


def _ecc_below(adj: tuple[tuple[int, ...], ...], source: int, bound: int) -> bool:
    """True iff ecc(source) < bound, i.e. every node sits within bound-1 hops.

    Stops expanding as soon as the frontier would pass bound-1, so failing
    sources are cheap to rule out.
    """
    if bound <= 0:
        return False
    n = len(adj)
    dist = [-1] * n
    dist[source] = 0
    reached = 1
    queue = deque((source,))
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        if dv >= bound:
            continue
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                reached += 1
                queue.append(w)
    return reached == n


def validated_members(g: Graph, s: NodeSet | Iterable[int], *, allow_empty: bool = False) -> tuple[int, ...]:
    """Normalize a node-set argument against a host graph."""
    members = s.members if isinstance(s, NodeSet) else NodeSet(s).members
    if not members:
        if allow_empty:
            return members
        raise GraphError("node set must be non-empty")
    if members[-1] >= g.n:
        raise GraphError(f"node id {members[-1]} out of range for graph with n={g.n}")
    return members


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Shortest-path hop count from source to every node (UNREACHABLE if none)."""
    if not 0 <= source < g.n:
        raise GraphError(f"source node {source} out of range for graph with n={g.n}")
    return [UNREACHABLE if d < 0 else d for d in _bfs(g.adj, source)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return min(_bfs(g.adj, 0)) >= 0


def metric_profile(g: Graph) -> MetricProfile:
    """Eccentricity of every node plus radius, diameter, center and periphery.

    Runs one BFS per node.  Raises :class:`NotConnectedError` on disconnected
    input; callers wanting the giant component should apply
    :func:`largest_connected_component` first.
    """
    if g.n == 0:
        raise NotConnectedError("graph not connected: no nodes")
    adj = g.adj
    first = _bfs(adj, 0)
    if min(first) < 0:
        raise NotConnectedError("graph not connected")
    ecc = [max(first)]
    for v in range(1, g.n):
        ecc.append(max(_bfs(adj, v)))
    radius = min(ecc)
    diameter = max(ecc)
    center = NodeSet(v for v in range(g.n) if ecc[v] == radius)
    periphery = NodeSet(v for v in range(g.n) if ecc[v] == diameter)
    return MetricProfile(tuple(ecc), radius, diameter, center, periphery)


def is_diametrically_uniform(g: Graph) -> bool:
    """True iff every node has the same eccentricity (radius equals diameter)."""
    profile = metric_profile(g)
    return profile.radius == profile.diameter


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as ascending id lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for v in range(g.n):
        if seen[v]:
            continue
        dist = _bfs(g.adj, v)
        comp = [w for w in range(g.n) if dist[w] >= 0 and not seen[w]]
        for w in comp:
            seen[w] = True
        comps.append(comp)
    return comps


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced by ``members``, relabeled to 0..k-1 in ascending id order."""
    ordered = sorted(set(members))
    index = {v: i for i, v in enumerate(ordered)}
    adj = tuple(
        tuple(index[w] for w in g.adj[v] if w in index)
        for v in ordered
    )
    m = sum(len(row) for row in adj) // 2
    return Graph(len(ordered), adj, m)


def largest_connected_component(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Largest component as a relabeled graph plus the old-id -> new-id mapping.

    Ties between equal-size components go to the one containing the smallest
    original id.  New ids follow ascending original-id order.
    """
    if g.n == 0:
        return g, {}
    comps = connected_components(g)
    best = max(comps, key=len)  # first maximal component has the smallest ids
    mapping = {old: new for new, old in enumerate(best)}
    return induced_subgraph(g, best), mapping


def betweenness(g: Graph) -> list[float]:
    """Shortest-path betweenness score of every node.

    A node scores, for each unordered pair of other nodes, the fraction of
    the pair's shortest paths that pass through it (endpoints excluded).
    Computed per component with Brandes' accumulation; deterministic.
    """
    n = g.n
    adj = g.adj
    score = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1
        queue = deque((s,))
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v] + 1
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                if dist[w] == dv:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
    # each unordered pair was accumulated from both endpoints
    return [x / 2.0 for x in score]


def augment(g: Graph, s: NodeSet | Iterable[int]) -> Graph:
    """Join a newcomer node to the graph, tied to exactly the members of ``s``.

    The newcomer gets id ``g.n``; the original adjacency is unchanged.
    ``s`` must be non-empty and within range.
    """
    members = validated_members(g, s)
    u = g.n
    mset = set(members)
    rows = [g.adj[v] + (u,) if v in mset else g.adj[v] for v in range(g.n)]
    rows.append(members)
    return Graph(g.n + 1, tuple(rows), g.m + len(members))
