"""Heuristics and exact oracles for dropping a newcomer into a network's center.

A *broker set* S is a tie set that leaves the newcomer joined to exactly S
with eccentricity at most rad(G), i.e. as central as the best-placed host
node.  Every heuristic here returns a *sub-radius dominating* set (each node
outside S within rad(G)-1 hops of S), which is exactly the same condition
reached by an independent route; the brute-force oracles give exact minima
for small graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    NodeSet,
    _ball,
    _bfs,
    augment,
    betweenness,
    connected_components,
    induced_subgraph,
    metric_profile,
    MetricProfile,
    validated_members,
)


class CapExceededError(RuntimeError):
    """A brute-force search hit its size cap before finding a witness."""


class BrokerHeuristic(str, Enum):
    """The eight tie-placement strategies.

    ``max``/``btw``/``ml`` greedily cover the graph while deleting covered
    nodes (metrics recomputed on the shrinking remainder); the ``s-`` variants
    evaluate every metric once on the original graph and only track the
    uncovered set; ``center``/``imp-center`` build around a center node.
    """

    MAX = "max"
    BTW = "btw"
    ML = "ml"
    S_MAX = "s-max"
    S_BTW = "s-btw"
    S_ML = "s-ml"
    CENTER = "center"
    IMP_CENTER = "imp-center"


@dataclass(frozen=True, slots=True)
class AlgorithmReport:
    """Outcome of one heuristic run.

    ``valid`` is the broker-set verification result, or None when the run was
    made with ``verify=False`` (useful on graphs too large to re-check).
    ``elapsed`` is the wall-clock time of the heuristic itself, in seconds.
    """

    heuristic: BrokerHeuristic
    s: NodeSet
    size: int
    valid: bool | None
    elapsed: float


def is_sub_radius_dominating(g: Graph, s: NodeSet | Iterable[int], radius: int | None = None) -> bool:
    """True iff every node outside ``s`` is within rad(g)-1 hops of some member.

    ``radius`` may be passed to skip recomputing the metric profile; ``g``
    must be connected either way.
    """
    members = validated_members(g, s)
    if radius is None:
        radius = metric_profile(g).radius
    adj = g.adj
    dist = [-1] * g.n
    queue = []
    for v in members:
        dist[v] = 0
        queue.append(v)
    reached = len(queue)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        if dv >= radius:
            continue
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                reached += 1
                queue.append(w)
    return reached == g.n


def is_broker_set(g: Graph, s: NodeSet | Iterable[int], radius: int | None = None) -> bool:
    """True iff a newcomer tied to exactly ``s`` becomes as central as the host's radius.

    Builds the combined graph and checks that the newcomer's eccentricity in
    it is at most rad(g), the guarantee the best-placed host node had.  Note
    the check is against the host radius, not the combined radius: new
    two-hop routes through the newcomer can shrink host distances, so
    demanding that the newcomer itself attain the combined minimum would
    reject sets that tie two mutually distant nodes together (and with it
    every coverage-based strategy).  Equivalent to sub-radius domination,
    computed by an independent route.
    """
    h = augment(g, s)
    du = _bfs(h.adj, g.n)
    if min(du) < 0:
        raise GraphError("graph not connected")
    if radius is None:
        radius = metric_profile(g).radius
    return max(du) <= radius


def is_dominating_set(g: Graph, s: NodeSet | Iterable[int]) -> bool:
    """True iff every node outside ``s`` is adjacent to a member of ``s``."""
    members = validated_members(g, s)
    covered = set(members)
    for v in members:
        covered.update(g.adj[v])
    return len(covered) == g.n


def run_heuristic(
    g: Graph,
    heuristic: BrokerHeuristic | str,
    seed: int = 0,
    *,
    verify: bool = True,
    profile: MetricProfile | None = None,
) -> AlgorithmReport:
    """Run one tie-placement heuristic and report the resulting set.

    Args:
        g: connected graph with at least two nodes.
        heuristic: a :class:`BrokerHeuristic` or its string value.
        seed: accepted for interface uniformity; all eight strategies are
            deterministic, so the seed is unused.
        verify: re-check the output (sub-radius domination and the broker
            property); skip on graphs where the check itself is too slow.
        profile: precomputed metric profile of ``g``, to share across runs.

    Returns:
        An :class:`AlgorithmReport`; its set is sub-radius dominating in
        ``g`` and therefore a broker set.
    """
    del seed  # deterministic strategies; parameter kept for uniform call shape
    h = BrokerHeuristic(heuristic)
    if g.n < 2:
        raise GraphError("heuristics need a graph with at least 2 nodes")
    if profile is None:
        profile = metric_profile(g)
    r = profile.radius
    t0 = time.perf_counter()
    if r == 1:
        # coverage radius r-1 = 0: each pick covers only itself, so the full
        # node set is the only possible (and correct) answer
        s = NodeSet(range(g.n))
    elif h is BrokerHeuristic.MAX:
        s = _greedy_shrinking(g, r, _pick_max_degree)
    elif h is BrokerHeuristic.BTW:
        s = _greedy_shrinking(g, r, _pick_max_betweenness)
    elif h is BrokerHeuristic.ML:
        s = _greedy_shrinking(g, r, _pick_leaf_walk)
    elif h is BrokerHeuristic.S_MAX:
        degs = [len(row) for row in g.adj]
        s = _greedy_uncovered(g, r, lambda u_set: _argmax_over(u_set, degs))
    elif h is BrokerHeuristic.S_BTW:
        btw = betweenness(g)
        s = _greedy_uncovered(g, r, lambda u_set: _argmax_over(u_set, btw))
    elif h is BrokerHeuristic.S_ML:
        degs = [len(row) for row in g.adj]
        s = _greedy_uncovered(
            g, r,
            lambda u_set: _walk_endpoint(g.adj, degs, _argmin_over(u_set, degs), r),
        )
    elif h is BrokerHeuristic.CENTER:
        s = _center_neighbors(g, profile)
    else:
        s = _imp_center(g, profile)
    elapsed = time.perf_counter() - t0
    valid = None
    if verify:
        valid = is_sub_radius_dominating(g, s, radius=r) and is_broker_set(g, s, radius=r)
    return AlgorithmReport(h, s, len(s), valid, elapsed)


# ---------------------------------------------------------------------------
# greedy cover on the shrinking induced subgraph (max / btw / ml)

def _pick_max_degree(f: Graph, r: int) -> int:
    return _argmax_over(range(f.n), [len(row) for row in f.adj])


def _pick_max_betweenness(f: Graph, r: int) -> int:
    return _argmax_over(range(f.n), betweenness(f))


def _pick_leaf_walk(f: Graph, r: int) -> int:
    degs = [len(row) for row in f.adj]
    leaf = _argmin_over(range(f.n), degs)
    return _walk_endpoint(f.adj, degs, leaf, r)


def _greedy_shrinking(g: Graph, r: int, pick) -> NodeSet:
    """Cover loop for the unsimplified strategies.

    Maintains the subgraph induced by the uncovered nodes; the pick and the
    coverage ball (hop radius r-1) both live in that subgraph.
    """
    uncovered = list(range(g.n))
    chosen: list[int] = []
    while uncovered:
        f = induced_subgraph(g, uncovered)
        w_sub = pick(f, r)
        chosen.append(uncovered[w_sub])
        removed = set(_ball(f.adj, w_sub, r - 1))
        remaining = [uncovered[i] for i in range(f.n) if i not in removed]
        assert len(remaining) < len(uncovered), "cover iteration made no progress"
        uncovered = remaining
    return NodeSet(chosen)


# ---------------------------------------------------------------------------
# greedy cover with metrics frozen on the original graph (s-max / s-btw / s-ml)

def _argmax_over(candidates, key) -> int:
    best = -1
    best_key = None
    for v in candidates:
        k = key[v]
        if best_key is None or k > best_key:
            best, best_key = v, k
    return best


def _argmin_over(candidates, key) -> int:
    best = -1
    best_key = None
    for v in candidates:
        k = key[v]
        if best_key is None or k < best_key:
            best, best_key = v, k
    return best


def _walk_endpoint(adj, degs, start: int, r: int) -> int:
    """Walk from a min-degree node toward high degrees; return the endpoint.

    Visits at most r nodes, never immediately backtracks, and stops early
    when the only neighbor is the predecessor.  The endpoint is therefore
    within r-1 hops of the start.
    """
    prev = -1
    cur = start
    for _ in range(r - 1):
        best = -1
        best_deg = -1
        for w in adj[cur]:
            if w != prev and degs[w] > best_deg:
                best, best_deg = w, degs[w]
        if best < 0:
            break
        prev, cur = cur, best
    return cur


def _greedy_uncovered(g: Graph, r: int, select) -> NodeSet:
    """Cover loop for the simplified strategies.

    ``select`` maps the current uncovered id list to the node to adopt; the
    coverage ball uses original-graph distances strictly below r.
    """
    adj = g.adj
    uncovered = [True] * g.n
    remaining = g.n
    chosen: list[int] = []
    while remaining:
        u_set = [v for v in range(g.n) if uncovered[v]]
        w = select(u_set)
        chosen.append(w)
        newly = [x for x in _ball(adj, w, r - 1) if uncovered[x]]
        assert newly, "cover iteration made no progress"
        for x in newly:
            uncovered[x] = False
        remaining -= len(newly)
    return NodeSet(chosen)


# ---------------------------------------------------------------------------
# center-based strategies

def _min_degree_center(g: Graph, profile: MetricProfile) -> int:
    return min(profile.center.members, key=lambda v: (len(g.adj[v]), v))


def _center_neighbors(g: Graph, profile: MetricProfile) -> NodeSet:
    v = _min_degree_center(g, profile)
    return NodeSet(g.adj[v])


def _imp_center(g: Graph, profile: MetricProfile) -> NodeSet:
    """Center strategy with component-aware substitutions.

    Consumes the chosen center's neighbors in decreasing-degree order, but
    whenever the largest uncovered component already has radius below
    rad(G)-1, adopts that component's center instead.  If the neighbor list
    runs out first, keeps adopting component centers, which always cover at
    least themselves.
    """
    r = profile.radius
    v = _min_degree_center(g, profile)
    neighbor_queue = sorted(g.adj[v], key=lambda x: (-len(g.adj[x]), x))
    adj = g.adj
    uncovered = [True] * g.n
    remaining = g.n
    chosen: list[int] = []
    i = 0
    while remaining:
        members = [x for x in range(g.n) if uncovered[x]]
        f = induced_subgraph(g, members)
        comp_sub = max(connected_components(f), key=len)
        comp = [members[x] for x in comp_sub]
        comp_profile = metric_profile(induced_subgraph(g, comp))
        from_neighbors = False
        if comp_profile.radius < r - 1 or i >= len(neighbor_queue):
            w = comp[comp_profile.center.members[0]]
        else:
            w = neighbor_queue[i]
            i += 1
            from_neighbors = True
        chosen.append(w)
        newly = [x for x in _ball(adj, w, r - 1) if uncovered[x]]
        assert newly or from_neighbors, "cover iteration made no progress"
        for x in newly:
            uncovered[x] = False
        remaining -= len(newly)
    return NodeSet(chosen)


# ---------------------------------------------------------------------------
# exact search

def brute_force_min_broker(g: Graph, size_cap: int | None = None) -> NodeSet:
    """Smallest broker set, by exhaustive size-ordered subset search.

    Returns the lexicographically first minimum.  Intended for small graphs;
    ``size_cap`` bounds the subset size, and exceeding it raises
    :class:`CapExceededError` (a broker set of size n always exists, so with
    an unbounded cap the search always succeeds).
    """
    radius = metric_profile(g).radius  # also rejects disconnected input
    cap = g.n if size_cap is None else min(size_cap, g.n)
    nodes = range(g.n)
    for k in range(1, cap + 1):
        for combo in combinations(nodes, k):
            if is_broker_set(g, combo, radius=radius):
                return NodeSet(combo)
    raise CapExceededError(f"no broker set of size <= {cap} found")


def brute_force_min_dominating(g: Graph) -> NodeSet:
    """Smallest dominating set, lexicographically first among the minima."""
    nodes = range(g.n)
    for k in range(1, g.n + 1):
        for combo in combinations(nodes, k):
            if is_dominating_set(g, combo):
                return NodeSet(combo)
    return NodeSet(nodes)  # n = 0 only


def broker_decision(g: Graph, k: int) -> bool:
    """Decide whether the graph has a broker set of size at most ``k``."""
    if k < 1:
        raise GraphError(f"target size must be >= 1, got {k}")
    try:
        brute_force_min_broker(g, size_cap=min(k, g.n))
    except CapExceededError:
        return False
    return True
