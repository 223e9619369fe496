"""Seeded random-graph models and the domination-to-broker reduction gadget.

Both generators are deterministic functions of their parameters: the seed
feeds a dedicated Mersenne Twister instance and every sampling step draws
from it in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, NodeSet, build_graph, metric_profile

BA = "ba"
NWS = "nws"


@dataclass(frozen=True, slots=True)
class RandomModelParams:
    """Parameters of one random-graph draw.

    ``ba`` grows a scale-free graph by preferential attachment (``ba_m``
    edges per new node); ``nws`` overlays random shortcuts on a ring lattice
    of even degree ``nws_k`` with per-edge shortcut probability ``nws_p``.
    """

    model: str
    n: int
    seed: int
    ba_m: int | None = None
    nws_k: int | None = None
    nws_p: float | None = None

    def __post_init__(self) -> None:
        if self.model not in (BA, NWS):
            raise GraphError(f"unknown model {self.model!r}, expected 'ba' or 'nws'")
        if self.model == BA:
            if self.ba_m is None or not 1 <= self.ba_m < self.n:
                raise GraphError(f"ba needs 1 <= ba_m < n, got ba_m={self.ba_m}, n={self.n}")
        else:
            if self.nws_k is None or self.nws_k % 2 or not 2 <= self.nws_k < self.n:
                raise GraphError(f"nws needs even 2 <= nws_k < n, got nws_k={self.nws_k}, n={self.n}")
            if self.nws_p is None or not 0.0 <= self.nws_p <= 1.0:
                raise GraphError(f"nws needs 0 <= nws_p <= 1, got {self.nws_p}")

    def label(self) -> str:
        if self.model == BA:
            return f"ba(m={self.ba_m})"
        return f"nws(k={self.nws_k}, p={self.nws_p})"


def gen_ba(params: RandomModelParams) -> Graph:
    """Preferential-attachment graph: star seed, then degree-proportional ties.

    Starts from a star on ``ba_m + 1`` nodes (hub 0).  Each later node joins
    with ``ba_m`` edges whose targets are drawn proportionally to current
    degree, redrawing duplicates until the targets are distinct.  Connected
    by construction.
    """
    if params.model != BA:
        raise GraphError(f"expected ba params, got {params.model!r}")
    rng = random.Random(params.seed)
    m = params.ba_m
    edges = [(0, i) for i in range(1, m + 1)]
    # one entry per incident edge end, so index-uniform draws are
    # degree-proportional
    repeated = [0] * m + list(range(1, m + 1))
    for source in range(m + 1, params.n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[rng.randrange(len(repeated))])
        for t in sorted(targets):
            edges.append((source, t))
            repeated.append(t)
        repeated.extend([source] * m)
    return build_graph(params.n, edges)


def gen_nws(params: RandomModelParams) -> Graph:
    """Ring lattice plus random shortcuts; no edges are removed.

    Node i is tied to its ``nws_k / 2`` nearest neighbors on each side of the
    ring.  For every lattice edge (u, v), with probability ``nws_p`` one
    shortcut is added from u to a target drawn uniformly among the nodes not
    yet adjacent to u.  The ring keeps the result connected.
    """
    if params.model != NWS:
        raise GraphError(f"expected nws params, got {params.model!r}")
    rng = random.Random(params.seed)
    n, k, p = params.n, params.nws_k, params.nws_p
    edges = []
    adjacent: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(1, k // 2 + 1):
            w = (i + j) % n
            edges.append((i, w))
            adjacent[i].add(w)
            adjacent[w].add(i)
    for u, _ in list(edges):
        if rng.random() >= p:
            continue
        candidates = [w for w in range(n) if w != u and w not in adjacent[u]]
        if not candidates:
            continue
        w = candidates[rng.randrange(len(candidates))]
        edges.append((u, w))
        adjacent[u].add(w)
        adjacent[w].add(u)
    return build_graph(n, edges)


def generate(params: RandomModelParams) -> Graph:
    return gen_ba(params) if params.model == BA else gen_nws(params)


@dataclass(frozen=True, slots=True)
class GadgetMap:
    """Id layout of the three-layer gadget built over an n-node graph.

    Original node v becomes the path v -> n+v -> 2n+v: layer one (ids 0..n-1)
    is a clique, layer two (n..2n-1) copies the input graph, layer three
    (2n..3n-1) is pendant.
    """

    n_original: int

    def triple(self, v: int) -> tuple[int, int, int]:
        n = self.n_original
        return (v, n + v, 2 * n + v)

    def clique_layer(self) -> range:
        return range(self.n_original)

    def copy_layer(self) -> range:
        return range(self.n_original, 2 * self.n_original)

    def pendant_layer(self) -> range:
        return range(2 * self.n_original, 3 * self.n_original)

    def copy_node(self, v: int) -> int:
        return self.n_original + v

    def project(self, nodes: NodeSet | Iterable[int]) -> NodeSet:
        """Original nodes whose triple intersects ``nodes``."""
        return NodeSet(x % self.n_original for x in nodes)


def reduction_gadget(g: Graph) -> tuple[Graph, GadgetMap]:
    """Three-layer gadget whose minimum broker size equals the input's domination number.

    Requires a connected input of radius at least 2.  The output graph has
    3n nodes and radius 3: every clique-layer node reaches everything within
    3 hops, while pendant nodes sit 4+ hops apart.
    """
    profile = metric_profile(g)  # also rejects disconnected input
    if profile.radius < 2:
        raise GraphError(f"gadget needs radius >= 2, got radius {profile.radius}")
    n = g.n
    edges = []
    for v in range(n):
        edges.append((v, n + v))
        edges.append((n + v, 2 * n + v))
    for v in range(n):
        for w in range(v + 1, n):
            edges.append((v, w))
    for a, b in g.edges():
        edges.append((n + a, n + b))
    return build_graph(3 * n, edges), GadgetMap(n)
