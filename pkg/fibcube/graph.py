"""Immutable simple graphs, cube construction and the graph-level checks.

Cubes are induced subgraphs of Q_n on a word family: vertex i carries the i-th
word in lexicographic order and two vertices are adjacent iff their labels are
at Hamming distance 1.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .config import Config
from .errors import (
    GraphTooLargeError,
    InvalidGraphError,
    InvalidWordError,
    UnlabeledGraphError,
    WordIndexError,
)
from .words import CubeParams, Family, Word, enumerate_words, flip

logger = logging.getLogger(__name__)

UNREACHABLE = -1


class Edge(NamedTuple):
    u: int
    v: int

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


@dataclass(frozen=True)
class Graph:
    adjacency: tuple  # tuple of sorted neighbor tuples
    labels: Optional[tuple] = None
    params: Optional[CubeParams] = None
    # per-vertex factor coordinates, set by cartesian_product
    coordinates: Optional[tuple] = None

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple],
        labels: Optional[Sequence[Word]] = None,
        params: Optional[CubeParams] = None,
        coordinates: Optional[Sequence[tuple]] = None,
    ) -> "Graph":
        neighbors = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidGraphError(f"edge {u}-{v} outside 0..{vertex_count - 1}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            if v in neighbors[u]:
                raise InvalidGraphError(f"parallel edge {u}-{v}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        if labels is not None and len(labels) != vertex_count:
            raise InvalidGraphError(f"{len(labels)} labels for {vertex_count} vertices")
        return cls(
            adjacency=tuple(tuple(sorted(ns)) for ns in neighbors),
            labels=tuple(labels) if labels is not None else None,
            params=params,
            coordinates=tuple(coordinates) if coordinates is not None else None,
        )

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edges(self) -> tuple:
        """Canonical edge list: (u, v) with u < v, sorted lexicographically."""
        return tuple(Edge(u, v) for u, ns in enumerate(self.adjacency) for v in ns if u < v)

    @cached_property
    def edge_index(self) -> dict:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def _neighbor_sets(self) -> tuple:
        return tuple(frozenset(ns) for ns in self.adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def label(self, v: int) -> Word:
        if self.labels is None:
            raise UnlabeledGraphError("label lookup")
        return self.labels[v]

    @cached_property
    def edge_colors(self) -> Optional[tuple]:
        """Product color of each edge: the coordinate its endpoints differ in."""
        if self.coordinates is None:
            return None
        colors = []
        for u, v in self.edges:
            cu, cv = self.coordinates[u], self.coordinates[v]
            colors.append(next(c for c in range(len(cu)) if cu[c] != cv[c]))
        return tuple(colors)


def hamming(u: Word, v: Word) -> int:
    if len(u) != len(v):
        raise InvalidWordError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u.bits, v.bits))


def build_cube(params: CubeParams) -> Graph:
    words = enumerate_words(params)
    index = {w: k for k, w in enumerate(words)}
    edges = []
    for k, w in enumerate(words):
        for i in range(1, params.n + 1):
            other = index.get(flip(w, i))
            if other is not None and k < other:
                edges.append((k, other))
    logger.debug("built %s: %d vertices, %d edges", params.label(), len(words), len(edges))
    return Graph.from_edges(len(words), edges, labels=words, params=params)


# ---- standard graphs ----

def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((u, v) for u in range(k) for v in range(u + 1, k)))


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((v, v + 1) for v in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, [(v, v + 1) for v in range(k - 1)] + [(0, k - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with the center at vertex 0."""
    return Graph.from_edges(k + 1, ((0, leaf) for leaf in range(1, k + 1)))


def hypercube(n: int) -> Graph:
    return build_cube(CubeParams(Family.O, 1, max(n, 1), n))


def fibonacci_cube(n: int) -> Graph:
    return build_cube(CubeParams(Family.O, 1, 1, n))


# ---- distances and connectivity ----

def _bfs(G: Graph, source: int) -> list:
    dist = [UNREACHABLE] * G.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in G.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(G: Graph) -> np.ndarray:
    """Dense |V| x |V| table; UNREACHABLE marks disconnected pairs."""
    table = np.full((G.vertex_count, G.vertex_count), UNREACHABLE, dtype=np.int32)
    for source in range(G.vertex_count):
        table[source] = _bfs(G, source)
    return table


def is_connected(G: Graph) -> bool:
    if G.vertex_count <= 1:
        return True
    return UNREACHABLE not in _bfs(G, 0)


def degree_sequence(G: Graph) -> list:
    return sorted((G.degree(v) for v in range(G.vertex_count)), reverse=True)


def diameter(G: Graph) -> Optional[int]:
    """Largest distance, or None for a disconnected graph."""
    if G.vertex_count == 0:
        return 0
    table = all_pairs_distances(G)
    if (table == UNREACHABLE).any():
        return None
    return int(table.max())


# ---- subgraphs and products ----

def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """G(X): kept vertices renumbered in ascending order of their index in G."""
    kept = sorted(set(vertices))
    position = {v: k for k, v in enumerate(kept)}
    edges = [
        (position[u], position[v])
        for u in kept
        for v in G.adjacency[u]
        if u < v and v in position
    ]
    labels = [G.labels[v] for v in kept] if G.labels is not None else None
    return Graph.from_edges(len(kept), edges, labels=labels)


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G □ H with vertex (g, h) at index g * |V(H)| + h.

    Factor coordinates are flattened, so products of products keep one
    coordinate (and one edge color) per original factor.
    """
    nh = H.vertex_count
    edges = []
    for g in range(G.vertex_count):
        for h, h2 in H.edges:
            edges.append((g * nh + h, g * nh + h2))
    for g, g2 in G.edges:
        for h in range(nh):
            edges.append((g * nh + h, g2 * nh + h))
    coords_g = G.coordinates or tuple((g,) for g in range(G.vertex_count))
    coords_h = H.coordinates or tuple((h,) for h in range(nh))
    coordinates = [coords_g[g] + coords_h[h] for g in range(G.vertex_count) for h in range(nh)]
    return Graph.from_edges(G.vertex_count * nh, edges, coordinates=coordinates)


# ---- isomorphism ----

def is_isomorphism(G: Graph, H: Graph, mapping: Sequence[int]) -> bool:
    """True iff mapping (vertex of G -> vertex of H) is an isomorphism."""
    if G.vertex_count != H.vertex_count or G.edge_count != H.edge_count:
        return False
    if len(mapping) != G.vertex_count or sorted(mapping) != list(range(H.vertex_count)):
        return False
    return all(H.has_edge(mapping[u], mapping[v]) for u, v in G.edges)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Exact backtracking search pruned by degree and distance invariants.

    Order, size and degree sequence are compared before the vertex cap, so
    graphs that differ there get False at any size. Only graphs that would
    need the search raise GraphTooLargeError above the cap.
    """
    if G.vertex_count != H.vertex_count or G.edge_count != H.edge_count:
        return False
    if degree_sequence(G) != degree_sequence(H):
        return False
    limit = Config.ISOMORPHISM_VERTEX_LIMIT
    if G.vertex_count > limit:
        raise GraphTooLargeError(
            f"graph too large for exact isomorphism ({G.vertex_count} > {limit} vertices)"
        )
    if G.vertex_count == 0:
        return True

    dg, dh = all_pairs_distances(G), all_pairs_distances(H)

    def invariant(graph: Graph, table: np.ndarray, v: int) -> tuple:
        return graph.degree(v), tuple(sorted(Counter(table[v].tolist()).items()))

    inv_g = [invariant(G, dg, v) for v in range(G.vertex_count)]
    inv_h = [invariant(H, dh, v) for v in range(H.vertex_count)]
    if sorted(inv_g) != sorted(inv_h):
        return False

    by_invariant = {}
    for v, key in enumerate(inv_h):
        by_invariant.setdefault(key, []).append(v)
    candidates = [by_invariant[key] for key in inv_g]

    # BFS order per component, each component rooted at its most constrained vertex
    order, seen = [], set()
    for root in sorted(range(G.vertex_count), key=lambda v: len(candidates[v])):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in G.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)

    mapping = [-1] * G.vertex_count
    used = [False] * H.vertex_count

    def consistent(u: int, v: int, depth: int) -> bool:
        for w in order[:depth]:
            if dg[u, w] != dh[v, mapping[w]]:
                return False
        return True

    def backtrack(depth: int) -> bool:
        if depth == len(order):
            return True
        u = order[depth]
        for v in candidates[u]:
            if used[v] or not consistent(u, v, depth):
                continue
            mapping[u], used[v] = v, True
            if backtrack(depth + 1):
                return True
            mapping[u], used[v] = -1, False
        return False

    return backtrack(0)


# ---- recognizers for the special cubes ----

def _is_hypercube(G: Graph, n: int) -> bool:
    if G.vertex_count != 1 << n:
        return False
    if n == 0:
        return True
    if any(G.degree(v) != n for v in range(G.vertex_count)) or not is_connected(G):
        return False
    # split along the edge class of one edge at vertex 0
    da, db = _bfs(G, 0), _bfs(G, G.adjacency[0][0])
    if any(x == y for x, y in zip(da, db)):
        return False
    side_a = [v for v in range(G.vertex_count) if da[v] < db[v]]
    side_b = [v for v in range(G.vertex_count) if db[v] < da[v]]
    half = 1 << (n - 1)
    if len(side_a) != half or len(side_b) != half:
        return False
    in_b = set(side_b)
    match = {}
    for a in side_a:
        across = [v for v in G.adjacency[a] if v in in_b]
        if len(across) != 1:
            return False
        match[a] = across[0]
    if len(set(match.values())) != half:
        return False
    sub_a, sub_b = induced_subgraph(G, side_a), induced_subgraph(G, side_b)
    pos_b = {v: k for k, v in enumerate(side_b)}
    if not is_isomorphism(sub_a, sub_b, [pos_b[match[a]] for a in side_a]):
        return False
    return _is_hypercube(sub_a, n - 1)


def recognize_hypercube(G: Graph) -> Optional[int]:
    """n if G is isomorphic to Q_n, else None."""
    count = G.vertex_count
    if count == 0 or count & (count - 1):
        return None
    n = count.bit_length() - 1
    return n if _is_hypercube(G, n) else None


def recognize_star(G: Graph) -> Optional[int]:
    """n if G is isomorphic to K_{1,n} (n >= 1), else None."""
    n = G.vertex_count - 1
    if n < 1 or G.edge_count != n:
        return None
    degrees = Counter(G.degree(v) for v in range(G.vertex_count))
    if n == 1:
        return 1 if degrees == Counter({1: 2}) else None
    return n if degrees == Counter({n: 1, 1: n}) else None


# ---- coordinate layers ----

@dataclass(frozen=True)
class LayerSplit:
    coordinate: int
    v0: tuple
    v1: tuple
    cut: tuple


def word_length(G: Graph) -> int:
    """Length of the word labels of a labeled graph."""
    if G.params is not None:
        return G.params.n
    return len(G.labels[0]) if G.labels else 0


def layer_split(G: Graph, i: int) -> LayerSplit:
    """E_i with its end vertices split by the value of bit i."""
    if G.labels is None:
        raise UnlabeledGraphError("layer_split")
    n = word_length(G)
    if not 1 <= i <= n:
        raise WordIndexError(i, n)
    cut = tuple(e for e in G.edges if G.labels[e.u].bit(i) != G.labels[e.v].bit(i))
    ends = {v for e in cut for v in e}
    v0 = tuple(sorted(v for v in ends if G.labels[v].bit(i) == 0))
    v1 = tuple(sorted(v for v in ends if G.labels[v].bit(i) == 1))
    return LayerSplit(coordinate=i, v0=v0, v1=v1, cut=cut)


def check_layer_split(G: Graph, split: LayerSplit) -> list:
    """Violations of the layer lemma for one coordinate; empty means it holds.

    The halves must be isomorphic through flip(., i), their union must be the
    product of one half with K_2, and both halves must be connected.
    """
    i = split.coordinate
    index = {w: v for v, w in enumerate(G.labels)}
    in_v0 = set(split.v0)
    violations = []

    partner = {}
    for v in split.v1:
        target = index.get(flip(G.labels[v], i))
        if target is None or target not in in_v0:
            violations.append(f"coordinate {i}: flip of {G.labels[v]} is not in V0")
        else:
            partner[target] = v
    if violations or len(partner) != len(split.v0):
        violations.append(f"coordinate {i}: flip is not a bijection V1 -> V0")
        return violations

    half0, half1 = induced_subgraph(G, split.v0), induced_subgraph(G, split.v1)
    pos0 = {v: k for k, v in enumerate(split.v0)}
    pos1 = {v: k for k, v in enumerate(split.v1)}
    if not is_isomorphism(half0, half1, [pos1[partner[v]] for v in split.v0]):
        violations.append(f"coordinate {i}: flip is not an isomorphism V0 -> V1")

    back = {b: a for a, b in partner.items()}
    union = sorted(in_v0 | set(split.v1))
    prism = cartesian_product(half0, complete_graph(2))
    to_prism = [pos0[v] * 2 if v in in_v0 else pos0[back[v]] * 2 + 1 for v in union]
    if not is_isomorphism(induced_subgraph(G, union), prism, to_prism):
        violations.append(f"coordinate {i}: G[V0 + V1] is not G[V0] x K2")

    if not is_connected(half0):
        violations.append(f"coordinate {i}: G[V0] is disconnected")
    if not is_connected(half1):
        violations.append(f"coordinate {i}: G[V1] is disconnected")
    return violations
