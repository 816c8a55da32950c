"""The Θ and τ edge relations, their joint closure, and the coordinate relation.

Θ: edges ab, xy with d(a,x) + d(b,y) != d(a,y) + d(b,x).
τ: edges uv, uw where u is the only common neighbor of v and w.
The transitive closure of Θ ∪ τ on a connected graph is the product relation
of its prime factorization, so the graph is prime iff there is one class.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .config import Config
from .errors import DisconnectedGraphError, GraphTooLargeError, TrivialGraphError, UnlabeledGraphError
from .graph import (
    UNREACHABLE,
    Edge,
    Graph,
    all_pairs_distances,
    cartesian_product,
    layer_split,
    word_length,
)
from .unionfind import UnionFind
from .words import unit_word, zero_word

logger = logging.getLogger(__name__)

# rows of the Θ matrix evaluated per numpy block
_THETA_BLOCK_CELLS = 4_000_000


@dataclass(frozen=True)
class EdgePartition:
    edges: tuple
    class_of: tuple  # class id per edge index
    classes: tuple  # edge indices per class, ascending

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_id(self, e: Edge) -> int:
        return self.class_of[self.edges.index(e)]

    @classmethod
    def from_union_find(cls, edges: tuple, uf: UnionFind) -> "EdgePartition":
        classes = uf.canonical_classes()
        class_of = [0] * len(edges)
        for cid, members in enumerate(classes):
            for k in members:
                class_of[k] = cid
        return cls(edges=edges, class_of=tuple(class_of), classes=tuple(map(tuple, classes)))


@dataclass(frozen=True)
class CoordRelation:
    n: int
    pairs: frozenset  # related {i, j} as (i, j) with i < j, 1-based
    classes: tuple  # closure partition of [n]

    @property
    def is_total(self) -> bool:
        """The closure is [n] x [n]."""
        return len(self.classes) <= 1


@dataclass(frozen=True)
class Violation:
    kind: str  # "class" or "pair"
    e: Edge
    f: Edge

    def __str__(self) -> str:
        return f"{self.kind} {self.e} {self.f}"


def format_violations(violations: list) -> str:
    return "".join(f"{v}\n" for v in violations)


def _require_connected(D: np.ndarray):
    # row 0 holds an UNREACHABLE entry iff the graph is disconnected
    if D.shape[0] and (D[0] == UNREACHABLE).any():
        raise DisconnectedGraphError("Θ undefined on disconnected graph")


def _distances(G: Graph) -> np.ndarray:
    limit = Config.THETA_VERTEX_LIMIT
    if G.vertex_count > limit:
        logger.warning("refusing Θ on %d vertices (limit %d)", G.vertex_count, limit)
        raise GraphTooLargeError(f"graph too large for Θ computation ({G.vertex_count} > {limit} vertices)")
    D = all_pairs_distances(G)
    _require_connected(D)
    return D


def theta_test(G: Graph, D: np.ndarray, e: Edge, f: Edge) -> bool:
    _require_connected(D)
    a, b = e
    x, y = f
    return int(D[a, x]) + int(D[b, y]) != int(D[a, y]) + int(D[b, x])


def theta_matrix(G: Graph, D: np.ndarray) -> np.ndarray:
    """Boolean |E| x |E| table of Θ over the canonical edge order."""
    _require_connected(D)
    count = G.edge_count
    if count == 0:
        return np.zeros((0, 0), dtype=bool)
    a = np.fromiter((e.u for e in G.edges), dtype=np.intp, count=count)
    b = np.fromiter((e.v for e in G.edges), dtype=np.intp, count=count)
    result = np.empty((count, count), dtype=bool)
    block = max(1, _THETA_BLOCK_CELLS // count)
    for start in range(0, count, block):
        rows = slice(start, min(start + block, count))
        da, db = D[a[rows]], D[b[rows]]
        result[rows] = (da[:, a] + db[:, b]) != (da[:, b] + db[:, a])
    return result


def _common_neighbors(left: tuple, right: tuple) -> list:
    """Intersection of two sorted neighbor lists."""
    common, i, j = [], 0, 0
    while i < len(left) and j < len(right):
        if left[i] == right[j]:
            common.append(left[i])
            i += 1
            j += 1
        elif left[i] < right[j]:
            i += 1
        else:
            j += 1
    return common


def _shared_endpoint(e: Edge, f: Edge) -> Optional[tuple]:
    """(u, v, w) with e = uv and f = uw, or None unless exactly one endpoint is shared."""
    shared = set(e) & set(f)
    if len(shared) != 1:
        return None
    (u,) = shared
    v = e.v if e.u == u else e.u
    w = f.v if f.u == u else f.u
    return u, v, w


def tau_test(G: Graph, e: Edge, f: Edge) -> bool:
    triple = _shared_endpoint(Edge(*e), Edge(*f))
    if triple is None:
        return False
    u, v, w = triple
    return _common_neighbors(G.adjacency[v], G.adjacency[w]) == [u]


def tau_pairs(G: Graph) -> Iterator[tuple]:
    """τ-related edge index pairs, scanning pairs of edges at each vertex."""
    index = G.edge_index
    for u, neighbors in enumerate(G.adjacency):
        for v, w in itertools.combinations(neighbors, 2):
            if _common_neighbors(G.adjacency[v], G.adjacency[w]) == [u]:
                yield index[Edge(min(u, v), max(u, v))], index[Edge(min(u, w), max(u, w))]


def sigma_classes(G: Graph, D: Optional[np.ndarray] = None) -> EdgePartition:
    """Classes of the transitive closure of Θ ∪ τ."""
    D = _distances(G) if D is None else D
    _require_connected(D)
    uf = UnionFind(G.edge_count)
    theta = theta_matrix(G, D)
    for i, j in zip(*np.nonzero(np.triu(theta, k=1))):
        uf.union(int(i), int(j))
    for i, j in tau_pairs(G):
        uf.union(i, j)
    partition = EdgePartition.from_union_find(G.edges, uf)
    logger.debug("sigma: %d edges in %d classes", G.edge_count, partition.class_count)
    return partition


def is_prime(G: Graph) -> bool:
    if G.vertex_count < 2:
        raise TrivialGraphError(f"primality needs at least 2 vertices, got {G.vertex_count}")
    return sigma_classes(G).class_count == 1


def _edge_coordinate(G: Graph, e: Edge) -> int:
    lu, lv = G.labels[e.u], G.labels[e.v]
    return next(i for i in range(1, len(lu) + 1) if lu.bit(i) != lv.bit(i))


def coordinate_theta_suite(G: Graph) -> list:
    """Edges flipping the same coordinate must be pairwise Θ-related."""
    if G.labels is None:
        raise UnlabeledGraphError("coordinate_theta_suite")
    D = _distances(G)
    theta = theta_matrix(G, D)
    index = G.edge_index
    violations = []
    for i in range(1, word_length(G) + 1):
        cut = [index[e] for e in layer_split(G, i).cut]
        for x, y in itertools.combinations_with_replacement(cut, 2):
            if not theta[x, y]:
                violations.append(Violation("class", G.edges[x], G.edges[y]))
    return violations


def tilde_relation(G: Graph) -> CoordRelation:
    """i ~ j when some edge flipping i is τ-related to some edge flipping j."""
    if G.labels is None:
        raise UnlabeledGraphError("tilde_relation")
    n = word_length(G)
    pairs = set()
    for x, y in tau_pairs(G):
        i = _edge_coordinate(G, G.edges[x])
        j = _edge_coordinate(G, G.edges[y])
        if i != j:
            pairs.add((min(i, j), max(i, j)))
    uf = UnionFind(n)
    for i, j in pairs:
        uf.union(i - 1, j - 1)
    classes = tuple(tuple(k + 1 for k in members) for members in uf.canonical_classes())
    return CoordRelation(n=n, pairs=frozenset(pairs), classes=classes)


def lemma_2_1_suite(G: Graph, H: Graph) -> list:
    """In G □ H, same-colored edges with the same projection are Θ-related."""
    product = cartesian_product(G, H)
    D = _distances(product)
    theta = theta_matrix(product, D)
    groups = {}
    for k, (u, v) in enumerate(product.edges):
        color = product.edge_colors[k]
        ends = sorted((product.coordinates[u][color], product.coordinates[v][color]))
        groups.setdefault((color, tuple(ends)), []).append(k)
    violations = []
    for members in groups.values():
        for x, y in itertools.combinations_with_replacement(members, 2):
            if not theta[x, y]:
                violations.append(Violation("pair", product.edges[x], product.edges[y]))
    return violations


def tau_witness_suite(G: Graph) -> list:
    """The edges 0^n e^i and 0^n e^(i+1) must be τ-related for every i < n."""
    if G.labels is None:
        raise UnlabeledGraphError("tau_witness_suite")
    n = word_length(G)
    index = {w: v for v, w in enumerate(G.labels)}
    origin = index[zero_word(n)]
    violations = []
    for i in range(1, n):
        e = Edge(*sorted((origin, index[unit_word(n, i)])))
        f = Edge(*sorted((origin, index[unit_word(n, i + 1)])))
        if not tau_test(G, e, f):
            violations.append(Violation("pair", e, f))
    return violations
