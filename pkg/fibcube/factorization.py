"""Cartesian prime factorization and the primality theorem grid.

Factors are read off the (Θ ∪ τ)* classes: each class contributes the layer
through the base vertex, and a vertex's coordinate in that factor is the base
layer vertex lying in its component once the class's edges are removed. The
result is always checked against the product definition before it is returned.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import (
    DisconnectedGraphError,
    GraphTooLargeError,
    NotAProductColoringError,
    TrivialGraphError,
)
from .graph import (
    Graph,
    build_cube,
    complete_graph,
    degree_sequence,
    induced_subgraph,
    is_connected,
    is_isomorphic,
)
from .relations import is_prime, sigma_classes
from .words import CubeParams, Family, count_words, enumerate_words

logger = logging.getLogger(__name__)

BASE_VERTEX = 0


@dataclass(frozen=True)
class Factorization:
    factors: tuple  # prime factor graphs in canonical order
    coordinates: tuple  # per vertex of G, one factor-vertex index per factor
    base: int = BASE_VERTEX

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1


def _components(G: Graph, keep) -> list:
    """Component id per vertex using only edges (by index) accepted by keep."""
    component = [-1] * G.vertex_count
    index = G.edge_index
    current = 0
    for start in range(G.vertex_count):
        if component[start] != -1:
            continue
        component[start] = current
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in G.adjacency[u]:
                if component[v] == -1 and keep(index[(min(u, v), max(u, v))]):
                    component[v] = current
                    queue.append(v)
        current += 1
    return component


def factorize(G: Graph) -> Factorization:
    if G.vertex_count < 2:
        raise TrivialGraphError(f"factorization needs at least 2 vertices, got {G.vertex_count}")
    if not is_connected(G):
        raise DisconnectedGraphError("cannot factorize a disconnected graph")

    sigma = sigma_classes(G)
    layers = []
    for cid, members in enumerate(sigma.classes):
        assert members, "every product class contains an edge"
        inside = _components(G, lambda k, cid=cid: sigma.class_of[k] == cid)
        layer = [v for v in range(G.vertex_count) if inside[v] == inside[BASE_VERTEX]]
        outside = _components(G, lambda k, cid=cid: sigma.class_of[k] != cid)

        # every component of G minus the class meets the base layer exactly once
        meeting = {}
        for k, v in enumerate(layer):
            if outside[v] in meeting:
                raise NotAProductColoringError(f"class {cid} layer meets a fiber twice")
            meeting[outside[v]] = k
        try:
            coordinate = [meeting[outside[v]] for v in range(G.vertex_count)]
        except KeyError:
            raise NotAProductColoringError(f"class {cid} has a fiber missing the base layer") from None
        factor = induced_subgraph(G, layer)
        layers.append((factor, coordinate, min(members)))

    layers.sort(key=lambda item: (
        item[0].vertex_count,
        item[0].edge_count,
        degree_sequence(item[0]),
        item[2],
    ))
    result = Factorization(
        factors=tuple(factor for factor, _, _ in layers),
        coordinates=tuple(
            tuple(coordinate[v] for _, coordinate, _ in layers) for v in range(G.vertex_count)
        ),
    )
    if not verify_factorization(G, result):
        raise NotAProductColoringError("coordinate map is not an isomorphism")
    logger.debug("factorized %d vertices into %d factors", G.vertex_count, len(result.factors))
    return result


def verify_factorization(G: Graph, F: Factorization) -> bool:
    """Check the order product, the bijection, and edge correspondence exhaustively."""
    orders = [factor.vertex_count for factor in F.factors]
    if not F.factors or any(order < 2 for order in orders):
        return False
    if math.prod(orders) != G.vertex_count or len(F.coordinates) != G.vertex_count:
        return False
    for coordinate in F.coordinates:
        if len(coordinate) != len(orders) or not all(0 <= x < m for x, m in zip(coordinate, orders)):
            return False
    if len(set(F.coordinates)) != G.vertex_count:
        return False

    for u, v in G.edges:
        cu, cv = F.coordinates[u], F.coordinates[v]
        differing = [c for c in range(len(orders)) if cu[c] != cv[c]]
        if len(differing) != 1 or not F.factors[differing[0]].has_edge(cu[differing[0]], cv[differing[0]]):
            return False
    # every product edge appears: |E(G)| matches the product edge count
    expected = sum(
        factor.edge_count * G.vertex_count // factor.vertex_count for factor in F.factors
    )
    return G.edge_count == expected


def expected_prime(p: int, r: int, n: int) -> bool:
    """The cube is a non-trivial product iff p = 1 and r >= n >= 2."""
    return not (p == 1 and 2 <= n <= r)


@dataclass(frozen=True)
class GridCell:
    params: CubeParams
    ok: bool
    skipped: bool = False
    detail: str = ""

    @property
    def name(self) -> str:
        return self.params.label()


def grid_r_values(r_max: int, n: int) -> list:
    """r in 1..r_max, plus r = n so every n has a hypercube cell."""
    values = list(range(1, r_max + 1))
    if n > r_max:
        values.append(n)
    return values


def theorem_cell(params: CubeParams, vertex_cap: int) -> GridCell:
    size = count_words(params)
    if size > vertex_cap:
        return GridCell(params, ok=True, skipped=True, detail=f"{size} vertices over cap {vertex_cap}")
    cube = build_cube(params)
    expected = expected_prime(params.p, params.r, params.n)
    prime = is_prime(cube)
    if prime != expected:
        return GridCell(params, ok=False, detail=f"is_prime={prime}, expected {expected}")
    if not prime:
        factors = factorize(cube).factors
        edge = complete_graph(2)
        if len(factors) != params.n or not all(is_isomorphic(f, edge) for f in factors):
            sizes = [f.vertex_count for f in factors]
            return GridCell(params, ok=False, detail=f"factors of orders {sizes}, expected {params.n} K2")
    return GridCell(params, ok=True, detail="prime" if prime else f"{params.n} x K2")


def o_cube_cells(p_max: int, r_max: int, n_max: int) -> list:
    """O-family cells for p <= p_max, n <= n_max and r from grid_r_values."""
    return [
        CubeParams(Family.O, p, r, n)
        for p in range(1, p_max + 1)
        for n in range(1, n_max + 1)
        for r in grid_r_values(r_max, n)
    ]


def theorem_grid(p_max: int, r_max: int, n_max: int, vertex_cap: int, map_cells: Callable = map) -> list:
    """Primality of every O-cube cell against the closed-form characterization.

    map_cells(evaluate, cells) lets callers fan the cells out to a pool;
    results must come back in cell order.
    """
    cells = o_cube_cells(p_max, r_max, n_max)
    return list(map_cells(lambda params: theorem_cell(params, vertex_cap), cells))


@dataclass(frozen=True)
class FamilyComparison:
    p: int
    r: int
    n: int
    equal_words: bool
    isomorphic: Optional[bool]  # None when too large to decide exactly
    o_count: int
    i_count: int

    @property
    def name(self) -> str:
        return f"O/I({self.p},{self.r},{self.n})"


def compare_families(p: int, r: int, n: int) -> FamilyComparison:
    o_params, i_params = CubeParams(Family.O, p, r, n), CubeParams(Family.I, p, r, n)
    o_words, i_words = enumerate_words(o_params), enumerate_words(i_params)
    equal = o_words == i_words
    isomorphic: Optional[bool] = True if equal else None
    if not equal:
        if len(o_words) != len(i_words):
            isomorphic = False
        else:
            try:
                isomorphic = is_isomorphic(build_cube(o_params), build_cube(i_params))
            except GraphTooLargeError as exc:
                logger.info("O/I(%d,%d,%d) undecided: %s", p, r, n, exc)
    return FamilyComparison(p, r, n, equal, isomorphic, len(o_words), len(i_words))


def property_1_3_check(p: int, r: int, n_max: int) -> list:
    """Per-n comparison of the O- and I-cubes for one (p, r)."""
    return [compare_families(p, r, n) for n in range(1, n_max + 1)]

