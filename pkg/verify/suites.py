"""
Acceptance suites over parameter grids.

Each suite expands its grid into cells, evaluates every cell with library
operations, and returns one CellResult per cell in grid order:

    theorem14  primality of O-cubes vs. the p = 1, r >= n >= 2 characterization
    lemma31    hypercube / star recognition on their parameter ranges
    lemma32    layer halves isomorphic, connected, and forming a prism
    cor33      edges flipping one coordinate are pairwise Θ-related
    prop13     O- and I-cubes coincide when p = 1 or r = 1
    tau        the (e^i, 0^n, e^(i+1)) witness triples for p >= 2
    roundtrip  factorizing products of small prime graphs recovers the inputs
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import pandas as pd

from fibcube.config import Config
from fibcube.errors import FibcubeError
from fibcube.factorization import (
    GridCell,
    factorize,
    o_cube_cells,
    property_1_3_check,
    theorem_grid,
    verify_factorization,
)
from fibcube.graph import (
    Graph,
    build_cube,
    cartesian_product,
    check_layer_split,
    cycle_graph,
    fibonacci_cube,
    is_isomorphic,
    layer_split,
    path_graph,
    recognize_hypercube,
    recognize_star,
    star_graph,
)
from fibcube.relations import coordinate_theta_suite, tau_witness_suite
from fibcube.words import CubeParams, count_words

logger = logging.getLogger(__name__)

DEFAULT_CAPS = {
    "theorem14": 300,
    "lemma31": 300,
    "lemma32": 200,
    "cor33": 200,
    "prop13": 300,
    "tau": 300,
    "roundtrip": 600,
}


@dataclass(frozen=True)
class CellResult:
    suite: str
    cell: str
    ok: bool
    detail: str = ""
    skipped: bool = False


@dataclass(frozen=True)
class GridBounds:
    p_max: int = 3
    r_max: int = 3
    n_max: int = 8
    cap: Optional[int] = None

    def cap_for(self, suite: str) -> int:
        return self.cap if self.cap is not None else DEFAULT_CAPS[suite]


def cube_grid(bounds: GridBounds) -> list:
    """O-family cells for p <= p_max, n <= n_max and r in 1..r_max plus r = n."""
    return o_cube_cells(bounds.p_max, bounds.r_max, bounds.n_max)


def run_cells(suite: str, evaluate: Callable, cells: list, name: Callable = str) -> list:
    """Evaluate cells on the worker pool; results keep cell order."""

    def guarded(cell) -> CellResult:
        try:
            return evaluate(cell)
        except FibcubeError as exc:
            logger.warning("%s %s failed: %s", suite, name(cell), exc)
            return CellResult(suite, name(cell), ok=False, detail=str(exc))

    with ThreadPoolExecutor(max_workers=Config.THREADS) as pool:
        return list(pool.map(guarded, cells))


def _over_cap(suite: str, params: CubeParams, cap: int) -> Optional[CellResult]:
    size = count_words(params)
    if size > cap:
        return CellResult(suite, params.label(), ok=True, skipped=True, detail=f"{size} vertices over cap {cap}")
    return None


# ---- suites ----

def theorem14_suite(bounds: GridBounds) -> list:
    cap = bounds.cap_for("theorem14")

    def pooled(evaluate: Callable, cells: list) -> list:
        return run_cells("theorem14", evaluate, cells, CubeParams.label)

    cells = theorem_grid(bounds.p_max, bounds.r_max, bounds.n_max, cap, map_cells=pooled)
    return [
        CellResult("theorem14", cell.name, cell.ok, cell.detail, cell.skipped) if isinstance(cell, GridCell) else cell
        for cell in cells
    ]


def expected_hypercube(p: int, r: int, n: int) -> bool:
    # Q_1 = K_2 is reached by every family at n = 1
    return (p == 1 and n <= r) or n == 1


def expected_star(p: int, r: int, n: int) -> bool:
    return (r == 1 and n <= p + 1) or (r >= 2 and n <= p)


def lemma31_suite(bounds: GridBounds) -> list:
    cap = bounds.cap_for("lemma31")

    def evaluate(params: CubeParams) -> CellResult:
        skipped = _over_cap("lemma31", params, cap)
        if skipped:
            return skipped
        p, r, n = params.p, params.r, params.n
        cube = build_cube(params)
        problems = []
        dimension = recognize_hypercube(cube)
        if expected_hypercube(p, r, n) != (dimension == n):
            problems.append(f"hypercube recognition gave {dimension}")
        leaves = recognize_star(cube)
        if expected_star(p, r, n) != (leaves == n):
            problems.append(f"star recognition gave {leaves}")
        if p == 1 and n <= r and cube.vertex_count != 2 ** n:
            problems.append(f"{cube.vertex_count} vertices, expected {2 ** n}")
        if expected_star(p, r, n) and cube.vertex_count != n + 1:
            problems.append(f"{cube.vertex_count} vertices, expected {n + 1}")
        return CellResult("lemma31", params.label(), not problems, "; ".join(problems))

    return run_cells("lemma31", evaluate, cube_grid(bounds), CubeParams.label)


def lemma32_suite(bounds: GridBounds) -> list:
    cap = bounds.cap_for("lemma32")

    def evaluate(params: CubeParams) -> CellResult:
        skipped = _over_cap("lemma32", params, cap)
        if skipped:
            return skipped
        cube = build_cube(params)
        problems = []
        for i in range(1, params.n + 1):
            problems.extend(check_layer_split(cube, layer_split(cube, i)))
        return CellResult("lemma32", params.label(), not problems, "; ".join(problems))

    return run_cells("lemma32", evaluate, cube_grid(bounds), CubeParams.label)


def cor33_suite(bounds: GridBounds) -> list:
    cap = bounds.cap_for("cor33")

    def evaluate(params: CubeParams) -> CellResult:
        skipped = _over_cap("cor33", params, cap)
        if skipped:
            return skipped
        violations = coordinate_theta_suite(build_cube(params))
        detail = f"{len(violations)} violations, first: {violations[0]}" if violations else ""
        return CellResult("cor33", params.label(), not violations, detail)

    return run_cells("cor33", evaluate, cube_grid(bounds), CubeParams.label)


def tau_suite(bounds: GridBounds) -> list:
    cap = bounds.cap_for("tau")
    cells = [params for params in cube_grid(bounds) if params.p >= 2]

    def evaluate(params: CubeParams) -> CellResult:
        skipped = _over_cap("tau", params, cap)
        if skipped:
            return skipped
        violations = tau_witness_suite(build_cube(params))
        return CellResult("tau", params.label(), not violations, "; ".join(map(str, violations)))

    return run_cells("tau", evaluate, cells, CubeParams.label)


def prop13_suite(bounds: GridBounds) -> list:
    """Equal word sets whenever p = 1 or r = 1; other (p, r) are reported per n."""
    pairs = sorted(
        {(1, r) for r in range(1, bounds.r_max + 1)}
        | {(p, 1) for p in range(1, bounds.p_max + 1)}
        | {(p, r) for p in range(2, bounds.p_max + 1) for r in range(2, bounds.r_max + 1)}
    )

    def evaluate(pr: tuple) -> list:
        p, r = pr
        results = []
        for comparison in property_1_3_check(p, r, bounds.n_max):
            if p == 1 or r == 1:
                ok = comparison.equal_words
                detail = "" if ok else f"{comparison.o_count} O-words vs {comparison.i_count} I-words"
            else:
                ok = True
                verdict = {True: "isomorphic", False: "not isomorphic", None: "undecided"}
                detail = (
                    f"{verdict[comparison.isomorphic]} "
                    f"({comparison.o_count} vs {comparison.i_count} vertices)"
                )
            results.append(CellResult("prop13", comparison.name, ok, detail))
        return results

    with ThreadPoolExecutor(max_workers=Config.THREADS) as pool:
        return [cell for batch in pool.map(evaluate, pairs) for cell in batch]


def roundtrip_pool() -> dict:
    pool = {f"P{k}": path_graph(k) for k in range(2, 7)}
    pool.update({f"K1,{k}": star_graph(k) for k in range(1, 6)})
    pool["C5"] = cycle_graph(5)
    pool["F3"] = fibonacci_cube(3)
    pool["F4"] = fibonacci_cube(4)
    return pool


def roundtrip_cases(pairs: int = 20, triples: int = 5, seed: int = 14) -> list:
    rng = random.Random(seed)
    names = sorted(roundtrip_pool())
    return [tuple(rng.choice(names) for _ in range(2)) for _ in range(pairs)] + [
        tuple(rng.choice(names) for _ in range(3)) for _ in range(triples)
    ]


def _same_factors(found: tuple, expected: list) -> bool:
    remaining = list(expected)
    for factor in found:
        match = next((k for k, g in enumerate(remaining) if is_isomorphic(factor, g)), None)
        if match is None:
            return False
        remaining.pop(match)
    return not remaining


def roundtrip_suite(bounds: GridBounds) -> list:
    pool = roundtrip_pool()
    cap = bounds.cap_for("roundtrip")

    def evaluate(case: tuple) -> CellResult:
        name = "x".join(case)
        graphs = [pool[k] for k in case]
        product: Graph = graphs[0]
        for g in graphs[1:]:
            product = cartesian_product(product, g)
        if product.vertex_count > cap:
            return CellResult("roundtrip", name, ok=True, skipped=True,
                              detail=f"{product.vertex_count} vertices over cap {cap}")
        F = factorize(product)
        if not verify_factorization(product, F):
            return CellResult("roundtrip", name, ok=False, detail="factorization does not verify")
        if not _same_factors(F.factors, graphs):
            orders = [f.vertex_count for f in F.factors]
            return CellResult("roundtrip", name, ok=False, detail=f"factor orders {orders}")
        return CellResult("roundtrip", name, ok=True)

    return run_cells("roundtrip", evaluate, roundtrip_cases(), lambda case: "x".join(case))


SUITES = {
    "theorem14": theorem14_suite,
    "lemma31": lemma31_suite,
    "lemma32": lemma32_suite,
    "cor33": cor33_suite,
    "prop13": prop13_suite,
    "tau": tau_suite,
    "roundtrip": roundtrip_suite,
}


def run_suite(name: str, bounds: GridBounds) -> list:
    logger.info("running %s with %s", name, bounds)
    return SUITES[name](bounds)


# ---- output ----

def format_tap(results: list) -> str:
    lines = [f"1..{len(results)}"]
    for k, result in enumerate(results, start=1):
        if result.skipped:
            lines.append(f"ok {k} {result.cell} # SKIP {result.detail}")
        elif result.ok:
            lines.append(f"ok {k} {result.cell}")
        else:
            lines.append(f"not ok {k} {result.cell} {result.detail}".rstrip())
    return "".join(line + "\n" for line in lines)


def all_passed(results: list) -> bool:
    return all(result.ok for result in results)


def results_frame(results: list) -> pd.DataFrame:
    return pd.DataFrame([asdict(result) for result in results], columns=list(CellResult.__dataclass_fields__))


def summarize(results: list) -> pd.DataFrame:
    """Per-suite counts of passed, failed and skipped cells."""
    frame = results_frame(results)
    if frame.empty:
        return pd.DataFrame(columns=["suite", "passed", "failed", "skipped"])
    frame["passed"] = frame["ok"] & ~frame["skipped"]
    frame["failed"] = ~frame["ok"]
    return (
        frame.groupby("suite", sort=False)[["passed", "failed", "skipped"]]
        .sum()
        .astype(int)
        .reset_index()
    )
