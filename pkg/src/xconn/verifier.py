"""Batch reconciliation: closed forms vs. exact solvers vs. witness cuts.

A sweep walks a parameter grid, and for every cell (family, m, n) and every
requested g it records the formula value, the fragment-solver value, the
witness sizes, the per-layer lower-bound check on all enumerated minimum
cuts, and (at g=0, small cells) whether every minimum vertex cut classifies
as an I-set or L-set.  Reports are canonically ordered and the CSV rendering
contains no timing data, so identical configurations produce identical bytes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .formulas import DomainError, FamilyParams, FAMILY_MINS, guard_limit, kappa_formula
from .graph import Graph, min_degree
from .products import FAMILIES, ProductGraph, cartesian_product, classify_cut, family_product
from .solver import (INFINITY, InconclusiveError, check_layer_bounds, classical_connectivity,
                     fragment_solve_many, min_cuts_grouped)
from .witnesses import WITNESS_KINDS, WitnessError, build_witness, plan_witness, validate_witness

DEFAULT_GRIDS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "pxp": ((3, 6), (3, 6)),
    "cxp": ((4, 6), (3, 5)),
    "cxc": ((4, 5), (4, 5)),
}


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...] = FAMILIES
    m_range: tuple[int, int] | None = None   # None: family default grid
    n_range: tuple[int, int] | None = None
    explicit_g: tuple[int, ...] | None = None  # None: every in-guard g
    max_vertices: int = 36                   # cells above this are inconclusive
    enumerate_limit: int = 25                # min-cut enumeration vertex cap
    classify_limit: int = 16                 # I/L classification vertex cap
    enumerate_checks: int = 50_000_000


@dataclass(frozen=True)
class SweepRow:
    family: str
    m: int
    n: int
    g: int
    in_guard: bool
    formula_value: int | None
    oracle_value: int | float | None         # int, INFINITY, or None=inconclusive
    agree: bool | None
    witness_sizes: tuple[tuple[str, int | None], ...]
    witnesses_valid: bool | None
    layer_bounds_pass: bool | None
    cut_classes: str | None                  # "pass" | "fail" | "skip" (g=0 only)
    runtime_ms: float


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    rows: tuple[SweepRow, ...] = field(default_factory=tuple)


def _cell_grid(config: SweepConfig, family: str) -> list[tuple[int, int]]:
    (dm, dn) = DEFAULT_GRIDS[family]
    m_lo, m_hi = config.m_range or dm
    n_lo, n_hi = config.n_range or dn
    min_m, min_n = FAMILY_MINS[family]
    return [(m, n)
            for m in range(max(m_lo, min_m), m_hi + 1)
            for n in range(max(n_lo, min_n), n_hi + 1)]


def _evaluate_cell(args: tuple[str, int, int, SweepConfig]) -> list[SweepRow]:
    family, m, n, config = args
    t0 = time.perf_counter()
    pg = family_product(family, m, n)
    limit = guard_limit(family, m, n)
    if config.explicit_g is not None:
        gs = sorted(set(config.explicit_g))
    else:
        gs = list(range(0, limit + 1))
    if not gs:
        return []

    formula: dict[int, int | None] = {}
    sizes: dict[int, dict[str, int | None]] = {}
    valid: dict[int, bool | None] = {}
    seeds: dict[int, int] = {}
    for g in gs:
        params = FamilyParams(family, m, n, g)
        if g <= limit:
            formula[g] = kappa_formula(params).value
            sizes[g] = {}
            ok = True
            seen_any = False
            for which in WITNESS_KINDS:
                try:
                    cut = build_witness(plan_witness(params, which))
                except (WitnessError, DomainError):
                    sizes[g][which] = None
                    continue
                sizes[g][which] = len(cut)
                seen_any = True
                verdict = validate_witness(pg, cut, g)
                if verdict.is_g_extra:
                    seeds[g] = min(seeds.get(g, len(cut)), len(cut))
                else:
                    ok = False
            valid[g] = ok if seen_any else None
        else:
            formula[g] = None
            sizes[g] = {w: None for w in WITNESS_KINDS}
            valid[g] = None

    oracle: dict[int, int | float | None]
    if pg.graph.n <= config.max_vertices:
        results = fragment_solve_many(pg.graph, gs, seeds)
        oracle = {g: results[g].value for g in gs}
    else:
        oracle = {g: None for g in gs}

    min_cuts: dict[int, list[tuple[int, ...]]] = {}
    if pg.graph.n <= config.enumerate_limit:
        finite = {g: int(v) for g, v in oracle.items()
                  if v is not None and v is not INFINITY}
        try:
            min_cuts = min_cuts_grouped(pg.graph, finite,
                                        max_checks=config.enumerate_checks)
        except InconclusiveError:
            min_cuts = {}

    rows: list[SweepRow] = []
    for g in gs:
        ov = oracle[g]
        fv = formula[g]
        agree = None
        if g <= limit and fv is not None and ov is not None:
            agree = (ov == fv)
        layer_pass: bool | None = None
        classes: str | None = None
        if g in min_cuts:
            cuts = min_cuts[g]
            layer_pass = all(check_layer_bounds(pg, c, g) for c in cuts)
            if g == 0 and pg.graph.n <= config.classify_limit:
                ok_cls = all(classify_cut(pg, c).verdict in ("i_set", "l_set")
                             for c in cuts)
                classes = "pass" if ok_cls else "fail"
        if classes is None and g == 0:
            classes = "skip"
        runtime = (time.perf_counter() - t0) * 1000.0
        rows.append(SweepRow(
            family, m, n, g, g <= limit, fv, ov, agree,
            tuple(sizes[g].items()), valid[g], layer_pass, classes, runtime))
    return rows


def sweep(config: SweepConfig = SweepConfig(), threads: int = 1) -> SweepReport:
    """Evaluate the whole grid; cells are independent and may run in parallel
    (the report is order-canonicalised, so the thread count never changes it)."""
    cells = [(family, m, n, config)
             for family in config.families
             for m, n in _cell_grid(config, family)]
    if threads > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_evaluate_cell, cells))
    else:
        results = [_evaluate_cell(c) for c in cells]
    rows = [row for cell_rows in results for row in cell_rows]
    order = {f: i for i, f in enumerate(FAMILIES)}
    rows.sort(key=lambda r: (order[r.family], r.m, r.n, r.g))
    return SweepReport(config, tuple(rows))


CSV_HEADER = ("family,m,n,g,in_guard,formula,oracle,agree,"
              "w_layers1,w_layers2,w_block,w_valid,layer_bounds,cut_classes")


def _fmt(value) -> str:
    if value is None:
        return ""
    if value is INFINITY:
        return "inf"
    if isinstance(value, bool):
        return "1" if value else "0"
    return str(value)


def to_csv(report: SweepReport) -> str:
    lines = [CSV_HEADER]
    for r in report.rows:
        ws = dict(r.witness_sizes)
        lines.append(",".join([
            r.family, str(r.m), str(r.n), str(r.g), _fmt(r.in_guard),
            _fmt(r.formula_value), _fmt(r.oracle_value), _fmt(r.agree),
            _fmt(ws.get("layers1")), _fmt(ws.get("layers2")), _fmt(ws.get("block")),
            _fmt(r.witnesses_valid), _fmt(r.layer_bounds_pass), _fmt(r.cut_classes),
        ]))
    return "\n".join(lines) + "\n"


def to_json_dict(report: SweepReport) -> dict:
    return {
        "rows": [
            {
                "family": r.family, "m": r.m, "n": r.n, "g": r.g,
                "in_guard": r.in_guard,
                "formula": r.formula_value,
                "oracle": ("infinity" if r.oracle_value is INFINITY
                           else r.oracle_value),
                "agree": r.agree,
                "witness_sizes": dict(r.witness_sizes),
                "witnesses_valid": r.witnesses_valid,
                "layer_bounds_pass": r.layer_bounds_pass,
                "cut_classes": r.cut_classes,
                "runtime_ms": r.runtime_ms,
            }
            for r in report.rows
        ],
    }


def report_failures(report: SweepReport) -> list[str]:
    """Human-readable list of every asserted property that failed."""
    fails = []
    for r in report.rows:
        where = f"{r.family} m={r.m} n={r.n} g={r.g}"
        if r.agree is False:
            fails.append(f"{where}: formula {r.formula_value} != oracle {r.oracle_value}")
        if r.witnesses_valid is False:
            fails.append(f"{where}: a constructed witness failed validation")
        if r.layer_bounds_pass is False:
            fails.append(f"{where}: a minimum cut violates the layer lower bounds")
        if r.cut_classes == "fail":
            fails.append(f"{where}: a minimum vertex cut is neither I-set nor L-set")
    return fails


def check_min_cut_classification(pg: ProductGraph,
                                 max_checks: int = 50_000_000) -> bool | None:
    """True iff every minimum vertex cut (g=0) is an I-set or L-set;
    None when enumeration is infeasible under the budget."""
    try:
        cuts = enumerate_min_cuts(pg.graph, 0, max_checks=max_checks)
    except InconclusiveError:
        return None
    return all(classify_cut(pg, c).verdict in ("i_set", "l_set") for c in cuts)


def check_cartesian_connectivity(g1: Graph, g2: Graph) -> bool:
    """Cross-check the classical min-formula for Cartesian-product connectivity
    kappa(G1 [] G2) = min{kappa(G1)|V2|, kappa(G2)|V1|, delta} against the solver."""
    pg = cartesian_product(g1, g2)
    predicted = min(classical_connectivity(g1) * g2.n,
                    classical_connectivity(g2) * g1.n,
                    min_degree(pg.graph))
    return predicted == classical_connectivity(pg.graph)
