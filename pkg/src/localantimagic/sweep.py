"""Parameter sweeps: run the family constructions over a grid and check
every instance against the closed-form predictions."""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .families import build_family
from .formulas import color_triple
from .graph import Role, graph_stats, verify_local_antimagic
from .matrices import (
    Family,
    FamilyParams,
    build_matrix,
    matrix_column_sums,
)
from .io import FORMAT_VERSION, params_to_json


@dataclass
class CellResult:
    params: FamilyParams
    stage: str
    verified: bool
    colors: Tuple[int, int, int]
    components: int
    regular: Optional[int]
    runtime_ms: int
    failures: List[str] = field(default_factory=list)


@dataclass
class SweepReport:
    cells: List[CellResult]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cells if c.verified)

    @property
    def failed(self) -> int:
        return len(self.cells) - self.passed

    @property
    def all_pass(self) -> bool:
        return self.failed == 0


def check_cell(params: FamilyParams, stage: str) -> CellResult:
    """Build one family instance and check every structural claim:
    valid local antimagic labeling, exactly the three predicted colors,
    per-role color agreement, component count, and the chi_la = 3
    certificate."""
    start = time.monotonic()
    failures: List[str] = []
    triple = color_triple(params)
    g = build_family(params, stage=stage)
    report = verify_local_antimagic(g)
    components, _, regular = graph_stats(g)

    if not report.is_local_antimagic:
        failures.append("labeling is not local antimagic")
    expected_colors = sorted({triple.c_center, triple.c_u, triple.c_v})
    if report.distinct_colors != expected_colors or report.c_f != 3:
        failures.append(
            f"colors {report.distinct_colors} != predicted {expected_colors}"
        )
    for v, c in report.color_of.items():
        want = (
            triple.c_u
            if v.role is Role.U
            else triple.c_v if v.role is Role.V else triple.c_center
        )
        if c != want:
            failures.append(f"color of {v} is {c}, formula says {want}")
            break
    if stage == "crossed":
        want_components = params.k + 1
    else:
        want_components = params.factorization[0] + 1  # type: ignore[index]
    if components != want_components:
        failures.append(f"{components} components, expected {want_components}")
    if report.chi_lower != 3:
        failures.append(f"chi lower bound {report.chi_lower} != 3")
    if report.chi_la_bracket != (3, 3):
        failures.append(f"chi_la bracket {report.chi_la_bracket} != (3, 3)")
    u_sum, v_sum = matrix_column_sums(build_matrix(params))
    if (u_sum, v_sum) != (triple.c_u, triple.c_v):
        failures.append(
            f"column sums ({u_sum}, {v_sum}) != closed forms "
            f"({triple.c_u}, {triple.c_v})"
        )
    if (
        stage == "merged"
        and params.family is Family.M3
        and params.factorization is not None
        and params.n == 2 * params.factorization[1]
        and regular != 2 * params.n + 2
    ):
        failures.append(f"expected {2 * params.n + 2}-regular, got {regular}")

    return CellResult(
        params=params,
        stage=stage,
        verified=not failures,
        colors=(triple.c_center, triple.c_u, triple.c_v),
        components=components,
        regular=regular,
        runtime_ms=int((time.monotonic() - start) * 1000),
        failures=failures,
    )


def _worker(args: Tuple[FamilyParams, str]) -> CellResult:
    return check_cell(*args)


def worker_count() -> int:
    cap = os.environ.get("ANTIMAGIC_THREADS")
    if cap:
        return max(1, int(cap))
    return os.cpu_count() or 1


def run_sweep(cells: List[Tuple[FamilyParams, str]]) -> SweepReport:
    workers = min(worker_count(), len(cells)) if cells else 1
    if workers <= 1 or len(cells) <= 1:
        results = [check_cell(p, s) for p, s in cells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_worker, cells))
    return SweepReport(cells=results)


def grid_cells(
    families: List[Family],
    n_range: List[int],
    k_range: List[int],
    rs_range: Optional[List[int]] = None,
) -> List[Tuple[FamilyParams, str]]:
    """Crossed cells over n x k; if rs_range is given, merged cells over
    n x r x s instead (k is forced by (2r+1)(2s+1) = 2k+1)."""
    cells: List[Tuple[FamilyParams, str]] = []
    if rs_range is None:
        for fam in families:
            for n in n_range:
                for k in k_range:
                    cells.append((FamilyParams(fam, n, k), "crossed"))
        return cells
    for fam in families:
        for n in n_range:
            for r in rs_range:
                for s in rs_range:
                    k = ((2 * r + 1) * (2 * s + 1) - 1) // 2
                    cells.append((FamilyParams(fam, n, k, (r, s)), "merged"))
    return cells


def report_to_json(report: SweepReport) -> str:
    cells = []
    for c in report.cells:
        item = params_to_json(c.params)
        item.update(
            {
                "stage": c.stage,
                "verified": c.verified,
                "colors": list(c.colors),
                "components": c.components,
                "regular": c.regular,
                "runtime_ms": c.runtime_ms,
                "failures": c.failures,
            }
        )
        cells.append(item)
    return (
        json.dumps(
            {
                "format_version": FORMAT_VERSION,
                "grid": cells,
                "summary": {"pass": report.passed, "fail": report.failed},
            },
            indent=2,
        )
        + "\n"
    )
