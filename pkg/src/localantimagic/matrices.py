"""Label matrices for the two graph families.

Family M2 is the (4n+1)-row matrix (leaves come in 2n per copy), family M3
the (4n+3)-row one (2n+1 leaves per copy).  Columns run over i in [1, 2k+1];
rows are the u-side leaf rows, the partner-edge row, then the v-side leaf
rows.  Cell values form a bijection onto [1, rows*(2k+1)].
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple


class Family(Enum):
    M2 = "m2"
    M3 = "m3"


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n: int
    k: int
    factorization: Optional[Tuple[int, int]] = None  # (r, s)

    def __post_init__(self):
        if self.n < 1:
            raise ParamError(f"n must be >= 1, got {self.n}")
        if self.k < 1:
            raise ParamError(f"k must be >= 1, got {self.k}")
        if self.factorization is not None:
            r, s = self.factorization
            if r < 1 or s < 1:
                raise ParamError(f"r, s must be >= 1, got ({r}, {s})")
            if (2 * r + 1) * (2 * s + 1) != 2 * self.k + 1:
                raise ParamError(
                    f"(2r+1)(2s+1) = {(2 * r + 1) * (2 * s + 1)} "
                    f"but 2k+1 = {2 * self.k + 1}"
                )

    @property
    def leaves_per_copy(self) -> int:
        return 2 * self.n if self.family is Family.M2 else 2 * self.n + 1

    @property
    def copies(self) -> int:
        return 2 * self.k + 1

    @property
    def rows(self) -> int:
        return 2 * self.leaves_per_copy + 1

    @property
    def q(self) -> int:
        return self.rows * self.copies


# RowRole: ("ux", j) for the u-side leaf-j row, ("uv", 0) for the partner
# row, ("vx", j) for the v-side leaf-j row.
RowRole = Tuple[str, int]


@dataclass(frozen=True)
class LabelMatrix:
    params: FamilyParams
    rows: Tuple[RowRole, ...]
    cell: Dict[Tuple[RowRole, int], int]

    def row_values(self, role: RowRole) -> List[int]:
        return [self.cell[(role, i)] for i in range(1, self.params.copies + 1)]


def row_order(params: FamilyParams) -> List[RowRole]:
    m = params.leaves_per_copy
    return (
        [("ux", j) for j in range(1, m + 1)]
        + [("uv", 0)]
        + [("vx", j) for j in range(1, m + 1)]
    )


def _cell_m2(n: int, k: int, role: RowRole, i: int) -> int:
    kind, j = role
    m = n * (8 * k + 4)
    if kind == "uv":
        return i
    if kind == "ux":
        if j == 1:
            return m + k + 1 + i if i <= k else m + i - k
        if j == 2:
            return m - 2 * k - 2 * i if i <= k else m - 2 * k - 1 - 2 * (i - k - 1)
        w = (n - (j + 1) // 2) * (8 * k + 4)
        if j % 2 == 1:
            return w + 9 * k + 5 + i if i <= k else w + 7 * k + 4 + i
        return w + 5 * k + 3 - i if i <= k else w + 7 * k + 4 - i
    # vx rows
    if j == 1:
        return 3 * k + 1 + i if i <= k + 1 else k + i
    if j == 2:
        return 8 * k + 6 - 2 * i if i <= k + 1 else 8 * k + 3 - 2 * (i - k - 2)
    t = ((j + 1) // 2) * (8 * k + 4)
    if j % 2 == 1:
        return t - 5 * k - 3 + i if i <= k + 1 else t - 7 * k - 4 + i
    return t - k + 1 - i if i <= k + 1 else t + k + 2 - i


def _cell_m3(n: int, k: int, role: RowRole, i: int) -> int:
    kind, j = role
    if kind == "uv":
        return i
    if kind == "ux":
        if j == 2 * n + 1:
            return (n + 1) * (4 * k + 2) + 2 * k + 2 - i
        w = (2 * n - (j + 1) // 2) * (4 * k + 2)
        if j % 2 == 1:
            return w + 10 * k + 6 - i
        return w + 6 * k + 3 + i
    # vx rows
    if j == 1:
        return 4 * k + 3 - i
    t = (j // 2 - 1) * (4 * k + 2)
    if j % 2 == 0:
        return t + 4 * k + 2 + i
    return t + 8 * k + 5 - i


def matrix_cell(params: FamilyParams, role: RowRole, i: int) -> int:
    if not 1 <= i <= params.copies:
        raise ParamError(f"column {i} outside [1, {params.copies}]")
    if params.family is Family.M2:
        return _cell_m2(params.n, params.k, role, i)
    return _cell_m3(params.n, params.k, role, i)


def build_matrix(params: FamilyParams) -> LabelMatrix:
    rows = tuple(row_order(params))
    cell = {
        (role, i): matrix_cell(params, role, i)
        for role in rows
        for i in range(1, params.copies + 1)
    }
    values = sorted(cell.values())
    if values != list(range(1, params.q + 1)):
        raise AssertionError(
            f"matrix cells are not a bijection onto [1, {params.q}] "
            f"for {params}"
        )
    return LabelMatrix(params=params, rows=rows, cell=cell)


def matrix_column_sums(mat: LabelMatrix) -> Tuple[int, int]:
    """(u-block column sum, v-block column sum); constant across columns."""
    p = mat.params
    u_sums = set()
    v_sums = set()
    for i in range(1, p.copies + 1):
        u = sum(
            mat.cell[(role, i)] for role in mat.rows if role[0] in ("ux", "uv")
        )
        v = sum(
            mat.cell[(role, i)] for role in mat.rows if role[0] in ("vx", "uv")
        )
        u_sums.add(u)
        v_sums.add(v)
    if len(u_sums) != 1 or len(v_sums) != 1:
        raise AssertionError(f"column sums not constant for {p}")
    return u_sums.pop(), v_sums.pop()
