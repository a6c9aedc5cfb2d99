from pathlib import Path

import pytest

from localantimagic import (
    Family,
    FamilyParams,
    ParamError,
    build_matrix,
    matrix_column_sums,
)
from localantimagic.formulas import center_constant
from localantimagic.io import matrix_to_csv

GOLDEN = Path(__file__).parent / "golden"


def golden_rows(name):
    text = (GOLDEN / name).read_text()
    return [[int(v) for v in line.split(",")] for line in text.splitlines()]


def test_m2_example_matches_golden_table():
    mat = build_matrix(FamilyParams(Family.M2, 2, 4))
    rows = [mat.row_values(role) for role in mat.rows]
    assert rows == golden_rows("m2_n2_k4.csv")


def test_m3_example_matches_golden_table():
    mat = build_matrix(FamilyParams(Family.M3, 2, 4))
    rows = [mat.row_values(role) for role in mat.rows]
    assert rows == golden_rows("m3_n2_k4.csv")


def test_csv_export_byte_matches_golden():
    for fam, name in ((Family.M2, "m2_n2_k4.csv"), (Family.M3, "m3_n2_k4.csv")):
        mat = build_matrix(FamilyParams(fam, 2, 4))
        assert matrix_to_csv(mat) == (GOLDEN / name).read_text()


def test_spot_cells():
    m2 = build_matrix(FamilyParams(Family.M2, 2, 4))
    assert m2.cell[(("ux", 1), 1)] == 78
    assert m2.cell[(("ux", 4), 5)] == 27
    assert m2.cell[(("vx", 4), 6)] == 72
    m3 = build_matrix(FamilyParams(Family.M3, 2, 4))
    assert m3.cell[(("ux", 1), 1)] == 99
    assert m3.cell[(("ux", 5), 9)] == 55
    assert m3.cell[(("vx", 5), 5)] == 50


@pytest.mark.parametrize("family", [Family.M2, Family.M3])
@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_bijection_on_grid(family, n, k):
    # build_matrix raises if the cells are not a bijection onto [1, q]
    mat = build_matrix(FamilyParams(family, n, k))
    assert sorted(mat.cell.values()) == list(range(1, mat.params.q + 1))


def test_m2_n1_k1_is_5x3_bijection():
    mat = build_matrix(FamilyParams(Family.M2, 1, 1))
    assert len(mat.rows) == 5
    assert sorted(mat.cell.values()) == list(range(1, 16))


def test_column_sums_examples():
    assert matrix_column_sums(build_matrix(FamilyParams(Family.M2, 2, 4))) == (205, 169)
    assert matrix_column_sums(build_matrix(FamilyParams(Family.M3, 2, 4))) == (390, 165)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_m2_column_sums_match_closed_forms(n, k):
    u, v = matrix_column_sums(build_matrix(FamilyParams(Family.M2, n, k)))
    assert u == 8 * k * n * n + 6 * k * n + 4 * n * n + k + 4 * n + 1
    assert v == 8 * k * n * n + 2 * k * n + 4 * n * n + k + 2 * n + 1


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_m3_column_sums_match_closed_forms(n, k):
    u, v = matrix_column_sums(build_matrix(FamilyParams(Family.M3, n, k)))
    assert u == (n + 1) * (3 * n + 1) * (4 * k + 2) + n + 2 * k + 2
    assert v == (n + 1) ** 2 * (4 * k + 2) + n + 1


@pytest.mark.parametrize("family", [Family.M2, Family.M3])
@pytest.mark.parametrize("n,k", [(1, 1), (2, 4), (3, 2), (5, 5)])
def test_crossing_pair_constant(family, n, k):
    """Opposite-column u/v cell pairs all hit the per-family constant."""
    params = FamilyParams(family, n, k)
    mat = build_matrix(params)
    const = center_constant(params)
    for j in range(1, params.leaves_per_copy + 1):
        for i in range(1, k + 1):
            ii = 2 * k + 2 - i
            assert mat.cell[(("ux", j), i)] + mat.cell[(("vx", j), ii)] == const
            assert mat.cell[(("vx", j), i)] + mat.cell[(("ux", j), ii)] == const
        assert (
            mat.cell[(("ux", j), k + 1)] + mat.cell[(("vx", j), k + 1)] == const
        )


@pytest.mark.parametrize("family", [Family.M2, Family.M3])
@pytest.mark.parametrize("n,r,s", [(1, 1, 1), (2, 1, 2), (3, 2, 1), (2, 2, 2)])
def test_merge_block_sums(family, n, r, s):
    """Consecutive (2s+1)-blocks of crossing pairs sum to (2s+1) x const."""
    k = ((2 * r + 1) * (2 * s + 1) - 1) // 2
    params = FamilyParams(family, n, k, (r, s))
    mat = build_matrix(params)
    const = center_constant(params)
    block = 2 * s + 1
    for j in range(1, params.leaves_per_copy + 1):
        for a in range(1, r + 1):
            lo = (a - 1) * block
            total_y = sum(
                mat.cell[(("ux", j), lo + b)] + mat.cell[(("vx", j), 2 * k + 2 - lo - b)]
                for b in range(1, block + 1)
            )
            total_z = sum(
                mat.cell[(("vx", j), lo + b)] + mat.cell[(("ux", j), 2 * k + 2 - lo - b)]
                for b in range(1, block + 1)
            )
            assert total_y == total_z == block * const
        total_mid = sum(
            mat.cell[(("ux", j), r * block + b)]
            + mat.cell[(("vx", j), 2 * k + 2 - r * block - b)]
            for b in range(1, block + 1)
        )
        assert total_mid == block * const


def test_param_validation():
    with pytest.raises(ParamError):
        FamilyParams(Family.M2, 0, 1)
    with pytest.raises(ParamError):
        FamilyParams(Family.M2, 1, 0)
    with pytest.raises(ParamError):
        FamilyParams(Family.M2, 2, 3, (1, 1))  # 9 != 7
    with pytest.raises(ParamError):
        FamilyParams(Family.M2, 2, 4, (0, 4))


def test_uv_row_is_identity():
    for fam in (Family.M2, Family.M3):
        mat = build_matrix(FamilyParams(fam, 3, 5))
        assert mat.row_values(("uv", 0)) == list(range(1, 12))
