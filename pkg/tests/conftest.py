import pytest

from localantimagic import Family, FamilyParams, build_family


@pytest.fixture(scope="session")
def g45():
    """G_4(5): crossed family from the 9x9 example matrix."""
    return build_family(FamilyParams(Family.M2, 2, 4), "crossed")


@pytest.fixture(scope="session")
def g55():
    """G_5(5): crossed family from the 11x9 example matrix."""
    return build_family(FamilyParams(Family.M3, 2, 4), "crossed")


@pytest.fixture(scope="session")
def g433():
    """G_4(3,3): merged family, r = s = 1."""
    return build_family(FamilyParams(Family.M2, 2, 4, (1, 1)), "merged")


@pytest.fixture(scope="session")
def g533():
    """G_5(3,3): merged 6-regular family, r = s = 1."""
    return build_family(FamilyParams(Family.M3, 2, 4, (1, 1)), "merged")
