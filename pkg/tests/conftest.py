import pytest

from obstructor.catalog import Catalog, baum_browder_adjoint


@pytest.fixture(scope="session")
def catalog():
    return Catalog.load()


@pytest.fixture(scope="session")
def psu3():
    """Mod-3 presentation of PSU(3): Λ(x1, x3) ⊗ Z_3[y]/(y^3)."""
    return baum_browder_adjoint(3, 3)


@pytest.fixture(scope="session")
def psu4_mod2():
    """Mod-2 presentation of PSU(4): Λ(x1, x3, x5) ⊗ Z_2[y]/(y^4)."""
    return baum_browder_adjoint(4, 2)
