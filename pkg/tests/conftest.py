import pytest

import leibcohom as L
from leibcohom.linalg import QQ, Matrix


def trivial_setup(algebra, coefficients="constant"):
    """Equivariant setup for the trivial group acting trivially."""
    group = L.FiniteGroup.trivial()
    action = L.GroupAction(group, algebra,
                           [Matrix.identity(algebra.field, algebra.dim)])
    category = L.orbit_category(group)
    if coefficients == "constant":
        cs = L.constant_coefficients(category, algebra.field)
    else:
        cs = L.coset_function_coefficients(category, algebra.field)
    return L.EquivariantSetup(action, category, cs)


def catalog_setup(name, coefficients="constant"):
    entry = L.catalog(name)
    assert entry.action is not None
    category = L.orbit_category(entry.action.group)
    field = entry.algebra.field
    if coefficients == "constant":
        cs = L.constant_coefficients(category, field)
    else:
        cs = L.coset_function_coefficients(category, field)
    return L.EquivariantSetup(entry.action, category, cs)


@pytest.fixture(scope="session")
def lambda6():
    return L.catalog("lambda6").algebra


@pytest.fixture(scope="session")
def lambda6_z2_setup():
    return catalog_setup("lambda6_z2")


@pytest.fixture(scope="session")
def derived2_setup():
    return catalog_setup("derived2_f2_z2")
