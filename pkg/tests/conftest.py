import pytest

from elusivecodes.autgroup import full_group_generators, generate_group


@pytest.fixture(scope="session")
def full33():
    """All 1296 automorphisms of H(3,3)."""
    return generate_group(full_group_generators(3, 3))


@pytest.fixture(scope="session")
def full43():
    """All 31104 automorphisms of H(4,3)."""
    return generate_group(full_group_generators(4, 3))
