import pytest

from normbase import FieldSpec


@pytest.fixture(scope="session")
def f16():
    # GF(2^16) mod x^16+x^5+x^3+x^2+1, the field of the golden construction run
    return FieldSpec(16, 0x1002D)


@pytest.fixture(scope="session")
def f12():
    return FieldSpec.from_degree(12)
