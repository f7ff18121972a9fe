import pytest

import bckcodes as bc
import reference_data as rd


@pytest.fixture(scope="session")
def alg4_commutative() -> bc.CayleyAlgebra:
    return bc.CayleyAlgebra(rd.ALG4_COMMUTATIVE)


@pytest.fixture(scope="session")
def alg4_from_code() -> bc.CayleyAlgebra:
    return bc.CayleyAlgebra(rd.ALG4_FROM_CODE)


@pytest.fixture(scope="session")
def code4() -> bc.BlockCode:
    return bc.BlockCode.from_strings(rd.CODE4)
