import pytest

from insdel_rs.constructions import construct_k2, k2_construction
from insdel_rs.finite_field import RingPoly, make_extension_field, make_prime_field


@pytest.fixture(scope="session")
def f7():
    return make_prime_field(7)


@pytest.fixture(scope="session")
def f9():
    return make_extension_field(3, RingPoly(3, [1, 0, 1]))


@pytest.fixture(scope="session")
def k2_m2():
    return construct_k2(2)


@pytest.fixture(scope="session")
def k2_m3():
    return construct_k2(3)


@pytest.fixture(scope="session")
def k2_m2_bundle():
    return k2_construction(2)



_ACCEPTANCE = []


@pytest.fixture
def record():
    """Log one acceptance line; the test asserts afterwards."""

    def _record(name, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
