import pytest

from matflat.catalog import sp_catalog
from matflat.geometry import build_ag, build_blokhuis, build_pg, build_pg_plus_free_point
from matflat.matroid import UniformMatroid, contract, delete

ACCEPTANCE_RESULTS = []


def small_instances():
    """Instances with at most 12 elements, including non-simple minors."""
    return {
        "PG(1,2)": build_pg(2, 2),
        "PG(2,2)": build_pg(3, 2),
        "PG(1,3)": build_pg(2, 3),
        "AG(2,2)": build_ag(3, 2),
        "AG(3,2)": build_ag(4, 2),
        "AG(2,3)": build_ag(3, 3),
        "M(3)": build_blokhuis(3),
        "PG(2,2)+e": build_pg_plus_free_point(2),
        "U(2,6)": UniformMatroid(2, 6),
        "U(3,5)": UniformMatroid(3, 5),
        "U(0,3)": UniformMatroid(0, 3),
        "PG(2,2)/0": contract(build_pg(3, 2), 1),
        "AG(3,2)/0\\7": delete(contract(build_ag(4, 2), 1), 1 << 7),
        "PG(3,2)\\0..2": delete(build_pg(4, 2), 0b111),
        "PG(2,3)\\0": delete(build_pg(3, 3), 1),
        "M(3)/4": contract(build_blokhuis(3), 1 << 4),
        "U(3,6)/0,1": contract(UniformMatroid(3, 6), 0b11),
        "PG(2,2)/0,1": contract(build_pg(3, 2), 0b11),
    }


@pytest.fixture(scope="session")
def small():
    return small_instances()


@pytest.fixture(scope="session")
def catalog():
    return {name: build() for name, build in sp_catalog().items()}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
