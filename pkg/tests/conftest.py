import pytest

from hgoldman import GroupSpec, kernel_data

SYMPL2 = GroupSpec(2, (), ((0, 1), (-1, 0)))
DEG3 = GroupSpec(3, (), ((0, 1, 0), (-1, 0, 0), (0, 0, 0)))
TORS = GroupSpec(2, (2,), ((0, 1), (-1, 0)))
# kernel spanned by (3,-1,2): not aligned with a coordinate axis
SKEW3 = GroupSpec(3, (), ((0, 2, 1), (-2, 0, 3), (-1, -3, 0)))
# kernel rank 2 with torsion: exercised through the truncated backend
WIDE = GroupSpec(4, (3,), ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))
ZERO_FORM = GroupSpec(0, (2,), ())
TRIVIAL = GroupSpec(0)

ALL_SPECS = {"sympl2": SYMPL2, "deg3": DEG3, "tors": TORS, "skew3": SKEW3}


@pytest.fixture(params=sorted(ALL_SPECS))
def any_spec(request):
    spec = ALL_SPECS[request.param]
    return spec, kernel_data(spec)


@pytest.fixture
def sympl2():
    return SYMPL2, kernel_data(SYMPL2)


@pytest.fixture
def deg3():
    return DEG3, kernel_data(DEG3)


@pytest.fixture
def tors():
    return TORS, kernel_data(TORS)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
