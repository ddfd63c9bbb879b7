import pytest

from outfn_euler import _pykernels

try:
    from outfn_euler import _kernels
except ImportError:
    _kernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _kernels is not None:
    BACKENDS.append(pytest.param(_kernels, id="cython"))


@pytest.fixture(params=BACKENDS, scope="module")
def backend(request):
    return request.param


CRITERIA: dict = {}


def pytest_runtest_makereport(item, call):
    number = getattr(item.function, "criterion", None)
    if number is not None and call.when == "call":
        CRITERIA[number] = (item.function.__doc__.strip().splitlines()[0], call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, ok = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
