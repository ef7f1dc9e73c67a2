import pytest

# The worked example sentence, with its start, end and bracket columns.
EXAMPLE_ROWS = """\
Coach S X (S*
them X X *
in X X *
handling S X (S*
complaints X E *S)
so S X (S*
that X X *
they S X (S*
can X X *
resolve X X *
problems X X *
immediately X E *S)S)
. X E *S)
"""
EXAMPLE_TREE = (
    "(S Coach them in (S--NOM handling complaints) "
    "(SBAR--PRP so that (S they can resolve problems immediately)) .)"
)
EXAMPLE_SPANS = [(0, 12), (3, 4), (5, 11), (7, 11)]
# hand-assigned tags, used where a POS column is needed
EXAMPLE_POS = "VB PRP IN VBG NNS IN IN PRP MD VB NNS RB .".split()


def example_column(k):
    return [line.split()[k] for line in EXAMPLE_ROWS.splitlines()]


@pytest.fixture
def example_words():
    return example_column(0)


@pytest.fixture
def example_starts():
    return example_column(1)


@pytest.fixture
def example_ends():
    return example_column(2)


@pytest.fixture
def example_brackets():
    return example_column(3)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    results = item.config._criteria
    n, title = marker.args
    entry = results.setdefault(n, [title, "PASS"])
    if call.when == "call" and call.excinfo is not None:
        if call.excinfo.errisinstance(pytest.skip.Exception):
            if entry[1] == "PASS":
                entry[1] = "SKIP"
        else:
            entry[1] = "FAIL"
    elif call.when == "setup" and call.excinfo is not None:
        if call.excinfo.errisinstance(pytest.skip.Exception):
            entry[1] = "SKIP"
        else:
            entry[1] = "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        title, status = results[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
