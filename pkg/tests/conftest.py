import pytest


def pytest_addoption(parser):
    parser.addoption("--large", action="store_true", default=False,
                     help="also run the S_6 Schubert and S_5 Grothendieck sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "large: only runs with --large")
    config.addinivalue_line("markers", "criterion(key, text): acceptance criterion this test covers")
    config._acceptance = {}


def pytest_collection_modifyitems(config, items):
    if config.getoption("--large"):
        return
    skip = pytest.mark.skip(reason="needs --large")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.failed:
        state = "FAIL"
    elif rep.skipped:
        state = "SKIP"
    elif rep.when == "call":
        state = "PASS"
    else:
        return
    key, text = mark.args
    table = item.config._acceptance
    prev = table.get(key, ("SKIP", text))[0]
    # several tests can share a criterion: any failure sticks, a pass beats a skip
    rank = {"SKIP": 0, "PASS": 1, "FAIL": 2}
    if rank[state] >= rank[prev]:
        table[key] = (state, text)


def pytest_terminal_summary(terminalreporter, config):
    table = getattr(config, "_acceptance", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(table):
        state, text = table[key]
        terminalreporter.write_line(f"{state:4}  {key}. {text}")
