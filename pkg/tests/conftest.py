import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when != "call" and not (report.failed or report.skipped):
        return
    number, title = props["criterion"]
    entry = _CRITERIA.setdefault(number, {"title": title, "outcomes": []})
    if hasattr(report, "wasxfail"):
        entry["outcomes"].append("xfail" if report.skipped else "xpass")
    else:
        entry["outcomes"].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        outs = e["outcomes"]
        ok = bool(outs) and all(o == "passed" for o in outs)
        note = ""
        if "xfail" in outs:
            note = " (a documented unattainable part is reported as an expected failure)"
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {e['title']}{note}")
