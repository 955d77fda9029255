from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

import pytest

# acceptance criteria: number -> (description, passed)
ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    def start(number, description):
        ACCEPTANCE[number] = (description, False)
        request.node.user_properties.append(("criterion", number))
    yield start
    for key, number in request.node.user_properties:
        if key == "criterion" and request.node.rep_call_passed:
            ACCEPTANCE[number] = (ACCEPTANCE[number][0], True)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
