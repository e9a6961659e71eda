import pytest

from bergman_hyper.corpus import polynomial_corpus, zero_free_corpus


@pytest.fixture(scope="session")
def poly_corpus():
    return polynomial_corpus()


@pytest.fixture(scope="session")
def zf_corpus():
    return zero_free_corpus()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
