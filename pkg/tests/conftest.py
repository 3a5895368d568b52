import pytest
from hypothesis import settings

from walkhopf import Digraph
from walkhopf.generate import GenConfig, gen_walks

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def sample_walks():
    return gen_walks(GenConfig(vertices=4, min_len=0, max_len=10, count=150, seed=2024))


@pytest.fixture
def k3():
    return Digraph.complete(3, self_loops=False)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        status, title, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}  ({detail})")
