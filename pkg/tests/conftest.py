import hypothesis
import pytest

from klschubert.checks import CheckResult, RunConfig, run_checks

hypothesis.settings.register_profile(
    "ci", max_examples=40, deadline=None, derandomize=True)
hypothesis.settings.load_profile("ci")


_CACHE: dict[tuple, list[CheckResult]] = {}


def run_checks_cached(selector: str, rank: int, seed: int = 0,
                      fast: bool = False,
                      J: tuple[int, ...] | None = None) -> list[CheckResult]:
    """Shared check runner so acceptance and CLI tests reuse heavy results."""
    key = (selector, rank, seed, fast, J)
    if key not in _CACHE:
        _CACHE[key] = run_checks(RunConfig(
            rank=rank, J=J, selector=selector, fast=fast, seed=seed))
    return _CACHE[key]


@pytest.fixture(scope="session")
def checks_runner():
    return run_checks_cached
