import random

import pytest

from fewdist.core import Code, DistanceSet, Word, hamming_distance


def random_valid_code(rng: random.Random, n: int, D: DistanceSet, target: int) -> Code:
    """Greedy code over a shuffled word space; every pairwise distance lies in D."""
    if n <= 14:
        pool = list(range(1 << n))
        rng.shuffle(pool)
    else:
        pool = [rng.getrandbits(n) for _ in range(4000)]
    words: list[Word] = []
    for bits in pool:
        if len(words) >= target:
            break
        w = Word(n, bits)
        if w not in words and all(hamming_distance(w, u) in D for u in words):
            words.append(w)
    return Code(n, frozenset(words))


@pytest.fixture
def rng():
    return random.Random(20240611)


_ACCEPTANCE: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, label): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, label = marker.args
        callspec = getattr(item, "callspec", None)
        if callspec is not None:
            label = f"{label} [{callspec.id}]"
        _ACCEPTANCE.append((number, label, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {number}: {label}")
