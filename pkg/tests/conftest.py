import itertools

import pytest

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def brute_seatings(distances):
    """Every valid position tuple, by checking all m^n tuples directly."""
    n = len(distances)
    m = 2 * n + 1
    out = []
    for xs in itertools.product(range(m), repeat=n):
        seats = {x for x in xs} | {(x + d) % m for x, d in zip(xs, distances)}
        if len(seats) == 2 * n:
            out.append(xs)
    return out


def direct_king_value(xs, distances, p):
    """Product of pairwise differences of the 2n occupied seats, mod p."""
    n = len(xs)
    acc = 1
    for i in range(n):
        for j in range(i + 1, n):
            xi, xj, di, dj = xs[i], xs[j], distances[i], distances[j]
            acc *= (xi - xj) * (xi + di - xj) * (xi - xj - dj) * (xi + di - xj - dj)
    return acc % p


def all_distance_vectors(n):
    return list(itertools.product(range(1, n + 1), repeat=n))


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the terminal summary."""
    records = []

    def register(label):
        records.append(label)

    yield register
    rep = getattr(request.node, "rep_call", None)
    outcome = "PASS" if rep is not None and rep.passed else "FAIL"
    for label in records:
        _ACCEPTANCE[label] = (outcome, request.node.nodeid)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        outcome, _ = _ACCEPTANCE[label]
        terminalreporter.write_line(f"{outcome}  {label}")
