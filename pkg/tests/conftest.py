import numpy as np
import pytest
from hypothesis import strategies as st

from majorana_codes import MajoranaCode, hamming_majorana
from majorana_codes.f2core import MajoranaOperator, apply_replacement_bits
from majorana_codes.search import initial_stored_list, replacement_masks


@pytest.fixture(scope="session")
def hamming3():
    return hamming_majorana(3)


@pytest.fixture(scope="session")
def hamming4():
    return hamming_majorana(4)


@pytest.fixture(scope="session")
def hamming5():
    return hamming_majorana(5)


def initial_code(nmaj, nstab):
    return MajoranaCode(nmaj, tuple(initial_stored_list(nmaj, nstab)))


def scrambled_code(nmaj, nstab, mask_indices):
    """Start from the initial stored list and apply the given replacement masks."""
    masks = replacement_masks(nmaj)
    rows = [g.bits for g in initial_stored_list(nmaj, nstab)]
    for idx in mask_indices:
        m = int(masks[idx % len(masks)])
        rows = [apply_replacement_bits(r, m) for r in rows]
    return MajoranaCode.from_bits(nmaj, rows)


def random_code(rng, nmaj, nstab, steps=200):
    return scrambled_code(nmaj, nstab, rng.integers(0, 1 << 30, size=steps))


@st.composite
def valid_codes(draw, min_nmaj=6, max_nmaj=14):
    nmaj = draw(st.integers(min_nmaj // 2, max_nmaj // 2)) * 2
    nstab = draw(st.integers(2, nmaj // 2))
    steps = draw(st.lists(st.integers(0, 1 << 30), min_size=0, max_size=60))
    return scrambled_code(nmaj, nstab, steps)


def even_operators(nmaj):
    return st.integers(0, (1 << nmaj) - 1).map(
        lambda b: MajoranaOperator(nmaj, b if b.bit_count() % 2 == 0 else b ^ 1)
    )


def operators(nmaj):
    return st.integers(0, (1 << nmaj) - 1).map(lambda b: MajoranaOperator(nmaj, b))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or not item.module.__name__.endswith("test_acceptance"):
        return
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    status = "PASS" if report.passed else "FAIL"
    details = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    line = f"{status}  {title}"
    if details:
        line += f"  [{details}]"
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
