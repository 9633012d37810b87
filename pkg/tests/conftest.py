import numpy as np
import pytest

from fourier2design.eigenbasis import common_eigenbasis


@pytest.fixture(scope="session")
def basis():
    cache = {}

    def get(d):
        if d not in cache:
            cache[d] = common_eigenbasis(d)
        return cache[d]
    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_trace_one(rng, d, hermitian=True):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    if hermitian:
        a = a @ a.conj().T
    return a / np.trace(a)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
