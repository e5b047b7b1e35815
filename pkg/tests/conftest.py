"""Shared strategies and brute-force oracles.

Oracles work on raw 0/1 sequences with the defining sums, independent of the
set arithmetic and kernels used by the package.
"""

from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ooctools import Codeword, OocFamily

settings.register_profile(
    "pinned",
    max_examples=1000,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("OOCTOOLS_HYPOTHESIS_PROFILE", "pinned"))


def seq(c: Codeword) -> list[int]:
    return [int(b) for b in c.bits]


def oracle_auto(c: Codeword) -> list[int]:
    x, v = seq(c), c.v
    return [sum(x[t] * x[(t + d) % v] for t in range(v)) for d in range(1, v)]


def oracle_cross(a: Codeword, b: Codeword) -> list[int]:
    # |Q_a ∩ (Q_b + d)| as a correlation sum
    x, y, v = seq(a), seq(b), a.v
    return [sum(x[t] * y[(t - d) % v] for t in range(v)) for d in range(v)]


def oracle_lambdas(f: OocFamily) -> tuple[int, int]:
    la = max((max(oracle_auto(c), default=0) for c in f), default=0)
    lc = 0
    for i in range(f.n):
        for j in range(i + 1, f.n):
            lc = max(lc, max(oracle_cross(f[i], f[j])))
    return la, lc


@st.composite
def codewords(draw, v=None, w=None, max_v=30):
    v = v if v is not None else draw(st.integers(2, max_v))
    w = w if w is not None else draw(st.integers(1, v))
    support = draw(st.lists(st.integers(0, v - 1), min_size=w, max_size=w, unique=True))
    return Codeword.of(v, support)


@st.composite
def families(draw, max_v=30, max_n=4, min_w=1):
    v = draw(st.integers(max(2, min_w), max_v))
    w = draw(st.integers(min_w, v))
    n = draw(st.integers(1, max_n))
    return OocFamily(v, tuple(draw(codewords(v=v, w=w)) for _ in range(n)))


@st.composite
def codeword_pairs(draw, max_v=30):
    v = draw(st.integers(2, max_v))
    w1 = draw(st.integers(1, v))
    w2 = draw(st.integers(1, v))
    return draw(codewords(v=v, w=w1)), draw(codewords(v=v, w=w2))


Z13 = OocFamily.of(13, [[0, 1, 4], [0, 2, 7]])
Z15 = OocFamily.of(15, [[0, 1, 4], [0, 7, 9]])
Z11 = OocFamily.from_bits(["11100010010", "00011101001"])


@pytest.fixture
def z13():
    return Z13


@pytest.fixture
def z15():
    return Z15


@pytest.fixture
def z11():
    return Z11


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
