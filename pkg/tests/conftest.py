import itertools

import numpy as np
import pytest

from rootcat.linalg import PrimeField
from rootcat.quiver import load_bundled
from rootcat.rep_lab import enumerate_indecomposables
from rootcat.representation import canonical_modules


def small_modules(name, q, max_total=4, bound=None):
    """Canonical modules plus small indecomposables, all of total dimension <= max_total."""
    A = load_bundled(name)
    field = PrimeField(q)
    mods = []
    for group in canonical_modules(A, field):
        mods.extend(group)
    if bound is not None:
        mods.extend(enumerate_indecomposables(A, bound, q).modules)
    out, seen = [], set()
    for m in mods:
        key = (m.dims, tuple(x.tobytes() for x in m.maps))
        if m.total_dim <= max_total and key not in seen:
            seen.add(key)
            out.append(m)
    return A, out


@pytest.fixture(scope="session")
def f3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def f2():
    return PrimeField(2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}  [{detail}]")
