import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rootcat.errors import FieldError
from rootcat.linalg import QQ, PrimeField, batched_rank, gaussian_binomial, is_prime, make_field, subspaces

from _oracles import _rank_mod


def int_matrices(q, max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c))))


def image_size(m, q):
    cols = m.shape[1]
    return len({tuple((m @ np.array(c)) % q) for c in itertools.product(range(q), repeat=cols)})


@pytest.mark.parametrize("q", [2, 3, 5])
def test_rank_matches_image_count(q):
    rng = np.random.default_rng(q)
    f = PrimeField(q)
    for _ in range(30):
        m = rng.integers(0, q, size=(3, 3))
        assert q ** f.rank(m) == image_size(m, q)


@settings(max_examples=60, deadline=None)
@given(int_matrices(3))
def test_nullspace_and_rank_nullity(m):
    f = PrimeField(3)
    N = f.nullspace(m)
    assert N.shape[1] == m.shape[1] - f.rank(m)
    assert not np.any(f.matmul(m, N)) if N.size else True
    assert f.rank(m) == f.rank(m.T) == _rank_mod(m, 3)


@settings(max_examples=60, deadline=None)
@given(int_matrices(5), st.data())
def test_solve_roundtrip(m, data):
    f = PrimeField(5)
    x = np.array(data.draw(st.lists(st.integers(0, 4), min_size=m.shape[1], max_size=m.shape[1])))
    b = f.matmul(m, x.reshape(-1, 1))[:, 0]
    sol = f.solve(m, b)
    assert sol is not None
    assert np.array_equal(f.matmul(m, np.asarray(sol).reshape(-1, 1))[:, 0], b)


def test_solve_reports_inconsistent_system():
    f = PrimeField(3)
    assert f.solve(np.array([[1, 0], [1, 0]]), np.array([0, 1])) is None


def test_inverse_over_rationals():
    a = QQ.asarray(np.array([[2, 1], [1, 1]], dtype=object))
    inv = QQ.inverse(a)
    assert (QQ.matmul(a, inv) == QQ.eye(2)).all()
    assert inv[0, 0] == Fraction(1)


@pytest.mark.parametrize("n,k,q", [(3, 1, 2), (4, 2, 2), (3, 2, 3), (2, 1, 5)])
def test_subspace_enumeration_counts(n, k, q):
    subs = list(subspaces(n, k, PrimeField(q)))
    assert len(subs) == gaussian_binomial(n, k, q)
    keys = {tuple(map(tuple, s.T)) for s in subs}
    assert len(keys) == len(subs)


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(2, 1, 3) == 4


@settings(max_examples=40, deadline=None)
@given(st.lists(int_matrices(3, 3, 3), min_size=1, max_size=6))
def test_batched_rank_matches_single(mats):
    shape = mats[0].shape
    mats = [m for m in mats if m.shape == shape]
    f = PrimeField(3)
    assert batched_rank(np.stack(mats), 3).tolist() == [f.rank(m) for m in mats]


def test_field_validation():
    assert is_prime(13) and not is_prime(1) and not is_prime(9)
    with pytest.raises(FieldError):
        PrimeField(4)
    with pytest.raises(FieldError):
        PrimeField(17)
    assert make_field(3) == PrimeField(3)
