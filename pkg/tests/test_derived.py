import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rootcat.complexes import (
    ChainMap,
    HomComplex,
    ProjComplex,
    cone,
    direct_sum_complex,
    fold,
    identity_map,
    module_complex,
    normalize,
    realize,
    shift,
    stalk,
)
from rootcat.derived import (
    as_projective,
    derived_hom_dim,
    derived_hom_dims,
    end_ring,
    is_quasi_iso,
    orbit_hom_dim,
    orbit_hom_dim_folded,
    periodic_end_is_local,
    shifted,
)
from rootcat.errors import MismatchError
from rootcat.linalg import PrimeField
from rootcat.quiver import load_bundled
from rootcat.rep_lab import ext_dim
from rootcat.representation import projective, simple
from rootcat.verify import Ex33, check_ex33

import _oracles as orc
from conftest import small_modules


@pytest.mark.parametrize("name", ["ex32", "ex33", "ex53-m1n2"])
def test_derived_hom_of_modules_is_ext(name):
    A, mods = small_modules(name, 2, 4)
    for X in mods:
        for Y in mods:
            dims = derived_hom_dims(X, Y)
            for n in range(0, 3):
                assert dims.get(n, 0) == ext_dim(X, Y, n)
            assert all(v == 0 for k, v in dims.items() if k < 0)


@pytest.mark.parametrize("name", ["ex33", "a2"])
def test_low_degree_derived_homs_match_brute(name):
    A, mods = small_modules(name, 2, 4)
    for X in mods:
        for Y in mods:
            assert derived_hom_dim(X, Y, 0) == orc.hom_dim(X, Y, 2)
            assert derived_hom_dim(X, Y, 1) == orc.ext1_dim(X, Y, 2)


@pytest.mark.parametrize("name,q", [("ex32", 3), ("ex33", 3), ("ex53-m1n2", 5), ("dynkin/a3", 3)])
def test_orbit_hom_two_routes_agree(name, q):
    A, mods = small_modules(name, q, 6)
    for X in mods:
        for Y in mods:
            a = orbit_hom_dim(X, Y)
            assert a == orbit_hom_dim_folded(X, Y)
            assert a == orbit_hom_dim(shifted(X, 1), shifted(Y, 1))
            assert a == orbit_hom_dim(X, shifted(Y, 2))


def test_cone_of_identity_is_contractible(f3):
    A = load_bundled("ex32")
    X = as_projective(simple(A, f3, 0))
    c = cone(identity_map(X))
    assert realize(c).is_acyclic()
    assert normalize(c).is_zero()
    assert is_quasi_iso(identity_map(X))


def test_normalize_keeps_homology(f3):
    A = load_bundled("ex53-m1n2")
    X = as_projective(simple(A, f3, 0))
    Y = direct_sum_complex(X, cone(identity_map(X)))
    Z = normalize(Y)
    assert Z.rank() == X.rank()
    for k in range(-4, 2):
        assert realize(Z).homology_dims(k).tolist() == realize(X).homology_dims(k).tolist()


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["ex32", "ex33", "ex53-m1n2"]), st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3))
def test_hom_complex_differential_squares_to_zero(name, v, w, n):
    A = load_bundled(name)
    f = PrimeField(3)
    X = as_projective(simple(A, f, v % A.n))
    Y = as_projective(simple(A, f, w % A.n))
    hc = HomComplex(X, Y)
    D0, D1 = hc.differential(n), hc.differential(n + 1)
    if D0.size and D1.size:
        assert not np.any(f.matmul(D1, D0))


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["ex32", "ex53-m1n2"]), st.integers(0, 3), st.integers(0, 3))
def test_cocycles_are_chain_maps(name, v, w):
    A = load_bundled(name)
    f = PrimeField(3)
    X = as_projective(simple(A, f, v % A.n))
    Y = as_projective(simple(A, f, w % A.n))
    hc = HomComplex(X, Y)
    for n in hc.degree_range():
        for phi in hc.cocycle_maps(n):
            assert phi.is_chain_map()
            assert np.array_equal(hc.reduce(n, hc.from_chain_map(phi)).shape, (hc.h_dim(n),))


def test_shift_conventions(f3):
    A = load_bundled("ex33")
    X = as_projective(simple(A, f3, 0))
    assert np.array_equal(shift(X, 1).class_vector(), -X.class_vector())
    P = fold(X)
    assert shift(shift(P, 1), 1).term(0) == P.term(0)
    assert orbit_hom_dim(X, X) == orbit_hom_dim(shifted(X, 2), X)


def test_end_rings_of_projectives(f3):
    A = load_bundled("ex33")
    for v in range(A.n):
        ring, _ = end_ring(stalk(A, f3, [v]))
        assert ring.dim == len(A.paths_between(v, v))
        assert ring.is_local()
    ring, _ = end_ring(stalk(A, f3, [0, 1]))
    assert not ring.is_local()


def test_periodic_and_bounded_mix_rejected(f3):
    A = load_bundled("a2")
    with pytest.raises(MismatchError):
        HomComplex(fold(stalk(A, f3, [0])), stalk(A, f3, [0]))


def test_two_vertex_cycle_complexes(f3):
    ex = Ex33(3)
    E, P, phi = ex.periodic()
    assert phi.is_chain_map()
    assert is_quasi_iso(phi)
    assert periodic_end_is_local(P)
    report = check_ex33(5)
    assert report["ok"] and report["cone_f_plus_g_matches_E"]
    # the window cone has homology only at its two ends
    Ew, Pw, phiw = ex.window(6)
    homs = realize(cone(phiw)).nonzero_homology()
    assert set(homs) <= {-1, 0, 4, 5}
