"""Derived and 2-periodic Hom spaces, cones, quasi-isomorphisms and End rings of complexes."""

from __future__ import annotations

import numpy as np

from .complexes import (
    ChainMap,
    HomComplex,
    ProjComplex,
    RepComplex,
    cone as raw_cone,
    fold,
    module_complex,
    normalize,
    realize,
    shift,
)
from .errors import EnumerationCapExceeded, FieldError, MismatchError
from .linalg import PrimeField
from .rep_lab import min_projective_resolution
from .representation import Representation
from .rings import DEFAULT_ELEMENT_CAP, FiniteAlgebra


def as_projective(X, max_length=None) -> ProjComplex:
    """Projective presentation of a module (its minimal resolution) or a complex of projectives."""
    if isinstance(X, ProjComplex):
        return X
    if isinstance(X, Representation):
        return min_projective_resolution(X, max_length).complex
    raise TypeError(f"cannot present {type(X).__name__} by projectives")


def as_target(Y):
    if isinstance(Y, Representation):
        return module_complex(Y)
    return Y


def derived_hom_dim(X, Y, n: int) -> int:
    """``dim Hom_{D^b}(X, Σ^n Y)`` via the Hom complex from a projective presentation of ``X``."""
    return HomComplex(as_projective(X), as_target(Y)).h_dim(n)


def derived_hom_dims(X, Y) -> dict:
    hc = HomComplex(as_projective(X), as_target(Y))
    return {n: hc.h_dim(n) for n in hc.degree_range()}


def fold_target(Y):
    Y = as_target(Y)
    if isinstance(Y, ProjComplex):
        return fold(Y)
    if Y.period:
        return Y
    return fold_rep_complex(Y)


def fold_rep_complex(Y: RepComplex) -> RepComplex:
    from .representation import direct_sum, zero_rep

    A, f = Y.algebra, Y.field
    groups = {p: [k for k in Y.degrees() if k % 2 == p and Y.term(k).total_dim] for p in (0, 1)}
    terms = {}
    for p in (0, 1):
        reps = [Y.term(k) for k in groups[p]]
        terms[p] = direct_sum(*reps) if reps else zero_rep(A, f)
    diffs = {}
    for p in (0, 1):
        src, tgt = terms[p], terms[1 - p]
        blocks = []
        for v in range(A.n):
            m = f.zeros((tgt.dims[v], src.dims[v]))
            c0 = 0
            for k in groups[p]:
                w = Y.term(k).dims[v]
                r0 = 0
                for k2 in groups[1 - p]:
                    h = Y.term(k2).dims[v]
                    if k2 == k + 1 and h and w:
                        m[r0:r0 + h, c0:c0 + w] = Y.d(k)[v]
                    r0 += h
                c0 += w
            blocks.append(m)
        diffs[p] = blocks
    return RepComplex(A, f, terms, diffs, period=2)


def orbit_hom_dim(X, Y) -> int:
    """``dim ⊕_n Hom_{D^b}(X, Σ^{2n} Y)``, the Hom space of the 2-periodic orbit category."""
    Xp = as_projective(X)
    Yt = as_target(Y)
    if Xp.period or getattr(Yt, "period", None):
        return HomComplex(fold(Xp), fold_target(Yt)).h_dim(0)
    hc = HomComplex(Xp, Yt)
    rng = hc.degree_range()
    return sum(hc.h_dim(n) for n in rng if n % 2 == 0)


def orbit_hom_dim_folded(X, Y) -> int:
    """Same value, computed as ``H^0`` of the folded 2-periodic Hom complex."""
    return HomComplex(fold(as_projective(X)), fold_target(Y)).h_dim(0)


def cone(f: ChainMap, reduce: bool = True) -> ProjComplex:
    """Mapping cone ``[[-d_X, 0], [f, d_Y]]``, stripped of contractible summands by default."""
    c = raw_cone(f)
    return normalize(c) if reduce else c


def is_quasi_iso(f: ChainMap) -> bool:
    """``f`` is a quasi-isomorphism iff its cone is acyclic."""
    return realize(raw_cone(f)).is_acyclic()


def end_ring(X: ProjComplex, cap: int = DEFAULT_ELEMENT_CAP):
    """2-periodic ``End(X)`` modulo homotopy, as structure constants over F_q.

    Returns the ring and the list of chain maps representing its basis.
    """
    P = fold(X)
    f = P.field
    if not isinstance(f, PrimeField):
        raise FieldError("End ring enumeration needs a prime field")
    hc = HomComplex(P, P)
    maps = hc.cocycle_maps(0)
    d = len(maps)
    if f.q ** d > cap:
        raise EnumerationCapExceeded(f"End of dimension {d} over GF({f.q}) exceeds cap {cap}")
    table = np.zeros((d, d, d), dtype=np.int64)
    for i, a in enumerate(maps):
        for j, b in enumerate(maps):
            table[i, j] = hc.reduce(0, hc.from_chain_map(a.compose_after(b)))
    from .complexes import identity_map

    unit = hc.reduce(0, hc.from_chain_map(identity_map(P))) if d else np.zeros(0, dtype=np.int64)
    return FiniteAlgebra(f, table, unit, cap=cap), maps


def periodic_end_is_local(P: ProjComplex, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    ring, _ = end_ring(P, cap)
    return ring.is_local()


def iso_fingerprint(X, catalog) -> list[int]:
    """``[orbit_hom_dim(C, X) for C in catalog]``."""
    if not catalog:
        raise ValueError("fingerprint needs a nonempty catalog")
    return [orbit_hom_dim(C, X) for C in catalog]


def shifted(X, s: int = 1) -> ProjComplex:
    return shift(as_projective(X), s)

