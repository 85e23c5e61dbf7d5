"""Hom spaces, resolutions, Ext, indecomposability, Hall numbers and catalogs of modules."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .complexes import HomComplex, ProjComplex, Realization, module_complex, stalk
from .errors import EnumerationCapExceeded, FieldError, GlobalDimensionExceeded, MismatchError
from .linalg import PrimeField, batched_rank, make_field, subspaces, gaussian_binomial
from .quiver import BoundAlgebra
from .representation import ModuleMap, Representation, radical_bases, subrepresentation, quotient
from .rings import DEFAULT_ELEMENT_CAP, FiniteAlgebra

SUBSPACE_CAP = 2 ** 18
TUPLE_CAP = 2 ** 20

# ------------------------------------------------------------ Hom


@dataclass
class HomBasis:
    source: Representation
    target: Representation
    vectors: np.ndarray  # columns: flattened per-vertex blocks
    layout: list = dc_field(default_factory=list)  # (offset, rows, cols) per vertex

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def unflatten(self, vec) -> tuple:
        return tuple(np.asarray(vec[o:o + r * c]).reshape(r, c) for o, r, c in self.layout)

    def flatten(self, blocks) -> np.ndarray:
        f = self.source.field
        parts = [np.asarray(b).reshape(-1) for b in blocks]
        return f.asarray(np.concatenate(parts)) if parts else f.zeros(0)

    @property
    def basis(self) -> list:
        return [self.unflatten(self.vectors[:, i]) for i in range(self.dim)]

    def element(self, coeffs) -> ModuleMap:
        f = self.source.field
        vec = f.matmul(self.vectors, f.asarray(coeffs).reshape(-1, 1))[:, 0] if self.dim else f.zeros(self.vectors.shape[0])
        return ModuleMap(self.source, self.target, self.unflatten(vec))

    def coordinates(self, blocks) -> np.ndarray:
        sol = self.source.field.solve(self.vectors, self.flatten(blocks))
        if sol is None:
            raise ValueError("not a homomorphism")
        return sol


def _hom_layout(X: Representation, Y: Representation):
    layout, off = [], 0
    for v in range(X.n):
        layout.append((off, Y.dims[v], X.dims[v]))
        off += Y.dims[v] * X.dims[v]
    return layout, off


def hom_space(X: Representation, Y: Representation) -> HomBasis:
    """Basis of ``{(φ_v) : φ_t X_a = Y_a φ_s for every arrow a: s -> t}``."""
    X.same_context(Y)
    f = X.field
    layout, total = _hom_layout(X, Y)
    rows = []
    for ai, a in enumerate(X.algebra.quiver.arrows):
        s, t = a.source, a.target
        nr = Y.dims[t] * X.dims[s]
        if nr == 0:
            continue
        block = f.zeros((nr, total))
        os_, ys, xs = layout[s]
        ot, yt, xt = layout[t]
        if ys * xs:
            # row-major vec(Y_a F_s) = (Y_a ⊗ I) vec(F_s)
            block[:, os_:os_ + ys * xs] += np.kron(Y.maps[ai], f.eye(xs))
        if yt * xt:
            block[:, ot:ot + yt * xt] -= np.kron(f.eye(yt), X.maps[ai].T)
        rows.append(f.normalize(block))
    if total == 0:
        vecs = f.zeros((0, 0))
    elif rows:
        vecs = f.nullspace(np.concatenate(rows, axis=0))
    else:
        vecs = f.eye(total)
    return HomBasis(X, Y, vecs, layout)


def hom_dim(X: Representation, Y: Representation) -> int:
    return hom_space(X, Y).dim


def end_algebra(X: Representation, cap: int = DEFAULT_ELEMENT_CAP) -> FiniteAlgebra:
    """``End(X)`` with product ``a * b = a∘b``."""
    f = X.field
    if not isinstance(f, PrimeField):
        raise FieldError("endomorphism ring enumeration needs a prime field")
    hb = hom_space(X, X)
    d = hb.dim
    if f.q ** d > cap:
        raise EnumerationCapExceeded(f"End of dimension {d} over GF({f.q}) exceeds cap {cap}")
    basis = hb.basis
    table = np.zeros((d, d, d), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            prod = [f.matmul(x, y) for x, y in zip(bi, bj)]
            table[i, j] = hb.coordinates(prod)
    unit = hb.coordinates([f.eye(n) for n in X.dims]) if d else np.zeros(0, dtype=np.int64)
    return FiniteAlgebra(f, table, unit, cap=cap)


def is_indecomposable(X: Representation, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """``End(X)`` is local: no idempotents besides 0 and 1 (exhaustive over F_q)."""
    if X.total_dim == 0:
        return False
    return end_algebra(X, cap).is_local()


def _enumerate_isos(hb: HomBasis, cap: int):
    f = hb.source.field
    if not isinstance(f, PrimeField):
        raise FieldError("isomorphism search needs a prime field")
    coeffs = f.elements(hb.dim, cap=cap)
    vecs = (coeffs @ hb.vectors.T) % f.q  # one flattened map per row
    ok = np.ones(len(coeffs), dtype=bool)
    for o, r, c in hb.layout:
        if r == 0:
            continue
        mats = vecs[:, o:o + r * c].reshape(-1, r, c)
        ok &= batched_rank(mats, f.q) == r
    return coeffs, ok


def is_isomorphic(X: Representation, Y: Representation, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    X.same_context(Y)
    if X.dims != Y.dims:
        return False
    if X.total_dim == 0:
        return True
    hb = hom_space(X, Y)
    if hb.dim == 0 or hb.dim != hom_dim(X, X) or hb.dim != hom_dim(Y, Y):
        return False
    _, ok = _enumerate_isos(hb, cap)
    return bool(ok.any())


def find_isomorphism(X: Representation, Y: Representation, cap: int = DEFAULT_ELEMENT_CAP):
    if X.dims != Y.dims:
        return None
    hb = hom_space(X, Y)
    if hb.dim == 0:
        return None
    coeffs, ok = _enumerate_isos(hb, cap)
    hits = np.nonzero(ok)[0]
    return hb.element(coeffs[hits[0]]) if len(hits) else None


# ------------------------------------------------------------ resolutions


@dataclass
class Resolution:
    module: Representation
    complex: ProjComplex  # P^i in degree -i
    terms: list  # vertex lists, P^0 first

    @property
    def length(self) -> int:
        return len(self.terms) - 1 if self.terms and self.terms[-1] else max(len(self.terms) - 1, 0)

    def involves(self, vertex: int) -> bool:
        return any(vertex in t for t in self.terms)


def _cover(K: Representation):
    """Top generators of ``K`` and the cover map ``⊕ P_v -> K`` at each vertex."""
    f = K.field
    A = K.algebra
    rad = radical_bases(K)
    gens = []  # (vertex, vector)
    for v in range(A.n):
        comp = f.extend_to_basis(rad[v], K.dims[v])
        for c in range(comp.shape[1]):
            gens.append((v, comp[:, c]))
    verts = [v for v, _ in gens]
    blocks = []
    for w in range(A.n):
        cols = []
        for v, x in gens:
            for p in A.paths_between(v, w):
                cols.append(f.matmul(K.path_matrix(p), x.reshape(-1, 1))[:, 0])
        if cols:
            blocks.append(f.asarray(np.stack(cols, axis=1)))
        else:
            blocks.append(f.zeros((K.dims[w], 0)))
    return gens, verts, blocks


def min_projective_resolution(X: Representation, max_length: int | None = None) -> Resolution:
    """Minimal projective resolution built from successive projective covers."""
    A, f = X.algebra, X.field
    if max_length is None:
        max_length = A.dim
    terms, diffs = [], {}
    K = X
    incl = None  # per-vertex coordinates of K inside the realization of the previous term
    prev_real = None
    i = 0
    while K.total_dim > 0:
        if i > max_length:
            raise GlobalDimensionExceeded(f"resolution longer than {max_length}: global-dimension bound exceeded")
        gens, verts, blocks = _cover(K)
        terms.append(verts)
        real = Realization(stalk(A, f, verts))
        if incl is not None:
            d = f.zeros((len(terms[-2]), len(verts), A.dim))
            for g, (v, x) in enumerate(gens):
                amb = f.matmul(incl[v], x.reshape(-1, 1))[:, 0]
                d[:, g, :] = prev_real.vector_to_tensor(amb, 0, v)
            diffs[-i] = d
        kers = [f.nullspace(b) if b.shape[1] else f.zeros((0, 0)) for b in blocks]
        P = real.complex.term(0)
        K, _ = subrepresentation(P, kers)
        incl = kers
        prev_real = real
        i += 1
    cx_terms = {-k: t for k, t in enumerate(terms)}
    cx = ProjComplex(A, f, cx_terms, diffs)
    if not cx.is_minimal():
        raise ArithmeticError("constructed resolution is not minimal")
    return Resolution(X, cx, terms)


def projective_dimension(X: Representation, max_length: int | None = None) -> int:
    return len(min_projective_resolution(X, max_length).terms) - 1


def global_dimension(algebra: BoundAlgebra, field=3, max_length: int | None = None) -> int:
    from .representation import simple

    return max(projective_dimension(simple(algebra, field, v), max_length) for v in range(algebra.n))


def ext_dim(X: Representation, Y: Representation, k: int, max_length: int | None = None) -> int:
    """``dim Ext^k(X, Y)`` as cohomology of ``Hom(resolution of X, Y)``."""
    X.same_context(Y)
    if k < 0:
        return 0
    res = min_projective_resolution(X, max_length)
    return HomComplex(res.complex, module_complex(Y)).h_dim(k)


def ext_dims(X: Representation, Y: Representation, max_length: int | None = None) -> list[int]:
    res = min_projective_resolution(X, max_length)
    hc = HomComplex(res.complex, module_complex(Y))
    return [hc.h_dim(k) for k in range(len(res.terms))]


# ------------------------------------------------------------ submodules and Hall numbers


def _subspace_count(L: Representation, dims) -> int:
    q = L.field.q
    total = 1
    for n, k in zip(L.dims, dims):
        total *= gaussian_binomial(n, k, q)
    return total


def submodules(L: Representation, dims, cap: int = SUBSPACE_CAP):
    """Every arrow-stable tuple of subspaces of the given dimensions (column bases)."""
    f = L.field
    if not isinstance(f, PrimeField):
        raise FieldError("submodule enumeration needs a finite field")
    if any(k > n or k < 0 for n, k in zip(L.dims, dims)):
        return
    count = _subspace_count(L, dims)
    if count > cap:
        raise EnumerationCapExceeded(f"{count} subspace candidates exceed cap {cap}")
    arrows = L.algebra.quiver.arrows
    per_vertex = [list(subspaces(n, k, f)) for n, k in zip(L.dims, dims)]
    for choice in itertools.product(*per_vertex):
        ok = True
        for ai, a in enumerate(arrows):
            b_s = choice[a.source]
            if b_s.shape[1] == 0:
                continue
            img = f.matmul(L.maps[ai], b_s)
            if not np.any(img != 0):
                continue
            b_t = choice[a.target]
            if f.rank(np.concatenate([b_t, img], axis=1)) > b_t.shape[1]:
                ok = False
                break
        if ok:
            yield choice


def hall_number_mod(X: Representation, Y: Representation, L: Representation, cap: int = SUBSPACE_CAP) -> int:
    """Number of submodules ``N ⊆ L`` with ``N ≅ X`` and ``L/N ≅ Y``."""
    X.same_context(L)
    Y.same_context(L)
    if tuple(np.add(X.dims, Y.dims)) != L.dims:
        return 0
    seen = {}

    def iso(rep, target, tag):
        key = (tag, tuple(m.tobytes() for m in rep.maps))
        if key not in seen:
            seen[key] = is_isomorphic(rep, target)
        return seen[key]

    count = 0
    for bases in submodules(L, X.dims, cap):
        sub, _ = subrepresentation(L, list(bases))
        if not iso(sub, X, 0):
            continue
        quo, _ = quotient(L, list(bases))
        if iso(quo, Y, 1):
            count += 1
    return count


# ------------------------------------------------------------ catalogs


def _dim_vectors(bound):
    for d in itertools.product(*[range(b + 1) for b in bound]):
        if any(d):
            yield d


def _tuple_count(algebra, d, q):
    return q ** sum(d[a.target] * d[a.source] for a in algebra.quiver.arrows)


def path_rank_profile(rep: Representation) -> tuple:
    f = rep.field
    return tuple(f.rank(rep.path_matrix(p)) if rep.path_matrix(p).size else 0 for p in range(rep.algebra.dim))


def representations_of_dim(algebra: BoundAlgebra, field: PrimeField, d, cap: int = TUPLE_CAP):
    """All representations with dimension vector ``d`` (every arrow-matrix tuple satisfying the relations)."""
    arrows = algebra.quiver.arrows
    sizes = [d[a.target] * d[a.source] for a in arrows]
    total = sum(sizes)
    if field.q ** total > cap:
        raise EnumerationCapExceeded(f"{field.q}^{total} matrix tuples exceed cap {cap}")
    for flat in itertools.product(range(field.q), repeat=total):
        maps, off = [], 0
        for a, s in zip(arrows, sizes):
            maps.append(np.array(flat[off:off + s], dtype=np.int64).reshape(d[a.target], d[a.source]))
            off += s
        ok = True
        for rel in algebra.ideal.relations:
            src = arrows[rel[0]].source
            m = np.eye(d[src], dtype=np.int64)
            for a in rel:
                m = (maps[a] @ m) % field.q
            if np.any(m):
                ok = False
                break
        if ok:
            yield Representation(algebra, field, d, maps, check=False)


@dataclass
class Catalog:
    algebra: BoundAlgebra
    q: int
    dim_bound: tuple
    modules: list

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra.fingerprint(),
            "q": self.q,
            "dim_bound": list(self.dim_bound),
            "modules": [m.to_dict() for m in self.modules],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, algebra, data):
        if data["algebra"] != algebra.fingerprint():
            raise MismatchError("catalog belongs to a different algebra")
        f = make_field(data["q"])
        mods = [Representation.from_dict(algebra, f, m) for m in data["modules"]]
        return cls(algebra, data["q"], tuple(data["dim_bound"]), mods)


def enumerate_indecomposables(algebra: BoundAlgebra, dim_bound, q: int, cap: int = TUPLE_CAP) -> Catalog:
    """One representative per isoclass of indecomposables with dimension vector ``<= dim_bound``."""
    field = PrimeField(q)
    bound = tuple(int(b) for b in dim_bound)
    if len(bound) != algebra.n:
        raise MismatchError("dim_bound length must equal the vertex count")
    total = sum(_tuple_count(algebra, d, q) for d in _dim_vectors(bound))
    if total > cap:
        raise EnumerationCapExceeded(f"{total} matrix tuples exceed cap {cap}")
    found = []
    for d in sorted(_dim_vectors(bound), key=lambda v: (sum(v), tuple(-x for x in v))):
        found.extend(_indecomposables(algebra, field, d, cap))
    return Catalog(algebra, q, bound, found)


def _indecomposables(algebra, field, d, cap):
    classes = {}  # invariant -> list of (rep, indecomposable?)
    for rep in representations_of_dim(algebra, field, d, cap):
        inv = path_rank_profile(rep)
        bucket = classes.setdefault(inv, [])
        if any(is_isomorphic(rep, other) for other, _ in bucket):
            continue
        bucket.append((rep, is_indecomposable(rep)))
    return [rep for inv in sorted(classes) for rep, ind in classes[inv] if ind]


def indecomposables_of_dim(algebra: BoundAlgebra, d, q: int, cap: int = TUPLE_CAP) -> list:
    """Isoclass representatives of indecomposables with dimension vector exactly ``d``."""
    d = tuple(int(x) for x in d)
    if len(d) != algebra.n:
        raise MismatchError("dimension vector length must equal the vertex count")
    if not any(d):
        return []
    if _tuple_count(algebra, d, q) > cap:
        raise EnumerationCapExceeded(f"dimension vector {d} exceeds cap {cap}")
    return _indecomposables(algebra, PrimeField(q), d, cap)
