"""Representations of bound quivers over a field.

An arrow ``a: i -> j`` acts by a matrix of shape ``(dims[j], dims[i])``, so a
path ``p`` from ``s`` to ``t`` acts by the product of its arrow matrices taken
in reverse traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MismatchError, SpecError
from .linalg import _Field, make_field
from .quiver import BoundAlgebra


class Representation:
    def __init__(self, algebra: BoundAlgebra, field, dims, maps, check: bool = True):
        self.algebra = algebra
        self.field: _Field = make_field(field)
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n:
            raise SpecError("dimension vector length does not match the vertex count")
        quiver = algebra.quiver
        if len(maps) != len(quiver.arrows):
            raise SpecError("one matrix per arrow is required")
        fixed = []
        for a, m in zip(quiver.arrows, maps):
            shape = (self.dims[a.target], self.dims[a.source])
            arr = self.field.asarray(m) if np.size(m) else self.field.zeros(shape)
            arr = arr.reshape(shape)
            fixed.append(arr)
        self.maps = tuple(fixed)
        self._path_cache = {}
        if check:
            for rel in algebra.ideal.relations:
                src = quiver.arrows[rel[0]].source
                if np.any(self._raw_path(src, rel) != 0):
                    raise SpecError("representation violates a relation")

    @property
    def n(self):
        return self.algebra.n

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim_vector(self) -> np.ndarray:
        return np.array(self.dims, dtype=np.int64)

    @property
    def offsets(self):
        out = [0]
        for d in self.dims:
            out.append(out[-1] + d)
        return out

    def _raw_path(self, source: int, arrows) -> np.ndarray:
        mat = self.field.eye(self.dims[source])
        for a in arrows:
            mat = self.field.matmul(self.maps[a], mat)
        return mat

    def path_matrix(self, index: int) -> np.ndarray:
        """Action of basis path ``index`` as a matrix ``M_source -> M_target``."""
        mat = self._path_cache.get(index)
        if mat is None:
            p = self.algebra.paths[index]
            mat = self._raw_path(p.source, p.arrows)
            self._path_cache[index] = mat
        return mat

    def element_matrix(self, coeffs, source: int, target: int) -> np.ndarray:
        """Action ``M_source -> M_target`` of an algebra element given by path coefficients."""
        out = self.field.zeros((self.dims[target], self.dims[source]))
        for idx in self.algebra.paths_between(source, target):
            c = coeffs[idx]
            if c != 0:
                out = out + c * self.path_matrix(idx)
        return self.field.normalize(out)

    def global_arrow_matrix(self, a: int) -> np.ndarray:
        """Arrow ``a`` as an endomorphism of the total space."""
        off = self.offsets
        arrow = self.algebra.quiver.arrows[a]
        out = self.field.zeros((self.total_dim, self.total_dim))
        out[off[arrow.target]:off[arrow.target + 1], off[arrow.source]:off[arrow.source + 1]] = self.maps[a]
        return out

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def same_context(self, other: "Representation"):
        if other.algebra is not self.algebra and other.algebra.to_json() != self.algebra.to_json():
            raise MismatchError("representations over different algebras")
        if other.field != self.field:
            raise MismatchError(f"representations over different fields {self.field} and {other.field}")

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "maps": {
                a.name: [[self.field.to_int(x) if self.field.kind == "prime" else str(x) for x in row] for row in m]
                for a, m in zip(self.algebra.quiver.arrows, self.maps)
            },
        }

    @classmethod
    def from_dict(cls, algebra, field, data):
        field = make_field(field)
        maps = []
        for a in algebra.quiver.arrows:
            raw = data["maps"].get(a.name, [])
            shape = (data["dims"][a.target], data["dims"][a.source])
            arr = field.asarray(np.array(raw, dtype=object).reshape(shape)) if raw else field.zeros(shape)
            maps.append(arr)
        return cls(algebra, field, data["dims"], maps)

    def key(self):
        """Hashable exact description (not an isomorphism invariant)."""
        return (self.dims, tuple(tuple(np.asarray(m).ravel().tolist()) for m in self.maps))

    def __repr__(self):
        return f"Representation(dims={self.dims}, field={self.field})"


@dataclass
class ModuleMap:
    """Per-vertex matrices ``X_v -> Y_v``."""

    source: Representation
    target: Representation
    blocks: tuple

    def total(self) -> np.ndarray:
        f = self.source.field
        out = f.zeros((self.target.total_dim, self.source.total_dim))
        ot, os_ = self.target.offsets, self.source.offsets
        for v, b in enumerate(self.blocks):
            out[ot[v]:ot[v + 1], os_[v]:os_[v + 1]] = b
        return out

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        f = self.source.field
        return ModuleMap(first.source, self.target, tuple(f.matmul(b, a) for b, a in zip(self.blocks, first.blocks)))

    def is_iso(self) -> bool:
        f = self.source.field
        if self.source.dims != self.target.dims:
            return False
        return all(f.rank(b) == b.shape[0] for b in self.blocks if b.shape[0])


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    base = reps[0]
    for r in reps[1:]:
        base.same_context(r)
    f = base.field
    dims = [sum(r.dims[v] for r in reps) for v in range(base.n)]
    maps = []
    for ai, a in enumerate(base.algebra.quiver.arrows):
        m = f.zeros((dims[a.target], dims[a.source]))
        rt = cs = 0
        for r in reps:
            h, w = r.maps[ai].shape
            m[rt:rt + h, cs:cs + w] = r.maps[ai]
            rt += h
            cs += w
        maps.append(m)
    return Representation(base.algebra, f, dims, maps, check=False)


def zero_rep(algebra, field) -> Representation:
    return Representation(algebra, field, [0] * algebra.n, [[] for _ in algebra.quiver.arrows], check=False)


def simple(algebra: BoundAlgebra, field, v: int) -> Representation:
    dims = [1 if i == v else 0 for i in range(algebra.n)]
    f = make_field(field)
    maps = [f.zeros((dims[a.target], dims[a.source])) for a in algebra.quiver.arrows]
    return Representation(algebra, f, dims, maps, check=False)


def projective(algebra: BoundAlgebra, field, v: int) -> Representation:
    """``P_v``: at vertex ``w`` the span of basis paths from ``v`` to ``w``; arrows postcompose."""
    f = make_field(field)
    at = [algebra.paths_between(v, w) for w in range(algebra.n)]
    pos = [{p: k for k, p in enumerate(lst)} for lst in at]
    maps = []
    for ai, a in enumerate(algebra.quiver.arrows):
        m = f.zeros((len(at[a.target]), len(at[a.source])))
        for k, p in enumerate(at[a.source]):
            path = algebra.paths[p]
            idx = algebra.path_index(v, path.arrows + (ai,))
            if idx is not None:
                m[pos[a.target][idx], k] = 1
        maps.append(m)
    return Representation(algebra, f, [len(x) for x in at], maps)


def injective(algebra: BoundAlgebra, field, v: int) -> Representation:
    """``I_v``: at vertex ``w`` the dual of the paths from ``w`` to ``v``; arrows precompose."""
    f = make_field(field)
    at = [algebra.paths_between(w, v) for w in range(algebra.n)]
    pos = [{p: k for k, p in enumerate(lst)} for lst in at]
    maps = []
    for ai, a in enumerate(algebra.quiver.arrows):
        # (I_v)_j -> (I_v)_k for a: j -> k sends phi to (p -> phi(p * a))
        m = f.zeros((len(at[a.target]), len(at[a.source])))
        for r, p in enumerate(at[a.target]):
            path = algebra.paths[p]
            idx = algebra.path_index(a.source, (ai,) + path.arrows)
            if idx is not None:
                m[r, pos[a.source][idx]] = 1
        maps.append(m)
    return Representation(algebra, f, [len(x) for x in at], maps)


def canonical_modules(algebra: BoundAlgebra, field=3):
    """Simples, indecomposable projectives and indecomposable injectives, indexed by vertex."""
    n = algebra.n
    return (
        [simple(algebra, field, v) for v in range(n)],
        [projective(algebra, field, v) for v in range(n)],
        [injective(algebra, field, v) for v in range(n)],
    )


def subrepresentation(rep: Representation, bases) -> tuple[Representation, ModuleMap]:
    """Submodule spanned at each vertex by the columns of ``bases[v]`` (assumed arrow-stable)."""
    f = rep.field
    dims = [b.shape[1] for b in bases]
    maps = []
    for ai, a in enumerate(rep.algebra.quiver.arrows):
        img = f.matmul(rep.maps[ai], bases[a.source])
        if dims[a.target] == 0:
            if np.any(img != 0):
                raise ValueError("subspace family is not stable under the arrows")
            maps.append(f.zeros((0, dims[a.source])))
            continue
        sol = f.solve(bases[a.target], img)
        if sol is None:
            raise ValueError("subspace family is not stable under the arrows")
        maps.append(sol)
    sub = Representation(rep.algebra, f, dims, maps, check=False)
    return sub, ModuleMap(sub, rep, tuple(bases))


def quotient(rep: Representation, bases) -> tuple[Representation, ModuleMap]:
    """Quotient by the arrow-stable subspaces ``bases[v]``; returns the quotient and the projection."""
    f = rep.field
    comps, projs = [], []
    for v, b in enumerate(bases):
        comp = f.extend_to_basis(b, rep.dims[v])
        full = np.concatenate([b, comp], axis=1) if rep.dims[v] else f.zeros((0, 0))
        inv = f.inverse(full) if rep.dims[v] else f.zeros((0, 0))
        projs.append(inv[b.shape[1]:, :])
        comps.append(comp)
    dims = [c.shape[1] for c in comps]
    maps = []
    for ai, a in enumerate(rep.algebra.quiver.arrows):
        m = f.matmul(projs[a.target], f.matmul(rep.maps[ai], comps[a.source]))
        maps.append(m.reshape(dims[a.target], dims[a.source]))
    quo = Representation(rep.algebra, f, dims, maps, check=False)
    return quo, ModuleMap(rep, quo, tuple(projs))


def radical_bases(rep: Representation):
    """Per vertex, a column basis of ``rad M = sum of arrow images``."""
    f = rep.field
    out = []
    for v in range(rep.n):
        cols = [rep.maps[ai] for ai, a in enumerate(rep.algebra.quiver.arrows) if a.target == v]
        if cols and rep.dims[v]:
            out.append(f.column_basis(np.concatenate(cols, axis=1)))
        else:
            out.append(f.zeros((rep.dims[v], 0)))
    return out


def top_dims(rep: Representation) -> list[int]:
    return [rep.dims[v] - b.shape[1] for v, b in enumerate(radical_bases(rep))]
