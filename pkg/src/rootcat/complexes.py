"""Complexes of projectives, complexes of representations, and their Hom complexes.

A :class:`ProjComplex` stores each term as a list of vertices (one indecomposable
projective ``P_v`` per entry) and each differential ``d^k: X^k -> X^{k+1}`` as a
tensor of shape ``(len X^{k+1}, len X^k, dim A)``. Entry ``[i, j]`` is an algebra
element supported on paths from ``X^{k+1}[i]`` to ``X^k[j]``; the corresponding
map ``P_s -> P_t`` sends ``x`` to ``x∘e``. Composing morphisms reverses the path
product: the composite ``G∘F`` has entries ``F_el ∘ G_el``.

Setting ``period=2`` turns the same data into a 2-periodic complex with terms in
degrees 0 and 1 and differentials ``d^0: X^0 -> X^1``, ``d^1: X^1 -> X^0``.
"""

from __future__ import annotations

import numpy as np

from .errors import MismatchError, SpecError
from .linalg import make_field
from .quiver import BoundAlgebra
from .representation import Representation, direct_sum, projective, quotient, subrepresentation, zero_rep

# ------------------------------------------------------------ algebra elements


def elem_mult(algebra: BoundAlgebra, field, a, b):
    """Algebra product ``a∘b`` (``b`` first) of coefficient vectors."""
    t = algebra.structure
    out = np.tensordot(np.tensordot(np.asarray(a), t, axes=([0], [0])), np.asarray(b), axes=([0], [0]))
    return field.normalize(out)


def elem_inverse(algebra: BoundAlgebra, field, u, vertex: int):
    """Inverse of a unit of ``e_v A e_v`` by the geometric series on its radical part."""
    e = algebra.idempotent(vertex)
    c = u[e]
    if c == 0:
        raise ValueError("element is not a unit")
    cinv = field.inv_scalar(c)
    nil = field.normalize(np.asarray(u) * cinv)
    nil[e] = field.scalar(0)
    nil = field.normalize(-nil)
    one = field.zeros(algebra.dim)
    one[e] = field.scalar(1)
    total = one.copy()
    power = one.copy()
    for _ in range(algebra.dim + 1):
        power = elem_mult(algebra, field, power, nil)
        if not np.any(power != 0):
            break
        total = field.normalize(total + power)
    return field.normalize(total * cinv)


def compose_tensors(algebra, field, g, f):
    """Morphism composite ``g∘f`` of matrices of algebra elements."""
    if f.shape[1] == 0 or g.shape[0] == 0 or f.shape[0] == 0:
        return field.zeros((g.shape[0], f.shape[1], algebra.dim))
    tmp = np.tensordot(f, algebra.structure, axes=([2], [0]))  # j k b c
    out = np.tensordot(g, tmp, axes=([1, 2], [0, 2]))  # i k c
    return field.normalize(out)


# ------------------------------------------------------------ complexes of projectives


class ProjComplex:
    def __init__(self, algebra: BoundAlgebra, field, terms, diffs=None, period=None, check=True):
        self.algebra = algebra
        self.field = make_field(field)
        self.period = period
        diffs = diffs or {}
        if period is not None:
            if period != 2:
                raise SpecError("only 2-periodic complexes are supported")
            self.terms = {k: tuple(int(v) for v in terms.get(k, ())) for k in (0, 1)}
        else:
            self.terms = {int(k): tuple(int(v) for v in vs) for k, vs in terms.items() if len(vs)}
        self.diffs = {}
        for k in self.degrees():
            src, tgt = self.term(k), self.term(k + 1)
            shape = (len(tgt), len(src), algebra.dim)
            d = diffs.get(k)
            if d is None or np.size(d) == 0:
                self.diffs[k] = self.field.zeros(shape)
            else:
                self.diffs[k] = self.field.asarray(d).reshape(shape)
        if check:
            self.validate()

    # degree bookkeeping -------------------------------------------------
    def _norm(self, k):
        return k % 2 if self.period else k

    def term(self, k) -> tuple:
        return self.terms.get(self._norm(k), ())

    def d(self, k):
        k = self._norm(k)
        if k in self.diffs:
            return self.diffs[k]
        return self.field.zeros((len(self.term(k + 1)), len(self.term(k)), self.algebra.dim))

    def degrees(self) -> list[int]:
        if self.period:
            return [0, 1]
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return all(len(v) == 0 for v in self.terms.values())

    @property
    def span(self):
        degs = [k for k, v in self.terms.items() if v]
        return (min(degs), max(degs)) if degs else (0, -1)

    def rank(self) -> int:
        return sum(len(v) for v in self.terms.values())

    def validate(self):
        A = self.algebra
        for k in self.degrees():
            d = self.diffs[k]
            src, tgt = self.term(k), self.term(k + 1)
            for i, t in enumerate(tgt):
                for j, s in enumerate(src):
                    allowed = set(A.paths_between(t, s))
                    bad = [p for p in np.nonzero(np.asarray(d[i, j]) != 0)[0] if p not in allowed]
                    if bad:
                        raise SpecError(f"differential entry ({i},{j}) in degree {k} has paths with wrong endpoints")
        for k in self.degrees():
            sq = compose_tensors(A, self.field, self.d(k + 1), self.d(k))
            if np.any(sq != 0):
                raise SpecError(f"d∘d != 0 at degree {k}")

    # structure ----------------------------------------------------------
    def class_vector(self) -> np.ndarray:
        """Alternating sum of projective classes, in the simple basis."""
        cart = cartan_columns(self.algebra)
        out = np.zeros(self.algebra.n, dtype=np.int64)
        for k in self.degrees():
            sign = -1 if k % 2 else 1
            for v in self.term(k):
                out += sign * cart[:, v]
        return out

    def minimal_violations(self) -> list:
        """Differential entries with an invertible component (not in the radical)."""
        out = []
        for k in self.degrees():
            d = self.diffs[k]
            for i, t in enumerate(self.term(k + 1)):
                for j, s in enumerate(self.term(k)):
                    if t == s and d[i, j, self.algebra.idempotent(s)] != 0:
                        out.append((k, i, j))
        return out

    def is_minimal(self) -> bool:
        return not self.minimal_violations()

    def to_dict(self) -> dict:
        A = self.algebra
        labels = A.quiver.vertices
        diffs = {}
        for k in self.degrees():
            d = self.diffs[k]
            rows = []
            for i in range(d.shape[0]):
                row = []
                for j in range(d.shape[1]):
                    entry = {A.path_label(p): self.field.to_int(d[i, j, p]) if self.field.kind == "prime" else str(d[i, j, p])
                             for p in np.nonzero(np.asarray(d[i, j]) != 0)[0]}
                    row.append(entry)
                rows.append(row)
            diffs[str(k)] = rows
        return {
            "period": self.period,
            "terms": {str(k): [labels[v] for v in self.term(k)] for k in self.degrees()},
            "differentials": diffs,
        }

    @classmethod
    def from_dict(cls, algebra, field, data):
        f = make_field(field)
        label_to_path = {algebra.path_label(i): i for i in range(algebra.dim)}
        terms = {int(k): [algebra.quiver.vertex_index(v) for v in vs] for k, vs in data["terms"].items()}
        diffs = {}
        for k, rows in data.get("differentials", {}).items():
            k = int(k)
            ncols = len(terms.get(k, []))
            t = f.zeros((len(rows), ncols, algebra.dim))
            for i, row in enumerate(rows):
                for j, entry in enumerate(row):
                    for lab, c in entry.items():
                        t[i, j, label_to_path[lab]] = f.scalar(c)
            diffs[k] = t
        return cls(algebra, f, terms, diffs, period=data.get("period"))

    def __repr__(self):
        labels = self.algebra.quiver.vertices
        parts = [f"{k}:" + "+".join("P" + labels[v] for v in self.term(k)) for k in self.degrees() if self.term(k)]
        kind = "periodic" if self.period else "bounded"
        return f"ProjComplex[{kind}]({', '.join(parts) or '0'})"


def cartan_columns(algebra: BoundAlgebra) -> np.ndarray:
    """Column ``v`` is the dimension vector of ``P_v``."""
    n = algebra.n
    out = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for w in range(n):
            out[w, v] = len(algebra.paths_between(v, w))
    return out


def stalk(algebra, field, vertices, degree=0, period=None) -> ProjComplex:
    """Direct sum of projectives concentrated in one degree."""
    return ProjComplex(algebra, field, {degree: list(vertices)}, period=period)


def zero_complex(algebra, field, period=None) -> ProjComplex:
    return ProjComplex(algebra, field, {}, period=period)


def shift(X: ProjComplex, s: int = 1) -> ProjComplex:
    """``Σ^s X``: terms ``X^{k+s}``, differential ``(-1)^s d``."""
    sign = -1 if s % 2 else 1
    if X.period:
        terms = {k: X.term(k + s) for k in (0, 1)}
        diffs = {k: X.field.normalize(sign * X.d(k + s)) for k in (0, 1)}
        return ProjComplex(X.algebra, X.field, terms, diffs, period=2, check=False)
    terms = {k - s: v for k, v in X.terms.items()}
    diffs = {k - s: X.field.normalize(sign * d) for k, d in X.diffs.items()}
    return ProjComplex(X.algebra, X.field, terms, diffs, check=False)


def direct_sum_complex(*xs: ProjComplex) -> ProjComplex:
    base = xs[0]
    f, A = base.field, base.algebra
    period = base.period
    if any(x.period != period for x in xs):
        raise MismatchError("cannot sum periodic and bounded complexes")
    degs = sorted(set().union(*[x.degrees() for x in xs]))
    terms = {k: sum((list(x.term(k)) for x in xs), []) for k in degs}
    diffs = {}
    for k in degs:
        rows = len(terms.get(k + 1 if not period else (k + 1) % 2, []))
        cols = len(terms[k])
        d = f.zeros((rows, cols, A.dim))
        r0 = c0 = 0
        for x in xs:
            dx = x.d(k)
            d[r0:r0 + dx.shape[0], c0:c0 + dx.shape[1]] = dx
            r0 += dx.shape[0]
            c0 += dx.shape[1]
        diffs[k] = d
    return ProjComplex(A, f, terms, diffs, period=period, check=False)


def fold(X: ProjComplex) -> ProjComplex:
    """Image of a bounded complex in the 2-periodic homotopy category."""
    if X.period:
        return X
    f, A = X.field, X.algebra
    parity_degs = {p: [k for k in X.degrees() if k % 2 == p] for p in (0, 1)}
    offsets = {}
    terms = {0: [], 1: []}
    for p in (0, 1):
        for k in parity_degs[p]:
            offsets[k] = len(terms[p])
            terms[p].extend(X.term(k))
    diffs = {p: f.zeros((len(terms[1 - p]), len(terms[p]), A.dim)) for p in (0, 1)}
    for k in X.degrees():
        if k + 1 not in X.terms:
            continue
        d = X.d(k)
        p = k % 2
        r0, c0 = offsets[k + 1], offsets[k]
        diffs[p][r0:r0 + d.shape[0], c0:c0 + d.shape[1]] = d
    return ProjComplex(A, f, terms, diffs, period=2, check=False)


# ------------------------------------------------------------ morphisms


class ChainMap:
    """A degree-``n`` morphism ``X -> Σ^n Y``: components ``X^k -> Y^{k+n}``."""

    def __init__(self, source: ProjComplex, target: ProjComplex, comps, degree: int = 0):
        self.source = source
        self.target = target
        self.degree = degree
        f, A = source.field, source.algebra
        self.comps = {}
        for k in source.degrees():
            shape = (len(target.term(k + degree)), len(source.term(k)), A.dim)
            c = comps.get(k)
            self.comps[k] = f.zeros(shape) if c is None or np.size(c) == 0 else f.asarray(c).reshape(shape)

    def comp(self, k):
        k = self.source._norm(k)
        return self.comps.get(k, self.source.field.zeros(
            (len(self.target.term(k + self.degree)), len(self.source.term(k)), self.source.algebra.dim)))

    def is_chain_map(self) -> bool:
        X, Y, n = self.source, self.target, self.degree
        A, f = X.algebra, X.field
        sign = -1 if n % 2 else 1
        for k in X.degrees():
            lhs = compose_tensors(A, f, f.normalize(sign * Y.d(k + n)), self.comp(k))
            rhs = compose_tensors(A, f, self.comp(k + 1), X.d(k))
            if np.any(f.normalize(lhs - rhs) != 0):
                return False
        return True

    def is_zero(self) -> bool:
        return all(not np.any(c != 0) for c in self.comps.values())

    def compose_after(self, first: "ChainMap") -> "ChainMap":
        """``self ∘ first``."""
        A, f = self.source.algebra, self.source.field
        comps = {k: compose_tensors(A, f, self.comp(k + first.degree), first.comp(k)) for k in first.source.degrees()}
        return ChainMap(first.source, self.target, comps, first.degree + self.degree)


def identity_map(X: ProjComplex) -> ChainMap:
    A, f = X.algebra, X.field
    comps = {}
    for k in X.degrees():
        c = f.zeros((len(X.term(k)), len(X.term(k)), A.dim))
        for i, v in enumerate(X.term(k)):
            c[i, i, A.idempotent(v)] = f.scalar(1)
        comps[k] = c
    return ChainMap(X, X, comps, 0)


def cone(f: ChainMap) -> ProjComplex:
    """Cone of ``f: X -> Σ^n Y``: terms ``X^{k+1} ⊕ Y^{k+n}``, ``d = [[-d_X, 0], [f, (-1)^n d_Y]]``."""
    X, Y, n = f.source, f.target, f.degree
    A, F = X.algebra, X.field
    sign = -1 if n % 2 else 1
    periodic = X.period
    if periodic != Y.period:
        raise MismatchError("cone of a map between periodic and bounded complexes")
    if periodic:
        degs = [0, 1]
    else:
        lo = min([k - 1 for k in X.terms] + [k - n for k in Y.terms] + [0])
        hi = max([k - 1 for k in X.terms] + [k - n for k in Y.terms] + [0])
        degs = list(range(lo, hi + 1))
    terms = {k: list(X.term(k + 1)) + list(Y.term(k + n)) for k in degs}
    diffs = {}
    for k in degs:
        xs, ys = len(X.term(k + 1)), len(Y.term(k + n))
        xt, yt = len(X.term(k + 2)), len(Y.term(k + n + 1))
        d = F.zeros((xt + yt, xs + ys, A.dim))
        if xt and xs:
            d[:xt, :xs] = F.normalize(-X.d(k + 1))
        if yt and xs:
            d[xt:, :xs] = f.comp(k + 1)
        if yt and ys:
            d[xt:, xs:] = F.normalize(sign * Y.d(k + n))
        diffs[k] = d
    return ProjComplex(A, F, terms, diffs, period=periodic)


def normalize(X: ProjComplex) -> ProjComplex:
    """Strip contractible summands by Gaussian elimination of invertible entries."""
    A, f = X.algebra, X.field
    terms = {k: list(X.term(k)) for k in X.degrees()}
    diffs = {k: X.d(k).copy() for k in X.degrees()}
    periodic = X.period

    def key(k):
        return k % 2 if periodic else k

    while True:
        found = None
        for k in sorted(diffs):
            d = diffs[k]
            tgt = terms.get(key(k + 1), [])
            for j, s in enumerate(terms.get(k, [])):
                for i, t in enumerate(tgt):
                    if s == t and d[i, j, A.idempotent(s)] != 0:
                        found = (k, i, j)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            break
        k, i, j = found
        k1 = key(k + 1)
        km1 = key(k - 1)
        d = diffs[k]
        s = terms[k][j]
        rows = [r for r in range(d.shape[0]) if r != i]
        cols = [c for c in range(d.shape[1]) if c != j]
        phi_inv = elem_inverse(A, f, d[i, j], s)[None, None, :]
        beta = d[i:i + 1, cols]
        gamma = d[rows][:, j:j + 1]
        delta = d[rows][:, cols]
        corr = compose_tensors(A, f, gamma, compose_tensors(A, f, phi_inv, beta))
        diffs[k] = f.normalize(delta - corr)
        if km1 in diffs:
            prev = diffs[km1]
            keep = [r for r in range(prev.shape[0]) if r != j]
            diffs[km1] = prev[keep]
        if k1 in diffs:
            nxt = diffs[k1]
            keep = [c for c in range(nxt.shape[1]) if c != i]
            diffs[k1] = nxt[:, keep]
        del terms[k][j]
        del terms[k1][i]
    return ProjComplex(A, f, terms, diffs, period=periodic, check=False)


# ------------------------------------------------------------ complexes of representations


class RepComplex:
    """Terms are representations, differentials are per-vertex matrices ``Y^k_v -> Y^{k+1}_v``."""

    def __init__(self, algebra, field, terms: dict, diffs: dict, period=None):
        self.algebra = algebra
        self.field = make_field(field)
        self.period = period
        self.terms = dict(terms)
        self.diffs = {}
        for k in self.degrees():
            src, tgt = self.term(k), self.term(k + 1)
            blocks = diffs.get(k)
            if blocks is None:
                blocks = [self.field.zeros((tgt.dims[v], src.dims[v])) for v in range(algebra.n)]
            self.diffs[k] = tuple(self.field.asarray(b).reshape(tgt.dims[v], src.dims[v]) for v, b in enumerate(blocks))

    def _norm(self, k):
        return k % 2 if self.period else k

    def degrees(self):
        return [0, 1] if self.period else sorted(self.terms)

    def term(self, k) -> Representation:
        r = self.terms.get(self._norm(k))
        return r if r is not None else zero_rep(self.algebra, self.field)

    def d(self, k):
        k = self._norm(k)
        if k in self.diffs:
            return self.diffs[k]
        src, tgt = self.term(k), self.term(k + 1)
        return tuple(self.field.zeros((tgt.dims[v], src.dims[v])) for v in range(self.algebra.n))

    def is_complex(self) -> bool:
        f = self.field
        for k in self.degrees():
            a, b = self.d(k), self.d(k + 1)
            for v in range(self.algebra.n):
                if np.any(f.matmul(b[v], a[v]) != 0):
                    return False
        return True

    def is_chain_compatible(self) -> bool:
        """Differentials commute with the arrow actions."""
        f = self.field
        for k in self.degrees():
            src, tgt, d = self.term(k), self.term(k + 1), self.d(k)
            for ai, a in enumerate(self.algebra.quiver.arrows):
                lhs = f.matmul(tgt.maps[ai], d[a.source])
                rhs = f.matmul(d[a.target], src.maps[ai])
                if np.any(f.normalize(lhs - rhs) != 0):
                    return False
        return True

    def homology_dims(self, k) -> np.ndarray:
        f = self.field
        out = []
        dk, dk1 = self.d(k), self.d(k - 1)
        for v in range(self.algebra.n):
            dim = self.term(k).dims[v]
            ker = dim - (f.rank(dk[v]) if dk[v].size else 0)
            im = f.rank(dk1[v]) if dk1[v].size else 0
            out.append(ker - im)
        return np.array(out, dtype=np.int64)

    def homology(self, k) -> Representation:
        f = self.field
        rep = self.term(k)
        zs = [f.nullspace(self.d(k)[v]) if rep.dims[v] else f.zeros((0, 0)) for v in range(self.algebra.n)]
        zsub, _ = subrepresentation(rep, zs)
        bs = []
        for v in range(self.algebra.n):
            img = self.d(k - 1)[v]
            if zs[v].shape[1] == 0 or img.size == 0:
                bs.append(f.zeros((zs[v].shape[1], 0)))
                continue
            cols = f.column_basis(img)
            bs.append(f.solve(zs[v], cols) if cols.shape[1] else f.zeros((zs[v].shape[1], 0)))
        hom, _ = quotient(zsub, bs)
        return hom

    def is_acyclic(self) -> bool:
        return all(not np.any(self.homology_dims(k)) for k in self.degrees())

    def nonzero_homology(self) -> dict:
        return {k: self.homology_dims(k) for k in self.degrees() if np.any(self.homology_dims(k))}


def module_complex(M: Representation, degree: int = 0, period=None) -> RepComplex:
    return RepComplex(M.algebra, M.field, {(degree % 2 if period else degree): M}, {}, period=period)


class Realization:
    """``X`` as a complex of representations, remembering where each path basis vector lives."""

    def __init__(self, X: ProjComplex):
        self.source = X
        A, f = X.algebra, X.field
        self._proj = {v: projective(A, f, v) for v in range(A.n)}
        terms = {}
        # index[(k)][v] = list of (summand, path index) giving the basis of (X^k)_v
        self.index = {}
        for k in X.degrees():
            vs = X.term(k)
            if vs:
                terms[k] = direct_sum(*[self._proj[v] for v in vs])
            else:
                terms[k] = zero_rep(A, f)
            self.index[k] = [[(i, p) for i, t in enumerate(vs) for p in A.paths_between(t, v)] for v in range(A.n)]
        diffs = {}
        for k in X.degrees():
            d = X.d(k)
            blocks = []
            src_idx = self.index[k]
            tgt_idx = self.index.get(X._norm(k + 1), [[] for _ in range(A.n)])
            for v in range(A.n):
                pos = {key: r for r, key in enumerate(tgt_idx[v])}
                m = f.zeros((len(tgt_idx[v]), len(src_idx[v])))
                for c, (j, x) in enumerate(src_idx[v]):
                    for i in range(d.shape[0]):
                        for e in np.nonzero(np.asarray(d[i, j]) != 0)[0]:
                            prod = A.mult[x, e]
                            if prod >= 0:
                                m[pos[(i, prod)], c] = m[pos[(i, prod)], c] + d[i, j, e]
                blocks.append(f.normalize(m))
            diffs[k] = blocks
        self.complex = RepComplex(A, f, terms, diffs, period=X.period)

    def vector_to_tensor(self, vec_by_vertex, j_deg, v):
        """Coordinates in ``(X^{j})_v`` to a column of algebra elements (one per summand)."""
        X = self.source
        A, f = X.algebra, X.field
        out = f.zeros((len(X.term(j_deg)), A.dim))
        for val, (i, p) in zip(vec_by_vertex, self.index.get(X._norm(j_deg), [[]] * A.n)[v]):
            out[i, p] = val
        return out

    def tensor_to_vector(self, col, j_deg, v):
        X = self.source
        f = X.field
        idx = self.index.get(X._norm(j_deg), [[]] * X.algebra.n)[v]
        out = f.zeros(len(idx))
        for r, (i, p) in enumerate(idx):
            out[r] = col[i, p]
        return out


def realize(X: ProjComplex) -> RepComplex:
    return Realization(X).complex


# ------------------------------------------------------------ Hom complexes


class HomComplex:
    """``Hom(X, Y)`` for a complex of projectives ``X`` and a complex of representations ``Y``.

    ``Hom^n = ⊕_k ⊕_{s in X^k} (Y^{k+n})_{v_s}`` by Yoneda, with ``D φ = d_Y φ - (-1)^n φ d_X``.
    When ``Y`` is given as a :class:`ProjComplex`, cocycles convert back to :class:`ChainMap`.
    """

    def __init__(self, X: ProjComplex, Y):
        if X.period != Y.period:
            raise MismatchError("Hom between periodic and bounded complexes")
        if X.field != Y.field:
            raise MismatchError("complexes over different fields")
        self.X = X
        self.Yproj = Y if isinstance(Y, ProjComplex) else None
        self.real = Realization(Y) if isinstance(Y, ProjComplex) else None
        self.Y: RepComplex = self.real.complex if self.real else Y
        self.field = X.field
        self.periodic = bool(X.period)
        self._layout = {}
        self._D = {}
        self._coh = {}

    def degree_range(self):
        if self.periodic:
            return [0, 1]
        xs = [k for k in self.X.degrees() if self.X.term(k)]
        ys = [k for k in self.Y.degrees() if self.Y.term(k).total_dim]
        if not xs or not ys:
            return []
        return list(range(min(ys) - max(xs), max(ys) - min(xs) + 1))

    def _n(self, n):
        return n % 2 if self.periodic else n

    def layout(self, n):
        n = self._n(n)
        if n not in self._layout:
            blocks = []
            off = 0
            for k in self.X.degrees():
                rep = self.Y.term(k + n)
                for s, v in enumerate(self.X.term(k)):
                    dim = rep.dims[v]
                    blocks.append((k, s, v, off, dim))
                    off += dim
            self._layout[n] = (blocks, off)
        return self._layout[n]

    def dim(self, n) -> int:
        return self.layout(n)[1]

    def differential(self, n) -> np.ndarray:
        """Matrix of ``D: Hom^n -> Hom^{n+1}``."""
        key = self._n(n)
        if key in self._D:
            return self._D[key]
        f = self.field
        src_blocks, src_dim = self.layout(n)
        tgt_blocks, tgt_dim = self.layout(n + 1)
        D = f.zeros((tgt_dim, src_dim))
        src_pos = {(self.X._norm(k), s): (off, dim) for k, s, v, off, dim in src_blocks}
        sign = 1 if n % 2 else -1  # -(-1)^n
        for k, s, v, toff, tdim in tgt_blocks:
            if tdim == 0:
                continue
            # d_Y ∘ φ^k
            soff, sdim = src_pos[(self.X._norm(k), s)]
            if sdim:
                D[toff:toff + tdim, soff:soff + sdim] += self.Y.d(k + n)[v]
            # ± φ^{k+1} ∘ d_X^k
            dx = self.X.d(k)
            rep = self.Y.term(k + 1 + n)
            for s2, v2 in enumerate(self.X.term(k + 1)):
                coeffs = dx[s2, s]
                if not np.any(coeffs != 0):
                    continue
                soff2, sdim2 = src_pos[(self.X._norm(k + 1), s2)]
                if sdim2 == 0:
                    continue
                D[toff:toff + tdim, soff2:soff2 + sdim2] += sign * rep.element_matrix(coeffs, v2, v)
        D = f.normalize(D)
        self._D[key] = D
        return D

    def cohomology(self, n):
        """``(Z, B, H)``: column bases of cocycles, coboundaries, and cocycles complementing B."""
        key = self._n(n)
        if key in self._coh:
            return self._coh[key]
        f = self.field
        dim = self.dim(n)
        if dim == 0:
            empty = f.zeros((0, 0))
            res = (empty, empty, empty)
            self._coh[key] = res
            return res
        Dn = self.differential(n)
        Z = f.nullspace(Dn) if Dn.shape[0] else f.eye(dim)
        Dp = self.differential(n - 1)
        B = f.column_basis(Dp) if Dp.size else f.zeros((dim, 0))
        # H representatives: extend B inside Z
        H_cols = []
        cur = B
        for c in range(Z.shape[1]):
            cand = np.concatenate([cur, Z[:, c:c + 1]], axis=1)
            if f.rank(cand) > cur.shape[1]:
                cur = cand
                H_cols.append(c)
        H = Z[:, H_cols] if H_cols else f.zeros((dim, 0))
        res = (Z, B, H)
        self._coh[key] = res
        return res

    def h_dim(self, n) -> int:
        if self.dim(n) == 0:
            return 0
        f = self.field
        Dn = self.differential(n)
        Dp = self.differential(n - 1)
        zdim = self.dim(n) - (f.rank(Dn) if Dn.size else 0)
        bdim = f.rank(Dp) if Dp.size else 0
        return zdim - bdim

    def reduce(self, n, vec) -> np.ndarray:
        """Coordinates of a cocycle in the H basis (modulo coboundaries)."""
        f = self.field
        Z, B, H = self.cohomology(n)
        if H.shape[1] == 0:
            return f.zeros(0)
        sol = f.solve(np.concatenate([H, B], axis=1), vec)
        if sol is None:
            raise ValueError("vector is not a cocycle")
        return sol[:H.shape[1]]

    def to_chain_map(self, n, vec) -> ChainMap:
        if self.real is None:
            raise MismatchError("chain maps need a projective target")
        blocks, _ = self.layout(n)
        comps = {}
        A, f = self.X.algebra, self.field
        for k in self.X.degrees():
            comps[k] = f.zeros((len(self.Yproj.term(k + n)), len(self.X.term(k)), A.dim))
        for k, s, v, off, dim in blocks:
            if dim:
                comps[k][:, s, :] = self.real.vector_to_tensor(vec[off:off + dim], k + n, v)
        return ChainMap(self.X, self.Yproj, comps, n)

    def from_chain_map(self, phi: ChainMap) -> np.ndarray:
        n = phi.degree
        blocks, total = self.layout(n)
        f = self.field
        out = f.zeros(total)
        for k, s, v, off, dim in blocks:
            if dim:
                out[off:off + dim] = self.real.tensor_to_vector(phi.comp(k)[:, s, :], k + n, v)
        return out

    def cocycle_maps(self, n) -> list[ChainMap]:
        _, _, H = self.cohomology(n)
        return [self.to_chain_map(n, H[:, c]) for c in range(H.shape[1])]
