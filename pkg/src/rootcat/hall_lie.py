"""Ringel-Hall Lie algebras of root categories of hereditary algebras over F_q.

Objects are indecomposable modules ``X`` and their shifts ``ΣX``, realized as
2-periodic complexes of projectives (the folded minimal resolution). The triangle
Hall number ``F^L_{YX}`` counts Aut(X)-orbits of morphisms ``l: X -> L`` whose cone
is isomorphic to ``Y``; isomorphism classes are detected by Hom-dimension
fingerprints against the whole catalog.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .complexes import HomComplex, ProjComplex, cone, fold, shift
from .derived import end_ring
from .errors import CatalogIncomplete, DegenerateField, EnumerationCapExceeded, MismatchError, Unverifiable
from .ktheory import euler_matrix
from .linalg import PrimeField
from .quiver import BoundAlgebra
from .rep_lab import TUPLE_CAP, enumerate_indecomposables, min_projective_resolution
from .representation import Representation, simple
from .rings import DEFAULT_ELEMENT_CAP


def check_q(q: int) -> PrimeField:
    field = PrimeField(q)
    if q == 2:
        raise DegenerateField("q = 2 gives modulus q - 1 = 1, which collapses the Lie algebra to zero")
    return field


def positive_roots(algebra: BoundAlgebra) -> list[tuple]:
    """Positive roots of the Tits form of a quiver without relations (finite type only)."""
    n = algebra.n

    def tits(d):
        return sum(x * x for x in d) - sum(d[a.source] * d[a.target] for a in algebra.quiver.arrows)

    roots = set()
    layer = [tuple(1 if i == v else 0 for i in range(n)) for v in range(n)]
    while layer:
        nxt = []
        for d in layer:
            if d in roots:
                continue
            roots.add(d)
            for v in range(n):
                e = tuple(x + (1 if i == v else 0) for i, x in enumerate(d))
                if tits(e) == 1 and e not in roots:
                    nxt.append(e)
            if len(roots) > 10000:
                raise EnumerationCapExceeded("the Tits form is not positive definite")
        layer = nxt
    return sorted(roots, key=lambda d: (sum(d), d))


def default_dim_bound(algebra: BoundAlgebra) -> tuple:
    roots = positive_roots(algebra)
    return tuple(max(r[i] for r in roots) for i in range(algebra.n))


@dataclass(frozen=True)
class RObject:
    module: int  # index into the catalog
    parity: int  # 0 for X, 1 for ΣX


class HallContext:
    """Catalog of indecomposable objects of the root category of a hereditary algebra."""

    def __init__(self, algebra: BoundAlgebra, q: int, dim_bound=None, cap: int = TUPLE_CAP,
                 element_cap: int = DEFAULT_ELEMENT_CAP, modules=None):
        if algebra.ideal.relations:
            raise MismatchError("triangle Hall numbers are computed for hereditary algebras only")
        self.algebra = algebra
        self.q = q
        self.field = PrimeField(q)
        self.element_cap = element_cap
        if modules is None:
            bound = tuple(dim_bound) if dim_bound is not None else default_dim_bound(algebra)
            modules = enumerate_indecomposables(algebra, bound, q, cap).modules
            self.dim_bound = bound
        else:
            self.dim_bound = tuple(dim_bound) if dim_bound is not None else None
        self.modules: list[Representation] = list(modules)
        self.objects = [RObject(i, p) for p in (0, 1) for i in range(len(self.modules))]
        self.index = {o: k for k, o in enumerate(self.objects)}
        base = [fold(min_projective_resolution(m).complex) for m in self.modules]
        self.complexes = [base[o.module] if o.parity == 0 else shift(base[o.module], 1) for o in self.objects]
        self.classes = [np.array(self.modules[o.module].dims, dtype=np.int64) * (-1 if o.parity else 1)
                        for o in self.objects]
        self.symmetric = self._symmetric()
        self.fingerprints = [tuple(self.fingerprint(c)) for c in self.complexes]
        if len(set(self.fingerprints)) != len(self.fingerprints):
            raise CatalogIncomplete("two catalog objects share a fingerprint")
        self._fp_lookup = {fp: k for k, fp in enumerate(self.fingerprints)}
        self._rings = {}
        self._hall = {}
        self.cones_checked = 0

    def _symmetric(self):
        E = euler_matrix(self.algebra, self.field)
        return E + E.T

    # objects ------------------------------------------------------------
    def label(self, k: int) -> str:
        o = self.objects[k]
        dims = "".join(str(d) for d in self.modules[o.module].dims)
        return ("Σ" if o.parity else "") + f"M[{dims}]" + (f"#{o.module}" if self._ambiguous(o.module) else "")

    def _ambiguous(self, module: int) -> bool:
        dims = self.modules[module].dims
        return sum(1 for m in self.modules if m.dims == dims) > 1

    def find_module(self, rep: Representation) -> int:
        from .rep_lab import is_isomorphic

        for i, m in enumerate(self.modules):
            if m.dims == rep.dims and is_isomorphic(m, rep):
                return i
        raise CatalogIncomplete(f"module with dims {rep.dims} is not in the catalog")

    def obj(self, module: int, parity: int = 0) -> int:
        return self.index[RObject(module, parity % 2)]

    def simple_obj(self, v: int, parity: int = 0) -> int:
        return self.obj(self.find_module(simple(self.algebra, self.field, v)), parity)

    def shift_obj(self, k: int) -> int:
        o = self.objects[k]
        return self.obj(o.module, o.parity + 1)

    def fingerprint(self, Z: ProjComplex) -> list[int]:
        return [HomComplex(C, Z).h_dim(0) for C in self.complexes]

    def identify(self, Z: ProjComplex):
        """Catalog index of an indecomposable ``Z``, or None when ``Z`` is zero or decomposable."""
        return self._fp_lookup.get(tuple(self.fingerprint(Z)))

    def decompose(self, fp) -> list | None:
        """Multiset of catalog objects whose fingerprints add up to ``fp``, if one exists."""
        fp = np.array(fp, dtype=np.int64)
        fps = np.array(self.fingerprints, dtype=np.int64)

        def search(rest, start):
            if not rest.any():
                return []
            for k in range(start, len(fps)):
                if (fps[k] <= rest).all() and fps[k].any():
                    sub = search(rest - fps[k], k)
                    if sub is not None:
                        return [k] + sub
            return None

        return search(fp, 0)

    def check_middle_terms(self, x: int, y: int):
        """Every triangle ``X -> L -> Y -w-> ΣX`` has ``L ≅ Σ^{-1} Cone(w)``; each must split over the catalog."""
        key = ("mid", x, y)
        if key in self._hall:
            return
        hc = HomComplex(self.complexes[y], self.complexes[self.shift_obj(x)])
        H = hc.cohomology(0)[2]
        h = H.shape[1]
        if self.q ** h > self.element_cap:
            raise EnumerationCapExceeded(f"|Hom(Y, ΣX)| = {self.q}^{h} exceeds cap {self.element_cap}")
        for vec in self.field.elements(h)[1:] if h else []:
            w = hc.to_chain_map(0, self.field.matmul(H, vec.reshape(-1, 1))[:, 0])
            if self.decompose(self.fingerprint(cone(w))) is None:
                raise CatalogIncomplete(
                    f"a middle term of a triangle {self.label(x)} -> L -> {self.label(y)} is not a sum of catalog objects")
        self._hall[key] = True

    def end(self, k: int):
        if k not in self._rings:
            self._rings[k] = end_ring(self.complexes[k], self.element_cap)
        return self._rings[k]

    def d(self, k: int) -> int:
        ring, _ = self.end(k)
        return ring.top_dim()

    # Hall numbers -------------------------------------------------------
    def hall(self, x: int, y: int, l: int, check_complete: bool = False) -> int:
        """``F^L_{YX}``: Aut(X)-orbits of ``l: X -> L`` with ``Cone(l) ≅ Y``."""
        key = (x, y, l)
        if key in self._hall:
            return self._hall[key]
        if not (self.classes[l] - self.classes[x] == self.classes[y]).all():
            self._hall[key] = 0
            return 0
        q = self.q
        X, L = self.complexes[x], self.complexes[l]
        hc = HomComplex(X, L)
        maps = hc.cocycle_maps(0)
        h = len(maps)
        if q ** h > self.element_cap:
            raise EnumerationCapExceeded(f"|Hom(X, L)| = {q}^{h} exceeds cap {self.element_cap}")
        coeffs = self.field.elements(h)
        codes = coeffs @ (q ** np.arange(h, dtype=np.int64)) if h else np.zeros(1, dtype=np.int64)
        ring, ends = self.end(x)
        units = ring.units()
        if h:
            # comp[i, j] = coordinates of maps[i] ∘ ends[j]
            comp = np.zeros((h, len(ends), h), dtype=np.int64)
            for i, mi in enumerate(maps):
                for j, ej in enumerate(ends):
                    comp[i, j] = hc.reduce(0, hc.from_chain_map(mi.compose_after(ej)))
            reps = codes.copy()
            for a in units:
                img = np.einsum("ni,j,ijk->nk", coeffs, a, comp) % q
                reps = np.minimum(reps, img @ (q ** np.arange(h, dtype=np.int64)))
        else:
            reps = codes
        orbit_reps = sorted(set(int(r) for r in reps))
        target = self.fingerprints[y]
        count = 0
        for code in orbit_reps:
            vec = np.array([(code // q ** i) % q for i in range(h)], dtype=np.int64)
            if h:
                lvec = self.field.matmul(hc.cohomology(0)[2], vec.reshape(-1, 1))[:, 0]
                lmap = hc.to_chain_map(0, lvec)
            else:
                lmap = hc.to_chain_map(0, self.field.zeros(hc.dim(0)))
            fp = self.fingerprint(cone(lmap))
            self.cones_checked += 1
            if tuple(fp) == target:
                count += 1
            elif check_complete and self.decompose(fp) is None:
                raise CatalogIncomplete("a cone fingerprint matches no sum of catalog objects")
        self._hall[key] = count
        return count


def triangle_hall_number(ctx: HallContext, x: int, y: int, l: int) -> int:
    """``F^L_{YX}`` for catalog indices: triangles ``X -> L -> Y -> ΣX`` up to Aut(X)."""
    return ctx.hall(x, y, l)


# ------------------------------------------------------------ Lie elements


@dataclass
class LieElement:
    h: tuple  # rational vector in the Grothendieck group
    u: dict = dc_field(default_factory=dict)  # catalog index -> integer

    @classmethod
    def zero(cls, n: int):
        return cls(tuple(Fraction(0) for _ in range(n)), {})

    @classmethod
    def basis_u(cls, n: int, k: int, coeff: int = 1):
        return cls(tuple(Fraction(0) for _ in range(n)), {k: coeff})

    @classmethod
    def basis_h(cls, n: int, vec):
        return cls(tuple(Fraction(x) for x in vec), {})

    def __add__(self, other):
        u = dict(self.u)
        for k, c in other.u.items():
            u[k] = u.get(k, 0) + c
        return LieElement(tuple(a + b for a, b in zip(self.h, other.h)), {k: c for k, c in u.items() if c})

    def scale(self, c):
        return LieElement(tuple(c * x for x in self.h), {k: c * v for k, v in self.u.items() if c * v})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def reduced(self, modulus: int) -> "LieElement":
        """Coefficients mod ``modulus``; rational h-entries need denominators prime to it."""
        h = []
        for x in self.h:
            x = Fraction(x)
            if x.denominator == 1:
                h.append(Fraction(x.numerator % modulus))
            else:
                inv = pow(x.denominator, -1, modulus) if modulus > 1 else 0
                h.append(Fraction((x.numerator * inv) % modulus))
        u = {k: c % modulus for k, c in self.u.items() if c % modulus}
        return LieElement(tuple(h), u)

    def is_zero(self, modulus: int | None = None) -> bool:
        e = self.reduced(modulus) if modulus else self
        return not e.u and all(x == 0 for x in e.h)

    def to_dict(self, ctx: HallContext | None = None) -> dict:
        u = {(ctx.label(k) if ctx else str(k)): int(c) for k, c in sorted(self.u.items())}
        return {"h": [str(x) for x in self.h], "u": u}


class HallLie:
    """Bracket of the Ringel-Hall Lie algebra of a catalog (integers, with a mod ``q-1`` view)."""

    def __init__(self, ctx: HallContext, check_complete: bool = False):
        check_q(ctx.q)
        self.ctx = ctx
        self.n = ctx.algebra.n
        self.modulus = ctx.q - 1
        self.check_complete = check_complete
        self._uu = {}

    def form(self, a, b) -> Fraction:
        S = self.ctx.symmetric
        return sum(Fraction(a[i]) * int(S[i, j]) * Fraction(b[j]) for i in range(self.n) for j in range(self.n))

    def bracket_uu(self, x: int, y: int) -> LieElement:
        if (x, y) in self._uu:
            return self._uu[(x, y)]
        ctx = self.ctx
        if self.check_complete:
            ctx.check_middle_terms(x, y)
            ctx.check_middle_terms(y, x)
        target = ctx.classes[x] + ctx.classes[y]
        u = {}
        for l in range(len(ctx.objects)):
            if not (ctx.classes[l] == target).all():
                continue
            c = ctx.hall(x, y, l, self.check_complete) - ctx.hall(y, x, l, self.check_complete)
            if c:
                u[l] = c
        h = tuple(Fraction(0) for _ in range(self.n))
        if ctx.shift_obj(y) == x:
            dx = ctx.d(x)
            h = tuple(Fraction(-int(c), dx) for c in ctx.classes[x])
        res = LieElement(h, u)
        self._uu[(x, y)] = res
        return res

    def bracket(self, a: LieElement, b: LieElement) -> LieElement:
        out = LieElement.zero(self.n)
        for x, cx in a.u.items():
            for y, cy in b.u.items():
                out = out + self.bracket_uu(x, y).scale(cx * cy)
        for y, cy in b.u.items():
            w = self.form(a.h, self.ctx.classes[y])
            if w:
                out = out + LieElement.basis_u(self.n, y, int(w * cy) if Fraction(w * cy).denominator == 1 else w * cy)
        for x, cx in a.u.items():
            w = self.form(b.h, self.ctx.classes[x])
            if w:
                out = out - LieElement.basis_u(self.n, x, int(w * cx) if Fraction(w * cx).denominator == 1 else w * cx)
        return out

    def u(self, k: int, c: int = 1) -> LieElement:
        return LieElement.basis_u(self.n, k, c)

    def h(self, vec) -> LieElement:
        return LieElement.basis_h(self.n, vec)

    def h_simple(self, i: int) -> LieElement:
        return self.h([1 if j == i else 0 for j in range(self.n)])


def lie_bracket(lie: HallLie, a: LieElement, b: LieElement, mod_view: bool = False) -> LieElement:
    out = lie.bracket(a, b)
    return out.reduced(lie.modulus) if mod_view else out


# ------------------------------------------------------------ structure-constant tables


@dataclass
class HallTable:
    labels: list
    q: int
    table: np.ndarray  # integer structure constants [i, j, k]
    n_u: int
    n_h: int

    @property
    def modulus(self) -> int:
        return self.q - 1

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mod_table(self) -> np.ndarray:
        return np.mod(self.table, self.modulus)

    def antisymmetry_ok(self) -> bool:
        t = self.mod_table()
        return bool((np.mod(t + t.transpose(1, 0, 2), self.modulus) == 0).all())

    def jacobi_failures(self) -> list:
        t = self.mod_table()
        m = self.modulus
        # [[a,b],c] as J1[a,b,c,:]
        j1 = np.einsum("abl,lcm->abcm", t, t)
        total = j1 + j1.transpose(1, 2, 0, 3) + j1.transpose(2, 0, 1, 3)
        bad = np.argwhere(np.mod(total, m).any(axis=3))
        return [tuple(int(x) for x in b) for b in bad]

    def to_dict(self, mod_view: bool = False) -> dict:
        t = self.mod_table() if mod_view else self.table
        brackets = []
        for i in range(self.dim):
            for j in range(self.dim):
                if t[i, j].any():
                    brackets.append([i, j, [int(x) for x in t[i, j]]])
        return {"basis": self.labels, "brackets": brackets, "q": self.q, "modulus": self.modulus}

    def dumps(self, mod_view: bool = False) -> str:
        return json.dumps(self.to_dict(mod_view), sort_keys=True)


def build_hall_lie(algebra: BoundAlgebra, q: int = 3, dim_bound=None, check_complete: bool = True,
                   cap: int = TUPLE_CAP) -> tuple[HallTable, HallLie]:
    """Structure constants on ``{u_X : X indecomposable} ∪ {h_i}``.

    The h-part of a bracket is written in the basis ``h_i = [S_i]``; an entry
    that is not an integer raises, since the table is integral.
    """
    check_q(q)
    ctx = HallContext(algebra, q, dim_bound, cap=cap)
    lie = HallLie(ctx, check_complete=check_complete)
    n_u = len(ctx.objects)
    n = algebra.n
    labels = [ctx.label(k) for k in range(n_u)] + [f"h{algebra.quiver.vertices[i]}" for i in range(n)]
    dim = n_u + n
    table = np.zeros((dim, dim, dim), dtype=np.int64)

    def elem(i):
        return lie.u(i) if i < n_u else lie.h_simple(i - n_u)

    for i in range(dim):
        for j in range(dim):
            res = lie.bracket(elem(i), elem(j))
            for k, c in res.u.items():
                table[i, j, k] = _as_int(c)
            for v, c in enumerate(res.h):
                table[i, j, n_u + v] = _as_int(c)
    return HallTable(labels, q, table, n_u, n), lie


def _as_int(c) -> int:
    c = Fraction(c)
    if c.denominator != 1:
        raise ArithmeticError(f"non-integral structure constant {c}")
    return int(c)


# ------------------------------------------------------------ GIM relations


def ad_power(lie: HallLie, x: LieElement, y: LieElement, k: int) -> LieElement:
    for _ in range(k):
        y = lie.bracket(x, y)
    return y


def gim_relation_check(lie: HallLie, C=None) -> dict:
    """Check relations (1)-(5) of the GIM Lie algebra on ``e_i -> u_{S_i}``, ``e_{-i} -> -u_{ΣS_i}``, ``α_i^∨ -> h_i``."""
    ctx = lie.ctx
    n = lie.n
    m = lie.modulus
    C = np.asarray(ctx.symmetric if C is None else C, dtype=np.int64)
    report = []

    def record(name, fn):
        try:
            ok = fn()
            report.append({"relation": name, "status": "pass" if ok else "fail"})
        except (CatalogIncomplete, KeyError, Unverifiable) as exc:
            report.append({"relation": name, "status": "unverifiable", "reason": str(exc)})

    try:
        e = {i: lie.u(ctx.simple_obj(i, 0)) for i in range(n)}
        f = {i: lie.u(ctx.simple_obj(i, 1), -1) for i in range(n)}
    except CatalogIncomplete as exc:
        return {"ok": False, "relations": [{"relation": "generators", "status": "unverifiable", "reason": str(exc)}]}
    hs = {i: lie.h_simple(i) for i in range(n)}
    gens = {(i, 1): e[i] for i in range(n)}
    gens.update({(i, -1): f[i] for i in range(n)})

    for i in range(n):
        for j in range(n):
            record(f"(1) [h{i},h{j}]=0", lambda i=i, j=j: lie.bracket(hs[i], hs[j]).is_zero(m))
    for i in range(n):
        for (j, s), g in gens.items():
            record(f"(2) [h{i},e{'+' if s > 0 else '-'}{j}]",
                   lambda i=i, g=g, s=s, j=j: (lie.bracket(hs[i], g) - g.scale(s * int(C[i, j]))).is_zero(m))
    for i in range(n):
        record(f"(3) [e+{i},e-{i}]=h{i}", lambda i=i: (lie.bracket(e[i], f[i]) - hs[i]).is_zero(m))
    for i in range(n):
        for (j, s), g in gens.items():
            beta_pos = s * int(C[i, j])  # β(α_i^∨)
            k4 = max(1, 1 - beta_pos)
            record(f"(4) ad(e+{i})^{k4} e{'+' if s > 0 else '-'}{j}=0",
                   lambda i=i, g=g, k=k4: ad_power(lie, e[i], g, k).is_zero(m))
            k5 = max(1, 1 + beta_pos)
            record(f"(5) ad(e-{i})^{k5} e{'+' if s > 0 else '-'}{j}=0",
                   lambda i=i, g=g, k=k5: ad_power(lie, f[i], g, k).is_zero(m))
    ok = all(r["status"] == "pass" for r in report)
    return {"ok": ok, "relations": report}


# ------------------------------------------------------------ module-level brackets


class ModuleHallLie:
    """Hall bracket restricted to modules: ``[u_X, u_Y] = Σ_L (F^L_{YX} - F^L_{XY}) u_L``.

    ``F^L_{YX}`` counts submodules ``N ⊆ L`` with ``N ≅ X`` and ``L/N ≅ Y``. Elements
    are dicts keyed by ``(dims, index)`` into the per-dimension-vector catalogs.
    """

    def __init__(self, algebra: BoundAlgebra, q: int, cap: int = TUPLE_CAP):
        self.algebra = algebra
        self.q = q
        self.field = check_q(q)
        self.cap = cap
        self._cat = {}

    def catalog(self, dims) -> list:
        from .rep_lab import indecomposables_of_dim

        dims = tuple(int(x) for x in dims)
        if dims not in self._cat:
            self._cat[dims] = indecomposables_of_dim(self.algebra, dims, self.q, self.cap)
        return self._cat[dims]

    def key_of(self, rep: Representation):
        from .rep_lab import is_isomorphic

        for i, m in enumerate(self.catalog(rep.dims)):
            if is_isomorphic(m, rep):
                return (rep.dims, i)
        raise CatalogIncomplete(f"module with dims {rep.dims} is not an indecomposable of the catalog")

    def rep(self, key) -> Representation:
        return self.catalog(key[0])[key[1]]

    def bracket_keys(self, x, y) -> dict:
        from .rep_lab import hall_number_mod

        X, Y = self.rep(x), self.rep(y)
        dims = tuple(int(a + b) for a, b in zip(X.dims, Y.dims))
        out = {}
        for i, L in enumerate(self.catalog(dims)):
            c = hall_number_mod(X, Y, L) - hall_number_mod(Y, X, L)
            if c:
                out[(dims, i)] = c
        return out

    def bracket(self, a: dict, b: dict) -> dict:
        out = {}
        for x, cx in a.items():
            for y, cy in b.items():
                for k, c in self.bracket_keys(x, y).items():
                    out[k] = out.get(k, 0) + cx * cy * c
        return {k: c for k, c in out.items() if c}


# ------------------------------------------------------------ the gl.dim 2 family


def ex53_module_M(algebra: BoundAlgebra, field) -> Representation:
    """The indecomposable with composition factors ``S_0, S_1, S_2, S_{n+1}``.

    One-dimensional at those vertices, ``alpha = 0`` and ``alpha2, gamma, beta`` the identity.
    """
    beta = algebra.quiver.arrows[algebra.quiver.arrow_index("beta")]
    support = {0, 1, 2, beta.target}
    dims = [1 if v in support else 0 for v in range(algebra.n)]
    maps = []
    for a in algebra.quiver.arrows:
        on = a.name in ("alpha2", "gamma", "beta")
        maps.append(field.eye(1) if on else field.zeros((dims[a.target], dims[a.source])))
    return Representation(algebra, field, dims, maps)


def yoneda_module_map(real, degree: int, vectors: dict, M: Representation) -> list:
    """Per-vertex blocks of the module map ``X^degree -> M`` sending the generator of summand ``s`` to ``vectors[s]``."""
    A, f = M.algebra, M.field
    blocks = []
    for w in range(A.n):
        idx = real.index.get(degree, [[] for _ in range(A.n)])[w]
        m = f.zeros((M.dims[w], len(idx)))
        for c, (s, p) in enumerate(idx):
            vec = vectors.get(s)
            if vec is not None and M.dims[w]:
                m[:, c] = f.matmul(M.path_matrix(p), f.asarray(vec).reshape(-1, 1))[:, 0]
        blocks.append(m)
    return blocks


def ex53_paper_L(res_complex: ProjComplex, cocycle_vec, hc, M: Representation):
    """``Q -> M ⊕ P^{-1} -> P^0`` in degrees -3, -2, -1, built from an Ext^2 Yoneda cocycle ``Q -> M``."""
    from .complexes import Realization, RepComplex
    from .representation import direct_sum

    A, f = M.algebra, M.field
    real = Realization(res_complex)
    R = real.complex
    blocks, _ = hc.layout(2)
    vectors = {s: cocycle_vec[off:off + dim] for k, s, v, off, dim in blocks if k == -2 and dim}
    phi = yoneda_module_map(real, -2, vectors, M)
    terms = {-3: R.term(-2), -2: direct_sum(M, R.term(-1)), -1: R.term(0)}
    d3, d2 = [], []
    for w in range(A.n):
        d3.append(f.normalize(np.concatenate([phi[w], -R.d(-2)[w]], axis=0)))
        zero = f.zeros((R.term(0).dims[w], M.dims[w]))
        d2.append(f.normalize(np.concatenate([zero, -R.d(-1)[w]], axis=1)))
    L = RepComplex(A, f, terms, {-3: d3, -2: d2})
    assert L.is_complex() and L.is_chain_compatible(), "paper complex L is not a complex of modules"
    return L


def verify_lemma_53(m: int = 1, n: int = 2, q: int = 3) -> dict:
    """Scripted sub-claims (a)-(e) about ``M``, its End ring and the cone ``L``."""
    from .complexes import module_complex, realize, stalk
    from .derived import cone as reduced_cone, orbit_hom_dim, periodic_end_is_local, shifted
    from .quiver import ex53_spec, parse_algebra
    from .rep_lab import is_indecomposable, is_isomorphic

    field = check_q(q)
    A = parse_algebra(ex53_spec(m, n))
    M = ex53_module_M(A, field)
    beta = A.quiver.arrows[A.quiver.arrow_index("beta")]
    claims = {}

    # (a) iterated bracket of simples in the module category
    mod = ModuleHallLie(A, q)
    gens = [0, 1, 2, beta.target]
    elem = {mod.key_of(simple(A, field, gens[0])): 1}
    steps = []
    for v in gens[1:]:
        elem = mod.bracket(elem, {mod.key_of(simple(A, field, v)): 1})
        steps.append({f"{list(k[0])}#{k[1]}": c for k, c in sorted(elem.items())})
    coeff = None
    if len(elem) == 1:
        (key, c), = elem.items()
        if is_isomorphic(mod.rep(key), M):
            coeff = c
    unit = coeff is not None and coeff % (q - 1) in {1 % (q - 1), (q - 2) % (q - 1)}
    claims["a"] = {"ok": bool(unit), "coefficient": coeff, "steps": steps,
                   "statement": "[[[u_S0,u_S1],u_S2],u_S(n+1)] = ±u_M"}

    # (b) End of M in the orbit category
    res = min_projective_resolution(M).complex
    ring, _ = end_ring(res)
    orbit = orbit_hom_dim(res, res)
    rad = ring.radical_dim() if ring.is_local() else None
    claims["b"] = {"ok": orbit == 2 and ring.dim == 2 and rad == 1, "orbit_hom_dim": orbit,
                   "end_dim_folded": ring.dim, "radical_dim": rad}

    # (c) cone of the radical generator against the explicit complex
    hc = HomComplex(res, res)
    gens2 = hc.cocycle_maps(2)
    L = None
    if len(gens2) == 1:
        L = reduced_cone(gens2[0])
        hm = HomComplex(res, module_complex(M))
        H = hm.cohomology(2)[2]
        Lp = ex53_paper_L(res, H[:, 0], hm, M) if H.shape[1] == 1 else None
        probes = [as_proj for v in range(A.n)
                  for as_proj in (min_projective_resolution(simple(A, field, v)).complex, stalk(A, field, [v]))]
        probes += [res, L]
        probes += [shifted(p, 1) for p in list(probes)]
        fp_cone = [orbit_hom_dim(p, L) for p in probes]
        fp_paper = [orbit_hom_dim(p, Lp) for p in probes] if Lp is not None else None
        hom_cone = {k: v.tolist() for k, v in realize(L).nonzero_homology().items()}
        hom_paper = {k: v.tolist() for k, v in Lp.nonzero_homology().items()} if Lp is not None else None
        claims["c"] = {"ok": fp_paper is not None and fp_cone == fp_paper and hom_cone == hom_paper,
                       "ext2_dim": len(gens2), "fingerprint_cone": fp_cone, "fingerprint_explicit": fp_paper,
                       "homology_cone": hom_cone, "homology_explicit": hom_paper}
    else:
        claims["c"] = {"ok": False, "ext2_dim": len(gens2)}

    # (d) L indecomposable in the orbit category
    claims["d"] = {"ok": bool(L is not None and periodic_end_is_local(L)),
                   "end_dim": end_ring(L)[0].dim if L is not None else None}

    # (e) Hom(M, L)
    mh = orbit_hom_dim(res, L) if L is not None else None
    claims["e"] = {"ok": mh == 1, "orbit_hom_dim": mh}
    return {"m": m, "n": n, "q": q, "M_dims": list(M.dims), "M_indecomposable": is_indecomposable(M),
            "claims": claims, "ok": all(c["ok"] for c in claims.values())}


def theorem5_case3(m: int, n: int, j: int, q: int = 3, opposite: bool = False) -> dict:
    """Vanishing of ``[u_S0, u_Sj]`` and ``[u_S0, u_ΣSj]`` by the split-triangle argument.

    If every orbit Hom space between ``S_0`` and ``S_j``, ``ΣS_j`` vanishes in both
    directions, each triangle with these end terms splits, so no indecomposable
    middle term occurs and the bracket is zero. Otherwise the value is reported as
    unverifiable rather than guessed. ``opposite`` runs the same test over the
    opposite algebra (right modules).
    """
    from .derived import as_projective, orbit_hom_dim, shifted
    from .quiver import ex53_spec, opposite_spec, parse_algebra

    field = check_q(q)
    spec = ex53_spec(m, n)
    A = parse_algebra(opposite_spec(spec) if opposite else spec)
    S0 = as_projective(simple(A, field, 0))
    Sj_mod = simple(A, field, j)
    res = min_projective_resolution(Sj_mod)
    Sj = res.complex
    homs = {}
    for k in (0, 1):
        homs[f"Hom(S0,Σ^{k}Sj)"] = orbit_hom_dim(S0, shifted(Sj, k))
        homs[f"Hom(Σ^{k}Sj,S0)"] = orbit_hom_dim(shifted(Sj, k), S0)
    # [u_S0, u_Y] needs Hom(Y, ΣS0) = 0 and Hom(S0, ΣY) = 0
    split_plain = homs["Hom(Σ^0Sj,S0)"] == 0 and homs["Hom(S0,Σ^1Sj)"] == 0 and homs["Hom(Σ^1Sj,S0)"] == 0 \
        and homs["Hom(S0,Σ^0Sj)"] == 0
    brackets = {
        "[u_S0,u_Sj]": "0" if split_plain else "unverifiable",
        "[u_S0,u_ΣSj]": "0" if split_plain else "unverifiable",
    }
    pd = res.length
    return {
        "m": m, "n": n, "j": j, "q": q, "opposite": opposite,
        "case3_vertex": j not in (0, 1, 2, n + 1),
        "projective_dimension": pd,
        "resolution_terms": [list(t) for t in res.terms],
        "P0_absent": not res.involves(0),
        "orbit_homs": homs,
        "brackets": brackets,
        "checks": {"pd == 2": pd == 2, "P0 absent": not res.involves(0),
                   "brackets vanish": split_plain},
        "ok": pd == 2 and not res.involves(0) and split_plain,
    }
