"""Named verification checks, each returning a JSON-ready dict with an ``ok`` flag."""

from __future__ import annotations

from .complexes import ChainMap, ProjComplex, cone, fold, realize
from .derived import is_quasi_iso, orbit_hom_dim, periodic_end_is_local
from .hall_lie import build_hall_lie, gim_relation_check, verify_lemma_53
from .ktheory import (
    coxeter_identification_check,
    euler_matrix,
    form_pack,
    gim_classify,
    isometry_check,
    matrix_order,
    coxeter_from_projectives,
)
from .linalg import PrimeField
from .quiver import load_algebra, load_bundled

ISOMETRY_ALGEBRAS = ("a2", "dynkin/a3", "dynkin/d4", "ex32", "ex33", "ex53-m1n2")
COXETER_ORDERS = {"a2": 3, "dynkin/a3": 4, "dynkin/d4": 6}


def check_ex32(q: int = 3) -> dict:
    A = load_bundled("ex32")
    E = euler_matrix(A, q)
    S = E + E.T
    want = {"(S1|S2)": -2, "(S1|S3)": 2, "(S2|S3)": -2}
    got = {"(S1|S2)": int(S[0, 1]), "(S1|S3)": int(S[0, 2]), "(S2|S3)": int(S[1, 2])}
    return {"ok": got == want, "symmetric": S.tolist(), "values": got, "expected": want}


# ------------------------------------------------------------ the two-vertex cycle with one relation


class Ex33:
    """The complexes of the two-vertex example: ``P`` with differential ``h`` and ``E = P_2 ⊕ P_1 ⊕ P_2``.

    Matrices below are written row = target summand, column = source summand.
    """

    def __init__(self, q: int = 3):
        A = load_bundled("ex33")
        self.A = A
        self.field = PrimeField(q)
        self.P1, self.P2 = 0, 1
        a_alpha, a_beta = A.quiver.arrow_index("alpha"), A.quiver.arrow_index("beta")
        self.l = self._elem(self.P1, (a_beta,))  # Hom(P_2, P_1)
        self.gamma = self._elem(self.P2, (a_alpha,))  # Hom(P_1, P_2)
        self.h = self._elem(self.P1, (a_beta, a_alpha))  # Hom(P_1, P_1)
        self.one1 = self._elem(self.P1, ())
        self.one2 = self._elem(self.P2, ())

    def _elem(self, source, arrows):
        v = self.field.zeros(self.A.dim)
        idx = self.A.path_index(source, tuple(arrows))
        assert idx is not None, "missing basis path"
        v[idx] = 1
        return v

    def _tensor(self, rows):
        f = self.field
        out = f.zeros((len(rows), len(rows[0]), self.A.dim))
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                if e is not None:
                    out[i, j] = f.normalize(e)
        return out

    def E_terms(self):
        return [self.P2, self.P1, self.P2]

    def E_diff(self):
        g, l = self.gamma, self.l
        return self._tensor([[None, -g, -self.one2], [None, None, -l], [None, None, None]])

    def P_diff(self):
        return self._tensor([[self.h]])

    def phi(self):
        return self._tensor([[-self.l, self.one1, None]])

    def periodic(self):
        f, A = self.field, self.A
        E = ProjComplex(A, f, {0: self.E_terms(), 1: self.E_terms()}, {0: self.E_diff(), 1: self.E_diff()}, period=2)
        P = ProjComplex(A, f, {0: [self.P1], 1: [self.P1]}, {0: self.P_diff(), 1: self.P_diff()}, period=2)
        phi = ChainMap(E, P, {0: self.phi(), 1: self.phi()}, 0)
        return E, P, phi

    def window(self, width: int):
        """The same data on degrees ``0 .. width-1`` with zero outside."""
        f, A = self.field, self.A
        degs = range(width)
        E = ProjComplex(A, f, {k: self.E_terms() for k in degs},
                        {k: self.E_diff() for k in degs if k + 1 < width})
        P = ProjComplex(A, f, {k: [self.P1] for k in degs}, {k: self.P_diff() for k in degs if k + 1 < width})
        phi = ChainMap(E, P, {k: self.phi() for k in degs}, 0)
        return E, P, phi

    def triangle_data(self):
        """``X``, ``Y`` and the folded map ``f + g`` whose cone is ``E``."""
        f, A = self.field, self.A
        X = ProjComplex(A, f, {-1: [self.P2], 0: [self.P1, self.P2], 1: [self.P1]},
                        {-1: self._tensor([[self.l], [None]]), 0: self._tensor([[None, self.l]])})
        Y = ProjComplex(A, f, {0: [self.P2], 1: [self.P2]})
        fX, fY = fold(X), fold(Y)
        # fold(X): even = X^0 = [P1, P2], odd = X^-1 ⊕ X^1 = [P2, P1]
        even = self._tensor([[self.gamma, self.one2]])
        odd = self._tensor([[self.one2, self.gamma]])
        return X, Y, ChainMap(fX, fY, {0: even, 1: odd}, 0)


def check_ex33(q: int = 3, width: int = 8) -> dict:
    ex = Ex33(q)
    E, P, phi = ex.periodic()
    periodic_qi = phi.is_chain_map() and is_quasi_iso(phi)
    Ew, Pw, phiw = ex.window(width)
    cw = realize(cone(phiw))
    interior = range(1, width - 2)
    window_homology = {k: cw.homology_dims(k).tolist() for k in interior}
    window_ok = phiw.is_chain_map() and all(not any(v) for v in window_homology.values())
    local = periodic_end_is_local(P)
    X, Y, fg = ex.triangle_data()
    fg_ok = fg.is_chain_map()
    probes = [P, E, fold(X), fold(Y)] + [ProjComplex(ex.A, ex.field, {0: [v], 1: []}, period=2) for v in (0, 1)]
    probes += [ProjComplex(ex.A, ex.field, {0: [], 1: [v]}, period=2) for v in (0, 1)]
    fp_cone = [orbit_hom_dim(p, cone(fg)) for p in probes] if fg_ok else None
    fp_E = [orbit_hom_dim(p, E) for p in probes]
    return {
        "ok": bool(periodic_qi and window_ok and local),
        "chain_map_periodic": bool(phi.is_chain_map()),
        "quasi_iso_periodic": bool(periodic_qi),
        "window_width": width,
        "window_interior_homology": window_homology,
        "quasi_iso_window": bool(window_ok),
        "P_end_local": bool(local),
        "f_plus_g_chain_map": bool(fg_ok),
        "cone_f_plus_g_matches_E": fp_cone == fp_E,
    }


def check_a2_sl3(q: int = 3) -> dict:
    A = load_bundled("a2")
    table, lie = build_hall_lie(A, q)
    ctx = lie.ctx
    S = ctx.symmetric
    weights_ok = True
    n = lie.n
    for i in range(n):
        for j in range(n):
            res = lie.bracket(lie.h_simple(i), lie.u(ctx.simple_obj(j)))
            want = lie.u(ctx.simple_obj(j), int(S[i, j]))
            weights_ok &= (res - want).is_zero(q - 1)
    s1, s2 = lie.u(ctx.simple_obj(0)), lie.u(ctx.simple_obj(1))
    serre = lie.bracket(s1, lie.bracket(s1, s2)).is_zero(q - 1)
    jac = table.jacobi_failures()
    gim = gim_relation_check(lie)
    bracket12 = lie.bracket(s1, s2).to_dict(ctx)
    ok = table.dim == 8 and table.antisymmetry_ok() and not jac and weights_ok and serre
    return {"ok": bool(ok), "dimension": table.dim, "basis": table.labels, "antisymmetry": table.antisymmetry_ok(),
            "jacobi_failures": len(jac), "weights_match_symmetric": bool(weights_ok),
            "ad_u_S1_squared_u_S2_zero": bool(serre), "bracket_S1_S2": bracket12, "gim_relations_ok": gim["ok"]}


def check_coxeter_orders() -> dict:
    got = {name: matrix_order(coxeter_from_projectives(load_bundled(name))) for name in COXETER_ORDERS}
    return {"ok": got == COXETER_ORDERS, "orders": got, "expected": COXETER_ORDERS}


def check_isometry(q: int = 3) -> dict:
    rows = {}
    for name in ISOMETRY_ALGEBRAS:
        A = load_algebra(name)
        iso = isometry_check(A, q)
        cox = coxeter_identification_check(A, q)
        rows[name] = {"isometry": iso["ok"], "coxeter_agree": cox["ok"], "coxeter_order": cox["order"]}
    ok = all(r["isometry"] and r["coxeter_agree"] for r in rows.values())
    return {"ok": ok, "algebras": rows}


def check_ex53(q: int = 3, m: int = 1, n: int = 2) -> dict:
    return verify_lemma_53(m, n, q)


def check_gim_ex53() -> dict:
    A = load_bundled("ex53-m1n2")
    C = form_pack(A).symmetric
    cls = gim_classify(C)
    return {"ok": cls["verdict"] == "IM" and not cls["is_gcm"], "matrix": C.tolist(), "verdict": cls["verdict"]}


CHECKS = {
    "ex32": lambda q: check_ex32(q),
    "ex33": lambda q: check_ex33(q),
    "ex53": lambda q: check_ex53(q),
    "a2-sl3": lambda q: check_a2_sl3(q),
    "coxeter-orders": lambda q: check_coxeter_orders(),
    "isometry": lambda q: check_isometry(q),
}
