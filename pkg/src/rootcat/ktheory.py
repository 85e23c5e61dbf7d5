"""Grothendieck-group calculus: Cartan, Euler, symmetric and Coxeter matrices, GIMs, root bases."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .complexes import ProjComplex, cartan_columns
from .derived import as_projective, orbit_hom_dim, shifted
from .errors import MismatchError
from .linalg import QQ, PrimeField, make_field
from .quiver import BoundAlgebra
from .rep_lab import ext_dims
from .representation import Representation, canonical_modules, injective, simple


def _int_matrix(m) -> np.ndarray:
    out = np.zeros(np.shape(m), dtype=object)
    for idx, x in np.ndenumerate(m):
        x = Fraction(x)
        if x.denominator != 1:
            raise ArithmeticError(f"non-integral entry {x}: convention mismatch")
        out[idx] = int(x)
    return out.astype(np.int64)


@dataclass
class FormPack:
    cartan: np.ndarray
    euler: np.ndarray
    symmetric: np.ndarray
    coxeter: np.ndarray
    coxeter_order: object = None
    gim: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "cartan": self.cartan.tolist(),
            "euler": self.euler.tolist(),
            "symmetric": self.symmetric.tolist(),
            "coxeter": self.coxeter.tolist(),
            "coxeter_order": self.coxeter_order,
            "gim_verdict": self.gim.get("verdict"),
        }


def cartan_matrix(A: BoundAlgebra) -> np.ndarray:
    """``C[i, j] = dim Hom(P_i, P_j)`` = number of basis paths from ``j`` to ``i``."""
    n = A.n
    return np.array([[len(A.paths_between(j, i)) for j in range(n)] for i in range(n)], dtype=np.int64)


def euler_matrix(A: BoundAlgebra, field=3) -> np.ndarray:
    """``E[i, j] = Σ_k (-1)^k dim Ext^k(S_i, S_j)``."""
    S = [simple(A, field, v) for v in range(A.n)]
    E = np.zeros((A.n, A.n), dtype=np.int64)
    for i in range(A.n):
        for j in range(A.n):
            E[i, j] = sum((-1) ** k * d for k, d in enumerate(ext_dims(S[i], S[j])))
    return E


def orbit_euler_matrix(A: BoundAlgebra, field=3) -> np.ndarray:
    """``E_R[i, j] = dim R(S_i, S_j) - dim R(S_i, ΣS_j)`` from 2-periodic Hom spaces."""
    res = [as_projective(simple(A, field, v)) for v in range(A.n)]
    E = np.zeros((A.n, A.n), dtype=np.int64)
    for i in range(A.n):
        for j in range(A.n):
            E[i, j] = orbit_hom_dim(res[i], res[j]) - orbit_hom_dim(res[i], shifted(res[j], 1))
    return E


def dim_matrices(A: BoundAlgebra):
    """Columns are the dimension vectors of ``P_i`` and of ``I_i``."""
    P = cartan_columns(A)
    I = np.zeros_like(P)
    for v in range(A.n):
        for w in range(A.n):
            I[w, v] = len(A.paths_between(w, v))
    return P, I


def coxeter_from_projectives(A: BoundAlgebra) -> np.ndarray:
    """``Φ`` determined by ``[P_i] -> -[I_i]``, i.e. ``Φ = -I·P^{-1}`` on dimension vectors."""
    P, I = dim_matrices(A)
    Pinv = QQ.inverse(QQ.asarray(P.astype(object)))
    return _int_matrix(QQ.matmul(QQ.asarray(-I.astype(object)), Pinv))


def coxeter_from_euler(E) -> np.ndarray:
    """``Φ = -E^{-1} E^T``: with ``[P_i] = E^{-T} e_i`` and ``[I_i] = E^{-1} e_i``."""
    Eq = QQ.asarray(np.asarray(E).astype(object))
    return _int_matrix(QQ.matmul(QQ.inverse(Eq), QQ.asarray(-Eq.T)))


def matrix_order(M, bound: int = 1000):
    n = M.shape[0]
    ident = np.eye(n, dtype=object)
    cur = np.array(M, dtype=object)
    for k in range(1, bound + 1):
        if (cur == ident).all():
            return k
        cur = cur.dot(np.array(M, dtype=object))
    return "infinite beyond bound"


def form_pack(A: BoundAlgebra, field=3, order_bound: int = 1000) -> FormPack:
    E = euler_matrix(A, field)
    S = E + E.T
    phi = coxeter_from_projectives(A)
    return FormPack(cartan_matrix(A), E, S, phi, matrix_order(phi, order_bound), gim_classify(S))


def class_of(X) -> np.ndarray:
    """Class in the Grothendieck group, in the basis of simple classes."""
    if isinstance(X, Representation):
        return np.array(X.dims, dtype=np.int64)
    if isinstance(X, ProjComplex):
        return X.class_vector()
    raise TypeError(f"no class for {type(X).__name__}")


# ------------------------------------------------------------ GIM


def gim_classify(M) -> dict:
    """Classify an integer matrix as GCM, IM (intersection matrix), GIM or not-GIM, with witnesses."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    witnesses = []
    if M.shape != (n, n):
        return {"verdict": "not-GIM", "witnesses": [{"condition": "square", "ok": False}],
                "is_gim": False, "is_im": False, "is_gcm": False}
    gim = True
    for i in range(n):
        if M[i, i] != 2:
            gim = False
            witnesses.append({"condition": "diagonal == 2", "entry": [i, i], "value": int(M[i, i]), "ok": False})
    for i in range(n):
        for j in range(i + 1, n):
            a, b = int(M[i, j]), int(M[j, i])
            if (a < 0) != (b < 0) or (a > 0) != (b > 0):
                gim = False
                witnesses.append({"condition": "sign symmetry", "entry": [i, j], "value": [a, b], "ok": False})
    positive = [[i, j] for i in range(n) for j in range(n) if i != j and M[i, j] > 0]
    symmetric = bool((M == M.T).all())
    gcm = gim and not positive
    im = gim and symmetric
    if not gim:
        verdict = "not-GIM"
    elif gcm:
        verdict = "GCM"
    elif im:
        verdict = "IM"
    else:
        verdict = "GIM"
    if gim:
        witnesses.append({"condition": "diagonal == 2 and sign symmetry", "ok": True})
    witnesses.append({"condition": "symmetric", "ok": symmetric})
    witnesses.append({"condition": "off-diagonals <= 0", "ok": not positive,
                      "positive_entries": positive})
    return {"verdict": verdict, "witnesses": witnesses, "is_gim": gim, "is_im": im, "is_gcm": gcm}


@dataclass
class RootBasis:
    l: int
    H_dim: int
    coroot_matrix: np.ndarray  # rows: coroots as vectors in H
    root_matrix: np.ndarray  # rows: roots as functionals on H

    def pairing(self) -> np.ndarray:
        """``P[i, j] = α_j(α_i^∨)``."""
        return QQ.matmul(QQ.asarray(self.coroot_matrix), QQ.asarray(self.root_matrix).T)


def root_basis(M) -> RootBasis:
    """Realization with ``H = Q^{2l - rank}``: coroots ``[I | 0]``, roots ``[M^T | B]``.

    ``B`` adds standard coordinates so that the roots become independent; then
    ``α_j(α_i^∨) = M[i, j]``.
    """
    M = np.asarray(M, dtype=np.int64)
    cls = gim_classify(M)
    if not cls["is_gim"]:
        raise MismatchError("root_basis needs a GIM")
    l = M.shape[0]
    r = QQ.rank(QQ.asarray(M.astype(object)))
    k = l - r
    h = l + k
    Mq = QQ.asarray(M.T.astype(object))
    # pick k standard columns completing the rows of M^T to rank l
    extra = QQ.zeros((l, k))
    cur = Mq
    col = 0
    for i in range(l):
        if col == k:
            break
        e = QQ.zeros((l, 1))
        e[i, 0] = Fraction(1)
        cand = np.concatenate([cur, e], axis=1)
        if QQ.rank(cand) > QQ.rank(cur):
            cur = cand
            extra[i, col] = Fraction(1)
            col += 1
    coroots = np.concatenate([QQ.eye(l), QQ.zeros((l, k))], axis=1)
    roots = np.concatenate([Mq, extra], axis=1)
    rb = RootBasis(l, h, coroots, roots)
    pair = rb.pairing()
    assert (pair == QQ.asarray(M.astype(object))).all(), "pairing mismatch"
    assert QQ.rank(coroots) == l and QQ.rank(roots) == l, "root basis is not independent"
    return rb


# ------------------------------------------------------------ cross-checks


def isometry_check(A: BoundAlgebra, q: int = 3) -> dict:
    """Symmetric form from 2-periodic Hom dimensions against ``E + E^T`` from Ext dimensions."""
    E = euler_matrix(A, q)
    ER = orbit_euler_matrix(A, q)
    lhs = ER + ER.T
    rhs = E + E.T
    return {"ok": bool((lhs == rhs).all()), "orbit_symmetric": lhs.tolist(), "euler_symmetric": rhs.tolist()}


def coxeter_identification_check(A: BoundAlgebra, q: int = 3) -> dict:
    """``Φ`` from ``[P_i] -> -[I_i]`` against ``-E_R^{-1} E_R^T`` built from 2-periodic Hom dimensions."""
    phi_p = coxeter_from_projectives(A)
    ER = orbit_euler_matrix(A, q)
    phi_e = coxeter_from_euler(ER)
    E = euler_matrix(A, q)
    S = E + E.T
    isometric = bool((phi_p.T.dot(S).dot(phi_p) == S).all())
    return {
        "ok": bool((phi_p == phi_e).all()),
        "coxeter": phi_p.tolist(),
        "coxeter_from_euler": phi_e.tolist(),
        "order": matrix_order(phi_p),
        "preserves_symmetric_form": isometric,
    }
