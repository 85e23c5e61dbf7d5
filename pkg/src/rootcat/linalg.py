"""Exact linear algebra over prime fields F_q and the rationals.

Matrices are numpy arrays: ``int64`` reduced mod q for prime fields, ``object``
arrays of :class:`fractions.Fraction` for the rationals. Both field classes
expose the same small interface, so the representation-theoretic code above
never branches on the field kind.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import EnumerationCapExceeded, FieldError

DEFAULT_Q_CAP = 13


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class _Field:
    kind = "abstract"
    q: int | None = None

    # subclasses provide: dtype, normalize, inv_scalar, scalar, to_int

    def asarray(self, data) -> np.ndarray:
        arr = np.array(data, dtype=self.dtype)
        return self.normalize(arr)

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.scalar(1)
        return out

    def matmul(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        return self.normalize(a @ b)

    def rref(self, mat):
        """Reduced row echelon form; returns ``(R, pivot_columns)``."""
        a = self.asarray(mat).copy()
        if a.ndim != 2:
            raise ValueError("rref expects a 2-d matrix")
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c] != 0)[0]
            if len(nz) == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                a[[r, p]] = a[[p, r]]
            a[r] = self.normalize(a[r] * self.inv_scalar(a[r, c]))
            col = a[:, c].copy()
            col[r] = 0
            nzr = np.nonzero(col != 0)[0]
            if len(nzr):
                a[nzr] = self.normalize(a[nzr] - np.outer(col[nzr], a[r]))
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self, mat) -> int:
        mat = np.asarray(mat)
        if mat.size == 0:
            return 0
        return len(self.rref(mat)[1])

    def nullspace(self, mat) -> np.ndarray:
        """Basis of ``{x : mat @ x = 0}`` as the columns of the returned matrix."""
        mat = np.asarray(mat)
        n = mat.shape[1]
        if mat.shape[0] == 0 or mat.size == 0:
            return self.eye(n)
        r, pivots = self.rref(mat)
        free = [c for c in range(n) if c not in set(pivots)]
        out = self.zeros((n, len(free)))
        for j, f in enumerate(free):
            out[f, j] = self.scalar(1)
            for i, p in enumerate(pivots):
                out[p, j] = self.scalar(-r[i, f])
        return out

    def column_basis(self, mat) -> np.ndarray:
        """Independent columns spanning the column space of ``mat``."""
        mat = self.asarray(mat)
        if mat.size == 0:
            return self.zeros((mat.shape[0], 0))
        _, pivots = self.rref(mat)
        return mat[:, pivots]

    def solve(self, a, b):
        """One solution ``x`` of ``a @ x = b`` (``b`` vector or matrix), or None."""
        a = self.asarray(a)
        b = self.asarray(b)
        vector = b.ndim == 1
        if vector:
            b = b.reshape(-1, 1)
        n = a.shape[1]
        if a.shape[0] == 0:
            return self.zeros((n,) if vector else (n, b.shape[1]))
        aug = np.concatenate([a, b], axis=1)
        r, pivots = self.rref(aug)
        if any(p >= n for p in pivots):
            return None
        x = self.zeros((n, b.shape[1]))
        for i, p in enumerate(pivots):
            x[p] = r[i, n:]
        return x[:, 0] if vector else x

    def inverse(self, a) -> np.ndarray:
        a = self.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        x = self.solve(a, self.eye(n))
        if x is None or self.rank(a) < n:
            raise ValueError("matrix is singular")
        return x

    def extend_to_basis(self, sub: np.ndarray, n: int) -> np.ndarray:
        """Columns completing the independent columns ``sub`` to a basis of the ambient space."""
        current = sub if sub.size else self.zeros((n, 0))
        extra = []
        for i in range(n):
            e = self.zeros((n, 1))
            e[i, 0] = self.scalar(1)
            cand = np.concatenate([current, e], axis=1)
            if self.rank(cand) > current.shape[1]:
                current = cand
                extra.append(i)
        out = self.zeros((n, len(extra)))
        for j, i in enumerate(extra):
            out[i, j] = self.scalar(1)
        return out


class PrimeField(_Field):
    kind = "prime"
    dtype = np.int64

    def __init__(self, q: int, cap: int = DEFAULT_Q_CAP):
        if not isinstance(q, (int, np.integer)) or not is_prime(int(q)):
            raise FieldError(f"q={q} is not a prime")
        if q > cap:
            raise FieldError(f"q={q} exceeds the configured cap {cap}")
        self.q = int(q)

    def normalize(self, arr):
        return np.mod(arr, self.q)

    def inv_scalar(self, x):
        x = int(x) % self.q
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.q - 2, self.q)

    def scalar(self, x):
        return int(x) % self.q

    def to_int(self, x) -> int:
        return int(x)

    def order(self) -> int:
        return self.q

    def elements(self, dim: int, cap: int | None = None) -> np.ndarray:
        """All vectors of ``F_q^dim`` as rows, in lexicographic order."""
        total = self.q ** dim
        if cap is not None and total > cap:
            raise EnumerationCapExceeded(f"{total} elements of F_{self.q}^{dim} exceed cap {cap}")
        if dim == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grid = np.array(list(itertools.product(range(self.q), repeat=dim)), dtype=np.int64)
        return grid

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("prime", self.q))

    def __repr__(self):
        return f"GF({self.q})"


class RationalField(_Field):
    kind = "rational"
    dtype = object

    def normalize(self, arr):
        arr = np.asarray(arr, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        out.flat = [v if isinstance(v, Fraction) else Fraction(v) for v in arr.flat]
        return out

    def inv_scalar(self, x):
        return 1 / Fraction(x)

    def scalar(self, x):
        return Fraction(x)

    def to_int(self, x) -> int:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return int(x)

    def order(self):
        raise FieldError("enumeration needs a finite field")

    def elements(self, dim, cap=None):
        raise FieldError("enumeration needs a finite field")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def make_field(spec) -> _Field:
    """``"Q"``/``"rational"``/``None``-free field constructor; ints give prime fields."""
    if isinstance(spec, _Field):
        return spec
    if isinstance(spec, str):
        if spec.lower() in ("q", "qq", "rational", "rationals"):
            return QQ
        spec = int(spec)
    return PrimeField(int(spec))


def int_matrix_rank(mat) -> int:
    return QQ.rank(QQ.asarray(np.asarray(mat, dtype=object)))


def subspaces(n: int, k: int, field: PrimeField):
    """Yield every k-dimensional subspace of F_q^n as an (n x k) column-basis matrix in RREF."""
    q = field.q
    for piv in itertools.combinations(range(n), k):
        # free positions: row i (basis vector i) may have entries in columns > piv[i] that are not pivots
        free = [(i, c) for i in range(k) for c in range(piv[i] + 1, n) if c not in piv]
        for values in itertools.product(range(q), repeat=len(free)):
            b = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(piv):
                b[i, p] = 1
            for (i, c), v in zip(free, values):
                b[i, c] = v
            yield b.T.copy()


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def batched_rank(mats: np.ndarray, q: int) -> np.ndarray:
    """Rank of each matrix in a stack ``(B, r, c)`` over F_q, by vectorized elimination."""
    a = np.mod(np.array(mats, dtype=np.int64), q)
    b, rows, cols = a.shape
    rank = np.zeros(b, dtype=np.int64)
    inv = np.array([0] + [pow(x, q - 2, q) for x in range(1, q)], dtype=np.int64)
    batch = np.arange(b)
    for c in range(cols):
        # candidate pivot rows are those at or below the current rank
        row_ids = np.arange(rows)[None, :]
        eligible = (a[:, :, c] != 0) & (row_ids >= rank[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(eligible, axis=1)
        sel = batch[has]
        pr = piv[has]
        tr = rank[has]
        # swap pivot row into position `rank`
        top = a[sel, tr].copy()
        a[sel, tr] = a[sel, pr]
        a[sel, pr] = top
        scale = inv[a[sel, tr, c]]
        a[sel, tr] = np.mod(a[sel, tr] * scale[:, None], q)
        factors = a[sel, :, c].copy()
        factors[np.arange(len(sel)), tr] = 0
        a[sel] = np.mod(a[sel] - factors[:, :, None] * a[sel, tr][:, None, :], q)
        rank[has] += 1
        if (rank >= rows).all():
            break
    return rank
