"""Finite-dimensional algebras given by structure constants over F_q.

Used for endomorphism rings: locality via exhaustive idempotent search, units
(automorphisms), and the radical of a local ring as its set of non-units.
"""

from __future__ import annotations

import numpy as np

from .errors import EnumerationCapExceeded, FieldError
from .linalg import PrimeField, batched_rank

DEFAULT_ELEMENT_CAP = 2 ** 20


class FiniteAlgebra:
    """``basis[i] * basis[j] = sum_k table[i, j, k] basis[k]`` with ``*`` meaning composition."""

    def __init__(self, field, table: np.ndarray, unit: np.ndarray, cap: int = DEFAULT_ELEMENT_CAP):
        if not isinstance(field, PrimeField):
            raise FieldError("ring enumeration needs a finite prime field")
        self.field = field
        self.table = np.asarray(table, dtype=np.int64) % field.q
        self.unit = np.asarray(unit, dtype=np.int64) % field.q
        self.dim = self.table.shape[0]
        self.cap = cap
        self._elements = None
        self._unit_mask = None

    def mul(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.table) % self.field.q

    def elements(self) -> np.ndarray:
        if self._elements is None:
            self._elements = self.field.elements(self.dim, cap=self.cap)
        return self._elements

    def left_matrices(self, xs) -> np.ndarray:
        """``L_x[k, j]``: coordinates of ``x * b_j``."""
        return np.einsum("ni,ijk->nkj", xs, self.table) % self.field.q

    def unit_mask(self) -> np.ndarray:
        if self._unit_mask is None:
            xs = self.elements()
            if self.dim == 0:
                self._unit_mask = np.zeros(len(xs), dtype=bool)
            else:
                out = np.zeros(len(xs), dtype=bool)
                step = 4096
                for start in range(0, len(xs), step):
                    mats = self.left_matrices(xs[start:start + step])
                    out[start:start + step] = batched_rank(mats, self.field.q) == self.dim
                self._unit_mask = out
        return self._unit_mask

    def units(self) -> np.ndarray:
        return self.elements()[self.unit_mask()]

    def idempotents(self) -> np.ndarray:
        xs = self.elements()
        sq = np.einsum("ni,nj,ijk->nk", xs, xs, self.table) % self.field.q
        return xs[(sq == xs).all(axis=1)]

    def nontrivial_idempotent(self):
        for e in self.idempotents():
            if np.any(e != 0) and np.any(e != self.unit):
                return e
        return None

    def is_local(self) -> bool:
        if self.dim == 0:
            return False
        if self.dim == 1:
            return True
        return self.nontrivial_idempotent() is None

    def radical_dim(self) -> int:
        """Dimension of the radical of a local ring (its non-units form a subspace)."""
        if not self.is_local():
            raise ValueError("radical via non-units needs a local ring")
        non_units = self.elements()[~self.unit_mask()]
        count = len(non_units)
        r = 0
        while self.field.q ** r < count:
            r += 1
        if self.field.q ** r != count or self.field.rank(non_units) != r:
            raise ArithmeticError("non-units of a local ring failed to form a subspace")
        return r

    def top_dim(self) -> int:
        """``dim End / rad End`` for a local ring."""
        return self.dim - self.radical_dim()


def check_cap(q: int, dim: int, cap: int):
    if q ** dim > cap:
        raise EnumerationCapExceeded(f"{q}^{dim} ring elements exceed cap {cap}")
