"""Exact matrices for left and right multiplication on the face algebra.

An operator is stored as an integer array M with a positive denominator d
(the operator is M / d).  Arrays are assembled with numpy scatter-adds over
the product table.  Products use float64 BLAS when a magnitude bound
guarantees every partial sum is an exactly representable integer, int64
when it fits, and Python integers otherwise.  Ranks go through FLINT.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from flint import fmpq_mat, fmpz_mat

from .faces import FaceAlgebraElement, face_monoid

__all__ = [
    "IntMatrix",
    "common_denominator",
    "left_operator",
    "right_operator",
    "element_matrix",
    "column_element",
]

_INT64_SAFE = 2**62
_FLOAT_EXACT = 2**53


@dataclass(frozen=True)
class IntMatrix:
    """The rational matrix num / den."""

    num: np.ndarray
    den: int

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        a, b = self.num, other.num
        bound = _max_abs(a) * _max_abs(b) * a.shape[1]
        if bound < _FLOAT_EXACT:
            # every partial sum is an integer below 2^53, so BLAS is exact here
            prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        elif bound < _INT64_SAFE:
            prod = a.astype(np.int64) @ b.astype(np.int64)
        else:
            prod = a.astype(object) @ b.astype(object)
        return IntMatrix(prod, self.den * other.den)

    def same_as(self, other: "IntMatrix") -> bool:
        """Exact equality of num/den and other.num/other.den."""
        return _equal_scaled(self.num, other.den, other.num, self.den)

    def column(self, j: int) -> "IntMatrix":
        return IntMatrix(self.num[:, j : j + 1], self.den)

    def trace(self) -> Fraction:
        return Fraction(int(np.trace(self.num.astype(object))), self.den)

    def rank(self) -> int:
        return fmpz_mat(self.num.shape[0], self.num.shape[1], [int(v) for v in self.num.ravel().tolist()]).rank()

    def to_fmpq(self) -> fmpq_mat:
        Z = fmpz_mat(self.num.shape[0], self.num.shape[1], [int(v) for v in self.num.ravel().tolist()])
        return fmpq_mat(Z) / self.den


def _max_abs(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def _equal_scaled(a: np.ndarray, ka: int, b: np.ndarray, kb: int) -> bool:
    """a * ka == b * kb, elementwise and exactly."""
    if _max_abs(a) * ka < _INT64_SAFE and _max_abs(b) * kb < _INT64_SAFE:
        return bool(np.array_equal(a.astype(np.int64) * ka, b.astype(np.int64) * kb))
    return bool(np.array_equal(a.astype(object) * ka, b.astype(object) * kb))


def common_denominator(elems: Sequence[FaceAlgebraElement]) -> int:
    d = 1
    for x in elems:
        for c in x.terms.values():
            d = math.lcm(d, Fraction(c).denominator)
    return d


def _int_coeffs(x: FaceAlgebraElement, d: int) -> list[tuple[int, int]]:
    """(face index, integer coefficient) pairs of d * x."""
    idx = face_monoid(x.n).index
    return [(idx[f], int(Fraction(c) * d)) for f, c in x.terms.items()]


def _scatter(n: int, x: FaceAlgebraElement, left: bool) -> IntMatrix:
    mon = face_monoid(n)
    tab = mon.table
    N = len(mon)
    d = common_denominator([x])
    pairs = _int_coeffs(x, d)
    total = sum(abs(c) for _, c in pairs)
    M = np.zeros((N, N), dtype=np.int64 if total < _INT64_SAFE else object)
    cols = np.arange(N)
    for a, c in pairs:
        rows = tab[a] if left else tab[:, a]
        # one entry per column, so no index repeats within this update
        M[rows, cols] += c
    return IntMatrix(M, d)


def left_operator(n: int, x: FaceAlgebraElement) -> IntMatrix:
    """Matrix of y -> x*y in the face basis (column j is x * faces[j])."""
    return _scatter(n, x, left=True)


def right_operator(n: int, x: FaceAlgebraElement) -> IntMatrix:
    """Matrix of y -> y*x in the face basis (column j is faces[j] * x)."""
    return _scatter(n, x, left=False)


def element_matrix(n: int, elems: Sequence[FaceAlgebraElement]) -> IntMatrix:
    """Coordinate vectors of elems as columns."""
    N = len(face_monoid(n))
    d = common_denominator(elems)
    cols = [_int_coeffs(x, d) for x in elems]
    total = max((sum(abs(c) for _, c in col) for col in cols), default=0)
    M = np.zeros((N, len(elems)), dtype=np.int64 if total < _INT64_SAFE else object)
    for j, col in enumerate(cols):
        for i, c in col:
            M[i, j] = c
    return IntMatrix(M, d)


def column_element(n: int, M: IntMatrix, j: int) -> FaceAlgebraElement:
    faces = face_monoid(n).faces
    col = M.num[:, j]
    terms = {faces[i]: Fraction(int(col[i]), M.den) for i in np.flatnonzero(col)}
    return FaceAlgebraElement._raw(n, terms)
