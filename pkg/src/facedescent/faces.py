"""The face monoid of the braid arrangement and its rational face algebra.

A face is an ordered set partition of {1..n}.  Internally each block is a
bitmask (bit i-1 set means i is in the block), so a :class:`Face` is just a
tuple of ints; the Tits product is then a double loop of ``&``.

Elements of the face algebra are sparse ``Face -> Fraction`` maps with
zero coefficients dropped.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .combinatorics import (
    Composition,
    Permutation,
    SetPartition,
    _block_to_mask,
    _mask_to_block,
)
from .config import check_cap

__all__ = [
    "Face",
    "FaceAlgebraElement",
    "tits_product",
    "support",
    "act",
    "act_linear",
    "enumerate_faces",
    "faces_of_type",
    "bidigare_image",
    "FaceMonoid",
    "face_monoid",
]


class Face(tuple):
    """Ordered set partition, one bitmask per block."""

    __slots__ = ()

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Face":
        masks = tuple(_block_to_mask(b) for b in blocks)
        if any(m == 0 for m in masks):
            raise ValueError("faces have no empty blocks")
        union = 0
        for m in masks:
            if union & m:
                raise ValueError("blocks of a face must be disjoint")
            union |= m
        if union & (union + 1):
            raise ValueError("blocks of a face must cover {1..n}")
        return cls(masks)

    @classmethod
    def identity(cls, n: int) -> "Face":
        return cls(((1 << n) - 1,))

    @classmethod
    def chamber(cls, order: Sequence[int]) -> "Face":
        """The chamber x_{order[0]} < x_{order[1]} < ..."""
        return cls(1 << (i - 1) for i in order)

    @property
    def n(self) -> int:
        union = 0
        for m in self:
            union |= m
        return union.bit_length()

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_mask_to_block(m) for m in self)

    @property
    def block_sizes(self) -> Composition:
        return Composition(m.bit_count() for m in self)

    def __mul__(self, other):
        if isinstance(other, Face):
            return tits_product(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        return "Face" + str(self)

    def __str__(self) -> str:
        sep = "" if self.n < 10 else "."
        return "(" + ",".join(sep.join(map(str, b)) for b in self.blocks) + ")"

    def sort_key(self):
        return (len(self), self.blocks)


def tits_product(f: Face, g: Face) -> Face:
    """(P_1..P_k)(Q_1..Q_l) = (P_1 & Q_1, P_1 & Q_2, ..., P_k & Q_l) with empties removed."""
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} != {g.n}")
    return Face(m for p in f for q in g if (m := p & q))


def _tits(f: tuple, g: tuple) -> Face:
    # unchecked hot-path version
    return Face(m for p in f for q in g if (m := p & q))


def support(f: Face) -> SetPartition:
    return SetPartition.from_masks(f, f.n)


def act(pi: Permutation, f: Face) -> Face:
    """Apply pi blockwise; block order is kept."""
    if pi.n != f.n:
        raise ValueError(f"degree mismatch: {pi.n} != {f.n}")
    return Face(pi.mask_image(m) for m in f)


def _ordered_set_partitions(n: int) -> list[Face]:
    full = (1 << n) - 1
    out: list[Face] = []

    def rec(remaining: int, prefix: list[int]):
        if remaining == 0:
            out.append(Face(prefix))
            return
        # nonempty submasks of remaining
        sub = remaining
        while sub:
            prefix.append(sub)
            rec(remaining & ~sub, prefix)
            prefix.pop()
            sub = (sub - 1) & remaining

    rec(full, [])
    return out


@lru_cache(maxsize=None)
def _faces_cached(n: int) -> tuple[Face, ...]:
    return tuple(sorted(_ordered_set_partitions(n), key=Face.sort_key))


def enumerate_faces(n: int, max_n: int | None = None) -> list[Face]:
    """All ordered set partitions of {1..n}: by number of blocks, then by block sequence."""
    check_cap("faces", n, max_n)
    return list(_faces_cached(n))


def faces_of_type(n: int, alpha: Sequence[int]) -> list[Face]:
    """Faces whose block sizes are exactly the composition ``alpha``."""
    out = []
    elems = range(1, n + 1)

    def rec(remaining: tuple[int, ...], k: int, prefix: list[int]):
        if k == len(alpha):
            out.append(Face(prefix))
            return
        for combo in itertools.combinations(remaining, alpha[k]):
            rest = tuple(x for x in remaining if x not in combo)
            prefix.append(_block_to_mask(combo))
            rec(rest, k + 1, prefix)
            prefix.pop()

    if sum(alpha) != n:
        raise ValueError("composition size must equal n")
    rec(tuple(elems), 0, [])
    return out


# ---------------------------------------------------------------------------
# face algebra


class FaceAlgebraElement:
    """Sparse rational linear combination of faces of a fixed degree."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Face, object] | Iterable[tuple[Face, object]] = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Face, Fraction] = {}
        for f, c in items:
            if not isinstance(f, Face):
                f = Face(f)
            if f.n != n:
                raise ValueError(f"face {f} has degree {f.n}, expected {n}")
            acc[f] = acc.get(f, 0) + Fraction(c)
        self.terms = {f: c for f, c in acc.items() if c}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "FaceAlgebraElement":
        # caller guarantees nonzero Fractions keyed by degree-n faces
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, n: int) -> "FaceAlgebraElement":
        return cls._raw(n, {Face.identity(n): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "FaceAlgebraElement":
        return cls._raw(n, {})

    @classmethod
    def from_face(cls, f: Face, c=1) -> "FaceAlgebraElement":
        return cls(f.n, {f: c})

    @classmethod
    def uniform(cls, faces: Sequence[Face]) -> "FaceAlgebraElement":
        """Average of the given faces."""
        w = Fraction(1, len(faces))
        return cls._raw(faces[0].n, {f: w for f in faces})

    def _check(self, other: "FaceAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")

    def __add__(self, other: "FaceAlgebraElement") -> "FaceAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for f, c in other.terms.items():
            v = out.get(f, 0) + c
            if v:
                out[f] = v
            else:
                out.pop(f, None)
        return FaceAlgebraElement._raw(self.n, out)

    def __neg__(self) -> "FaceAlgebraElement":
        return FaceAlgebraElement._raw(self.n, {f: -c for f, c in self.terms.items()})

    def __sub__(self, other: "FaceAlgebraElement") -> "FaceAlgebraElement":
        return self + (-other)

    def scale(self, c) -> "FaceAlgebraElement":
        c = Fraction(c)
        if not c:
            return FaceAlgebraElement.zero(self.n)
        return FaceAlgebraElement._raw(self.n, {f: c * v for f, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, FaceAlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaceAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, f: Face) -> Fraction:
        return self.terms.get(f, Fraction(0))

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{c}*{f}" for f, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())]
        return " + ".join(parts)

    def to_records(self) -> list[dict]:
        """JSON-ready list of {face, numerator, denominator} records."""
        return [
            {"face": [list(b) for b in f.blocks], "numerator": c.numerator, "denominator": c.denominator}
            for f, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())
        ]

    @classmethod
    def from_records(cls, n: int, records: Iterable[Mapping]) -> "FaceAlgebraElement":
        return cls(n, ((Face.from_blocks(r["face"]), Fraction(r["numerator"], r["denominator"])) for r in records))


def add(x: FaceAlgebraElement, y: FaceAlgebraElement) -> FaceAlgebraElement:
    return x + y


def scale(x: FaceAlgebraElement, c) -> FaceAlgebraElement:
    return x.scale(c)


def multiply(x: FaceAlgebraElement, y: FaceAlgebraElement) -> FaceAlgebraElement:
    """Bilinear extension of the Tits product."""
    x._check(y)
    out: dict[Face, Fraction] = {}
    yitems = list(y.terms.items())
    for f, a in x.terms.items():
        for g, b in yitems:
            h = _tits(f, g)
            out[h] = out.get(h, 0) + a * b
    return FaceAlgebraElement._raw(x.n, {h: c for h, c in out.items() if c})


def act_linear(pi: Permutation, x: FaceAlgebraElement) -> FaceAlgebraElement:
    if pi.n != x.n:
        raise ValueError(f"degree mismatch: {pi.n} != {x.n}")
    imgs = pi.images
    out = {}
    for f, c in x.terms.items():
        out[Face(_mask_perm(m, imgs) for m in f)] = c
    return FaceAlgebraElement._raw(x.n, out)


def _mask_perm(mask: int, imgs: tuple[int, ...]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << (imgs[i] - 1)
        mask >>= 1
        i += 1
    return out


def bidigare_image(J: Iterable[int], n: int) -> FaceAlgebraElement:
    """Sum of all faces whose block sizes are alpha(J)."""
    alpha = Composition.from_descent_set(J, n)
    return FaceAlgebraElement._raw(n, {f: Fraction(1) for f in faces_of_type(n, alpha)})


# ---------------------------------------------------------------------------
# indexed tables


class FaceMonoid:
    """Faces of degree n with an index and (lazily) the full product table.

    ``table[i, j]`` is the index of ``faces[i] * faces[j]``.  Only built on
    demand; at n = 6 it has 4683^2 entries.
    """

    def __init__(self, n: int, max_n: int | None = None):
        self.n = n
        self.faces = enumerate_faces(n, max_n)
        self.index = {f: i for i, f in enumerate(self.faces)}
        self._table: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            N = len(self.faces)
            dtype = np.int16 if N < 2**15 else np.int32
            tab = np.empty((N, N), dtype=dtype)
            idx = self.index
            faces = self.faces
            for i, f in enumerate(faces):
                tab[i] = [idx[_tits(f, g)] for g in faces]
            self._table = tab
        return self._table

    def permutation_indices(self, pi: Permutation) -> np.ndarray:
        """perm[i] = index of pi(faces[i])."""
        imgs = pi.images
        idx = self.index
        return np.array([idx[Face(_mask_perm(m, imgs) for m in f)] for f in self.faces], dtype=np.int64)

    def vector(self, x: FaceAlgebraElement) -> dict[int, Fraction]:
        return {self.index[f]: c for f, c in x.terms.items()}


@lru_cache(maxsize=None)
def face_monoid(n: int) -> FaceMonoid:
    return FaceMonoid(n)


def iter_support_fiber(n: int, X: SetPartition) -> Iterator[Face]:
    """All faces with support X: the orderings of its blocks."""
    masks = [_block_to_mask(b) for b in X.blocks]
    for perm in itertools.permutations(masks):
        yield Face(perm)
