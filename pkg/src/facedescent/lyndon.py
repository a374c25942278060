"""Lyndon words, necklaces, and the regrouping bijection on partition-bead necklaces.

A word is a tuple of positive integers.  Necklaces carry beads of one of
three kinds: integers, partitions, or tuples of partitions.  Beads are
totally ordered by :func:`bead_key` (integers by value, partitions by size
then reverse lexicographic, tuples lexicographically), and a necklace is
stored as its least rotation under that order.

``psi`` takes a primitive necklace of partition beads, reads the necklace of
bead lengths, writes it as w^m for a Lyndon word w, rotates so the bead
lengths start with w and groups consecutive runs of len(w) beads into
tuple beads.  ``theta`` flattens the tuples back.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .combinatorics import Partition, partitions_of

__all__ = [
    "is_lyndon",
    "duval_factorization",
    "lyndon_type",
    "lyndon_words_up_to",
    "bead_key",
    "least_rotation",
    "Necklace",
    "f_map",
    "psi",
    "theta",
    "evaluation",
    "primitive_partition_necklaces",
    "primitive_necklaces_with_content",
    "primitive_tuple_necklaces",
    "NotPrimitive",
    "parse_word",
    "format_factorization",
]

Bead = Union[int, Partition, tuple]


class NotPrimitive(ValueError):
    """A necklace that is a power of a shorter one was passed where a primitive one is required."""


def _word(w: Iterable[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if not w or any(x < 1 for x in w):
        raise ValueError(f"a word is a nonempty sequence of positive integers, got {w}")
    return w


def is_lyndon(w: Sequence[int]) -> bool:
    """True iff w is strictly smaller than each of its proper rotations."""
    w = _word(w)
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def duval_factorization(w: Sequence[int]) -> list[tuple[int, ...]]:
    """Lyndon factors of w, weakly decreasing, whose concatenation is w."""
    w = _word(w)
    n = len(w)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i : i + j - k])
            i += j - k
    return factors


def lyndon_type(alpha: Sequence[int]) -> Partition:
    """Partition of the letter sums of the Lyndon factors of alpha."""
    return Partition.from_parts(sum(f) for f in duval_factorization(alpha))


@lru_cache(maxsize=None)
def _lyndon_words_up_to(N: int) -> tuple[tuple[int, ...], ...]:
    found = []
    for m in range(1, N + 1):
        # a composition of m is a word with letter sum m
        for c in _compositions(m):
            if is_lyndon(c):
                found.append(c)
    return tuple(sorted(found, key=lambda w: (sum(w), len(w), w)))


def _compositions(m: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.product((0, 1), repeat=m - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def lyndon_words_up_to(N: int) -> list[tuple[int, ...]]:
    """Lyndon words with letter sum at most N, by (sum, length, lex)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return list(_lyndon_words_up_to(N))


# ---------------------------------------------------------------------------
# necklaces


def bead_key(b: Bead):
    if isinstance(b, Partition):
        return (sum(b), tuple(-x for x in b))
    if isinstance(b, tuple):
        return tuple(bead_key(x) for x in b)
    return b


def least_rotation(keys: Sequence) -> int:
    """Booth's algorithm: start index of the least rotation."""
    s = list(keys) * 2
    n = len(keys)
    fail = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if i == -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n if n else 0


def _smallest_period(seq: Sequence) -> int:
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and all(seq[i] == seq[i % d] for i in range(n)):
            return d
    return n


@dataclass(frozen=True)
class Necklace:
    """A word up to rotation, stored as its least rotation."""

    beads: tuple

    def __init__(self, beads: Iterable[Bead]):
        beads = tuple(beads)
        if not beads:
            raise ValueError("a necklace needs at least one bead")
        r = least_rotation([bead_key(b) for b in beads])
        object.__setattr__(self, "beads", beads[r:] + beads[:r])

    def __len__(self) -> int:
        return len(self.beads)

    @property
    def period(self) -> int:
        return _smallest_period([bead_key(b) for b in self.beads])

    @property
    def is_primitive(self) -> bool:
        return self.period == len(self.beads)

    def __str__(self) -> str:
        return "[" + ", ".join(_bead_str(b) for b in self.beads) + "]"


def _bead_str(b: Bead) -> str:
    if isinstance(b, Partition):
        return f"({b})" if b else "()"
    if isinstance(b, tuple):
        return "(" + ", ".join(_bead_str(x) for x in b) + ")"
    return str(b)


def f_map(eta: Necklace | Sequence[int]) -> tuple[tuple[int, ...], int]:
    """(w, i) with w Lyndon and w^i the least representative of the letter necklace."""
    if not isinstance(eta, Necklace):
        eta = Necklace(_word(eta))
    word = tuple(eta.beads)
    d = eta.period
    return word[:d], len(word) // d


def _bead_lengths(eta: Necklace) -> tuple[int, ...]:
    return tuple(len(b) for b in eta.beads)


def psi(eta: Necklace) -> Necklace:
    """Group a primitive partition-bead necklace into tuple beads along its length word."""
    if not all(isinstance(b, Partition) and len(b) for b in eta.beads):
        raise TypeError("psi expects nonempty partition beads")
    if not eta.is_primitive:
        raise NotPrimitive(str(eta))
    lengths = _bead_lengths(eta)
    w, _power = f_map(lengths)
    k, i = len(lengths), len(w)
    start = next(j for j in range(k) if all(lengths[(j + t) % k] == w[t] for t in range(i)))
    rotated = eta.beads[start:] + eta.beads[:start]
    return Necklace(tuple(rotated[a : a + i]) for a in range(0, k, i))


def theta(tau: Necklace) -> Necklace:
    """Remove the grouping of a primitive tuple-bead necklace."""
    if not all(isinstance(b, tuple) and not isinstance(b, Partition) for b in tau.beads):
        raise TypeError("theta expects tuple beads")
    if not tau.is_primitive:
        raise NotPrimitive(str(tau))
    shapes = {tuple(len(p) for p in b) for b in tau.beads}
    if len(shapes) != 1 or not is_lyndon(next(iter(shapes))):
        raise ValueError(f"tuple beads must share one Lyndon word of lengths, got {sorted(shapes)}")
    return Necklace(p for b in tau.beads for p in b)


def evaluation(eta: Necklace) -> tuple[Partition, Partition]:
    """(z-index, x-index): each partition bead nu contributes z_{len(nu)} x_nu."""
    parts = []
    for b in eta.beads:
        if isinstance(b, Partition):
            parts.append(b)
        elif isinstance(b, tuple):
            parts.extend(b)
        else:
            raise TypeError("evaluation is defined for partition or tuple beads")
    z = Partition.from_parts(len(p) for p in parts)
    x = Partition.from_parts(v for p in parts for v in p)
    return z, x


def primitive_partition_necklaces(total: int) -> list[Necklace]:
    """Primitive necklaces of nonempty partition beads whose bead sizes sum to total."""
    found = set()
    for comp in _compositions(total):
        for beads in itertools.product(*(partitions_of(c) for c in comp)):
            neck = Necklace(beads)
            if neck.is_primitive:
                found.add(neck)
    return sorted(found, key=lambda nk: tuple(bead_key(b) for b in nk.beads))


def _partitions_by_length(size: int, length: int) -> list[Partition]:
    return [p for p in partitions_of(size) if len(p) == length]


def _tuple_beads(shape: tuple[int, ...], size: int) -> Iterator[tuple[Partition, ...]]:
    """Tuples of partitions with the given lengths and total size."""
    if not shape:
        if size == 0:
            yield ()
        return
    rest_min = sum(shape[1:])
    for first in range(shape[0], size - rest_min + 1):
        for p in _partitions_by_length(first, shape[0]):
            for tail in _tuple_beads(shape[1:], size - first):
                yield (p,) + tail


def primitive_tuple_necklaces(total: int) -> list[Necklace]:
    """Primitive necklaces of tuple beads, all beads sharing one Lyndon word of lengths.

    Built directly from Lyndon words and compositions of ``total``, without
    going through :func:`psi`.
    """
    found = set()
    for shape in _lyndon_words_up_to(total):
        for comp in _compositions(total):
            if any(c < sum(shape) for c in comp):
                continue
            for beads in itertools.product(*(list(_tuple_beads(shape, c)) for c in comp)):
                neck = Necklace(beads)
                if neck.is_primitive:
                    found.add(neck)
    return sorted(found, key=lambda nk: tuple(bead_key(b) for b in nk.beads))


def primitive_necklaces_with_content(content: Sequence[int]) -> int:
    """Number of primitive letter necklaces using letter i exactly content[i] times."""
    content = [int(c) for c in content if c]
    if not content:
        raise ValueError("content must be nonempty")
    letters = [i + 1 for i, c in enumerate(content) for _ in range(c)]
    seen = set()
    for arrangement in _multiset_permutations(letters):
        neck = Necklace(arrangement)
        if neck.is_primitive:
            seen.add(neck.beads)
    return len(seen)


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def parse_word(text: str) -> tuple[int, ...]:
    """'2,4,3' or '243' (single digits) to a word."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    return _word(int(p) for p in parts if p.strip())


def format_factorization(factors: Sequence[Sequence[int]]) -> str:
    join = "," if any(x > 9 for f in factors for x in f) else ""
    return "".join("(" + join.join(str(x) for x in f) + ")" for f in factors)
