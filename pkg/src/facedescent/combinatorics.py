"""Partitions, compositions, set partitions and permutations.

Everything here is an immutable value.  Partitions and compositions are
tuple subclasses so they hash, compare and slice like tuples; set
partitions and permutations are small frozen dataclasses.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import check_cap

__all__ = [
    "Partition",
    "Composition",
    "SetPartition",
    "Permutation",
    "partitions_of",
    "dominates",
    "refines",
    "compositions_of",
    "compositions_rearranging_to",
    "set_partitions_of",
    "block_size_type",
    "meet",
    "leq",
    "cycle_type",
    "conjugacy_class_data",
    "z_coefficient",
    "kostka_number",
    "semistandard_tableaux",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    ``Partition((3, 1, 1))`` is the partition 311; the empty tuple is the
    empty partition ``()``.  Unsorted input is rejected rather than sorted,
    use :meth:`from_parts` for that.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse ``"2,1,1"`` (or ``""`` for the empty partition)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls.from_parts(int(t) for t in text.replace(" ", "").split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part -> number of times it occurs."""
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def scaled(self, m: int) -> "Partition":
        """Every part multiplied by ``m``."""
        return Partition(p * m for p in self)

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition.from_parts(tuple(self) + tuple(other))

    def __repr__(self) -> str:
        return "Partition(" + ",".join(map(str, self)) + ")"

    def __str__(self) -> str:
        if not self:
            return "()"
        if all(p < 10 for p in self):
            return "".join(map(str, self))
        return ",".join(map(str, self))


class Composition(tuple):
    """Finite sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def sorted(self) -> Partition:
        """The partition this composition rearranges to."""
        return Partition.from_parts(self)

    @classmethod
    def from_descent_set(cls, J: Iterable[int], n: int) -> "Composition":
        """alpha(J) = (a1, a2 - a1, ..., n - ak) for J = {a1 < ... < ak}."""
        cuts = sorted(set(J))
        if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
            raise ValueError(f"descent set {cuts} not inside [1, {n - 1}]")
        points = [0] + cuts + [n]
        return cls(b - a for a, b in zip(points, points[1:]))

    def __repr__(self) -> str:
        return "Composition(" + ",".join(map(str, self)) + ")"


# ---------------------------------------------------------------------------
# integer partitions


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> [str(p) for p in partitions_of(4)]
    ['4', '31', '22', '211', '1111']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_cached(n))


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def _check_same_size(a: Sequence[int], b: Sequence[int]) -> None:
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |{tuple(a)}| != |{tuple(b)}|")


def dominates(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every partial sum of ``nu`` is at least that of ``mu``."""
    _check_same_size(nu, mu)
    pn = list(itertools.accumulate(nu))
    pm = list(itertools.accumulate(mu))
    k = max(len(pn), len(pm))
    total = sum(nu)
    pn += [total] * (k - len(pn))
    pm += [total] * (k - len(pm))
    return all(a >= b for a, b in zip(pn, pm))


def refines(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff the parts of ``mu`` can be grouped into blocks summing to the parts of ``lam``."""
    _check_same_size(mu, lam)
    parts = tuple(sorted(mu, reverse=True))
    return _can_pack(parts, tuple(sorted(lam, reverse=True)))


@lru_cache(maxsize=None)
def _can_pack(parts: tuple[int, ...], bins: tuple[int, ...]) -> bool:
    # bins holds remaining capacities, sorted decreasingly so equal states collide
    if not parts:
        return all(b == 0 for b in bins)
    first, rest = parts[0], parts[1:]
    tried = set()
    for i, b in enumerate(bins):
        if b < first or b in tried:
            continue
        tried.add(b)
        new_bins = bins[:i] + (b - first,) + bins[i + 1:]
        if _can_pack(rest, tuple(sorted(new_bins, reverse=True))):
            return True
    return False


def compositions_of(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of ``n`` (none for n = 0 except the empty one)."""
    if n == 0:
        yield Composition()
        return
    for mask in range(1 << (n - 1)):
        cuts = [i for i in range(1, n) if mask >> (i - 1) & 1]
        yield Composition.from_descent_set(cuts, n)


def compositions_rearranging_to(mu: Sequence[int]) -> list[Composition]:
    """Distinct orderings of the parts of ``mu``, in lexicographically decreasing order."""
    counts = Counter(mu)
    values = sorted(counts, reverse=True)
    out: list[Composition] = []
    prefix: list[int] = []

    def rec(remaining: int) -> None:
        if remaining == 0:
            out.append(Composition(prefix))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                rec(remaining - 1)
                prefix.pop()
                counts[v] += 1

    rec(len(mu))
    return out


def z_coefficient(rho: Sequence[int]) -> int:
    """z_rho = prod_i i^{m_i} m_i!, the size of the centralizer of a cycle type."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * math.factorial(mult)
    return z


# ---------------------------------------------------------------------------
# set partitions


@dataclass(frozen=True, order=True)
class SetPartition:
    """Unordered set partition of {1..n}, stored canonically.

    Blocks are sorted internally and ordered by their minimum element, so
    structural equality is equality of set partitions.
    """

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {self.blocks} do not partition [1, {self.n}]")
        if any(not b for b in self.blocks):
            raise ValueError("empty block")
        canon = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(tuple(blocks), n)

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "SetPartition":
        return cls(tuple(_mask_to_block(m) for m in masks), n)

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(_block_to_mask(b) for b in self.blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def act(self, pi: "Permutation") -> "SetPartition":
        return SetPartition(tuple(tuple(pi(x) for x in b) for b in self.blocks), self.n)

    def __str__(self) -> str:
        sep = "" if self.n < 10 else "."
        return "{" + ",".join(sep.join(map(str, b)) for b in self.blocks) + "}"


def _block_to_mask(block: Iterable[int]) -> int:
    m = 0
    for x in block:
        m |= 1 << (x - 1)
    return m


def _mask_to_block(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def set_partitions_of(n: int, max_n: int | None = None) -> list[SetPartition]:
    """All set partitions of {1..n}; order: fewest blocks first, then by block tuple."""
    check_cap("set_partitions", n, max_n)
    return list(_set_partitions_cached(n))


@lru_cache(maxsize=None)
def _set_partitions_cached(n: int) -> tuple[SetPartition, ...]:
    results: list[list[list[int]]] = [[]]
    for x in range(1, n + 1):
        nxt = []
        for blocks in results:
            for i in range(len(blocks)):
                nxt.append(blocks[:i] + [blocks[i] + [x]] + blocks[i + 1:])
            nxt.append(blocks + [[x]])
        results = nxt
    parts = [SetPartition.from_blocks(b, n) for b in results]
    parts.sort(key=lambda X: (X.num_blocks, X.blocks))
    return tuple(parts)


def block_size_type(X: SetPartition) -> Partition:
    """The orbit label lambda with X in lambda."""
    return Partition.from_parts(len(b) for b in X.blocks)


def _check_degree(X: SetPartition, Y: SetPartition) -> None:
    if X.n != Y.n:
        raise ValueError(f"degree mismatch: {X.n} != {Y.n}")


def leq(X: SetPartition, Y: SetPartition) -> bool:
    """Refinement order: every block of X lies inside a block of Y."""
    _check_degree(X, Y)
    ymasks = Y.masks
    return all(any(xm & ym == xm for ym in ymasks) for xm in X.masks)


def meet(X: SetPartition, Y: SetPartition) -> SetPartition:
    """Coarsest common refinement."""
    _check_degree(X, Y)
    masks = [a & b for a in X.masks for b in Y.masks if a & b]
    return SetPartition.from_masks(masks, X.n)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one-line notation: ``images[i-1] = pi(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def descent_set(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.n) if self(i) > self(i + 1))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1

    def mask_image(self, mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << (self.images[i] - 1)
            mask >>= 1
            i += 1
        return out


def cycle_type(pi: Permutation) -> Partition:
    return Partition.from_parts(len(c) for c in pi.cycles())


def all_permutations(n: int) -> Iterator[Permutation]:
    for imgs in itertools.permutations(range(1, n + 1)):
        yield Permutation(imgs)


def conjugacy_class_data(n: int) -> list[tuple[Partition, int, Permutation]]:
    """(cycle type, class size n!/z_rho, representative) for every class of S_n."""
    out = []
    for rho in partitions_of(n):
        cycles = []
        start = 1
        for part in rho:
            cycles.append(tuple(range(start, start + part)))
            start += part
        rep = Permutation.from_cycles(cycles, n)
        out.append((rho, math.factorial(n) // z_coefficient(rho), rep))
    return out


# ---------------------------------------------------------------------------
# tableaux


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard Young tableaux of ``shape`` with ``content[i]`` entries equal to i+1.

    Filled letter by letter: the cells holding letter k form a horizontal
    strip added to the shape occupied by letters < k.
    """
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return

    def strips(inner: tuple[int, ...], size: int):
        # horizontal strips of given size extending inner inside shape
        rows = len(shape)
        inner = inner + (0,) * (rows - len(inner))

        def rec(r: int, left: int, acc: list[int]):
            if r == rows:
                if left == 0:
                    yield tuple(acc)
                return
            upper_bound = shape[r] if r == 0 else min(shape[r], inner[r - 1])
            room = upper_bound - inner[r]
            for add in range(min(room, left), -1, -1):
                acc.append(inner[r] + add)
                yield from rec(r + 1, left - add, acc)
                acc.pop()

        yield from rec(0, size, [])

    def rec(k: int, inner: tuple[int, ...], rows: list[list[int]]):
        if k == len(content):
            yield tuple(tuple(r) for r in rows)
            return
        for outer in strips(inner, content[k]):
            new_rows = [list(r) for r in rows]
            for r, (a, b) in enumerate(zip(inner + (0,) * len(shape), outer)):
                new_rows[r].extend([k + 1] * (b - a))
            yield from rec(k + 1, outer, new_rows)

    yield from rec(0, (0,) * len(shape), [[] for _ in shape])


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    return sum(1 for _ in semistandard_tableaux(shape, content))


def kostka_number(shape: Sequence[int], content: Sequence[int]) -> int:
    """K_{shape, content}, counted by enumerating tableaux."""
    _check_same_size(shape, content)
    return _kostka(tuple(shape), tuple(content))
