"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule on beta-sets: removing a
border strip of length r is moving one bead from position b to b - r, with
sign (-1)^(beads jumped over).
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache
from typing import Sequence

from .combinatorics import Partition, partitions_of

__all__ = ["character_value", "dimension", "CharacterTable", "character_table"]


def _beta_set(lam: Sequence[int]) -> tuple[int, ...]:
    k = len(lam)
    return tuple(sorted((lam[i] + (k - 1 - i) for i in range(k)), reverse=True))


def _from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    k = len(beta)
    parts = [b - (k - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        jumped = sum(1 for c in beta if t < c < b)
        new_beta = tuple(sorted((occupied - {b}) | {t}, reverse=True))
        total += (-1) ** jumped * _mn(_from_beta(new_beta), rest)
    return total


def character_value(lam: Sequence[int], rho: Sequence[int]) -> int:
    """chi^lam evaluated on the class of cycle type rho."""
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(rho)}|")
    # largest parts first keeps the recursion shallow
    return _mn(tuple(lam), tuple(sorted(rho, reverse=True)))


def dimension(lam: Sequence[int]) -> int:
    """f^lam by the hook length formula."""
    lam = tuple(lam)
    if not lam:
        return 1
    conj = Partition(lam).conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(lam)) // hooks


class CharacterTable:
    """Full character table of S_n, keyed by (lam, rho)."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions_of(n)
        self.values = {
            (lam, rho): character_value(lam, rho) for lam in self.partitions for rho in self.partitions
        }

    def __getitem__(self, key: tuple[Sequence[int], Sequence[int]]) -> int:
        lam, rho = key
        return self.values[(Partition(lam), Partition(rho))]


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def character_table(n: int) -> CharacterTable:
    """Cached table; built once per n under a lock."""
    table = _tables.get(n)
    if table is not None:
        return table
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            table = CharacterTable(n)
            _tables[n] = table
    return table
