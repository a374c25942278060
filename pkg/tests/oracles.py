"""Independent brute-force oracles.

Nothing here imports facedescent.  Each function recomputes a quantity the
library also computes, by a different and deliberately naive route.  Tests
either call these live (small sizes) or freeze their output.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction


def partition_count(n: int) -> int:
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def bell(n: int) -> int:
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def ordered_bell(n: int) -> int:
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(math.comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def cycle_type_of(images: tuple[int, ...]) -> tuple[int, ...]:
    seen, lens = set(), []
    for start in range(len(images)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = images[i]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def class_sizes(n: int) -> dict[tuple[int, ...], int]:
    return dict(Counter(cycle_type_of(p) for p in itertools.permutations(range(n))))


# polynomials as dicts exponent-tuple -> coefficient


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _power_sum_poly(k: int, nvars: int) -> dict:
    return {tuple(k if i == j else 0 for i in range(nvars)): 1 for j in range(nvars)}


def frobenius_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi^lam(rho) as the coefficient of x^(lam + delta) in a_delta * p_rho."""
    n = sum(lam)
    m = n  # enough variables
    lam = tuple(lam) + (0,) * (m - len(lam))
    vandermonde = {}
    for perm in itertools.permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if perm[i] > perm[j]:
                    sign = -sign
        vandermonde[tuple(m - 1 - perm[i] for i in range(m))] = sign
    poly = vandermonde
    for r in rho:
        poly = _poly_mul(poly, _power_sum_poly(r, m))
    target = tuple(lam[i] + m - 1 - i for i in range(m))
    return poly.get(target, 0)


def ssyt_brute(shape: tuple[int, ...], max_entry: int):
    """All semistandard fillings of shape with entries 1..max_entry, cell by cell."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    for values in itertools.product(range(1, max_entry + 1), repeat=len(cells)):
        T = dict(zip(cells, values))
        if all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T) and all(
            T[(r, c)] < T[(r + 1, c)] for (r, c) in cells if (r + 1, c) in T
        ):
            yield T


def kostka_brute(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    want = Counter({i + 1: c for i, c in enumerate(content)})
    return sum(1 for T in ssyt_brute(shape, len(content)) if Counter(T.values()) == want)


def schur_poly(shape: tuple[int, ...], nvars: int) -> dict:
    out: dict = {}
    for T in ssyt_brute(shape, nvars):
        e = [0] * nvars
        for v in T.values():
            e[v - 1] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


def complete_poly(k: int, nvars: int) -> dict:
    out = {}
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out[tuple(e)] = 1
    return out


def h2_of_h2_poly(nvars: int) -> dict:
    """h_2 evaluated at the monomials of h_2: sum over unordered pairs (with repetition)."""
    monos = list(complete_poly(2, nvars))
    out: dict = {}
    for a, b in itertools.combinations_with_replacement(range(len(monos)), 2):
        e = tuple(x + y for x, y in zip(monos[a], monos[b]))
        out[e] = out.get(e, 0) + 1
    return out


def poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def gauss_rank(rows: list[list[Fraction]]) -> int:
    M = [list(r) for r in rows]
    rank, ncols = 0, len(M[0]) if M else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        pv = M[rank][col]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                f = M[r][col] / pv
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def is_lyndon_brute(w: tuple[int, ...]) -> bool:
    rots = [w[i:] + w[:i] for i in range(len(w))]
    return all(w < r for r in rots[1:]) and len(set(rots)) == len(w)


def lyndon_brute(N: int) -> set[tuple[int, ...]]:
    out = set()
    for length in range(1, N + 1):
        for w in itertools.product(range(1, N + 1), repeat=length):
            if sum(w) <= N and is_lyndon_brute(w):
                out.add(w)
    return out


def primitive_necklaces_brute(word_letters: list[int]) -> int:
    classes = set()
    for w in set(itertools.permutations(word_letters)):
        rots = {w[i:] + w[:i] for i in range(len(w))}
        if len(rots) == len(w):
            classes.add(min(rots))
    return len(classes)


def descent_set(images: tuple[int, ...]) -> set[int]:
    return {i + 1 for i in range(len(images) - 1) if images[i] > images[i + 1]}
