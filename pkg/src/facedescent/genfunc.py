"""The Lyndon-word generating function and its comparison with the brute-force oracle.

The series is a map (y-index, z-index) -> symmetric function.  At
truncation N it is the finite product, over Lyndon words w with |w| <= N, of

    1 + sum over nonempty rho with |rho| |w| <= N of  y_{|w| rho} z_{w^|rho|} L_rho[h_w]

where y_{|w| rho} multiplies the parts of rho by |w| and z_{w^|rho|} repeats
the letters of w |rho| times.  Terms of total z-weight above N are dropped
after every multiplication.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Mapping

from .combinatorics import Partition, compositions_rearranging_to, partitions_of
from .config import check_cap
from .lyndon import lyndon_type, lyndon_words_up_to
from .symfunc import SymFunc, h_of, hall_inner, higher_lie, lie, p, plethysm, s, schur_expand

__all__ = [
    "BivariateSeries",
    "rhs_series",
    "coefficient",
    "cartan_via_series",
    "cartan_via_count",
    "cartan_table",
    "verify_main_theorem",
    "lie_sum_by_letters",
    "lie_sum_by_lyndon_words",
]

log = logging.getLogger(__name__)

Key = tuple[Partition, Partition]


@dataclass
class BivariateSeries:
    N: int
    terms: dict[Key, SymFunc] = field(default_factory=dict)

    @classmethod
    def one(cls, N: int) -> "BivariateSeries":
        return cls(N, {(Partition(), Partition()): SymFunc.one()})

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        N = min(self.N, other.N)
        out: dict[Key, SymFunc] = {}
        for (y1, z1), F in self.terms.items():
            w1 = sum(z1)
            for (y2, z2), G in other.terms.items():
                if w1 + sum(z2) > N:
                    continue
                key = (y1.union(y2), z1.union(z2))
                prod = F * G
                out[key] = out[key] + prod if key in out else prod
        return BivariateSeries(N, {k: v for k, v in out.items() if v})

    def __getitem__(self, key) -> SymFunc:
        y, z = key
        return self.terms.get((Partition.from_parts(y), Partition.from_parts(z)), SymFunc.zero())

    def degree_part(self, n: int) -> dict[Key, SymFunc]:
        return {k: v for k, v in self.terms.items() if sum(k[1]) == n}

    def to_json(self) -> list[dict]:
        rows = sorted(self.terms.items(), key=lambda kv: (sum(kv[0][1]), _order(kv[0][0]), _order(kv[0][1])))
        return [{"y": list(y), "z": list(z), "ch": F.to_json("s")} for (y, z), F in rows if y or z]

    @classmethod
    def from_json(cls, N: int, rows: list[Mapping]) -> "BivariateSeries":
        terms = {(Partition(()), Partition(())): SymFunc.one()}
        for r in rows:
            terms[(Partition.from_parts(r["y"]), Partition.from_parts(r["z"]))] = SymFunc.from_json(r["ch"])
        return cls(N, terms)


def _order(lam: Partition):
    return (sum(lam), tuple(-x for x in lam))


@lru_cache(maxsize=None)
def _lie_of_h(rho: Partition, w: tuple[int, ...]) -> SymFunc:
    return plethysm(higher_lie(rho), h_of(w))


def word_factor(w: tuple[int, ...], N: int) -> BivariateSeries:
    """1 + sum_rho y_{|w| rho} z_{w^|rho|} L_rho[h_w], truncated at z-weight N."""
    size = sum(w)
    terms = {(Partition(), Partition()): SymFunc.one()}
    for r in range(1, N // size + 1):
        z = Partition.from_parts(w * r)
        for rho in partitions_of(r):
            terms[(rho.scaled(size), z)] = _lie_of_h(rho, w)
    return BivariateSeries(N, terms)


@lru_cache(maxsize=None)
def _rhs_series(N: int) -> BivariateSeries:
    factors = [word_factor(w, N) for w in lyndon_words_up_to(N)]
    return reduce(lambda a, b: a * b, factors, BivariateSeries.one(N))


def rhs_series(N: int, max_n: int | None = None) -> BivariateSeries:
    """Generating function truncated at z-weight N (cached per N)."""
    check_cap("series", N, max_n)
    return _rhs_series(N)


def coefficient(series: BivariateSeries, lam, mu) -> SymFunc:
    lam, mu = Partition.from_parts(lam), Partition.from_parts(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    if sum(mu) > series.N:
        raise ValueError(f"degree {sum(mu)} exceeds truncation {series.N}")
    return series[(lam, mu)]


def cartan_via_series(series: BivariateSeries, lam, mu) -> int:
    """<s_n, coefficient(lam, mu)>."""
    n = sum(lam)
    v = hall_inner(s((n,)), coefficient(series, lam, mu))
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral Cartan value {v}")
    return int(v)


def cartan_via_count(lam, mu) -> int:
    """Number of rearrangements of mu whose Lyndon type is lam."""
    lam = Partition.from_parts(lam)
    return sum(1 for a in compositions_rearranging_to(Partition.from_parts(mu)) if lyndon_type(a) == lam)


def cartan_table(n: int, max_n: int | None = None) -> list[dict]:
    """Both Cartan computations for every pair; 'agree' flags each row."""
    series = rhs_series(n, max_n)
    rows = []
    for mu in partitions_of(n):
        for lam in partitions_of(n):
            a, b = cartan_via_series(series, lam, mu), cartan_via_count(lam, mu)
            rows.append({"lambda": list(lam), "mu": list(mu), "series": a, "count": b, "agree": a == b})
    return rows


def verify_main_theorem(n: int, jobs: int = 1, max_n: int | None = None) -> dict:
    """Compare oracle characters with series coefficients for every (lam, mu) of n.

    Disagreements are reported in the returned dict, never raised.
    """
    from .repanalysis import character_of, projected_space

    check_cap("repanalysis", n, max_n)
    series = rhs_series(n)
    pairs = [(lam, mu) for lam in partitions_of(n) for mu in partitions_of(n)]

    def one(pair):
        lam, mu = pair
        oracle = character_of(projected_space(n, lam, mu, max_n=max_n))
        formula = coefficient(series, lam, mu)
        return {
            "lambda": list(lam),
            "mu": list(mu),
            "equal": oracle == formula,
            "oracle": oracle.schur_string(),
            "series": formula.schur_string(),
        }

    if jobs > 1:
        from .idempotents import cached_family
        from .faces import face_monoid

        cached_family(n)
        face_monoid(n).table
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(one, pairs))
    else:
        rows = [one(pr) for pr in pairs]
    return {"n": n, "pairs": rows, "all_equal": all(r["equal"] for r in rows)}


# ---------------------------------------------------------------------------
# z-graded plethysm: sums of L_r evaluated on z_1 h_1 + z_2 h_2 + ...

ZSeries = dict[Partition, SymFunc]


def _z_mul(a: ZSeries, b: ZSeries, N: int) -> ZSeries:
    out: ZSeries = {}
    for z1, F in a.items():
        for z2, G in b.items():
            if sum(z1) + sum(z2) > N:
                continue
            key = z1.union(z2)
            prod = F * G
            out[key] = out[key] + prod if key in out else prod
    return {k: v for k, v in out.items() if v}


def _z_power_sum(k: int, G: ZSeries, N: int) -> ZSeries:
    """p_k[G]: each z-monomial is raised to the k-th power, each F becomes p_k[F]."""
    out: ZSeries = {}
    for z, F in G.items():
        zk = Partition.from_parts(tuple(z) * k)
        if sum(zk) <= N:
            out[zk] = out.get(zk, SymFunc.zero()) + plethysm(p(k), F)
    return out


def _z_plethysm(F: SymFunc, G: ZSeries, N: int) -> ZSeries:
    out: ZSeries = {}
    for rho, c in F.terms.items():
        term: ZSeries = {Partition(): SymFunc.one()}
        for k in rho:
            term = _z_mul(term, _z_power_sum(k, G, N), N)
        for z, H in term.items():
            out[z] = out.get(z, SymFunc.zero()) + H * c
    return {k: v for k, v in out.items() if v}


def lie_sum_by_letters(N: int) -> ZSeries:
    """sum_{r >= 1} L_r[z_1 h_1 + z_2 h_2 + ...] up to z-weight N."""
    G = {Partition((j,)): h_of((j,)) for j in range(1, N + 1)}
    out: ZSeries = {}
    for r in range(1, N + 1):
        for z, H in _z_plethysm(lie(r), G, N).items():
            out[z] = out.get(z, SymFunc.zero()) + H
    return {k: v for k, v in out.items() if v}


def lie_sum_by_lyndon_words(N: int) -> ZSeries:
    """sum over Lyndon w and m >= 1 of z_{w^m} L_m[h_w] up to z-weight N."""
    out: ZSeries = {}
    for w in lyndon_words_up_to(N):
        for m in range(1, N // sum(w) + 1):
            z = Partition.from_parts(w * m)
            out[z] = out.get(z, SymFunc.zero()) + plethysm(lie(m), h_of(w))
    return {k: v for k, v in out.items() if v}
