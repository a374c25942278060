"""Brute-force representation analysis of E_lam CF_n E_mu.

T(x) = E_lam * x * E_mu is an S_n-equivariant projection of the face
algebra, so its rank is its trace and the character of its image is
w -> tr(w o T).  Everything here is exact: integer matrices with a common
denominator, ranks through FLINT.

The sweep over all (lam, mu) is capped at n = 5 by default.  For mu = 1^n
there is a cheap route that works at n = 6: the right ideal generated by
the chamber average is the span of the chambers, on which right
multiplication by E_{1^n} is the identity, so only E_lam * c for a single
chamber c is needed (see :func:`chamber_character`).
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import character_table, dimension
from .combinatorics import (
    Partition,
    Permutation,
    compositions_rearranging_to,
    conjugacy_class_data,
    cycle_type,
    all_permutations,
    kostka_number,
    partitions_of,
    z_coefficient,
)
from .config import check_cap
from .faces import Face, FaceAlgebraElement, act, enumerate_faces, face_monoid, multiply
from .idempotents import cached_family
from .linalg import IntMatrix, left_operator, right_operator
from .symfunc import SymFunc, frobenius_from_traces, h_of, hall_inner, s, schur_expand

__all__ = [
    "ProjectedSpace",
    "multiplicity_table",
    "longest_element_type",
    "full_descent_counts",
    "InconsistentResult",
    "projected_space",
    "character_of",
    "ch_of_right_module",
    "isotypic_dimension",
    "composition_multiplicity",
    "chamber_character",
    "face_module_character",
    "sign_isotypic_type",
    "analysis_report",
]

log = logging.getLogger(__name__)


class InconsistentResult(AssertionError):
    """Two routes to the same quantity disagreed, or a character was not a genuine one."""


@dataclass
class ProjectedSpace:
    n: int
    left: Partition
    right: Partition
    projector: IntMatrix
    dimension: int

    @property
    def trace(self) -> Fraction:
        return self.projector.trace()


def _as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition.from_parts(x)


@lru_cache(maxsize=None)
def _left(n: int, lam: Partition) -> IntMatrix:
    return left_operator(n, cached_family(n).by_orbit[lam])


@lru_cache(maxsize=None)
def _right(n: int, mu: Partition) -> IntMatrix:
    return right_operator(n, cached_family(n).by_orbit[mu])


def projected_space(n: int, lam, mu, max_n: int | None = None, check_idempotent: bool = True) -> ProjectedSpace:
    """The projection x -> E_lam x E_mu on CF_n, with rank and trace cross-checked."""
    check_cap("repanalysis", n, max_n)
    lam, mu = _as_partition(lam), _as_partition(mu)
    T = _left(n, lam) @ _right(n, mu)
    if check_idempotent and not (T @ T).same_as(T):
        raise InconsistentResult(f"E_{lam} . E_{mu} is not idempotent at n={n}")
    rank = T.rank()
    tr = T.trace()
    if tr != rank:
        raise InconsistentResult(f"trace {tr} != rank {rank} for (lam={lam}, mu={mu}), n={n}")
    return ProjectedSpace(n, lam, mu, T, rank)


def _class_traces(n: int, M: IntMatrix) -> dict[Partition, Fraction]:
    """tr(w o M) for one representative w of each class.

    (w o M)(e_f) = sum_h M[h, f] e_{w h}; its e_f coefficient is M[w^-1 f, f].
    """
    mon = face_monoid(n)
    cols = np.arange(len(mon))
    out = {}
    for rho, _size, rep in conjugacy_class_data(n):
        rows = mon.permutation_indices(rep.inverse())
        out[rho] = Fraction(int(M.num[rows, cols].astype(object).sum()), M.den)
    return out


def _genuine(F: SymFunc, what: str) -> dict[Partition, int]:
    coeffs = schur_expand(F)
    for lam, c in coeffs.items():
        if c < 0 or c.denominator != 1:
            raise InconsistentResult(f"{what}: Schur coefficient {c} at {lam} is not a nonnegative integer")
    return {lam: int(c) for lam, c in coeffs.items()}


def character_of(space: ProjectedSpace) -> SymFunc:
    """Frobenius characteristic of the image of the projection."""
    ch = frobenius_from_traces(space.n, _class_traces(space.n, space.projector))
    _genuine(ch, f"ch(E_{space.left} CF_{space.n} E_{space.right})")
    return ch


def ch_of_right_module(n: int, mu, max_n: int | None = None) -> SymFunc:
    """ch(CF_n E_mu), by traces, checked against (number of rearrangements of mu) * h_mu."""
    check_cap("repanalysis", n, max_n)
    mu = _as_partition(mu)
    ch = frobenius_from_traces(n, _class_traces(n, _right(n, mu)))
    expected = h_of(mu) * len(compositions_rearranging_to(mu))
    if ch != expected:
        raise InconsistentResult(f"ch(CF_{n} E_{mu}) = {ch.schur_string()} but expected {expected.schur_string()}")
    return ch


def isotypic_dimension(n: int, nu, mu, max_n: int | None = None) -> int:
    """dim (CF_n E_mu)^nu, from the isotypic projector trace and from the closed formula."""
    check_cap("repanalysis", n, max_n)
    nu, mu = _as_partition(nu), _as_partition(mu)
    traces = _class_traces(n, _right(n, mu))
    table = character_table(n)
    f_nu = dimension(nu)
    by_trace = Fraction(0)
    for rho, size, _rep in conjugacy_class_data(n):
        by_trace += size * table[nu, rho] * traces[rho]
    by_trace *= Fraction(f_nu, math.factorial(n))
    closed = f_nu * len(compositions_rearranging_to(mu)) * kostka_number(nu, mu)
    if by_trace != closed:
        raise InconsistentResult(f"isotypic dimension nu={nu}, mu={mu}: trace gives {by_trace}, formula gives {closed}")
    return closed


def composition_multiplicity(n: int, nu, mu, lam, max_n: int | None = None) -> int:
    """[(CF_n E_mu)^nu : M_lam] = f^nu <s_nu, ch(E_lam CF_n E_mu)>."""
    nu = _as_partition(nu)
    ch = character_of(projected_space(n, lam, mu, max_n=max_n))
    val = dimension(nu) * hall_inner(s(nu), ch)
    if val < 0 or val.denominator != 1:
        raise InconsistentResult(f"multiplicity {val} is not a nonnegative integer")
    return int(val)


# ---------------------------------------------------------------------------
# the chamber route for mu = 1^n


def _chamber_perm(c: Face) -> Permutation:
    return Permutation(tuple(b[0] for b in c.blocks))


def chamber_character(n: int, lam, max_n: int | None = None) -> SymFunc:
    """ch(E_lam CF_n E_{1^n}) using only E_lam * (12...n as a chamber).

    With x = E_lam * c_id = sum_t x_t c_t (chambers indexed by permutations),
    tr(w o T) = z_rho * (sum of x_t over t of cycle type rho).
    """
    check_cap("family", n, max_n)
    lam = _as_partition(lam)
    E = cached_family(n).by_orbit[lam]
    c_id = Face.chamber(range(1, n + 1))
    x = multiply(E, FaceAlgebraElement.from_face(c_id))
    by_type: dict[Partition, Fraction] = {}
    for c, coeff in x.terms.items():
        if len(c) != n:
            raise InconsistentResult(f"E_{lam} times a chamber has a non-chamber term {c}")
        rho = cycle_type(_chamber_perm(c))
        by_type[rho] = by_type.get(rho, Fraction(0)) + coeff
    traces = {rho: z_coefficient(rho) * by_type.get(rho, Fraction(0)) for rho in partitions_of(n)}
    ch = frobenius_from_traces(n, traces)
    _genuine(ch, f"ch(E_{lam} CF_{n} E_1^{n})")
    return ch


def face_module_character(n: int, max_n: int | None = None) -> SymFunc:
    """ch(CF_n) from fixed-face counts of class representatives."""
    faces = enumerate_faces(n, max_n)
    traces = {}
    for rho, _size, rep in conjugacy_class_data(n):
        traces[rho] = Fraction(sum(1 for f in faces if act(rep, f) == f))
    return frobenius_from_traces(n, traces)


def sign_isotypic_type(n: int, max_n: int | None = None) -> Partition:
    """The unique lam with [(CF_n E_{1^n})^{1^n} : M_lam] != 0."""
    check_cap("family", n, max_n)
    sign = Partition((1,) * n)
    hits = []
    for lam in partitions_of(n):
        if n <= 5:
            m = composition_multiplicity(n, sign, sign, lam, max_n=max_n)
        else:
            m = hall_inner(s(sign), chamber_character(n, lam, max_n=max_n))
        if m:
            hits.append((lam, m))
    if len(hits) != 1 or hits[0][1] != 1:
        raise InconsistentResult(f"sign-isotypic part at n={n} is not a single simple: {hits}")
    return hits[0][0]


def longest_element_type(n: int) -> Partition:
    """Cycle type of the permutation i -> n + 1 - i."""
    return cycle_type(Permutation(tuple(range(n, 0, -1))))


def full_descent_counts(n: int) -> dict[Partition, int]:
    """Number of permutations of each cycle type whose descent set is {1..n-1}."""
    full = set(range(1, n))
    counts: dict[Partition, int] = {}
    for w in all_permutations(n):
        if set(w.descent_set()) == full:
            t = cycle_type(w)
            counts[t] = counts.get(t, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# reports


def _pair_entry(n: int, lam: Partition, mu: Partition, max_n: int | None) -> dict:
    space = projected_space(n, lam, mu, max_n=max_n)
    ch = character_of(space)
    mults = []
    for nu in partitions_of(n):
        v = dimension(nu) * hall_inner(s(nu), ch)
        if v:
            mults.append({"nu": list(nu), "lambda": list(lam), "value": int(v)})
    return {
        "n": n,
        "lambda": list(lam),
        "mu": list(mu),
        "ch_schur": {str(k): int(v) for k, v in schur_expand(ch).items()},
        "ch": ch.to_json("s"),
        "dims": {"projected": space.dimension},
        "multiplicities": mults,
    }


def analysis_report(n: int, jobs: int = 1, max_n: int | None = None) -> list[dict]:
    """One JSON-ready record per (lam, mu) pair, in partition order."""
    check_cap("repanalysis", n, max_n)
    cached_family(n)
    face_monoid(n).table
    pairs = [(lam, mu) for lam in partitions_of(n) for mu in partitions_of(n)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda lm: _pair_entry(n, lm[0], lm[1], max_n), pairs))
    return [_pair_entry(n, lam, mu, max_n) for lam, mu in pairs]


def multiplicity_table(n: int, jobs: int = 1, max_n: int | None = None) -> dict[tuple[Partition, Partition], dict[Partition, int]]:
    """(nu, mu) -> {lam: [(CF_n E_mu)^nu : M_lam]} over all nonzero entries."""
    grid: dict[tuple[Partition, Partition], dict[Partition, int]] = {
        (nu, mu): {} for nu in partitions_of(n) for mu in partitions_of(n)
    }
    for rec in analysis_report(n, jobs=jobs, max_n=max_n):
        mu = Partition(rec["mu"])
        for m in rec["multiplicities"]:
            grid[(Partition(m["nu"]), mu)][Partition(m["lambda"])] = m["value"]
    return grid
