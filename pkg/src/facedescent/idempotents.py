"""An S_n-equivariant complete family of primitive orthogonal idempotents.

For each set partition X let u_X be the uniform average of the faces with
support X.  Working from the finest set partition up to the one-block
partition,

    E_X = u_X - u_X * (sum of E_Y over Y strictly finer than X).

The finest partition gets E = u (the chamber average) and the one-block
partition ends up as 1 - (everything else).  Because u_X is permuted like
X, the family is equivariant, so only one E_X per orbit is computed from
the recursion; the others are images under permutations.

Every build is followed by :func:`verify_family`, which checks
completeness, orthogonality, idempotency, equivariance and the support
and triangularity properties.  Primitivity is not checked directly: the
family has one idempotent per set partition, which matches the number of
simple modules.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .combinatorics import (
    Partition,
    Permutation,
    SetPartition,
    block_size_type,
    leq,
    partitions_of,
    refines,
    set_partitions_of,
)
from .config import check_cap
from .faces import (
    Face,
    FaceAlgebraElement,
    act_linear,
    enumerate_faces,
    face_monoid,
    iter_support_fiber,
    multiply,
    support,
)
from .linalg import IntMatrix, element_matrix, left_operator, right_operator

__all__ = [
    "IdempotentFamily",
    "FamilyCheckError",
    "build_family",
    "verify_family",
    "orbit_annihilation_check",
    "orbit_representative",
]

log = logging.getLogger(__name__)


class FamilyCheckError(AssertionError):
    """An idempotent family failed one of its defining properties."""


@dataclass
class IdempotentFamily:
    n: int
    by_support: dict[SetPartition, FaceAlgebraElement]
    by_orbit: dict[Partition, FaceAlgebraElement] = field(default_factory=dict)

    def __post_init__(self):
        if not self.by_orbit:
            sums: dict[Partition, FaceAlgebraElement] = {}
            for X, E in self.by_support.items():
                lam = block_size_type(X)
                sums[lam] = sums[lam] + E if lam in sums else E
            self.by_orbit = {lam: sums[lam] for lam in partitions_of(self.n)}

    def __getitem__(self, key):
        if isinstance(key, SetPartition):
            return self.by_support[key]
        return self.by_orbit[Partition.from_parts(key)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "by_support": [
                {"support": [list(b) for b in X.blocks], "element": E.to_records()}
                for X, E in self.by_support.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IdempotentFamily":
        n = data["n"]
        by_support = {
            SetPartition.from_blocks(rec["support"], n): FaceAlgebraElement.from_records(n, rec["element"])
            for rec in data["by_support"]
        }
        return cls(n, by_support)


def orbit_representative(lam: Partition) -> SetPartition:
    """Set partition with consecutive blocks of sizes lam_1, lam_2, ..."""
    blocks, start = [], 1
    for part in lam:
        blocks.append(tuple(range(start, start + part)))
        start += part
    return SetPartition.from_blocks(blocks)


def _carry(rep: SetPartition, X: SetPartition) -> Permutation:
    """A permutation sending rep to X, matching blocks of equal size in order."""
    rep_blocks = sorted(rep.blocks, key=lambda b: (-len(b), b))
    x_blocks = sorted(X.blocks, key=lambda b: (-len(b), b))
    img = [0] * rep.n
    for a, b in zip(rep_blocks, x_blocks):
        for i, j in zip(a, b):
            img[i - 1] = j
    return Permutation(tuple(img))


def _uniform(X: SetPartition) -> FaceAlgebraElement:
    return FaceAlgebraElement.uniform(list(iter_support_fiber(X.n, X)))


def _recursion_step(X: SetPartition, E: dict[SetPartition, FaceAlgebraElement]) -> FaceAlgebraElement:
    n = X.n
    u = _uniform(X)
    below = FaceAlgebraElement.zero(n)
    for Y, EY in E.items():
        if Y != X and leq(Y, X):
            below = below + EY
    return u - multiply(u, below)


def build_family(n: int, max_n: int | None = None, verify: bool = True, use_symmetry: bool = True) -> IdempotentFamily:
    """Construct {E_X} for degree n and (by default) verify it.

    ``use_symmetry=False`` runs the recursion on every set partition
    instead of one per orbit; the two agree, the symmetric path is faster.
    """
    check_cap("family", n, max_n)
    parts = set_partitions_of(n)
    by_level: dict[int, list[SetPartition]] = {}
    for X in parts:
        by_level.setdefault(X.num_blocks, []).append(X)

    E: dict[SetPartition, FaceAlgebraElement] = {}
    for k in sorted(by_level, reverse=True):
        level = by_level[k]
        if use_symmetry:
            orbits: dict[Partition, list[SetPartition]] = {}
            for X in level:
                orbits.setdefault(block_size_type(X), []).append(X)
            new = {}
            for lam, members in orbits.items():
                rep = orbit_representative(lam)
                E_rep = _recursion_step(rep, E)
                for X in members:
                    new[X] = E_rep if X == rep else act_linear(_carry(rep, X), E_rep)
            E.update(new)
        else:
            new = {X: _recursion_step(X, E) for X in level}
            E.update(new)
        log.debug("built level with %d blocks (%d idempotents)", k, len(level))

    family = IdempotentFamily(n, {X: E[X] for X in parts})
    if verify:
        verify_family(family)
    return family


@lru_cache(maxsize=None)
def cached_family(n: int) -> IdempotentFamily:
    """Shared, verified family per degree."""
    return build_family(n, max_n=max(n, 1))


# ---------------------------------------------------------------------------
# verification


def _fail(prop: str, detail: str):
    raise FamilyCheckError(f"{prop} violated: {detail}")


def verify_family(family: IdempotentFamily, exhaustive_products: bool | None = None) -> dict[str, int]:
    """Check every defining property of the family; raise FamilyCheckError on the first failure.

    Returns counts of the checks performed.  Pairwise products and the
    face-product properties need the full product table, so they run for
    n <= 5 unless ``exhaustive_products`` says otherwise.
    """
    n = family.n
    E = family.by_support
    counts: dict[str, int] = {}
    if exhaustive_products is None:
        exhaustive_products = n <= 5

    total = FaceAlgebraElement.zero(n)
    for X, EX in E.items():
        total = total + EX
    if total != FaceAlgebraElement.one(n):
        _fail("completeness", f"sum of E_X = {total}")
    counts["completeness"] = 1

    # support property: E_X lives on faces with support <= X
    for X, EX in E.items():
        for f in EX.terms:
            if not leq(support(f), X):
                _fail("support property", f"E_{X} has face {f} with support not below {X}")
        fiber_total = sum((c for f, c in EX.terms.items() if support(f) == X), Fraction(0))
        if fiber_total != 1:
            _fail("normalisation c_X(E_X) = 1", f"X = {X}: got {fiber_total}")
    counts["support"] = len(E)

    if exhaustive_products:
        _check_products(family)
        counts["products"] = len(E) ** 2

    # equivariance on adjacent transpositions, which generate S_n
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        pi = Permutation(tuple(img))
        for X, EX in E.items():
            if act_linear(pi, EX) != E[X.act(pi)]:
                _fail("equivariance", f"s_{i} E_{X} != E_{X.act(pi)}")
    counts["equivariance"] = (n - 1) * len(E)

    if exhaustive_products:
        _check_face_products(family)
        counts["face_products"] = len(enumerate_faces(n)) * len(E)
    else:
        log.info("degree %d: pairwise and face-product checks skipped", n)
    return counts


def _support_data(n: int):
    """Support of every face (by index) and the set partitions in order."""
    mon = face_monoid(n)
    sups = [support(f) for f in mon.faces]
    return mon, sups


def _check_products(family: IdempotentFamily) -> None:
    """E_X E_Y = delta_{XY} E_X for all pairs."""
    n = family.n
    sps = list(family.by_support)
    cols = element_matrix(n, [family.by_support[Y] for Y in sps])
    for i, X in enumerate(sps):
        prod = left_operator(n, family.by_support[X]) @ cols
        for j, Y in enumerate(sps):
            want = cols.column(i) if Y == X else IntMatrix(np.zeros((cols.shape[0], 1), dtype=np.int64), 1)
            if not prod.column(j).same_as(want):
                what = "idempotency" if Y == X else "orthogonality"
                _fail(what, f"E_{X} E_{Y} is wrong")


def _check_face_products(family: IdempotentFamily) -> None:
    """f E_X = 0 unless support(f) >= X, and f E_{support(f)} = f + (strictly finer terms)."""
    n = family.n
    mon, sups = _support_data(n)
    for X, EX in family.by_support.items():
        R = right_operator(n, EX)
        M, d = R.num, R.den
        nonzero_cols = np.flatnonzero(np.any(M != 0, axis=0))
        for j in nonzero_cols:
            if not leq(X, sups[j]):
                _fail("annihilation property", f"{mon.faces[j]} E_{X} != 0 although its support is not >= {X}")
        for j, sf in enumerate(sups):
            if sf != X:
                continue
            col = M[:, j]
            if col[j] != d:
                _fail("triangularity property", f"coefficient of {mon.faces[j]} in its product with E_{X} is {Fraction(int(col[j]), d)}")
            for h in np.flatnonzero(col):
                if h != j and (sups[h] == X or not leq(sups[h], X)):
                    _fail("triangularity property", f"{mon.faces[j]} E_{X} has term {mon.faces[h]} outside strictly finer supports")


def orbit_annihilation_check(family: IdempotentFamily) -> list[tuple[Face, Partition]]:
    """All (f, mu) with f E_mu != 0 although mu does not refine the type of support(f).

    The returned list is empty for a correct family.
    """
    n = family.n
    mon, sups = _support_data(n)
    types = [block_size_type(X) for X in sups]
    violations = []
    for mu, Emu in family.by_orbit.items():
        M = right_operator(n, Emu).num
        for j in np.flatnonzero(np.any(M != 0, axis=0)):
            if not refines(mu, types[j]):
                violations.append((mon.faces[j], mu))
    return violations
