"""Symmetric functions over Q, stored in the power-sum basis.

A :class:`SymFunc` is a sparse map ``Partition -> Fraction`` giving the
coefficient of p_rho.  Products concatenate indices, plethysm rescales
them, and every other basis (h, s, monomial coefficients) is reached
through exact character values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .characters import character_value, character_table
from .combinatorics import Partition, partitions_of, z_coefficient

__all__ = [
    "SymFunc",
    "p",
    "h",
    "e",
    "h_of",
    "s",
    "multiply",
    "hall_inner",
    "plethysm",
    "mobius",
    "lie",
    "higher_lie",
    "monomial_coefficient",
    "schur_expand",
    "from_schur",
    "frobenius_from_traces",
    "NotSchurPositive",
]


def _part(t: Iterable[int]) -> Partition:
    # trusted fast path: caller passes a weakly decreasing tuple of positives
    return tuple.__new__(Partition, t)


def _merge(a: tuple, b: tuple) -> Partition:
    return _part(sorted(a + b, reverse=True))


class SymFunc:
    """Exact symmetric function in the p-basis; may mix degrees."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        out: dict[Partition, Fraction] = {}
        for rho, c in (terms or {}).items():
            key = Partition.from_parts(rho)
            out[key] = out.get(key, 0) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "SymFunc":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw({_part(()): Fraction(1)})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            t = out.get(k, 0) + v
            if t:
                out[k] = t
            else:
                out.pop(k, None)
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = Fraction(other)
        if not c:
            return SymFunc.zero()
        return SymFunc._raw({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, k: int):
        out = SymFunc.one()
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, inner: "SymFunc") -> "SymFunc":
        """``f(g)`` is the plethysm f[g]."""
        return plethysm(self, inner)

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ------------------------------------------------------------

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc._raw({k: v for k, v in self.terms.items() if sum(k) == d})

    def truncate(self, max_degree: int) -> "SymFunc":
        return SymFunc._raw({k: v for k, v in self.terms.items() if sum(k) <= max_degree})

    def coefficient(self, rho: Sequence[int]) -> Fraction:
        return self.terms.get(Partition.from_parts(rho), Fraction(0))

    def schur(self) -> dict[Partition, Fraction]:
        return schur_expand(self)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        return " + ".join(f"{v}*p{list(k)}" for k, v in items)

    def schur_string(self) -> str:
        """E.g. ``s[4] + 2*s[3,1]``."""
        return format_schur(schur_expand(self))

    def to_json(self, basis: str = "p") -> dict:
        """``{basis, terms: [{partition, numerator, denominator}]}``."""
        if basis == "p":
            coeffs = self.terms
        elif basis == "s":
            coeffs = schur_expand(self)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        items = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        return {
            "basis": basis,
            "terms": [
                {"partition": list(k), "numerator": v.numerator, "denominator": v.denominator}
                for k, v in items
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        coeffs = {tuple(t["partition"]): Fraction(t["numerator"], t["denominator"]) for t in data["terms"]}
        if data["basis"] == "p":
            return cls(coeffs)
        if data["basis"] == "s":
            return from_schur(coeffs)
        raise ValueError(f"unknown basis {data['basis']!r}")


def _coerce(x) -> SymFunc:
    if isinstance(x, SymFunc):
        return x
    return SymFunc.one() * Fraction(x)


def format_schur(coeffs: Mapping[Sequence[int], Fraction]) -> str:
    if not coeffs:
        return "0"
    out = []
    items = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(kv[0])), reverse=True)
    for lam, c in items:
        term = "s[" + ",".join(map(str, lam)) + "]"
        out.append(term if c == 1 else f"{c}*{term}")
    return " + ".join(out)


# ---------------------------------------------------------------------------
# bases


def p(rho: Sequence[int] | int) -> SymFunc:
    if isinstance(rho, int):
        rho = (rho,) if rho else ()
    return SymFunc._raw({Partition.from_parts(rho): Fraction(1)})


@lru_cache(maxsize=None)
def _h(k: int) -> SymFunc:
    return SymFunc._raw({rho: Fraction(1, z_coefficient(rho)) for rho in partitions_of(k)})


def h(k: int) -> SymFunc:
    """Complete homogeneous h_k = sum_rho p_rho / z_rho."""
    if k < 0:
        return SymFunc.zero()
    return _h(k)


@lru_cache(maxsize=None)
def _e(k: int) -> SymFunc:
    return SymFunc._raw(
        {rho: Fraction((-1) ** (k - len(rho)), z_coefficient(rho)) for rho in partitions_of(k)}
    )


def e(k: int) -> SymFunc:
    if k < 0:
        return SymFunc.zero()
    return _e(k)


def h_of(alpha: Iterable[int]) -> SymFunc:
    """h_alpha = h_{alpha_1} h_{alpha_2} ... for a composition, partition or word."""
    return _h_of(tuple(sorted(alpha, reverse=True)))


@lru_cache(maxsize=None)
def _h_of(alpha: tuple[int, ...]) -> SymFunc:
    out = SymFunc.one()
    for a in alpha:
        out = out * h(a)
    return out


@lru_cache(maxsize=None)
def _s(lam: tuple[int, ...]) -> SymFunc:
    n = sum(lam)
    table = character_table(n)
    return SymFunc._raw(
        {
            rho: Fraction(table.values[(lam, rho)], z_coefficient(rho))
            for rho in partitions_of(n)
            if table.values[(lam, rho)]
        }
    )


def s(lam: Sequence[int]) -> SymFunc:
    """Schur function s_lam = sum_rho chi^lam(rho) p_rho / z_rho."""
    return _s(Partition(lam))


# ---------------------------------------------------------------------------
# products and pairings


def multiply(F: SymFunc, G: SymFunc) -> SymFunc:
    out: dict[Partition, Fraction] = {}
    gitems = list(G.terms.items())
    for a, x in F.terms.items():
        for b, y in gitems:
            k = _merge(a, b)
            out[k] = out.get(k, 0) + x * y
    return SymFunc._raw({k: v for k, v in out.items() if v})


def hall_inner(F: SymFunc, G: SymFunc) -> Fraction:
    """<p_rho, p_sigma> = delta z_rho, extended bilinearly."""
    small, big = (F, G) if len(F.terms) <= len(G.terms) else (G, F)
    total = Fraction(0)
    for k, v in small.terms.items():
        w = big.terms.get(k)
        if w:
            total += v * w * z_coefficient(k)
    return total


def _scale_indices(G: SymFunc, r: int) -> SymFunc:
    """p_r[G]: every p_sigma becomes p_{r sigma}."""
    if r == 1:
        return G
    return SymFunc._raw({_part(x * r for x in k): v for k, v in G.terms.items()})


def plethysm(F: SymFunc, G: SymFunc) -> SymFunc:
    """F[G], using p_r[G] = G(p_k -> p_rk) extended multiplicatively and linearly."""
    scaled: dict[int, SymFunc] = {}
    powers: dict[tuple[int, ...], SymFunc] = {(): SymFunc.one()}

    def p_rho_of_G(rho: tuple[int, ...]) -> SymFunc:
        got = powers.get(rho)
        if got is None:
            r = rho[0]
            if r not in scaled:
                scaled[r] = _scale_indices(G, r)
            got = scaled[r] * p_rho_of_G(rho[1:])
            powers[rho] = got
        return got

    out = SymFunc.zero()
    for rho, c in F.terms.items():
        out = out + p_rho_of_G(tuple(rho)) * c
    return out


# ---------------------------------------------------------------------------
# higher Lie characters


def mobius(n: int) -> int:
    """Number-theoretic Mobius function, by trial division."""
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def lie(n: int) -> SymFunc:
    """L_n = (1/n) sum_{d | n} mobius(d) p_d^{n/d}."""
    if n < 1:
        raise ValueError("lie needs n >= 1")
    terms = {}
    for d in range(1, n + 1):
        if n % d == 0 and mobius(d):
            terms[_part((d,) * (n // d))] = Fraction(mobius(d), n)
    return SymFunc._raw(terms)


class NotSchurPositive(ArithmeticError):
    """A symmetric function expected to be a character had a bad Schur coefficient."""


def higher_lie(lam: Sequence[int], check: bool = True) -> SymFunc:
    """L_lam = prod_i h_{m_i}[L_i] where i occurs m_i times in lam.

    With ``check`` the Schur expansion is verified to have nonnegative
    integer coefficients.
    """
    out = _higher_lie(Partition.from_parts(lam))
    if check:
        assert_schur_positive(out, f"L_{tuple(lam)}")
    return out


@lru_cache(maxsize=None)
def _higher_lie(lam: Partition) -> SymFunc:
    out = SymFunc.one()
    for i, m in sorted(lam.multiplicities().items()):
        out = out * plethysm(h(m), lie(i))
    return out


def assert_schur_positive(F: SymFunc, label: str = "value") -> dict[Partition, Fraction]:
    coeffs = schur_expand(F)
    bad = {k: v for k, v in coeffs.items() if v < 0 or v.denominator != 1}
    if bad:
        raise NotSchurPositive(f"{label} has non-integral or negative Schur coefficients {bad}")
    return coeffs


# ---------------------------------------------------------------------------
# conversions


def monomial_coefficient(F: SymFunc, nu: Sequence[int]) -> Fraction:
    """Coefficient of x^nu in F, computed as <F, h_nu>."""
    return hall_inner(F, h_of(nu))


def schur_expand(F: SymFunc) -> dict[Partition, Fraction]:
    """Coefficients <F, s_lam> for every degree present in F (zeros dropped)."""
    out: dict[Partition, Fraction] = {}
    for d in sorted(F.degrees()):
        part = F.homogeneous_part(d)
        table = character_table(d)
        for lam in table.partitions:
            c = sum((v * table.values[(lam, rho)] for rho, v in part.terms.items()), Fraction(0))
            if c:
                out[lam] = c
    return out


def from_schur(coeffs: Mapping[Sequence[int], object]) -> SymFunc:
    out = SymFunc.zero()
    for lam, c in coeffs.items():
        out = out + s(Partition.from_parts(lam)) * Fraction(c)
    return out


def frobenius_from_traces(n: int, traces: Mapping[Sequence[int], object]) -> SymFunc:
    """ch = sum_rho traces(rho) p_rho / z_rho over all cycle types rho of n."""
    norm = {Partition.from_parts(k): Fraction(v) for k, v in traces.items()}
    missing = [rho for rho in partitions_of(n) if rho not in norm]
    if missing:
        raise ValueError(f"traces missing for classes {missing}")
    return SymFunc._raw(
        {rho: norm[rho] / z_coefficient(rho) for rho in partitions_of(n) if norm[rho]}
    )
