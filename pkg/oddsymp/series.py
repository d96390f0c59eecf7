"""Truncated power series in auxiliary variables u_1..u_k and the Cauchy-type oracle.

The oracle expands

    prod_{i<j} (1 - u_i u_j) / [prod_{i,j} (1 - x_i u_j)(1 - x_i^-1 u_j) prod_j (1 - z u_j)]

up to a total u-degree, multiplies by the u-Vandermonde and reads odd
symplectic characters off the coefficients at lambda + staircase. It shares no
code with the determinant formulas, so agreement between the two is a real
check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from operator import add
from typing import Iterable, Mapping

from .exceptions import SeriesError
from .laurent import LaurentPoly, VarTable
from .partitions import Partition, exponent_vector, partitions_up_to

logger = logging.getLogger(__name__)

UExponent = tuple[int, ...]


@dataclass
class TruncatedSeries:
    u_count: int
    degree_cap: int
    table: VarTable
    terms: dict[UExponent, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.u_count < 0 or self.degree_cap < 0:
            raise SeriesError("u_count and degree_cap must be nonnegative")
        clean = {}
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != self.u_count:
                raise SeriesError(f"Exponent {exp} does not have {self.u_count} entries")
            if any(e < 0 for e in exp):
                raise SeriesError(f"Negative u-exponent in {exp}")
            if sum(exp) > self.degree_cap or not coeff:
                continue
            if coeff.table != self.table:
                coeff = coeff.rebase(self.table)
            clean[exp] = coeff
        self.terms = clean

    @classmethod
    def one(cls, u_count: int, degree_cap: int, table: VarTable) -> "TruncatedSeries":
        return cls(u_count, degree_cap, table, {(0,) * u_count: LaurentPoly.one(table)})

    @classmethod
    def one_minus(cls, u_count: int, degree_cap: int, coeff: LaurentPoly, u: Mapping[int, int]) -> "TruncatedSeries":
        """1 - coeff * prod u_j^e_j, with u given as {index: exponent}."""
        exp = [0] * u_count
        for j, e in u.items():
            exp[j] += e
        one = LaurentPoly.one(coeff.table)
        return cls(u_count, degree_cap, coeff.table, {(0,) * u_count: one, tuple(exp): -coeff})

    def coefficient(self, exp: Iterable[int]) -> LaurentPoly:
        exp = tuple(exp)
        if sum(exp) > self.degree_cap:
            raise SeriesError(f"Coefficient at {exp} lies beyond the cap {self.degree_cap}")
        return self.terms.get(exp, LaurentPoly.zero(self.table))

    def constant_term(self) -> LaurentPoly:
        return self.coefficient((0,) * self.u_count)

    def __len__(self) -> int:
        return len(self.terms)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            u = "*".join(f"u{j + 1}" if e == 1 else f"u{j + 1}^{e}" for j, e in enumerate(exp) if e)
            pieces.append(f"({self.terms[exp]})" + (f"*{u}" if u else ""))
        return " + ".join(pieces)


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries):
    if a.u_count != b.u_count:
        raise SeriesError(f"Series in {a.u_count} and {b.u_count} u-variables cannot be combined")
    if a.degree_cap != b.degree_cap:
        raise SeriesError(f"Degree caps differ: {a.degree_cap} vs {b.degree_cap}")
    if a.table != b.table:
        raise SeriesError("Coefficient variable tables differ")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """The product of ``a`` and ``b``, dropping every term above the cap."""
    _check_compatible(a, b)
    cap = a.degree_cap
    items = sorted(b.terms.items(), key=lambda item: sum(item[0]))
    out: dict[UExponent, LaurentPoly] = {}
    for exp1, v1 in a.terms.items():
        d1 = sum(exp1)
        for exp2, v2 in items:
            if d1 + sum(exp2) > cap:
                break
            exp = tuple(map(add, exp1, exp2))
            out[exp] = out[exp] + v1 * v2 if exp in out else v1 * v2
    return TruncatedSeries(a.u_count, cap, a.table, out)


def _exponents_by_degree(u_count: int, cap: int) -> Iterable[UExponent]:
    def compositions(total: int, parts: int):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for degree in range(cap + 1):
        yield from compositions(degree, u_count)


def series_geom_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """g with f * g = 1 up to the cap, for f with constant term 1.

    Writing f = 1 - h, the coefficients follow g_e = sum_{d != 0} h_d g_{e-d},
    filled in by increasing total degree.
    """
    zero = (0,) * f.u_count
    if f.constant_term() != 1:
        raise SeriesError(f"Constant term {f.constant_term()} is not 1; only 1 - (positive order) is inverted")
    h = [(exp, -coeff) for exp, coeff in f.terms.items() if exp != zero]
    g: dict[UExponent, LaurentPoly] = {zero: LaurentPoly.one(f.table)}
    for exp in _exponents_by_degree(f.u_count, f.degree_cap):
        if exp == zero:
            continue
        total = None
        for hexp, hcoeff in h:
            rest = tuple(e - d for e, d in zip(exp, hexp))
            if rest in g:
                term = hcoeff * g[rest]
                total = term if total is None else total + term
        if total is not None and not total.is_zero():
            g[exp] = total
    return TruncatedSeries(f.u_count, f.degree_cap, f.table, g)


def _product(series: Iterable[TruncatedSeries], u_count: int, degree_cap: int, table: VarTable) -> TruncatedSeries:
    result = TruncatedSeries.one(u_count, degree_cap, table)
    for s in series:
        result = series_mul(result, s)
    return result


def cauchy_rhs(n: int, degree_cap: int, xs=None, z: str = "z") -> TruncatedSeries:
    """The Cauchy kernel in u_1..u_{n+1} with coefficients over x_1..x_n, z."""
    if n < 0 or degree_cap < 0:
        raise SeriesError("n and degree_cap must be nonnegative")
    xs = tuple(xs) if xs is not None else tuple(f"x{i}" for i in range(1, n + 1))
    table = VarTable.of(*xs, z)
    k = n + 1
    linear = [LaurentPoly.variable(table, x, e) for x in xs for e in (1, -1)]
    linear.append(LaurentPoly.variable(table, z))
    kernel = []
    for j in range(k):
        # all denominators in u_j at once, a series in u_j alone
        denominator = _product(
            (TruncatedSeries.one_minus(k, degree_cap, c, {j: 1}) for c in linear), k, degree_cap, table
        )
        kernel.append(series_geom_inverse(denominator))
    one = LaurentPoly.one(table)
    numerator = (
        TruncatedSeries.one_minus(k, degree_cap, one, {i: 1, j: 1}) for i in range(k) for j in range(i + 1, k)
    )
    result = _product([*kernel, *numerator], k, degree_cap, table)
    logger.debug("Cauchy kernel n=%d cap=%d has %d terms", n, degree_cap, len(result))
    return result


def u_vandermonde(u_count: int, degree_cap: int, table: VarTable) -> TruncatedSeries:
    """prod_{i<j} (u_i - u_j) = det(u_i^(k-j))."""
    factors = []
    for i in range(u_count):
        for j in range(i + 1, u_count):
            ui = [0] * u_count
            uj = [0] * u_count
            ui[i] = uj[j] = 1
            one = LaurentPoly.one(table)
            factors.append(TruncatedSeries(u_count, degree_cap, table, {tuple(ui): one, tuple(uj): -one}))
    return _product(factors, u_count, degree_cap, table)


def staircase_degree(n: int) -> int:
    return n * (n + 1) // 2


def default_cap(n: int, extra: int = 4) -> int:
    return staircase_degree(n) + extra


def reachable_partitions(n: int, degree_cap: int) -> list[Partition]:
    budget = degree_cap - staircase_degree(n)
    if budget < 0:
        return []
    return partitions_up_to(n + 1, budget)


def extract_characters(
    s: TruncatedSeries, n: int, partitions: Iterable[Partition] | None = None
) -> dict[Partition, LaurentPoly]:
    """Sp_2n+1(lambda) as the coefficient of u^(lambda + staircase) in Vandermonde * s.

    Without ``partitions`` every lambda with |lambda| + n(n+1)/2 <= cap is returned.
    """
    if s.u_count != n + 1:
        raise SeriesError(f"A rank {n} oracle needs {n + 1} u-variables, the series has {s.u_count}")
    wanted = reachable_partitions(n, s.degree_cap) if partitions is None else list(partitions)
    for lam in wanted:
        lam.check_length(n + 1)
        if lam.size() + staircase_degree(n) > s.degree_cap:
            raise SeriesError(f"Cap {s.degree_cap} is too small to reach {lam} at n={n}")
    alternant = series_mul(u_vandermonde(n + 1, s.degree_cap, s.table), s)
    return {lam: alternant.coefficient(exponent_vector(lam, n + 1)) for lam in wanted}


def oracle_characters(n: int, degree_cap: int | None = None, z: str = "z") -> dict[Partition, LaurentPoly]:
    cap = default_cap(n) if degree_cap is None else degree_cap
    characters = extract_characters(cauchy_rhs(n, cap, z=z), n)
    for lam, value in characters.items():
        if not value.is_polynomial_in([z]):
            raise SeriesError(f"Oracle coefficient for {lam} has a negative power of {z}")
    logger.info("Oracle n=%d cap=%d produced %d characters", n, cap, len(characters))
    return characters
