"""Bialternant formulas for Schur, symplectic and odd symplectic characters.

Every character is computed symbolically as det(numerator) / det(denominator)
by exact division in the Laurent ring. Half-integer powers never appear:
where a formula needs x^(1/2) the matrices are built in variables t_i with
x_i = t_i^2 (and s with q = s^2).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .exceptions import RingError
from .laurent import LaurentPoly, VarTable
from .linalg import RingMatrix, det, ring_product
from .partitions import EMPTY, Partition
from .reports import CheckRun, VerificationReport

logger = logging.getLogger(__name__)


def x_names(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def _names(xs: Sequence[str] | None, n: int, prefix: str = "x") -> tuple[str, ...]:
    if xs is None:
        return x_names(n, prefix)
    xs = tuple(xs)
    if len(xs) != n:
        raise ValueError(f"Expected {n} variable names, got {len(xs)}")
    return xs


def _alt(table: VarTable, name: str, e: int) -> LaurentPoly:
    """x^e - x^-e"""
    return LaurentPoly.variable(table, name, e) - LaurentPoly.variable(table, name, -e)


def _sym(table: VarTable, name: str, e: int) -> LaurentPoly:
    """x^e + x^-e"""
    return LaurentPoly.variable(table, name, e) + LaurentPoly.variable(table, name, -e)


def pair_factors(table: VarTable, ts: Sequence[str]) -> LaurentPoly:
    """prod_{i<j} (t_i t_j - t_i^-1 t_j^-1)(t_i t_j^-1 - t_i^-1 t_j).

    With x_i = t_i^2 this is the type C/D pair product
    prod (x_i^1/2 x_j^1/2 - x_i^-1/2 x_j^-1/2)(x_i^1/2 x_j^-1/2 - x_i^-1/2 x_j^1/2).
    """
    def factor(a: str, b: str) -> LaurentPoly:
        def mono(ea: int, eb: int) -> LaurentPoly:
            return LaurentPoly.monomial(table, {a: ea, b: eb})

        return (mono(1, 1) - mono(-1, -1)) * (mono(1, -1) - mono(-1, 1))

    return ring_product((factor(a, b) for i, a in enumerate(ts) for b in ts[i + 1:]), table)


# -- GL_n ------------------------------------------------------------------


def vandermonde_matrix(table: VarTable, xs: Sequence[str]) -> RingMatrix:
    n = len(xs)
    return RingMatrix.from_rows(
        ([LaurentPoly.variable(table, x, n - j) for j in range(1, n + 1)] for x in xs), table
    )


@lru_cache(maxsize=None)
def _schur(lam: Partition, xs: tuple[str, ...]) -> LaurentPoly:
    n = len(xs)
    table = VarTable.of(*xs)
    parts = lam.padded(n)
    numerator = RingMatrix.from_rows(
        ([LaurentPoly.variable(table, x, parts[j - 1] + n - j) for j in range(1, n + 1)] for x in xs),
        table,
    )
    return det(numerator).exact_div(det(vandermonde_matrix(table, xs)))


def schur(lam: Partition, n: int, xs: Sequence[str] | None = None) -> LaurentPoly:
    lam.check_length(n)
    return _schur(lam, _names(xs, n))


def gl_den_identity(n: int) -> VerificationReport:
    run = CheckRun("gl-den", "Vandermonde determinant", n=n)
    xs = x_names(n)
    table = VarTable.of(*xs)
    x = [LaurentPoly.variable(table, name) for name in xs]
    product = ring_product((x[i] - x[j] for i in range(n) for j in range(i + 1, n)), table)
    run.expect_equal(f"n={n}", det(vandermonde_matrix(table, xs)), product)
    return run.report()


# -- Sp_2n -----------------------------------------------------------------


def sp_matrix(lam: Partition, xs: Sequence[str], table: VarTable | None = None) -> RingMatrix:
    n = len(xs)
    table = table or VarTable.of(*xs)
    parts = lam.padded(n)
    return RingMatrix.from_rows(
        ([_alt(table, x, parts[j - 1] + n - j + 1) for j in range(1, n + 1)] for x in xs), table
    )


@lru_cache(maxsize=None)
def _sp_denominator(xs: tuple[str, ...]) -> LaurentPoly:
    return det(sp_matrix(EMPTY, xs))


@lru_cache(maxsize=None)
def _sp_even(lam: Partition, xs: tuple[str, ...]) -> LaurentPoly:
    return det(sp_matrix(lam, xs)).exact_div(_sp_denominator(xs))


def sp_even(lam: Partition, n: int, xs: Sequence[str] | None = None) -> LaurentPoly:
    """Sp_2n(lambda; x_1..x_n). At n = 0 this is the constant 1."""
    lam.check_length(n)
    return _sp_even(lam, _names(xs, n))


def sp_den_identity(n: int) -> VerificationReport:
    """Weyl denominator for Sp_2n with the pair factor
    (x_i^1/2 x_j^-1/2 - x_i^-1/2 x_j^1/2), checked after x_i = t_i^2."""
    run = CheckRun("sp-den", "Sp_2n Weyl denominator", n=n)
    xs, ts = x_names(n), x_names(n, "t")
    denominator = _sp_denominator(xs)
    table = VarTable.of(*ts)
    doubled = denominator.substitute_all({x: LaurentPoly.variable(table, t, 2) for x, t in zip(xs, ts)})
    product = ring_product((_alt(table, t, 2) for t in ts), table) * pair_factors(table, ts)
    run.expect_equal(f"n={n}", doubled, product)
    return run.report()


# -- odd symplectic Sp_2n+1 --------------------------------------------------


def matrix_A(lam: Partition, n: int, xs: Sequence[str] | None = None, z: str = "z") -> RingMatrix:
    """The (n+1) x (n+1) numerator matrix A_lambda over x_1..x_n, z."""
    lam.check_length(n + 1)
    xs = _names(xs, n)
    table = VarTable.of(*xs, z)
    parts = lam.padded(n + 1)
    z_inv = LaurentPoly.variable(table, z, -1)
    rows = [
        [
            _alt(table, x, parts[j - 1] + n - j + 2) - z_inv * _alt(table, x, parts[j - 1] + n - j + 1)
            for j in range(1, n + 2)
        ]
        for x in xs
    ]
    rows.append([LaurentPoly.variable(table, z, parts[j - 1] + n - j + 1) for j in range(1, n + 2)])
    return RingMatrix.from_rows(rows, table)


@lru_cache(maxsize=None)
def _osp_denominator(xs: tuple[str, ...], z: str) -> LaurentPoly:
    return det(matrix_A(EMPTY, len(xs), xs, z))


@lru_cache(maxsize=None)
def _osp_char(lam: Partition, xs: tuple[str, ...], z: str) -> LaurentPoly:
    value = det(matrix_A(lam, len(xs), xs, z)).exact_div(_osp_denominator(xs, z))
    if not value.is_polynomial_in([z]):
        raise RingError(f"Sp_{2 * len(xs) + 1}({lam}) has a negative power of {z}")
    return value


def osp_char(lam: Partition, n: int, xs: Sequence[str] | None = None, z: str = "z") -> LaurentPoly:
    """Sp_2n+1(lambda; x_1..x_n; z) = det A_lambda / det A_empty."""
    lam.check_length(n + 1)
    return _osp_char(lam, _names(xs, n), z)


def osp_den_identity(n: int) -> VerificationReport:
    run = CheckRun("osp-den", "odd symplectic denominator det A_empty", n=n)
    xs, ts = x_names(n), x_names(n + 1, "t")
    table = VarTable.of(*ts)
    doubled = _osp_denominator(xs, "z").substitute_all(
        {name: LaurentPoly.variable(table, t, 2) for name, t in zip(xs + ("z",), ts)}
    )
    product = ring_product((_alt(table, t, 2) for t in ts[:n]), table) * pair_factors(table, ts)
    run.expect_equal(f"n={n}", doubled, product)
    return run.report()


# -- Proctor's z = 1 formula -------------------------------------------------


def matrix_B(lam: Partition, n: int, ts: Sequence[str] | None = None) -> RingMatrix:
    """B_lambda in t-variables: entries t_i^e + t_i^-e with e = 2 lambda_j + 2n - 2j + 3."""
    lam.check_length(n + 1)
    ts = _names(ts, n, "t")
    table = VarTable.of(*ts)
    parts = lam.padded(n + 1)
    rows = [[_sym(table, t, 2 * parts[j - 1] + 2 * n - 2 * j + 3) for j in range(1, n + 2)] for t in ts]
    rows.append([1] * (n + 1))
    return RingMatrix.from_rows(rows, table)


@lru_cache(maxsize=None)
def _proctor_denominator(ts: tuple[str, ...]) -> LaurentPoly:
    return det(matrix_B(EMPTY, len(ts), ts))


@lru_cache(maxsize=None)
def _osp_proctor(lam: Partition, ts: tuple[str, ...]) -> LaurentPoly:
    return det(matrix_B(lam, len(ts), ts)).exact_div(_proctor_denominator(ts))


def osp_proctor(lam: Partition, n: int, ts: Sequence[str] | None = None) -> LaurentPoly:
    """Sp_2n+1(lambda; t_1^2..t_n^2; 1) = det B_lambda / det B_empty."""
    lam.check_length(n + 1)
    return _osp_proctor(lam, _names(ts, n, "t"))


def osp_den2_identity(n: int) -> VerificationReport:
    run = CheckRun("osp-den2", "Proctor denominator det B_empty", n=n)
    ts = x_names(n, "t")
    table = VarTable.of(*ts)
    product = ring_product((_alt(table, t, 1) * _alt(table, t, 2) for t in ts), table)
    run.expect_equal(f"n={n}", _proctor_denominator(ts), product * pair_factors(table, ts))
    return run.report()


# -- principal specialisation --------------------------------------------------


def q_integer(m: int, s: str = "s") -> LaurentPoly:
    """[m]_q written in s = q^1/2: s^-(m-1) (1 + s^2 + ... + s^(2m-2))."""
    if m <= 0:
        raise ValueError(f"q-integer needs m >= 1, got {m}")
    table = VarTable.of(s)
    return sum((LaurentPoly.variable(table, s, 2 * k - (m - 1)) for k in range(m)), LaurentPoly.zero(table))


@dataclass(frozen=True)
class RootDatum:
    """Positive roots e_i +- e_j of type D_{n+1} and rho, stored doubled."""

    n: int

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def positive_roots(self) -> tuple[tuple[int, int, int], ...]:
        # (i, j, sign) stands for e_i + sign * e_j, 0-based, i < j
        return tuple(
            (i, j, sign) for i in range(self.rank) for j in range(i + 1, self.rank) for sign in (-1, 1)
        )

    @property
    def two_rho(self) -> tuple[int, ...]:
        return tuple(2 * self.n + 1 - 2 * i for i in range(self.rank))

    def pairing(self, doubled: Sequence[int], root: tuple[int, int, int]) -> int:
        """<v, alpha> for v given as 2v."""
        i, j, sign = root
        value = doubled[i] + sign * doubled[j]
        if value % 2:
            raise RingError(f"Half-integral pairing {value}/2 with root {root}")
        return value // 2

    def shifted(self, lam: Partition) -> tuple[int, ...]:
        """2(lambda + rho)"""
        return tuple(2 * p + r for p, r in zip(lam.padded(self.rank), self.two_rho))


def osp_principal_q(lam: Partition, n: int, q: str = "q") -> LaurentPoly:
    """Sp_2n+1(lambda; q^n, ..., q; 1) as prod [<lambda+rho, a>]_q / [<rho, a>]_q."""
    lam.check_length(n + 1)
    datum = RootDatum(n)
    numerator = ring_product((q_integer(datum.pairing(datum.shifted(lam), a)) for a in datum.positive_roots), VarTable.of("s"))
    denominator = ring_product((q_integer(datum.pairing(datum.two_rho, a)) for a in datum.positive_roots), VarTable.of("s"))
    in_s = numerator.exact_div(denominator)
    odd = [exp for exp, _ in in_s.items() if exp[0] % 2]
    if odd:
        raise RingError(f"Odd power of q^1/2 in the principal specialisation of {lam}: {odd[0]}")
    table = VarTable.of(q)
    return LaurentPoly(table, {(exp[0] // 2,): coeff for exp, coeff in in_s.items()})


# -- dispatch ------------------------------------------------------------------


CHARACTERS: dict[str, tuple[Callable[..., LaurentPoly], Callable[[int], int]]] = {
    # family -> (function, maximal length of lambda at rank n)
    "schur": (schur, lambda n: n),
    "sp_even": (sp_even, lambda n: n),
    "osp": (osp_char, lambda n: n + 1),
    "osp_proctor": (osp_proctor, lambda n: n + 1),
}


@dataclass(frozen=True)
class CharacterSpec:
    family: str
    lam: Partition
    n: int

    def __post_init__(self):
        if self.family not in CHARACTERS:
            raise ValueError(f"Unknown character family {self.family!r}")
        if self.n < 0:
            raise ValueError("Rank must be nonnegative")
        self.lam.check_length(self.max_length(self.family, self.n))

    @staticmethod
    def max_length(family: str, n: int) -> int:
        return CHARACTERS[family][1](n)

    def compute(self) -> LaurentPoly:
        function, _ = CHARACTERS[self.family]
        logger.debug("Computing %s%s at n=%d", self.family, self.lam, self.n)
        return function(self.lam, self.n)

    def metadata(self) -> dict:
        return {"family": self.family, "lambda": self.lam.to_json(), "n": self.n}
