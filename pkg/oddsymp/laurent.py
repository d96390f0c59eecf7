"""Exact multivariate Laurent polynomials with integer coefficients.

A polynomial is a sparse map from exponent vectors to nonzero ``int``
coefficients over a fixed :class:`VarTable`. Exponents may be negative.
Rationals only appear when a polynomial is evaluated at a point.
"""

from __future__ import annotations

import heapq
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from operator import add, sub
from typing import Iterable, Iterator, Mapping, Union

from .exceptions import (
    NegativeExponentAtNonUnit,
    NegativePowerError,
    NotDivisible,
    RingError,
    VarTableMismatch,
    ZeroAtNegativePower,
)

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]
Rational = Union[int, Fraction]


@dataclass(frozen=True)
class VarTable:
    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise VarTableMismatch(f"Duplicate variable names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {name: k for k, name in enumerate(names)})

    @staticmethod
    @lru_cache(maxsize=None)
    def of(*names: str) -> "VarTable":
        return VarTable(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VarTableMismatch(f"Variable {name!r} is not in {list(self.names)}") from None

    def merge(self, other: "VarTable") -> "VarTable":
        if other == self:
            return self
        return VarTable.of(*self.names, *(name for name in other.names if name not in self))


def _sort_key(exp: Exponent):
    return (sum(abs(e) for e in exp), tuple((abs(e), e) for e in exp))


def _format_term(coeff: int, names: tuple[str, ...], exp: Exponent) -> str:
    mono = "*".join(
        name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
    )
    magnitude = abs(coeff)
    if not mono:
        return str(magnitude)
    if magnitude == 1:
        return mono
    return f"{magnitude}*{mono}"


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?")


def _parse_terms(text: str) -> Iterator[tuple[int, list[tuple[str, int]]]]:
    pieces = _TERM_SPLIT.split(text.strip())
    signs = [1] + [1 if s == "+" else -1 for s in pieces[1::2]]
    for sign, body in zip(signs, pieces[0::2]):
        body = body.strip()
        if body.startswith("-"):
            sign, body = -sign, body[1:].strip()
        coeff = sign
        factors = []
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            match = _FACTOR.fullmatch(factor)
            if match is None:
                raise RingError(f"Cannot read factor {factor!r} in {text!r}")
            factors.append((match.group(1), int(match.group(2) or 1)))
        yield coeff, factors


class LaurentPoly:
    __slots__ = ("table", "_terms")

    def __init__(self, table: VarTable, terms: Mapping[Iterable[int], int] | None = None):
        width = len(table)
        clean: dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != width:
                raise VarTableMismatch(f"Exponent {exp} does not fit {list(table.names)}")
            clean[exp] = clean.get(exp, 0) + int(coeff)
        self.table = table
        self._terms = {exp: coeff for exp, coeff in clean.items() if coeff}

    @classmethod
    def _raw(cls, table: VarTable, terms: dict[Exponent, int]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly.table = table
        poly._terms = terms
        return poly

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable) -> "LaurentPoly":
        return cls._raw(table, {})

    @classmethod
    def constant(cls, table: VarTable, value: int) -> "LaurentPoly":
        value = int(value)
        return cls._raw(table, {(0,) * len(table): value} if value else {})

    @classmethod
    def one(cls, table: VarTable) -> "LaurentPoly":
        return cls.constant(table, 1)

    @classmethod
    def monomial(cls, table: VarTable, powers: Mapping[str, int], coeff: int = 1) -> "LaurentPoly":
        exp = [0] * len(table)
        for name, e in powers.items():
            exp[table.index(name)] += e
        return cls._raw(table, {tuple(exp): coeff} if coeff else {})

    @classmethod
    def variable(cls, table: VarTable, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial(table, {name: power})

    @classmethod
    def parse(cls, text: str, table: VarTable | None = None) -> "LaurentPoly":
        """Read the text rendering produced by ``str()``.

        Without a table, variables are taken in order of first appearance.
        """
        text = text.strip()
        terms = [] if text in ("", "0") else list(_parse_terms(text))
        if table is None:
            seen: dict[str, None] = {}
            for _, factors in terms:
                for name, _ in factors:
                    seen.setdefault(name)
            table = VarTable.of(*seen)
        out: dict[Exponent, int] = {}
        for coeff, factors in terms:
            exp = [0] * len(table)
            for name, e in factors:
                exp[table.index(name)] += e
            key = tuple(exp)
            out[key] = out.get(key, 0) + coeff
        return cls(table, out)

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        table = VarTable.of(*data["vars"])
        return cls(table, {tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for monomials with coefficient +1 or -1, the units of the ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self.table), 0)

    def exponents_of(self, name: str) -> set[int]:
        if name not in self.table:
            return {0} if self._terms else set()
        k = self.table.index(name)
        return {exp[k] for exp in self._terms}

    def is_polynomial_in(self, names: Iterable[str]) -> bool:
        for name in names:
            if name in self.table and any(e < 0 for e in self.exponents_of(name)):
                return False
        return True

    def used_variables(self) -> tuple[str, ...]:
        return tuple(
            name for k, name in enumerate(self.table.names) if any(exp[k] for exp in self._terms)
        )

    def _named(self) -> dict[tuple[tuple[str, int], ...], int]:
        names = self.table.names
        return {
            tuple((name, e) for name, e in zip(names, exp) if e): coeff
            for exp, coeff in self._terms.items()
        }

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == LaurentPoly.constant(self.table, other)._terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.table == self.table:
            return self._terms == other._terms
        return self._named() == other._named()

    def __hash__(self) -> int:
        named = self._named()
        # constants hash like the int they compare equal to
        if not named:
            return hash(0)
        if len(named) == 1 and () in named:
            return hash(named[()])
        return hash(frozenset(named.items()))

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.table != self.table:
                raise VarTableMismatch(
                    f"Variable tables differ: {list(self.table.names)} vs {list(other.table.names)}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            value = out.get(exp, 0) + coeff
            if value:
                out[exp] = value
            else:
                del out[exp]
        return LaurentPoly._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.table, {exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        big, small = self._terms, other._terms
        if len(big) < len(small):
            big, small = small, big
        out: dict[Exponent, int] = {}
        get = out.get
        for es, cs in small.items():
            for eb, cb in big.items():
                exp = tuple(map(add, es, eb))
                out[exp] = get(exp, 0) + cs * cb
        return LaurentPoly._raw(self.table, {exp: c for exp, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise NegativePowerError(f"Negative power of the non-monomial {self}")
            ((exp, coeff),) = self._terms.items()
            return LaurentPoly._raw(
                self.table, {tuple(k * e for e in exp): coeff if k % 2 else 1}
            )
        result = LaurentPoly.one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, den) -> "LaurentPoly":
        """The quotient q with q * den == self; NotDivisible when there is none.

        Long division on the lexicographically leading term. The quotient's
        exponents are confined to the box [min(num) - min(den), max(num) - max(den)]
        per variable, which both bounds the loop and detects a nonzero remainder.
        """
        den = self._coerce(den)
        if den is NotImplemented:
            raise TypeError(f"Cannot divide by {type(den).__name__}")
        if den.is_zero():
            raise NotDivisible("Division by the zero polynomial")
        if self.is_zero():
            return self
        if den.is_monomial():
            ((dexp, dcoeff),) = den._terms.items()
            out = {}
            for exp, coeff in self._terms.items():
                q, r = divmod(coeff, dcoeff)
                if r:
                    raise NotDivisible(f"{coeff} is not divisible by {dcoeff}")
                out[tuple(map(sub, exp, dexp))] = q
            return LaurentPoly._raw(self.table, out)

        num_cols = list(zip(*self._terms))
        den_cols = list(zip(*den._terms))
        lo = [min(n) - min(d) for n, d in zip(num_cols, den_cols)]
        hi = [max(n) - max(d) for n, d in zip(num_cols, den_cols)]
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisible(f"Degree bounds rule out an exact quotient of {self} by {den}")

        lead = max(den._terms)
        lead_coeff = den._terms[lead]
        rest = [(exp, coeff) for exp, coeff in den._terms.items() if exp != lead]
        remainder = dict(self._terms)
        heap = [tuple(-e for e in exp) for exp in remainder]
        heapq.heapify(heap)
        quotient: dict[Exponent, int] = {}
        while heap:
            exp = tuple(-e for e in heapq.heappop(heap))
            coeff = remainder.get(exp)
            if not coeff:
                continue
            qexp = tuple(map(sub, exp, lead))
            qcoeff, r = divmod(coeff, lead_coeff)
            if r or any(e < l or e > h for e, l, h in zip(qexp, lo, hi)):
                raise NotDivisible(f"No exact quotient: remainder term at {exp} with coefficient {coeff}")
            quotient[qexp] = qcoeff
            del remainder[exp]
            for dexp, dcoeff in rest:
                target = tuple(map(add, qexp, dexp))
                value = remainder.get(target, 0) - qcoeff * dcoeff
                if value:
                    if target not in remainder:
                        heapq.heappush(heap, tuple(-e for e in target))
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return LaurentPoly._raw(self.table, quotient)

    # -- changes of variables ----------------------------------------------

    def rebase(self, table: VarTable) -> "LaurentPoly":
        """The same polynomial over another table, matching variables by name."""
        if table == self.table:
            return self
        moves = []
        for k, name in enumerate(self.table.names):
            if name in table:
                moves.append((k, table.index(name)))
            elif any(exp[k] for exp in self._terms):
                raise VarTableMismatch(f"{name} occurs in the polynomial but not in {list(table.names)}")
        width = len(table)
        out = {}
        for exp, coeff in self._terms.items():
            new = [0] * width
            for k, j in moves:
                new[j] = exp[k]
            out[tuple(new)] = coeff
        return LaurentPoly._raw(table, out)

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        table = VarTable.of(*(mapping.get(name, name) for name in self.table.names))
        return LaurentPoly._raw(table, dict(self._terms))

    def substitute(self, name: str, value) -> "LaurentPoly":
        """Replace variable ``name`` by ``value`` (a polynomial or an integer).

        Units (monomials with coefficient +-1) may be substituted freely; any
        other value requires the polynomial to have no negative exponent in
        ``name``.
        """
        if isinstance(value, int):
            value = LaurentPoly.constant(self.table, value)
        if name not in self.table:
            return self
        table = self.table.merge(value.table)
        poly = self.rebase(table)
        value = value.rebase(table)
        k = table.index(name)

        if value.is_unit():
            ((vexp, vcoeff),) = value._terms.items()
            out: dict[Exponent, int] = {}
            for exp, coeff in poly._terms.items():
                e = exp[k]
                base = exp[:k] + (0,) + exp[k + 1:]
                new = tuple(b + e * v for b, v in zip(base, vexp))
                if vcoeff < 0 and e % 2:
                    coeff = -coeff
                out[new] = out.get(new, 0) + coeff
            return LaurentPoly._raw(table, {exp: c for exp, c in out.items() if c})

        if any(exp[k] < 0 for exp in poly._terms):
            raise NegativeExponentAtNonUnit(
                f"{name} appears with a negative exponent and {value} is not invertible"
            )
        groups: dict[int, dict[Exponent, int]] = {}
        for exp, coeff in poly._terms.items():
            groups.setdefault(exp[k], {})[exp[:k] + (0,) + exp[k + 1:]] = coeff
        result = LaurentPoly.zero(table)
        powers = {0: LaurentPoly.one(table)}
        for e in sorted(groups):
            if e not in powers:
                powers[e] = value ** e
            result = result + LaurentPoly._raw(table, groups[e]) * powers[e]
        return result

    def substitute_all(self, assignments: Mapping[str, object]) -> "LaurentPoly":
        poly = self
        for name, value in assignments.items():
            poly = poly.substitute(name, value)
        return poly

    def eval_rational(self, point: Mapping[str, Rational]) -> Fraction:
        values: list[Fraction | None] = []
        for k, name in enumerate(self.table.names):
            if name in point:
                values.append(Fraction(point[name]))
            elif any(exp[k] for exp in self._terms):
                raise VarTableMismatch(f"No value given for {name}")
            else:
                values.append(None)
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            term = Fraction(coeff)
            for e, v in zip(exp, values):
                if not e:
                    continue
                if e < 0 and v == 0:
                    raise ZeroAtNegativePower("Evaluating a negative power at zero")
                term *= v ** e
            total += term
        return total

    # -- output -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = self.table.names
        out = []
        for position, (exp, coeff) in enumerate(self.items()):
            body = _format_term(coeff, names, exp)
            if position == 0:
                out.append(f"-{body}" if coeff < 0 else body)
            else:
                out.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.table.names),
            "terms": [{"coeff": str(coeff), "exp": list(exp)} for exp, coeff in self.items()],
        }

    def leading_terms(self, count: int = 3) -> str:
        names = self.table.names
        shown = [f"{coeff:+d}*[{_format_term(1, names, exp)}]" for exp, coeff in self.items()[:count]]
        more = len(self._terms) - len(shown)
        return ", ".join(shown) + (f" (+{more} more)" if more > 0 else "")


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    return num.exact_div(den)


def substitute(poly: LaurentPoly, name: str, value) -> LaurentPoly:
    return poly.substitute(name, value)


def eval_rational(poly: LaurentPoly, point: Mapping[str, Rational]) -> Fraction:
    return poly.eval_rational(point)


def is_polynomial_in(poly: LaurentPoly, names: Iterable[str]) -> bool:
    return poly.is_polynomial_in(names)


def variables(table: VarTable) -> tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.variable(table, name) for name in table.names)
