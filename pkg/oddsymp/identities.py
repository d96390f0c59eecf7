"""End-to-end verifiers for the determinant identities and the check registry.

Each verifier returns a :class:`~oddsymp.reports.VerificationReport`. A
mathematical mismatch is never raised; it becomes a failing report whose
detail names the first differing case.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .characters import (
    gl_den_identity,
    osp_char,
    osp_den2_identity,
    osp_den_identity,
    osp_principal_q,
    osp_proctor,
    q_integer,
    schur,
    sp_den_identity,
    sp_even,
    x_names,
)
from .exceptions import SingularPointError
from .laurent import LaurentPoly, VarTable
from .linalg import RingMatrix, cauchy_det_check, det, rational_det, ring_product, verify_cauchy_binet
from .partitions import (
    Partition,
    enumerate_bounded,
    partitions_up_to,
    prepend_rect,
    rectangle,
)
from .reports import CheckRun, VerificationReport
from .series import default_cap, oracle_characters

logger = logging.getLogger(__name__)


# -- the key lemma -------------------------------------------------------------


def p_function(x, y, z, a, b):
    """p(x, y, z, a, b) * (1 - xy)(x - y), which stays inside the ring.

    Works for LaurentPoly and Fraction arguments alike.
    """
    return (
        (1 - x * z) * (1 - y * z) * (x - y)
        - a * (x - z) * (1 - y * z) * (1 - x * y)
        + b * (1 - x * z) * (y - z) * (1 - x * y)
        - a * b * (x - z) * (y - z) * (x - y)
    )


@dataclass(frozen=True)
class KeyLemmaPoint:
    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]
    z: Fraction
    as_: tuple[Fraction, ...]
    bs: tuple[Fraction, ...]
    c: Fraction

    @property
    def n(self) -> int:
        return len(self.xs)

    def singularity(self) -> str | None:
        if self.z * self.z == 1:
            return f"z = {self.z}"
        for i, x in enumerate(self.xs, start=1):
            for j, y in enumerate(self.ys, start=1):
                if x * y == 1:
                    return f"x{i} * y{j} = 1"
                if x == y:
                    return f"x{i} = y{j}"
        return None


def matrix_C(xs, ys, z, c, as_, bs) -> list[list[Fraction]]:
    if not len(xs) == len(ys) == len(as_) == len(bs):
        raise ValueError("xs, ys, as_ and bs must have the same length")
    point = KeyLemmaPoint(
        tuple(map(Fraction, xs)),
        tuple(map(Fraction, ys)),
        Fraction(z),
        tuple(map(Fraction, as_)),
        tuple(map(Fraction, bs)),
        Fraction(c),
    )
    problem = point.singularity()
    if problem:
        raise SingularPointError(f"Matrix C has a pole at this point: {problem}")
    rows = []
    for x, a in zip(point.xs, point.as_):
        row = [p_function(x, y, point.z, a, b) / ((1 - x * y) * (x - y)) for y, b in zip(point.ys, point.bs)]
        row.append(1 - a)
        rows.append(row)
    last = [1 - b for b in point.bs]
    last.append((1 - point.c) / (1 - point.z * point.z))
    rows.append(last)
    return rows


def matrix_V(xs, ys, z, as_, bs, c) -> list[list[Fraction]]:
    """(2n+1) x (2n+1): rows x_i^(j-1) - a_i x_i^(2n+1-j), then the y/b rows, then z/c."""
    if not len(xs) == len(ys) == len(as_) == len(bs):
        raise ValueError("xs, ys, as_ and bs must have the same length")
    size = 2 * len(xs) + 1

    def row(v, w):
        v, w = Fraction(v), Fraction(w)
        return [v ** (j - 1) - w * v ** (size - j) for j in range(1, size + 1)]

    return [row(x, a) for x, a in zip(xs, as_)] + [row(y, b) for y, b in zip(ys, bs)] + [row(z, c)]


_SAMPLE_VALUES = [k for k in range(-9, 10) if k]


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_SAMPLE_VALUES), rng.choice(_SAMPLE_VALUES))


def random_point(rng: random.Random, n: int) -> KeyLemmaPoint:
    """Rejection-sample a point off the poles of C."""
    def draw() -> tuple[Fraction, ...]:
        return tuple(random_rational(rng) for _ in range(n))

    while True:
        point = KeyLemmaPoint(draw(), draw(), random_rational(rng), draw(), draw(), random_rational(rng))
        if point.singularity() is None:
            return point
        logger.debug("Rejected key lemma point: %s", point.singularity())


def key_lemma_sides(point: KeyLemmaPoint) -> tuple[Fraction, Fraction]:
    n = point.n
    lhs = rational_det(matrix_C(point.xs, point.ys, point.z, point.c, point.as_, point.bs))
    denominator = 1 - point.z * point.z
    for x in point.xs:
        for y in point.ys:
            denominator *= (x - y) * (1 - x * y)
    rhs = (-1) ** n * rational_det(matrix_V(point.xs, point.ys, point.z, point.as_, point.bs, point.c)) / denominator
    return lhs, rhs


def verify_key_lemma(n: int, trials: int = 20, seed: int = 0) -> VerificationReport:
    run = CheckRun("key-lemma", "det C = (-1)^n det V / ((1 - z^2) prod (x_i - y_j)(1 - x_i y_j))",
                   n=n, trials=trials, seed=seed)
    rng = random.Random(seed)
    for trial in range(trials):
        point = random_point(rng, n)
        lhs, rhs = key_lemma_sides(point)
        run.expect(f"trial {trial}", lhs == rhs, f"det C = {lhs}, right side = {rhs} at {point}")
    return run.report()


def key_lemma_symbolic() -> VerificationReport:
    """The n = 1 key lemma with denominators cleared, as a polynomial identity in x, y, z, a, b, c."""
    run = CheckRun("key-lemma-symbolic", "n = 1 key lemma, cleared denominators")
    table = VarTable.of("x", "y", "z", "a", "b", "c")
    x, y, z, a, b, c = (LaurentPoly.variable(table, name) for name in table.names)

    def row(v, w):
        return [v ** (j - 1) - w * v ** (3 - j) for j in range(1, 4)]

    det_v = det(RingMatrix.from_rows([row(x, a), row(y, b), row(z, c)], table))
    cleared = p_function(x, y, z, a, b) * (1 - c) - (1 - a) * (1 - b) * (1 - z * z) * (x - y) * (1 - x * y)
    run.expect_equal("n=1", cleared + det_v, LaurentPoly.zero(table))
    return run.report()


# -- the reduction lemma -----------------------------------------------------------


def _reduction(run: CheckRun, lam: Partition, n: int, r: int, value: LaurentPoly,
               tail_character: Callable[[Partition], LaurentPoly]):
    xs = x_names(n)
    table = value.table

    def monomial(names: Sequence[str]) -> LaurentPoly:
        return ring_product((LaurentPoly.variable(table, x, r) for x in names), table)

    scaled = monomial(xs) * value
    if not run.expect(f"{lam}: polynomial", scaled.is_polynomial_in(xs), f"(x1...x{n})^{r} * char = {scaled.leading_terms()}"):
        return
    at_zero = scaled.substitute(xs[0], 0)
    if lam.first() == r:
        expected = monomial(xs[1:]) * tail_character(lam.tail()).rebase(table)
    else:
        expected = LaurentPoly.zero(table)
    run.expect_equal(f"{lam}: x1 = 0", at_zero, expected)


def _reduction_arguments(n: int, r: int):
    if n < 1 or r < 0:
        raise ValueError(f"The reduction lemma needs n >= 1 and r >= 0, got n={n}, r={r}")


def verify_reduction_osp(n: int, r: int) -> VerificationReport:
    """(x_1...x_n)^r Sp_2n+1(lambda) at x_1 = 0 leaves (x_2...x_n)^r Sp_2n-1(lambda_2, ..., lambda_n+1)."""
    _reduction_arguments(n, r)
    run = CheckRun("reduction-osp", "reduction lemma, odd symplectic", n=n, r=r)
    xs = x_names(n)
    for lam in enumerate_bounded(n + 1, r):
        _reduction(run, lam, n, r, osp_char(lam, n), lambda tail: osp_char(tail, n - 1, xs[1:]))
    return run.report()


def verify_reduction_sp(n: int, r: int) -> VerificationReport:
    _reduction_arguments(n, r)
    run = CheckRun("reduction-sp", "reduction lemma, symplectic", n=n, r=r)
    xs = x_names(n)
    for lam in enumerate_bounded(n, r):
        _reduction(run, lam, n, r, sp_even(lam, n), lambda tail: sp_even(tail, n - 1, xs[1:]))
    return run.report()


# -- the Brent-Krattenthaler-Warnaar identity ------------------------------------------


def verify_bkw(m: int, n: int, r: int) -> VerificationReport:
    """sum_lambda z^-r Sp_2m+1(lambda; x; z) Sp_2n+1((r^(n-m)) u lambda; y; z) = Sp_2(m+n+1)((r^(m+n+1)); x, y, z)."""
    if not 1 <= m <= n or r < 0:
        raise ValueError(f"verify_bkw needs 1 <= m <= n and r >= 0, got m={m}, n={n}, r={r}")
    run = CheckRun("bkw", "Brent-Krattenthaler-Warnaar identity", m=m, n=n, r=r)
    xs, ys = x_names(m), x_names(n, "y")
    table = VarTable.of(*xs, *ys, "z")
    total = LaurentPoly.zero(table)
    for lam in reversed(enumerate_bounded(m + 1, r)):
        left = osp_char(lam, m, xs).rebase(table)
        right = osp_char(prepend_rect(r, n - m, lam), n, ys).rebase(table)
        total = total + left * right
    total = total * LaurentPoly.variable(table, "z", -r)
    rhs = sp_even(rectangle(r, m + n + 1), m + n + 1, (*xs, *ys, "z"))
    run.expect_equal(f"m={m} n={n} r={r}", total, rhs)
    return run.report()


# -- oracle agreement and specialisations ----------------------------------------------


def verify_osp_vs_oracle(n: int, degree_cap: int | None = None) -> VerificationReport:
    cap = default_cap(n) if degree_cap is None else degree_cap
    run = CheckRun("oracle", "generating function against the bialternant", n=n, degree=cap)
    for lam, value in oracle_characters(n, cap).items():
        run.expect_equal(str(lam), osp_char(lam, n), value)
    return run.report()


def verify_z_minus_one(n: int, degree_cap: int | None = None) -> VerificationReport:
    """Consistency of the z = -1 specialisation; there is no independent formula."""
    cap = default_cap(n) if degree_cap is None else degree_cap
    run = CheckRun("z-minus-one", "z = -1 specialisation against the oracle", n=n, degree=cap)
    for lam, value in oracle_characters(n, cap).items():
        run.expect_equal(str(lam), osp_char(lam, n).substitute("z", -1), value.substitute("z", -1))
    return run.report()


def verify_proctor_specialization(n: int, max_size: int = 4) -> VerificationReport:
    run = CheckRun("proctor", "z = 1 against det B_lambda / det B_empty", n=n, max_size=max_size)
    xs, ts = x_names(n), x_names(n, "t")
    table = VarTable.of(*ts)
    doubling = {x: LaurentPoly.variable(table, t, 2) for x, t in zip(xs, ts)}
    for lam in partitions_up_to(n + 1, max_size):
        at_one = osp_char(lam, n).substitute("z", 1).substitute_all(doubling)
        run.expect_equal(str(lam), at_one, osp_proctor(lam, n))
    return run.report()


def verify_principal_specialization(n: int, max_size: int = 4) -> VerificationReport:
    run = CheckRun("principal-q", "principal specialisation as a product over D_n+1", n=n, max_size=max_size)
    ts = x_names(n, "t")
    table = VarTable.of("s")
    principal = {t: LaurentPoly.variable(table, "s", n - i) for i, t in enumerate(ts)}
    q_to_s = LaurentPoly.variable(table, "s", 2)
    for lam in partitions_up_to(n + 1, max_size):
        specialised = osp_proctor(lam, n).substitute_all(principal)
        run.expect_equal(str(lam), osp_principal_q(lam, n).substitute("q", q_to_s), specialised)
    return run.report()


def verify_symmetries(n: int, max_size: int = 4) -> VerificationReport:
    """z-polynomiality and Weyl group symmetry of the characters."""
    run = CheckRun("symmetry", "Weyl group symmetry and z-polynomiality", n=n, max_size=max_size)
    xs = x_names(n)
    for lam in partitions_up_to(n + 1, max_size):
        value = osp_char(lam, n)
        run.expect(f"osp {lam}: polynomial in z", value.is_polynomial_in(["z"]), value.leading_terms())
        for x in xs:
            inverted = value.substitute(x, LaurentPoly.variable(value.table, x, -1))
            run.expect_equal(f"osp {lam}: {x} -> {x}^-1", inverted, value)
        if n >= 2:
            run.expect_equal(f"osp {lam}: x1 <-> x2", value.rename({"x1": "x2", "x2": "x1"}), value)
        if lam.length() <= n:
            even = sp_even(lam, n)
            for x in xs:
                inverted = even.substitute(x, LaurentPoly.variable(even.table, x, -1))
                run.expect_equal(f"sp {lam}: {x} -> {x}^-1", inverted, even)
            if n >= 2:
                polynomial = schur(lam, n)
                run.expect_equal(f"schur {lam}: x1 <-> x2", polynomial.rename({"x1": "x2", "x2": "x1"}), polynomial)
    return run.report()


def verify_spot_values() -> VerificationReport:
    run = CheckRun("spot-values", "closed-form values")
    run.expect_equal("Sp_3((1); x; z)", osp_char(Partition((1,)), 1), LaurentPoly.parse("x1 + x1^-1 + z"))
    run.expect_equal("s_(2,1)(x1, x2)", schur(Partition((2, 1)), 2), LaurentPoly.parse("x1^2*x2 + x1*x2^2"))
    run.expect_equal("[3]_q", osp_principal_q(Partition((1,)), 1), LaurentPoly.parse("q + 1 + q^-1"))
    run.expect_equal("[3] in s", q_integer(3), LaurentPoly.parse("s^2 + 1 + s^-2"))
    return run.report()


# -- registry ---------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    function: Callable[..., VerificationReport]
    description: str
    required: tuple[str, ...] = ()
    optional: dict[str, Any] = field(default_factory=dict)
    # command-line name -> keyword of the function
    aliases: dict[str, str] = field(default_factory=dict)
    # parameter -> smallest accepted value
    minimums: dict[str, int] = field(default_factory=lambda: {"n": 1})

    @property
    def accepted(self) -> tuple[str, ...]:
        return self.required + tuple(self.optional)

    def bind(self, name: str, given: dict[str, Any]) -> dict[str, Any]:
        given = {key: value for key, value in given.items() if value is not None}
        missing = [key for key in self.required if key not in given]
        if missing:
            raise ValueError(f"Check {name} needs --{', --'.join(missing)}")
        unknown = [key for key in given if key not in self.accepted]
        if unknown:
            raise ValueError(f"Check {name} does not take --{', --'.join(unknown)}")
        for key, low in self.minimums.items():
            if key in given and given[key] < low:
                raise ValueError(f"Check {name} needs --{key} >= {low}, got {given[key]}")
        params = {**self.optional, **given}
        return {self.aliases.get(key, key): value for key, value in params.items()}


CHECKS: dict[str, Check] = {
    "osp-den": Check(osp_den_identity, "odd symplectic denominator", ("n",)),
    "sp-den": Check(sp_den_identity, "Sp_2n Weyl denominator", ("n",)),
    "osp-den2": Check(osp_den2_identity, "Proctor denominator", ("n",)),
    "gl-den": Check(gl_den_identity, "Vandermonde determinant", ("n",)),
    "cauchy-det": Check(cauchy_det_check, "Cauchy determinants", ("n",), {"variant": "difference"}),
    "cauchy-binet": Check(verify_cauchy_binet, "Cauchy-Binet", (), {"trials": 50, "seed": 0}, minimums={"trials": 1}),
    "proctor": Check(verify_proctor_specialization, "z = 1 specialisation", ("n",)),
    "principal-q": Check(verify_principal_specialization, "principal specialisation", ("n",)),
    "symmetry": Check(verify_symmetries, "Weyl group symmetry", ("n",)),
    "spot-values": Check(verify_spot_values, "closed-form values"),
    "bkw": Check(verify_bkw, "Brent-Krattenthaler-Warnaar identity", ("m", "n", "r"), minimums={"m": 1, "n": 1, "r": 0}),
    "reduction-osp": Check(verify_reduction_osp, "reduction lemma (a)", ("n", "r"), minimums={"n": 1, "r": 0}),
    "reduction-sp": Check(verify_reduction_sp, "reduction lemma (b)", ("n", "r"), minimums={"n": 1, "r": 0}),
    "key-lemma": Check(
        verify_key_lemma, "key lemma at random points", ("n",), {"trials": 20, "seed": 0}, minimums={"n": 1, "trials": 1}
    ),
    "key-lemma-symbolic": Check(key_lemma_symbolic, "key lemma at n = 1, symbolic"),
    "oracle": Check(verify_osp_vs_oracle, "oracle agreement", ("n",), {"degree": None}, {"degree": "degree_cap"}),
    "z-minus-one": Check(verify_z_minus_one, "z = -1 consistency", ("n",), {"degree": None}, {"degree": "degree_cap"}),
}

Plan = Sequence[tuple[str, dict[str, Any]]]


def acceptance_grid(seed: int = 0, trials: int = 20, cauchy_binet_trials: int = 50) -> list[tuple[str, dict[str, Any]]]:
    """Every check with the parameters it must pass at, in a fixed order."""
    plan: list[tuple[str, dict[str, Any]]] = [("spot-values", {})]
    plan += [("oracle", {"n": 1, "degree": 6}), ("oracle", {"n": 2, "degree": 7})]
    for name in ("osp-den", "sp-den", "osp-den2"):
        plan += [(name, {"n": n}) for n in (1, 2, 3)]
    plan += [("gl-den", {"n": n}) for n in (1, 2, 3, 4)]
    plan += [("proctor", {"n": n}) for n in (1, 2, 3)]
    plan += [("principal-q", {"n": n}) for n in (1, 2, 3)]
    plan += [("bkw", {"m": m, "n": n, "r": r}) for m, n, r in ((1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (1, 2, 2), (2, 2, 1))]
    for name in ("reduction-osp", "reduction-sp"):
        plan += [(name, {"n": n, "r": r}) for n in (1, 2, 3) for r in (1, 2, 3)]
    plan += [("key-lemma", {"n": n, "trials": trials, "seed": seed}) for n in (1, 2, 3)]
    plan += [("key-lemma-symbolic", {})]
    for variant in ("difference", "one_minus"):
        plan += [("cauchy-det", {"n": n, "variant": variant}) for n in (1, 2, 3, 4)]
    plan += [("cauchy-binet", {"trials": cauchy_binet_trials, "seed": seed})]
    plan += [("symmetry", {"n": n}) for n in (1, 2, 3)]
    plan += [("z-minus-one", {"n": n}) for n in (1, 2)]
    return plan


def run_check(name: str, params: dict[str, Any]) -> VerificationReport:
    try:
        check = CHECKS[name]
    except KeyError:
        raise ValueError(f"Unknown check {name!r}; choose from {', '.join(CHECKS)}") from None
    return check.function(**check.bind(name, params))


def run_checks(plan: Plan, jobs: int = 1) -> list[VerificationReport]:
    """Run a plan of checks, in worker processes when jobs > 1; results keep the plan order."""
    plan = list(plan)
    for name, params in plan:
        if name not in CHECKS:
            raise ValueError(f"Unknown check {name!r}")
        CHECKS[name].bind(name, params)
    if jobs <= 1 or len(plan) <= 1:
        return [run_check(name, params) for name, params in plan]
    logger.info("Running %d checks on %d workers", len(plan), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_check, name, params) for name, params in plan]
        return [future.result() for future in futures]
