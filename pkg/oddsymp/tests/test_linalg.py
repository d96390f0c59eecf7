import random
from fractions import Fraction

from django.test import SimpleTestCase

from oddsymp.exceptions import MatrixShapeError
from oddsymp.laurent import LaurentPoly, VarTable, variables
from oddsymp.linalg import (
    RingMatrix,
    cauchy_binet_sum,
    cauchy_det_check,
    det,
    det_bareiss,
    det_cofactor,
    random_integer_matrix,
    rational_det,
    verify_cauchy_binet,
)
from oddsymp.partitions import IndexSet

SCALARS = VarTable.of()


class DeterminantTests(SimpleTestCase):
    def test_vandermonde_2x2(self):
        table = VarTable.of("x1", "x2")
        x1, x2 = variables(table)
        m = RingMatrix.from_rows([[x1, 1], [x2, 1]], table)
        self.assertEqual(det(m), x1 - x2)

    def test_identity(self):
        for n in range(0, 7):
            self.assertEqual(det(RingMatrix.identity(n)), 1)

    def test_non_square(self):
        with self.assertRaises(MatrixShapeError):
            det(RingMatrix.from_rows([[1, 2, 3], [4, 5, 6]], SCALARS))
        with self.assertRaises(MatrixShapeError):
            RingMatrix.from_rows([[1, 2], [3]], SCALARS)

    def test_bareiss_matches_cofactor(self):
        rng = random.Random(4)
        for size in (1, 2, 3, 4, 5, 6):
            m = random_integer_matrix(rng, size, size)
            self.assertEqual(det_bareiss(m), det_cofactor(m))

    def test_bareiss_needs_a_pivot_swap(self):
        m = RingMatrix.from_rows([[0, 1, 2, 0, 1], [1, 0, 0, 3, 1], [2, 1, 0, 1, 0], [0, 0, 1, 1, 1], [1, 2, 1, 0, 2]], SCALARS)
        self.assertEqual(det_bareiss(m), det_cofactor(m))
        singular = RingMatrix.from_rows([[0, 1], [0, 2]], SCALARS)
        self.assertEqual(det_bareiss(singular), 0)

    def test_bareiss_over_laurent_entries(self):
        table = VarTable.of("x", "y")
        x, y = variables(table)
        rows = [[x ** (i * j - 2) + y ** (i - j) for j in range(5)] for i in range(5)]
        m = RingMatrix.from_rows(rows, table)
        self.assertEqual(det_bareiss(m), det_cofactor(m))

    def test_alternating(self):
        rng = random.Random(8)
        for size in (2, 3, 5):
            m = random_integer_matrix(rng, size, size)
            self.assertEqual(det(m.swap_rows(0, size - 1)), -det(m))

    def test_multiplicative(self):
        rng = random.Random(9)
        for size in (2, 3, 4, 5):
            a = random_integer_matrix(rng, size, size)
            b = random_integer_matrix(rng, size, size)
            self.assertEqual(det(a @ b), det(a) * det(b))

    def test_rational_det(self):
        rows = [[Fraction(1, 2), 1], [Fraction(1, 3), 1]]
        self.assertEqual(rational_det(rows), Fraction(1, 6))
        self.assertEqual(rational_det([]), 1)


class SubmatrixTests(SimpleTestCase):
    def setUp(self):
        self.m = RingMatrix.from_rows([[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]], SCALARS)

    def test_pick_columns(self):
        picked = self.m.submatrix_cols(IndexSet(frozenset({3, 0})))
        self.assertEqual(picked, RingMatrix.from_rows([[1, 4], [6, 9]], SCALARS))
        self.assertEqual(self.m.submatrix_cols(range(5)), self.m)

    def test_out_of_range(self):
        with self.assertRaises(MatrixShapeError):
            self.m.submatrix_cols(IndexSet(frozenset({7})))


class CauchyBinetTests(SimpleTestCase):
    def test_worked_example(self):
        x = RingMatrix.from_rows([[1, 0, 1], [0, 1, 1]], SCALARS)
        lhs, rhs = cauchy_binet_sum(x, x)
        self.assertEqual(lhs, 3)
        self.assertEqual(rhs, 3)

    def test_square_case(self):
        rng = random.Random(2)
        x, y = random_integer_matrix(rng, 3, 3), random_integer_matrix(rng, 3, 3)
        lhs, rhs = cauchy_binet_sum(x, y)
        self.assertEqual(lhs, det(x) * det(y))
        self.assertEqual(lhs, rhs)

    def test_random_3x5(self):
        rng = random.Random(6)
        for _ in range(5):
            lhs, rhs = cauchy_binet_sum(random_integer_matrix(rng, 3, 5), random_integer_matrix(rng, 3, 5))
            self.assertEqual(lhs, rhs)

    def test_shape_checks(self):
        with self.assertRaises(MatrixShapeError):
            cauchy_binet_sum(RingMatrix.identity(2), RingMatrix.identity(3))
        tall = RingMatrix.from_rows([[1], [2]], SCALARS)
        with self.assertRaises(MatrixShapeError):
            cauchy_binet_sum(tall, tall)

    def test_report(self):
        report = verify_cauchy_binet(trials=50, seed=0)
        self.assertTrue(report.passed, report.detail)
        self.assertEqual(report.check, "cauchy-binet")
        self.assertEqual(report.params, {"trials": 50, "seed": 0})


class CauchyDeterminantTests(SimpleTestCase):
    def test_both_variants(self):
        for variant in ("difference", "one_minus"):
            for n in (1, 2, 3, 4):
                report = cauchy_det_check(n, variant)
                self.assertTrue(report.passed, f"{variant} n={n}: {report.detail}")

    def test_unknown_variant(self):
        with self.assertRaises(ValueError):
            cauchy_det_check(2, "sum")

    def test_sign_matters(self):
        table = VarTable.of("x1", "x2", "y1", "y2")
        x1, x2, y1, y2 = variables(table)
        cleared = RingMatrix.from_rows([[x1 - y2, x1 - y1], [x2 - y2, x2 - y1]], table)
        self.assertEqual(det(cleared), -(x1 - x2) * (y1 - y2))
