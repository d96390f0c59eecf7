from django.test import SimpleTestCase

from oddsymp.characters import (
    CHARACTERS,
    CharacterSpec,
    RootDatum,
    gl_den_identity,
    matrix_A,
    matrix_B,
    osp_char,
    osp_den2_identity,
    osp_den_identity,
    osp_principal_q,
    osp_proctor,
    q_integer,
    schur,
    sp_den_identity,
    sp_even,
)
from oddsymp.exceptions import LengthError
from oddsymp.laurent import LaurentPoly, VarTable
from oddsymp.partitions import EMPTY, Partition, partitions_up_to


def P(*parts):
    return Partition(parts)


def poly(text):
    return LaurentPoly.parse(text)


class SchurTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(schur(P(1), 2), poly("x1 + x2"))
        self.assertEqual(schur(EMPTY, 3), 1)
        self.assertEqual(schur(P(2, 1), 2), poly("x1^2*x2 + x1*x2^2"))
        self.assertEqual(schur(P(1, 1), 3), poly("x1*x2 + x1*x3 + x2*x3"))

    def test_length_violation(self):
        with self.assertRaises(LengthError):
            schur(P(1, 1, 1), 2)

    def test_custom_variable_names(self):
        self.assertEqual(schur(P(1), 2, ("a", "b")), poly("a + b"))
        with self.assertRaises(ValueError):
            schur(P(1), 2, ("a",))

    def test_symmetric_with_nonnegative_exponents(self):
        for lam in partitions_up_to(3, 4):
            value = schur(lam, 3)
            self.assertTrue(value.is_polynomial_in(["x1", "x2", "x3"]))
            self.assertEqual(value.rename({"x1": "x3", "x3": "x1"}), value)


class SymplecticTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(sp_even(P(1), 1), poly("x1 + x1^-1"))
        self.assertEqual(sp_even(P(2), 1), poly("x1^2 + 1 + x1^-2"))
        self.assertEqual(sp_even(EMPTY, 3), 1)
        self.assertEqual(sp_even(EMPTY, 0), 1)

    def test_inversion_symmetry(self):
        for lam in partitions_up_to(2, 3):
            value = sp_even(lam, 2)
            for x in ("x1", "x2"):
                self.assertEqual(value.substitute(x, LaurentPoly.variable(value.table, x, -1)), value)

    def test_length_violation(self):
        with self.assertRaises(LengthError):
            sp_even(P(1, 1), 1)


class MatrixATests(SimpleTestCase):
    def test_empty_partition_at_rank_one(self):
        m = matrix_A(EMPTY, 1)
        self.assertEqual(m.table.names, ("x1", "z"))
        self.assertEqual(m[0, 0], poly("x1^2 - x1^-2 - x1*z^-1 + x1^-1*z^-1"))
        self.assertEqual(m[0, 1], poly("x1 - x1^-1"))
        self.assertEqual(m[1, 0], poly("z"))
        self.assertEqual(m[1, 1], 1)

    def test_last_row_exponents(self):
        m = matrix_A(P(1), 1)
        self.assertEqual(m[1, 0], poly("z^2"))
        self.assertEqual(m[1, 1], 1)

    def test_rank_zero(self):
        m = matrix_A(P(3), 0)
        self.assertEqual(m.shape, (1, 1))
        self.assertEqual(m[0, 0], poly("z^3"))

    def test_length_violation(self):
        with self.assertRaises(LengthError):
            matrix_A(P(1, 1, 1), 1)


class OddSymplecticTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(osp_char(EMPTY, 2), 1)
        self.assertEqual(str(osp_char(P(1), 1)), "x1 + x1^-1 + z")
        self.assertEqual(osp_char(P(1, 1), 1), poly("x1*z + x1^-1*z"))
        self.assertEqual(osp_char(P(2), 0), poly("z^2"))

    def test_rank_two_defining_character(self):
        self.assertEqual(osp_char(P(1), 2), poly("x1 + x1^-1 + x2 + x2^-1 + z"))

    def test_polynomial_in_z(self):
        for n in (1, 2):
            for lam in partitions_up_to(n + 1, 4):
                self.assertTrue(osp_char(lam, n).is_polynomial_in(["z"]), f"{lam} at n={n}")

    def test_weyl_symmetry(self):
        for lam in partitions_up_to(3, 3):
            value = osp_char(lam, 2)
            self.assertEqual(value.rename({"x1": "x2", "x2": "x1"}), value)
            self.assertEqual(value.substitute("x2", LaurentPoly.variable(value.table, "x2", -1)), value)

    def test_custom_names(self):
        self.assertEqual(osp_char(P(1), 1, ("y1",), "w"), poly("y1 + y1^-1 + w"))

    def test_length_violation(self):
        with self.assertRaises(LengthError):
            osp_char(P(1, 1, 1), 1)


class DenominatorTests(SimpleTestCase):
    def test_identities(self):
        for n in (1, 2, 3):
            for check in (osp_den_identity, sp_den_identity, osp_den2_identity, gl_den_identity):
                report = check(n)
                self.assertTrue(report.passed, f"{report.check} n={n}: {report.detail}")
                self.assertEqual(report.params, {"n": n})


class ProctorTests(SimpleTestCase):
    def test_matrix_B(self):
        m = matrix_B(EMPTY, 1)
        self.assertEqual(m[0, 0], poly("t1^3 + t1^-3"))
        self.assertEqual(m[0, 1], poly("t1 + t1^-1"))
        self.assertEqual(m[1, 0], 1)
        self.assertEqual(m[1, 1], 1)
        self.assertEqual(matrix_B(P(1), 1)[0, 0], poly("t1^5 + t1^-5"))

    def test_values(self):
        self.assertEqual(osp_proctor(EMPTY, 2), 1)
        self.assertEqual(osp_proctor(P(1), 1), poly("t1^2 + 1 + t1^-2"))

    def test_agrees_with_z_equal_one(self):
        value = osp_char(P(1, 1), 2).substitute("z", 1)
        table = VarTable.of("t1", "t2")
        doubled = value.substitute_all({x: LaurentPoly.variable(table, t, 2) for x, t in (("x1", "t1"), ("x2", "t2"))})
        self.assertEqual(doubled, osp_proctor(P(1, 1), 2))


class PrincipalSpecializationTests(SimpleTestCase):
    def test_q_integers(self):
        self.assertEqual(q_integer(1), 1)
        self.assertEqual(q_integer(2), poly("s + s^-1"))
        self.assertEqual(q_integer(3), poly("s^2 + 1 + s^-2"))
        with self.assertRaises(ValueError):
            q_integer(0)

    def test_root_datum(self):
        for n in (1, 2, 3):
            datum = RootDatum(n)
            self.assertEqual(len(datum.positive_roots), n * (n + 1))
            self.assertEqual(datum.two_rho[-1], 1)
        self.assertEqual(RootDatum(2).two_rho, (5, 3, 1))

    def test_values(self):
        self.assertEqual(osp_principal_q(EMPTY, 2), 1)
        self.assertEqual(osp_principal_q(P(1), 1), poly("q + 1 + q^-1"))
        self.assertEqual(osp_principal_q(P(1, 1), 1), poly("q + q^-1"))

    def test_matches_proctor_formula(self):
        value = osp_proctor(P(1, 1), 2)
        s = VarTable.of("s")
        specialised = value.substitute_all({"t1": LaurentPoly.variable(s, "s", 2), "t2": LaurentPoly.variable(s, "s", 1)})
        self.assertEqual(osp_principal_q(P(1, 1), 2).substitute("q", LaurentPoly.variable(s, "s", 2)), specialised)


class CharacterSpecTests(SimpleTestCase):
    def test_dispatch(self):
        self.assertEqual(set(CHARACTERS), {"schur", "sp_even", "osp", "osp_proctor"})
        spec = CharacterSpec("osp", P(1), 1)
        self.assertEqual(str(spec.compute()), "x1 + x1^-1 + z")
        self.assertEqual(spec.metadata(), {"family": "osp", "lambda": [1], "n": 1})

    def test_length_bounds(self):
        self.assertEqual(CharacterSpec.max_length("schur", 2), 2)
        self.assertEqual(CharacterSpec.max_length("osp", 2), 3)
        CharacterSpec("osp_proctor", P(1, 1, 1), 2)
        with self.assertRaises(LengthError):
            CharacterSpec("sp_even", P(1, 1, 1), 2)

    def test_bad_family(self):
        with self.assertRaises(ValueError):
            CharacterSpec("gl", P(1), 1)
