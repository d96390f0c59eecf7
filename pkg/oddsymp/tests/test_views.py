from unittest import mock

from django.test import SimpleTestCase
from django.urls import reverse

from oddsymp.exceptions import NotDivisible
from oddsymp.laurent import LaurentPoly
from oddsymp.reports import VerificationReport


class CharacterViewTests(SimpleTestCase):
    def test_character(self):
        response = self.client.get(reverse("character"), {"family": "osp", "lambda": "1", "n": "1"})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data["text"], "x1 + x1^-1 + z")
        self.assertEqual(data["lambda"], [1])
        self.assertEqual(LaurentPoly.from_json(data), LaurentPoly.parse("x1 + x1^-1 + z"))

    def test_assignments(self):
        response = self.client.get(
            reverse("character"), {"family": "osp", "lambda": "1", "n": "1", "set": ["z=1"]}
        )
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()["text"], "x1 + x1^-1 + 1")
        self.assertEqual(response.json()["set"], {"z": "1"})

    def test_weyl_substitution(self):
        response = self.client.get(
            reverse("character"), {"family": "osp", "lambda": "1", "n": "1", "set": ["x1=x1^-1"]}
        )
        self.assertEqual(response.status_code, 200)
        self.assertEqual(LaurentPoly.parse(response.json()["text"]), LaurentPoly.parse("x1 + x1^-1 + z"))

    def test_inexact_division(self):
        with mock.patch("oddsymp.views.compute_character", side_effect=NotDivisible("remainder")):
            response = self.client.get(reverse("character"), {"family": "osp", "lambda": "1", "n": "1"})
        self.assertEqual(response.status_code, 500)
        self.assertEqual(response.json()["errors"]["__all__"][0]["code"], "internal")

    def test_invalid(self):
        response = self.client.get(reverse("character"), {"family": "osp", "lambda": "1,1,1", "n": "1"})
        self.assertEqual(response.status_code, 400)
        self.assertIn("__all__", response.json()["errors"])

        response = self.client.get(reverse("character"), {"family": "gl", "n": "1"})
        self.assertEqual(response.status_code, 400)
        self.assertIn("family", response.json()["errors"])


class TableViewTests(SimpleTestCase):
    def test_table(self):
        response = self.client.get(
            reverse("character_table"), {"family": "schur", "max_len": "2", "max_part": "2", "n": "2"}
        )
        self.assertEqual(response.status_code, 200)
        self.assertEqual(len(response.json()), 6)

    def test_oracle(self):
        response = self.client.get(reverse("oracle"), {"n": "1", "degree": "3"})
        self.assertEqual(response.status_code, 200)
        rows = response.json()
        self.assertEqual([row["lambda"] for row in rows], [[], [1], [1, 1], [2]])
        self.assertEqual(LaurentPoly.from_json(rows[0]["poly"]), 1)


class VerifyViewTests(SimpleTestCase):
    def test_passing(self):
        response = self.client.get(reverse("verify", args=["osp-den"]), {"n": "1"})
        self.assertEqual(response.status_code, 200)
        self.assertTrue(response.json()["pass"])

    def test_bad_requests(self):
        self.assertEqual(self.client.get(reverse("verify", args=["osp-den"])).status_code, 400)
        self.assertEqual(self.client.get(reverse("verify", args=["nope"])).status_code, 400)
        response = self.client.get(reverse("verify", args=["bkw"]), {"m": "2", "n": "1", "r": "1"})
        self.assertEqual(response.status_code, 400)
        response = self.client.get(reverse("verify", args=["reduction-osp"]), {"n": "0", "r": "1"})
        self.assertEqual(response.status_code, 400)

    def test_failing(self):
        failing = VerificationReport("gl-den", {"n": 1}, False, "lhs - rhs has terms +1*[x1]")
        with mock.patch("oddsymp.views.run_checks", return_value=[failing]):
            response = self.client.get(reverse("verify", args=["gl-den"]), {"n": "1"})
        self.assertEqual(response.status_code, 422)
        self.assertFalse(response.json()["pass"])

    def test_pdf(self):
        response = self.client.get(reverse("verify_pdf", args=["spot-values"]))
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response["Content-Type"], "application/pdf")
        self.assertIn('filename="spot-values.pdf"', response["Content-Disposition"])
        self.assertTrue(response.content.startswith(b"%PDF"))
