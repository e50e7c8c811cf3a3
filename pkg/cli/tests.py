import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

from django.core.exceptions import ValidationError
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import ResidualTooLarge
from fields.finite import FieldSpec
from series.laurent import LaurentElement

from .forms import FieldForm, LatticeForm, ParamsForm, parse_series

FIXTURES = Path(__file__).resolve().parent / "fixtures"


class CommandTestCase(SimpleTestCase):
    """Runs a command on a fixture and returns its JSON report."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def run_command(self, name, fixture, **options):
        report_path = Path(self.tmp.name) / "report.json"
        out = StringIO()
        call_command(
            name,
            input=str(FIXTURES / fixture),
            json_path=str(report_path),
            stdout=out,
            **options,
        )
        self.summary = out.getvalue()
        self.raw = report_path.read_text()
        return json.loads(self.raw)


class FormTests(SimpleTestCase):
    """
    Tests for the document block forms.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])

    def test_field_form(self):
        """Test that a valid field block builds the field."""
        form = FieldForm(data={"p": 3, "g": [1, 0, 1]})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data["spec"].d, 2)

    def test_reducible_polynomial(self):
        """Test that a reducible g is a form error."""
        form = FieldForm(data={"p": 2, "g": [1, 0, 1]})
        self.assertFalse(form.is_valid())
        self.assertIn("__all__", form.errors)

    def test_series_literal(self):
        """Test that [n, e, c] terms mean c * pi^(n / p^e)."""
        xi = parse_series(self.f2, {"terms": [[-1, 1, 1], [3, 0, 1]], "prec": [9, 1]})
        expected = LaurentElement.from_exponents(
            self.f2, {"-1/2": 1, 3: 1}, prec="9/2"
        )
        self.assertEqual(xi, expected)

    def test_bad_series_literal(self):
        """Test that a term with two entries is rejected."""
        with self.assertRaises(ValidationError):
            parse_series(self.f2, {"terms": [[-1, 1]]})

    def test_lattice_form_rejects_integral_generators(self):
        """Test that a generator with v >= 0 invalidates the lattice block."""
        form = LatticeForm(self.f2, data={"generators": [{"terms": [[2, 0, 1]]}]})
        self.assertFalse(form.is_valid())

    def test_params_auto(self):
        """Test that "auto" depth and precision resolve to None."""
        form = ParamsForm(data={"depth": "auto", "prec": 12, "bound": "3/2"})
        self.assertTrue(form.is_valid())
        self.assertIsNone(form.cleaned_data["depth"])
        self.assertEqual(form.cleaned_data["prec"], 12)
        self.assertEqual(str(form.cleaned_data["bound"]), "3/2")


class ValidateCommandTests(CommandTestCase):
    """
    Tests for the validate command and the exit codes of bad documents.
    """

    def test_invariants(self):
        """Test that pi + tau has w = 1, pres = t and height 1."""
        report = self.run_command("validate", "carlitz.json")
        self.assertEqual(report["command"], "validate")
        self.assertEqual(report["r"], 1)
        self.assertEqual(report["w"], 1)
        self.assertEqual(report["pres"], "t")
        self.assertEqual(report["h"], 1)
        self.assertFalse(report["exact_reduction"])
        self.assertNotIn("checks", report)
        self.assertNotIn("## Checks", self.summary)

    def test_verify_matrix(self):
        """Test that --verify adds a passing h <= r row to the report."""
        report = self.run_command("validate", "carlitz.json", verify=True)
        self.assertTrue(report["checks"]["height_at_most_rank"])
        self.assertTrue(all(report["checks"].values()))
        self.assertIn("| height_at_most_rank | pass |", self.summary)

    def test_reducible_field_exits_with_one(self):
        """Test that a reducible field polynomial exits with code 1."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("validate", "reducible_field.json")
        self.assertEqual(ctx.exception.returncode, 1)

    def test_non_integral_module_exits_with_one(self):
        """Test that a coefficient outside O_K exits with code 1."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("validate", "non_integral.json")
        self.assertEqual(ctx.exception.returncode, 1)

    def test_missing_file(self):
        """Test that an unreadable input exits with code 1."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("validate", "missing.json")
        self.assertEqual(ctx.exception.returncode, 1)


class LiftCommandTests(CommandTestCase):
    """
    Tests for the lift command.
    """

    def test_exact_reduction(self):
        """Test that psi = phibar lifts to x = 1."""
        report = self.run_command("lift", "exact_reduction.json")
        self.assertEqual(report["x"], {"0": "1"})
        self.assertTrue(report["commutes"])

    def test_verify_endomorphisms(self):
        """Test that psi_t itself passes the endomorphism check."""
        report = self.run_command("lift", "carlitz.json", verify=True)
        self.assertEqual(report["depth"], 1)
        self.assertEqual(report["prec"], 2)
        self.assertTrue(report["commutes"])
        self.assertTrue(report["endomorphisms"][0]["commutes"])
        self.assertTrue(report["endomorphisms"][0]["compatible"])
        self.assertTrue(report["bounds"]["x_holds"])
        checks = report["checks"]
        self.assertTrue(checks["endomorphism_0_compatible"])
        self.assertTrue(checks["two_sided_inverse"])
        self.assertTrue(checks["commutes_with_t_squared"])
        self.assertTrue(all(checks.values()))

    def test_precision_flag_below_one(self):
        """Test that a zero working precision exits with code 3."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("lift", "exact_reduction.json", prec="0")
        self.assertEqual(ctx.exception.returncode, 3)


class ChiInverseCommandTests(CommandTestCase):
    """
    Tests for the chi_inv command.
    """

    def test_uniformizer_class(self):
        """Test that chi^-1([pi^-1]) = [pi^-1] for psi_t = pi + tau."""
        report = self.run_command("chi_inv", "carlitz.json", verify=True)
        self.assertEqual(report["class"], {"1": [[0, 1]]})
        self.assertEqual(report["j_invariant"], 1)
        self.assertTrue(report["checks"]["round_trip"])
        self.assertTrue(report["checks"]["difference_in_W"])
        self.assertIn("## Checks", self.summary)

    def test_depth_below_requirement_exits_with_three(self):
        """Test that --depth 1 for pi^-15 is refused with code 3."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("chi_inv", "deep_element.json", depth="1")
        self.assertEqual(ctx.exception.returncode, 3)

    def test_auto_depth_for_deep_element(self):
        """Test that the auto depth for pi^-15 under pi + tau is 4."""
        report = self.run_command("chi_inv", "deep_element.json", verify=True)
        self.assertEqual(report["depth"], 4)
        self.assertTrue(all(report["checks"].values()))

    def test_missing_element(self):
        """Test that a document without an element exits with code 1."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("chi_inv", "tau_squared.json")
        self.assertEqual(ctx.exception.returncode, 1)


class AnalyzeCommandTests(CommandTestCase):
    """
    Tests for the analyze command on the worked lattices.
    """

    def test_tau_squared(self):
        """Test the breaks {1, 2} and the open image for tau^2 over F_3."""
        report = self.run_command("analyze", "tau_squared.json", verify=True)
        self.assertEqual(report["S"], [1, 2])
        self.assertEqual(report["rank_R"], 2)
        self.assertEqual(report["conductor"], 2)
        self.assertTrue(report["open"])
        self.assertEqual(
            [row["rank"] for row in report["filtration"]], [2, 2, 1, 0]
        )
        self.assertEqual(report["bounds"]["j_set_of_generators"], [1])
        checks = report["checks"]
        for name in (
            "chi_round_trip",
            "certificate_replay",
            "certificate_unwind",
            "filtration_decreasing",
            "rank_chain",
        ):
            self.assertTrue(checks[name], name)
        self.assertTrue(all(checks.values()))
        self.assertIn("| 2 | 1 | free_rank_d |", self.summary)

    def test_toml_document(self):
        """Test that the F_4 lattice read from TOML has a non-open image."""
        report = self.run_command("analyze", "four_element_field.toml")
        self.assertEqual(report["rank_R"], 1)
        self.assertEqual(report["image_rank"], 2)
        self.assertFalse(report["open"])

    def test_html_summary(self):
        """Test that --html renders the summary tables."""
        html_path = Path(self.tmp.name) / "summary.html"
        self.run_command("analyze", "tau_squared.json", html_path=str(html_path))
        self.assertIn("<table>", html_path.read_text())

    def test_repeated_runs_are_byte_identical(self):
        """Test that two runs on the same document write the same JSON text."""
        self.run_command("analyze", "tau_squared.json", verify=True)
        first = self.raw
        self.run_command("analyze", "tau_squared.json", verify=True)
        self.assertEqual(self.raw, first)

    def test_relation_among_generators_exits_with_two(self):
        """Test that pi^-2 = psi_t(pi^-1) under psi_t = tau exits with code 2."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("analyze", "rank_relation.json")
        self.assertEqual(ctx.exception.returncode, 2)


class UniformizeCommandTests(CommandTestCase):
    """
    Tests for the uniformize and tate_ranks commands.
    """

    def test_single_factor(self):
        """Test that B = 1 on pi + tau gives e = 1 + pi tau and residual 5."""
        report = self.run_command(
            "uniformize", "carlitz.json", prec="128", verify=True
        )
        self.assertEqual(report["e"], {"0": "1", "1": "pi"})
        self.assertEqual(report["residual_valuation"], 5)
        self.assertEqual(report["lattice_dimension"], 1)
        self.assertTrue(report["certified"])
        self.assertTrue(report["checks"]["kernel"])
        self.assertTrue(report["checks"]["additive"])
        self.assertTrue(all(report["checks"].values()))

    def test_residual_too_large_exits_with_four(self):
        """Test that a residual outside the maximal ideal exits with code 4."""
        with patch(
            "cli.management.commands.uniformize.analytic_quotient",
            side_effect=ResidualTooLarge("residual not in m_K", valuation=0),
        ):
            with self.assertRaises(CommandError) as ctx:
                self.run_command("uniformize", "carlitz.json")
        self.assertEqual(ctx.exception.returncode, 4)

    def test_missing_bound(self):
        """Test that uniformize without a bound exits with code 1."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("uniformize", "tau_squared.json")
        self.assertEqual(ctx.exception.returncode, 1)

    def test_tate_ranks(self):
        """Test that tau^2 with a rank two lattice has r_phi = 4."""
        report = self.run_command("tate_ranks", "tau_squared.json")
        self.assertEqual(report["r_phi"], 4)
        self.assertEqual(report["rank_at_pres"], 2)
        self.assertEqual(report["pres"], "t")

    def test_tate_ranks_verify_matrix(self):
        """Test that r_phi = r_psi + rank M and r_phi - rank at pres = h pass."""
        report = self.run_command("tate_ranks", "tau_squared.json", verify=True)
        checks = report["checks"]
        self.assertTrue(checks["rank_adds_lattice_rank"])
        self.assertTrue(checks["rank_at_pres_drops_by_height"])
        self.assertTrue(all(checks.values()))
