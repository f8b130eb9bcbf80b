import contextlib
import io
import json
import os
import tempfile
import unittest

from bhlab.bhcli import dispatch, render_report, run_cli, write_report
from bhlab.bhcli.main import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, parse_args
from bhlab.bhdim import PsiProfile
from bhlab.bhindex import gen_arith_diagonal, gen_triangle, parse_index_set, read_index_set, write_index_set
from bhlab.bhpoly import polynomial_from_coefficients, write_poly
from bhlab.bhutils.utils.constants import THREADS_ENV
from bhlab.bhutils.utils.exceptions import InvalidParameterType, ReportWriteError


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp, name)

    def run_bhlab(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stderr(io.StringIO()), contextlib.redirect_stdout(io.StringIO()):
            code = run_cli(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    def index_file(self, index_set, name="lambda.idx"):
        path = self.path(name)
        write_index_set(index_set, path)
        return path


class TestGen(CliTestCase):

    def test_triangle_to_file(self):
        destination = self.path("tri.idx")
        code, out, _ = self.run_bhlab("gen", "--family", "triangle", "--R", "2", "--out", destination)
        self.assertEqual(code, EXIT_OK)
        index_set = read_index_set(destination)
        self.assertEqual(len(index_set), 8)
        self.assertEqual(index_set.m, 3)
        self.assertEqual(index_set.label, "triangle R=2")
        self.assertIn("tri.idx", out)

    def test_stdout_and_label(self):
        code, out, _ = self.run_bhlab("gen", "--family", "arith-diagonal", "--m", "2", "--terms", "3",
                                      "--label", "demo")
        self.assertEqual(code, EXIT_OK)
        index_set = parse_index_set(out)
        self.assertEqual(list(index_set.tuples), [(1, 2), (3, 4), (5, 6)])
        self.assertEqual(index_set.label, "demo")

    def test_missing_family_parameter(self):
        code, _, err = self.run_bhlab("gen", "--family", "full", "--m", "2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("--N", err)


class TestPsiAndDim(CliTestCase):

    def test_psi_csv(self):
        code, out, _ = self.run_bhlab("psi", "--input", self.index_file(gen_arith_diagonal(2, 10)), "--n", "1,2,4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "n,psi,exact\n1,1,true\n2,2,true\n4,4,true\n")

    def test_psi_json_to_file(self):
        destination = self.path("profile.json")
        code, out, _ = self.run_bhlab("psi", "--input", self.index_file(gen_arith_diagonal(2, 10)), "--n", "1:3",
                                      "--format", "json", "--out", destination)
        self.assertEqual(code, EXIT_OK)
        with open(destination, encoding="utf-8") as handle:
            self.assertEqual(handle.read(), out)
        self.assertEqual(json.loads(out)["psi"], [1, 2, 3])

    def test_dim_prints_profile_and_slope(self):
        code, out, _ = self.run_bhlab("dim", "--input", self.index_file(gen_arith_diagonal(2, 20)), "--n", "1,4,9")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[:4], ["n,psi,exact", "1,1,true", "4,4,true", "9,9,true"])
        self.assertTrue(lines[4].startswith("# slope="))
        slope = float(lines[4].split()[1].split("=")[1])
        self.assertAlmostEqual(slope, 1.0, delta=1e-9)
        self.assertTrue(lines[4].endswith("n_range=1:9"))

    def test_budget_exhaustion(self):
        code, out, err = self.run_bhlab("psi", "--input", self.index_file(gen_triangle(4)), "--n", "9",
                                        "--budget", "2")
        self.assertEqual(code, EXIT_BUDGET)
        self.assertEqual(out, "")
        self.assertIn("budget", err)

    def test_missing_input(self):
        code, _, err = self.run_bhlab("psi", "--input", self.path("absent.idx"), "--n", "1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("does not exist", err)


class TestBoundAndSupnorm(CliTestCase):

    def test_bound(self):
        out = io.StringIO()
        code, result = dispatch(parse_args(["bound", "--m", "2", "--d", "1", "--c-lambda", "1",
                                            "--classical", "0.5,2", "--deltaM", "1"]), out)
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(result["theorem_bound"]["value"], 5.775, delta=0.001)
        self.assertAlmostEqual(result["comparison"]["classical_bound"], 4.5)
        self.assertAlmostEqual(result["comparison"]["delta_M_bound"], 2 * 2 ** 0.5, places=12)
        self.assertIsNone(result["comparison"]["asymptotic_bound"])
        self.assertIn("theorem_bound", out.getvalue())
        self.assertIn("chain_constant", out.getvalue())

    def test_bound_domain_error(self):
        code, _, err = self.run_bhlab("bound", "--m", "2", "--d", "3", "--c-lambda", "1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("Invalid d=", err)

    def test_supnorm(self):
        path = self.path("p.poly")
        write_poly(polynomial_from_coefficients(2, {(1, 1): 1, (1, 2): 1}), path)
        code, estimate = dispatch(parse_args(["supnorm", "--poly", path, "--restarts", "4"]), io.StringIO())
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(estimate.value, 2.0, delta=1e-6)
        self.assertEqual(sorted(estimate.witness), [1, 2])


class TestVerify(CliTestCase):

    def setUp(self):
        super().setUp()
        self._threads = os.environ.pop(THREADS_ENV, None)

    def tearDown(self):
        os.environ.pop(THREADS_ENV, None)
        if self._threads is not None:
            os.environ[THREADS_ENV] = self._threads
        super().tearDown()

    def test_report_is_reproducible(self):
        source = self.index_file(gen_arith_diagonal(2, 3))
        texts = []
        for name in ("first.json", "second.json"):
            destination = self.path(name)
            code, out, _ = self.run_bhlab("verify", "--input", source, "--d", "1", "--trials", "2", "--restarts", "2",
                                          "--seed", "5", "--out", destination)
            self.assertEqual(code, EXIT_OK)
            self.assertIn("holder", out)
            with open(destination, "rb") as handle:
                texts.append(handle.read())
        self.assertEqual(texts[0], texts[1])
        document = json.loads(texts[0].decode("utf-8"))
        self.assertEqual(document["trial_count"], 2)
        self.assertEqual(len(document["trials"]), 2)
        self.assertTrue(document["steps"]["coefficient"]["pass"])

    def test_thread_count_does_not_change_report(self):
        source = self.index_file(gen_triangle(2))
        texts = []
        for threads in ("1", "3"):
            os.environ[THREADS_ENV] = threads
            destination = self.path("report-%s.json" % threads)
            code, _, _ = self.run_bhlab("verify", "--input", source, "--d", "1.5", "--trials", "3", "--restarts", "3",
                                        "--dist", "gaussian", "--out", destination)
            self.assertEqual(code, EXIT_OK)
            with open(destination, "rb") as handle:
                texts.append(handle.read())
        self.assertEqual(texts[0], texts[1])


class TestUsage(CliTestCase):

    def test_help(self):
        code, _, _ = self.run_bhlab("--help")
        self.assertEqual(code, EXIT_OK)
        for command in ("gen", "psi", "dim", "bound", "supnorm", "verify"):
            code, _, _ = self.run_bhlab(command, "--help")
            self.assertEqual(code, EXIT_OK, msg=command)

    def test_unknown_flag(self):
        code, _, _ = self.run_bhlab("psi", "--input", "x.idx", "--n", "1", "--bogus")
        self.assertEqual(code, EXIT_USAGE)

    def test_missing_command(self):
        code, _, _ = self.run_bhlab()
        self.assertEqual(code, EXIT_USAGE)

    def test_zero_counts_rejected(self):
        source = self.index_file(gen_triangle(2))
        poly = self.path("p.poly")
        write_poly(polynomial_from_coefficients(2, {(1, 1): 1}), poly)
        cases = [(("psi", "--input", source, "--n", "1", "--budget", "0"), "Invalid --budget=0"),
                 (("psi", "--input", source, "--n", "1", "--restarts", "0"), "Invalid --restarts=0"),
                 (("verify", "--input", source, "--d", "1", "--trials", "0"), "Invalid --trials=0"),
                 (("supnorm", "--poly", poly, "--restarts", "0", "--grid", "0"), "Invalid restarts=0"),
                 (("verify", "--input", source, "--d", "1", "--trials", "1", "--restarts", "0"), "Invalid restarts=0")]
        for argv, message in cases:
            code, out, err = self.run_bhlab(*argv)
            self.assertEqual(code, EXIT_USAGE, msg=argv)
            self.assertEqual(out, "", msg=argv)
            self.assertIn(message, err)
            self.assertIn("must be a positive integer", err)


class TestReports(CliTestCase):

    def test_csv_report(self):
        destination = self.path("nested/profile.csv")
        text = write_report(PsiProfile([1, 2], [1, 2], [True, True]), "csv", destination)
        self.assertEqual(text, "n,psi,exact\n1,1,true\n2,2,true\n")
        with open(destination, encoding="utf-8") as handle:
            self.assertEqual(handle.read(), text)

    def test_unwritable_destination(self):
        blocker = self.path("blocker")
        with open(blocker, "w") as handle:
            handle.write("x")
        with self.assertRaises(ReportWriteError):
            write_report(PsiProfile([1], [1], [True]), "json", os.path.join(blocker, "report.json"))

    def test_csv_needs_profile(self):
        with self.assertRaises(InvalidParameterType):
            render_report({"value": 1}, "csv")


if __name__ == "__main__":
    unittest.main()
