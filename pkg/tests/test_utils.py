import argparse
import json
import os
import tempfile
import unittest

from bhlab.bhutils.utils.configuration import conf_info, conf_value, load_conf, thread_cap
from bhlab.bhutils.utils.constants import THREADS_ENV
from bhlab.bhutils.utils.exceptions import InvalidParameterType, MissingArgument
from bhlab.bhutils.utils.parameterargs import ParameterArgs, PsiMode, to_enum
from bhlab.bhutils.utils.resultset import ResultSet
from bhlab.bhutils.utils.utils import (active_thread_cap, derive_seed, format_real, parallel_map, parse_float_pair,
                                      parse_n_values, thread_limit)


class TestConfiguration(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self._tmp.name, "config.json")
        with open(self.path, "w", encoding="utf-8") as handle:
            json.dump({"optimizer": {"restarts": 3, "tolerance": "1e-8"}, "psi": {"budget": "many"}}, handle)

    def tearDown(self):
        self._tmp.cleanup()

    def test_sections_and_defaults(self):
        self.assertEqual(conf_info("optimizer", self.path)["restarts"], 3)
        self.assertEqual(conf_info("verify", self.path), {})
        self.assertEqual(conf_value("optimizer", "restarts", 32, self.path), 3)
        self.assertEqual(conf_value("optimizer", "tolerance", 1e-10, self.path), 1e-8)
        self.assertEqual(conf_value("optimizer", "grid_resolution", 64, self.path), 64)

    def test_bad_values(self):
        with self.assertRaises(InvalidParameterType):
            conf_value("psi", "budget", 100, self.path)
        with open(self.path, "w", encoding="utf-8") as handle:
            handle.write("{not json")
        with self.assertRaises(InvalidParameterType):
            load_conf(self.path)

    def test_missing_file_is_empty(self):
        self.assertEqual(load_conf(os.path.join(self._tmp.name, "absent.json")), {})

    def test_optimizer_settings_from_file(self):
        from bhlab.bhpoly import OptimizerSettings
        settings = OptimizerSettings.from_config(self.path, seed=4, restarts=None)
        self.assertEqual((settings.restarts, settings.tolerance, settings.seed), (3, 1e-8, 4))


class TestThreads(unittest.TestCase):

    def setUp(self):
        self._saved = os.environ.pop(THREADS_ENV, None)

    def tearDown(self):
        os.environ.pop(THREADS_ENV, None)
        if self._saved is not None:
            os.environ[THREADS_ENV] = self._saved

    def test_thread_cap(self):
        self.assertEqual(thread_cap(), 1)
        os.environ[THREADS_ENV] = "3"
        self.assertEqual(thread_cap(), 3)
        os.environ[THREADS_ENV] = "0"
        with self.assertRaises(InvalidParameterType):
            thread_cap()

    def test_parallel_map_keeps_order(self):
        os.environ[THREADS_ENV] = "4"
        self.assertEqual(parallel_map(lambda x: x * x, range(20)), [x * x for x in range(20)])

    def test_thread_limit_is_scoped_and_inherited(self):
        os.environ[THREADS_ENV] = "1"
        with thread_limit(3):
            self.assertEqual(active_thread_cap(), 3)
            inner = parallel_map(lambda _: active_thread_cap(), range(4))
        self.assertEqual(inner, [3, 3, 3, 3])
        self.assertEqual(active_thread_cap(), 1)
        self.assertEqual(os.environ[THREADS_ENV], "1")
        with self.assertRaises(InvalidParameterType):
            with thread_limit(0):
                pass


class TestHelpers(unittest.TestCase):

    def test_derive_seed(self):
        self.assertEqual(derive_seed(7, 3), derive_seed(7, 3))
        self.assertNotEqual(derive_seed(7, 3), derive_seed(7, 4))
        self.assertLess(derive_seed(2 ** 64 - 1, 5), 2 ** 64)

    def test_parse_n_values(self):
        self.assertEqual(parse_n_values("1,4,9"), [1, 4, 9])
        self.assertEqual(parse_n_values("2:5"), [2, 3, 4, 5])
        for text in ("", "0,1", "3,2", "a:b", "1,1"):
            with self.assertRaises(InvalidParameterType):
                parse_n_values(text)

    def test_parse_float_pair(self):
        self.assertEqual(parse_float_pair("0.5,2"), (0.5, 2.0))
        with self.assertRaises(InvalidParameterType):
            parse_float_pair("1")

    def test_format_real(self):
        self.assertEqual(format_real(0.1), "0.10000000000000001")
        self.assertEqual(float(format_real(1 / 3)), 1 / 3)

    def test_parameter_args(self):
        params = ParameterArgs(argparse.Namespace(mode="greedy", budget=None))
        self.assertIs(params.get_enum("mode", PsiMode), PsiMode.GREEDY)
        self.assertIsNone(params.get("budget"))
        with self.assertRaises(MissingArgument):
            params.require("budget")
        with self.assertRaises(MissingArgument):
            params.get("absent")
        with self.assertRaises(InvalidParameterType):
            to_enum(PsiMode, "fast")

    def test_resultset(self):
        rows = ResultSet(["step", "margin", "margin"], [("holder", 0.5, 1), ("theorem", 0.25, 2)], title="steps")
        self.assertEqual(rows.field_names, ["step", "margin", "margin_1"])
        self.assertEqual(rows["theorem"], ("theorem", 0.25, 2))
        self.assertEqual(rows[0][0], "holder")
        self.assertEqual(rows.csv(), "step,margin,margin_1\nholder,0.5,1\ntheorem,0.25,2\n")
        self.assertTrue(str(rows).startswith("steps\n"))
        self.assertEqual(rows.DataFrame().shape, (2, 3))
        self.assertIn("<table", rows._repr_html_())
        with self.assertRaises(KeyError):
            rows["absent"]


if __name__ == "__main__":
    unittest.main()
