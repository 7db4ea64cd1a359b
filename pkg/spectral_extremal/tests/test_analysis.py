import os
import tempfile

# Set cache dir to a temp dir before importing anything from spectral_extremal
tmpdir = tempfile.mkdtemp()
os.environ["SPECTRAL_EXTREMAL_CACHE_DIR"] = tmpdir

import math
import unittest

from spectral_extremal import analysis, config
from spectral_extremal.errors import GraphInputError


class TestGapRows(unittest.TestCase):
    def test_paths(self):
        for n in (10, 50, 200):
            row = analysis.gap_row(2, n)
            self.assertEqual(row.construction, "path")
            self.assertIsNone(row.k)
            self.assertIsNone(row.upper)
            self.assertAlmostEqual(row.scaled_gap, analysis.scaled_path_gap(n), delta=1e-6)
            self.assertEqual(row.normalized, row.scaled_gap)

    def test_extremal_row(self):
        row = analysis.gap_row(3, 21)
        self.assertEqual(row.construction, "extremal_delta3")
        self.assertEqual(row.k, 5)
        self.assertEqual(row.delta_min, 2)
        self.assertLessEqual(row.gap, row.upper)
        self.assertAlmostEqual(row.normalized, row.scaled_gap / 2)

    def test_coalescence_row(self):
        row = analysis.gap_row(5, 49)
        self.assertEqual(row.construction, "h_family")
        self.assertAlmostEqual(row.normalized, row.scaled_gap / 4)
        self.assertLessEqual(row.gap, row.upper + 1e-12)
        self.assertAlmostEqual(row.lambda1, 5 - row.gap, delta=1e-12)

    def test_scaled_gap_near_the_limit(self):
        # the O(1/n) correction is still visible at n = 101
        row = analysis.gap_row(3, 101)
        self.assertLess(abs(row.scaled_gap - math.pi**2 / 2) / (math.pi**2 / 2), 0.25)

    def test_errors(self):
        with self.assertRaises(GraphInputError):
            analysis.gap_row(1, 10)

    def test_table_keeps_order(self):
        rows = analysis.gap_table(4, [30, 20, 25], threads=2)
        self.assertEqual([r.n for r in rows], [30, 20, 25])
        self.assertEqual(rows[1], analysis.gap_row(4, 20))


class TestLimits(unittest.TestCase):
    def test_targets(self):
        self.assertEqual(analysis.limit_target(2), (math.pi**2, "limit"))
        self.assertEqual(analysis.limit_target(3), (math.pi**2 / 4, "limit"))
        self.assertEqual(analysis.limit_target(4), (math.pi**2 / 2, "limit"))
        self.assertEqual(analysis.limit_target(5), (math.pi**2 / 4, "limsup"))
        self.assertEqual(analysis.limit_target(6), (math.pi**2 / 2, "limsup"))

    def test_argument_checks(self):
        with self.assertRaises(GraphInputError):
            analysis.limit_report(3, [101, 201, 401])
        with self.assertRaises(GraphInputError):
            analysis.limit_report(3, [101, 201, 201, 401])

    def test_paths_converge(self):
        report = analysis.limit_report(2, [50, 100, 200, 400])
        self.assertEqual(report.kind, "limit")
        self.assertTrue(report.monotone)
        self.assertTrue(report.verdict)
        rows = list(report.csv_rows())
        self.assertEqual(len(rows), 4)
        self.assertEqual(len(rows[0]), len(analysis.LIMIT_CSV_HEADER))
        self.assertEqual(rows[0][2], "")

    def test_limsup_with_a_wide_band(self):
        cfg = config.Config(limit_bands={"limit": 1.0})
        report = analysis.limit_report(5, [49, 97, 193, 385], cfg=cfg)
        self.assertEqual(report.kind, "limsup")
        self.assertEqual(report.band, 1.0)
        self.assertTrue(report.verdict)

    @unittest.skipIf(not config.RUN_SLOW, "large eigensolves")
    def test_exact_limits(self):
        for delta in (3, 4):
            report = analysis.limit_report(delta, [201, 401, 801, 1601])
            self.assertTrue(report.verdict, msg=str(report.rel_errors))

    @unittest.skipIf(not config.RUN_SLOW, "large eigensolves")
    def test_limsup_bounds(self):
        for delta in (5, 6, 7):
            ns = [delta + 1 + 1 + (delta + 1) * k for k in (40, 80, 160, 320)]
            report = analysis.limit_report(delta, ns)
            self.assertTrue(report.verdict, msg=f"{delta} {report.rows[-1].normalized}")


class TestSandwich(unittest.TestCase):
    def test_bounds_hold(self):
        for delta in (3, 4, 5):
            for k in (10, 20, 40):
                report = analysis.sandwich(delta, k)
                self.assertTrue(report.holds, msg=f"{delta} {k}")
                self.assertEqual(report.n, k * (delta + 1) + 1)
            self.assertLess(abs(report.ratio - 1), 0.2)

    def test_slack(self):
        spec = analysis.family_spec(3, k=10)
        self.assertEqual(analysis.lower_bound_slack(spec), 4**3 / 41**3)
        with self.assertRaises(GraphInputError):
            analysis.path_lower_bound(analysis.family_spec(3, k=1))


class TestExamples(unittest.TestCase):
    def test_kn_minus_edge(self):
        for n in range(4, 13):
            row = analysis.kn_minus_edge_gap(n)
            self.assertAlmostEqual(row.lambda1, row.closed_form, delta=1e-9)
        with self.assertRaises(GraphInputError):
            analysis.kn_minus_edge_gap(3)

    @unittest.skipIf(not config.RUN_SLOW, "dense graph on 2000 vertices")
    def test_kn_minus_edge_limit(self):
        self.assertLess(abs(analysis.kn_minus_edge_gap(2000).scaled - 2) / 2, 0.01)

    def test_cioaba_small(self):
        report = analysis.cioaba_check(3, 5)
        self.assertEqual(report.n, 22)
        self.assertEqual(report.delta_min, 1)
        self.assertTrue(report.diameter_bound_holds)
        self.assertFalse(report.violated)
        self.assertLess(report.lower_classical, report.gap)
        with self.assertRaises(GraphInputError):
            analysis.cioaba_check(4, 5)
        with self.assertRaises(GraphInputError):
            analysis.cioaba_check(3, 1)

    def test_cioaba_lower(self):
        self.assertAlmostEqual(analysis.cioaba_lower(4, 1, 10, 2), 1 / 80)

    @unittest.skipIf(not config.RUN_SLOW, "eigensolves on graphs with 10^4 vertices")
    def test_counterexample(self):
        report = analysis.find_counterexample(53)
        self.assertIsNotNone(report)
        self.assertTrue(report.violated)
        self.assertTrue(report.diameter_bound_holds)

    def test_scaled_path_gap(self):
        n = 1000
        self.assertAlmostEqual(
            analysis.scaled_path_gap(n), math.pi**2 * n * n / (n + 1) ** 2, delta=1e-4
        )


if __name__ == "__main__":
    unittest.main()
