import os
import tempfile

# Set cache dir to a temp dir before importing anything from spectral_extremal
tmpdir = tempfile.mkdtemp()
os.environ["SPECTRAL_EXTREMAL_CACHE_DIR"] = tmpdir

import math
import unittest

from spectral_extremal import config, oracle
from spectral_extremal.constructions import extremal_graph
from spectral_extremal.errors import CapabilityError, GraphInputError
from spectral_extremal.graph import (
    canonical_form,
    complete_minus_edge,
    is_isomorphic,
    star_graph,
)
from spectral_extremal.spectral import perron, spectral_radius_dense


class TestEnumeration(unittest.TestCase):
    def test_matches_brute_force(self):
        cases = [(n, d) for n in range(3, 6) for d in range(2, n)] + [(6, 2), (6, 3)]
        for n, delta in cases:
            codes = {canonical_form(g) for g in oracle.enumerate_class(n, delta)}
            self.assertEqual(codes, oracle.naive_class_codes(n, delta), msg=f"{n} {delta}")

    def test_known_class_sizes(self):
        # order 4: P4 for maximum degree 2; the star, the paw and K4 minus an edge
        # for maximum degree 3
        self.assertEqual(len(oracle.naive_class_codes(4, 2)), 1)
        self.assertEqual(len(oracle.naive_class_codes(4, 3)), 3)

    def test_order_checks(self):
        with self.assertRaises(GraphInputError):
            list(oracle.enumerate_class(5, 1))
        with self.assertRaises(GraphInputError):
            list(oracle.enumerate_class(3, 3))
        with self.assertRaises(CapabilityError):
            list(oracle.enumerate_class(13, 3))
        with self.assertRaises(CapabilityError):
            oracle.naive_class_codes(7, 3)


class TestEnumerateExtremal(unittest.TestCase):
    def test_saturated_search_finds_the_maximum(self):
        for n, delta in [(5, 2), (5, 3), (6, 3), (6, 4), (7, 3)]:
            report = oracle.enumerate_extremal(n, delta)
            best = max(spectral_radius_dense(g) for g in oracle.enumerate_class(n, delta))
            self.assertAlmostEqual(report.lambda_max, best, delta=1e-9, msg=f"{n} {delta}")

    def test_paths_for_delta_two(self):
        for n in range(4, 9):
            report = oracle.enumerate_extremal(n, 2)
            self.assertEqual(len(report.witnesses), 1)
            self.assertAlmostEqual(
                report.lambda_max, 2 * math.cos(math.pi / (n + 1)), delta=1e-10
            )
            self.assertEqual(report.witnesses[0].degree_profile, f"(2^{n - 2},1^2)")

    def test_k4_minus_edge(self):
        report = oracle.enumerate_extremal(4, 3)
        self.assertEqual(len(report.witnesses), 1)
        self.assertTrue(is_isomorphic(report.witness_graphs()[0], complete_minus_edge(4)))
        self.assertAlmostEqual(report.lambda_max, (1 + math.sqrt(17)) / 2, delta=1e-10)

    def test_delta3_witnesses_are_the_construction(self):
        for n, profile in ((8, "(3^7,1)"), (9, "(3^8,2)")):
            report = oracle.enumerate_extremal(n, 3)
            self.assertEqual(len(report.witnesses), 1)
            self.assertEqual(report.witnesses[0].degree_profile, profile)
            self.assertTrue(
                is_isomorphic(report.witness_graphs()[0], extremal_graph(3, n))
            )
            self.assertFalse(report.forced)

    @unittest.skipIf(not config.RUN_SLOW, "slow oracle run")
    def test_delta3_order_ten(self):
        report = oracle.enumerate_extremal(10, 3)
        self.assertEqual(len(report.witnesses), 1)
        self.assertTrue(is_isomorphic(report.witness_graphs()[0], extremal_graph(3, 10)))

    def test_cap(self):
        with self.assertRaises(CapabilityError) as cm:
            oracle.enumerate_extremal(11, 3)
        self.assertEqual(cm.exception.details["cap"], 10)
        self.assertEqual(cm.exception.details["estimated_cost"], oracle.estimate_cost(11, 3))
        cfg = config.Config(oracle_caps={3: 6})
        with self.assertRaises(CapabilityError):
            oracle.enumerate_extremal(7, 3, cfg=cfg)
        self.assertTrue(oracle.enumerate_extremal(7, 3, cfg=cfg, force=True).forced)

    def test_threads_do_not_change_the_result(self):
        single = oracle.enumerate_extremal(7, 3, threads=1)
        pooled = oracle.enumerate_extremal(7, 3, threads=2)
        self.assertEqual(single.to_dict(), pooled.to_dict())


class TestStructureLemmas(unittest.TestCase):
    def test_k4_minus_edge(self):
        # the two vertices of degree 2 are not adjacent
        g = complete_minus_edge(4)
        audit = oracle.verify_structure_lemmas(g, perron(g))
        self.assertFalse(audit.s_is_clique)
        self.assertTrue(audit.s_size_ok)
        self.assertFalse(audit.all_hold())
        self.assertTrue(audit.details)

    def test_star(self):
        g = star_graph(3)
        audit = oracle.verify_structure_lemmas(g, perron(g))
        self.assertFalse(audit.s_is_clique)
        self.assertFalse(audit.s_size_ok)
        self.assertFalse(audit.deletion_connected[1])

    def test_extremal_graphs_pass(self):
        graphs = [extremal_graph(3, n) for n in range(8, 17)]
        graphs += [extremal_graph(4, n) for n in range(10, 17)]
        for g in graphs:
            audit = oracle.verify_structure_lemmas(g, perron(g))
            self.assertTrue(audit.all_hold(), msg=str(audit.details))

    def test_oracle_witnesses_pass(self):
        for n in (8, 9):
            for g in oracle.enumerate_extremal(n, 3).witness_graphs():
                self.assertTrue(oracle.verify_structure_lemmas(g, perron(g)).all_hold())

    def test_audit_report(self):
        report = oracle.audit_report(extremal_graph(4, 12))
        self.assertTrue(report.in_class)
        self.assertEqual(report.delta, 4)
        self.assertTrue(report.lemmas.all_hold())
        self.assertTrue(report.extremes.bounds_hold)


if __name__ == "__main__":
    unittest.main()
