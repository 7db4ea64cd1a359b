import os
import tempfile

# Set cache dir to a temp dir before importing anything from spectral_extremal
tmpdir = tempfile.mkdtemp()
os.environ["SPECTRAL_EXTREMAL_CACHE_DIR"] = tmpdir

import math
import unittest

import numpy as np

from spectral_extremal import graph, spectral
from spectral_extremal.errors import ConvergenceError, DomainError, GraphInputError


def random_connected_graph(rng, n):
    """
    A random spanning tree plus random extra edges; nonregular in practice.
    """
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    p = rng.uniform(0.05, 0.3)
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph.graph_from_edges(n, edges)


class TestPerron(unittest.TestCase):
    def test_path_closed_form(self):
        for n in range(2, 51):
            lam = spectral.spectral_radius(graph.path_graph(n))
            self.assertAlmostEqual(lam, 2 * math.cos(math.pi / (n + 1)), delta=1e-10)

    def test_complete_minus_edge_closed_form(self):
        for n in range(4, 13):
            lam = spectral.spectral_radius(graph.complete_minus_edge(n))
            expected = (n - 3 + math.sqrt(n * n + 2 * n - 7)) / 2
            self.assertAlmostEqual(lam, expected, delta=1e-9)

    def test_regular_graph_is_exact(self):
        pd = spectral.perron(graph.cycle_graph(7))
        self.assertEqual(pd.lambda1, 2)
        self.assertEqual(pd.method, "regular")
        np.testing.assert_allclose(pd.x, np.full(7, 1 / math.sqrt(7)))

    def test_vector_is_positive_unit(self):
        rng = np.random.default_rng(0)
        for _ in range(10):
            g = random_connected_graph(rng, 25)
            pd = spectral.perron(g)
            self.assertTrue(np.all(pd.x > 0))
            self.assertAlmostEqual(float(np.linalg.norm(pd.x)), 1.0, delta=1e-12)
            self.assertLessEqual(pd.residual, 1e-12)
            self.assertAlmostEqual(
                pd.lambda1, spectral.spectral_radius_dense(g), delta=1e-9
            )

    def test_methods_agree(self):
        g = graph.add_pendant(graph.complete_graph(5), 0)
        values = [spectral.perron(g, method=m).lambda1 for m in ("power", "inverse", "auto")]
        self.assertAlmostEqual(values[0], values[1], delta=1e-10)
        self.assertAlmostEqual(values[1], values[2], delta=1e-10)

    def test_long_path_hands_off_to_inverse(self):
        pd = spectral.perron(graph.path_graph(2000), handoff_iters=100)
        self.assertIn("inverse", pd.method)
        self.assertAlmostEqual(pd.lambda1, 2 * math.cos(math.pi / 2001), delta=1e-10)

    def test_errors(self):
        with self.assertRaises(DomainError):
            spectral.perron(graph.graph_from_edges(3, [(0, 1)]))
        with self.assertRaises(GraphInputError):
            spectral.perron(graph.path_graph(3), method="lanczos")
        with self.assertRaises(GraphInputError):
            spectral.perron(graph.path_graph(3), tol=0)
        with self.assertRaises(ConvergenceError) as cm:
            spectral.perron(graph.path_graph(50), method="power", max_iters=3)
        self.assertIsNotNone(cm.exception.best)

    def test_compare_lambda(self):
        self.assertEqual(spectral.compare_lambda(1.0, 1.0 + 1e-12), 0)
        self.assertEqual(spectral.compare_lambda(1.0, 1.1), -1)
        self.assertEqual(spectral.compare_lambda(1.1, 1.0, tol=0.01), 1)


class TestGapIdentities(unittest.TestCase):
    def test_identities_on_random_graphs(self):
        rng = np.random.default_rng(2024)
        for _ in range(100):
            n = int(rng.integers(3, 41))
            g = random_connected_graph(rng, n)
            pd = spectral.perron(g, tol=1e-12)
            r_energy, r_sum = spectral.gap_identities_residual(g, pd, g.max_degree)
            self.assertLessEqual(r_energy, 1e-8)
            self.assertLessEqual(r_sum, 1e-8)

    def test_gap_from_perron(self):
        g = graph.complete_minus_edge(8)
        pd = spectral.perron(g)
        self.assertAlmostEqual(spectral.gap_from_perron(g, pd), 7 - pd.lambda1, delta=1e-11)

    def test_rayleigh_bound(self):
        rng = np.random.default_rng(5)
        checked = 0
        for _ in range(20):
            g = random_connected_graph(rng, int(rng.integers(5, 41)))
            gap = g.max_degree - spectral.spectral_radius_dense(g)
            for _ in range(50):
                # signed vectors as well as positive ones
                y = rng.standard_normal(g.n) if checked % 2 else rng.random(g.n)
                self.assertGreaterEqual(
                    spectral.rayleigh_upper_gap(g, y) + 1e-12, gap, msg=str(checked)
                )
                checked += 1
        self.assertEqual(checked, 1000)
        g = random_connected_graph(rng, 30)
        gap = g.max_degree - spectral.spectral_radius_dense(g)
        pd = spectral.perron(g)
        bound = spectral.rayleigh_upper_gap(
            g, spectral.GapBoundInput(y=pd.x.tolist(), delta=g.max_degree)
        )
        self.assertAlmostEqual(bound, gap, delta=1e-9)
        with self.assertRaises(GraphInputError):
            spectral.rayleigh_upper_gap(g, np.zeros(g.n))
        with self.assertRaises(GraphInputError):
            spectral.rayleigh_upper_gap(g, np.ones(3))

    def test_perron_extremes(self):
        g = graph.add_pendant(graph.path_graph(10), 4)
        pd = spectral.perron(g)
        ext = spectral.perron_extremes(g, pd)
        self.assertLessEqual(ext.x_min, ext.x_max)
        self.assertTrue(ext.bounds_hold)
        self.assertTrue(ext.x_min_gap_bound_holds)


if __name__ == "__main__":
    unittest.main()
