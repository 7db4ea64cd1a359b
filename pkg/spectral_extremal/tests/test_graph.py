import os
import tempfile

# Set cache dir to a temp dir before importing anything from spectral_extremal
tmpdir = tempfile.mkdtemp()
os.environ["SPECTRAL_EXTREMAL_CACHE_DIR"] = tmpdir

from itertools import combinations, permutations
import unittest

import networkx as nx
import numpy as np

from spectral_extremal import graph
from spectral_extremal.errors import CapabilityError, DomainError, GraphInputError

try:
    import pynauty

    pynauty_available = True
except ImportError:
    pynauty_available = False


def _random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph.graph_from_edges(n, edges)


def _first_induced_map(g, pattern, boundary=None, host_degrees=None):
    """
    Lexicographically first injective map by trying every one of them.
    """
    k = pattern.n
    pattern_pairs = list(combinations(range(k), 2))
    for mapping in permutations(range(g.n), k):
        if any(
            pattern.has_edge(i, j) != g.has_edge(mapping[i], mapping[j])
            for i, j in pattern_pairs
        ):
            continue
        if boundary and any(
            i not in boundary and g.degree(mapping[i]) != pattern.degree(i)
            for i in range(k)
        ):
            continue
        if host_degrees and any(
            g.degree(mapping[i]) != d for i, d in host_degrees.items()
        ):
            continue
        return list(mapping)
    return None


class TestGraphBasics(unittest.TestCase):
    def test_accessors(self):
        g = graph.graph_from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3), (1, 0)])
        self.assertEqual(g.n, 4)
        self.assertEqual(g.m, 4)
        self.assertEqual(g.degrees(), [2, 2, 3, 1])
        self.assertEqual(g.max_degree, 3)
        self.assertEqual(g.min_degree, 1)
        self.assertEqual(g.neighbors(2), (0, 1, 3))
        self.assertTrue(g.has_edge(3, 2))
        self.assertFalse(g.has_edge(0, 3))
        self.assertEqual(g.edges(), [(0, 1), (0, 2), (1, 2), (2, 3)])
        self.assertEqual(g.masks[2], 0b1011)

    def test_invalid_edges(self):
        with self.assertRaises(GraphInputError):
            graph.graph_from_edges(3, [(0, 3)])
        with self.assertRaises(GraphInputError):
            graph.graph_from_edges(3, [(1, 1)])
        with self.assertRaises(GraphInputError):
            graph.cycle_graph(2)

    def test_masks_limit(self):
        with self.assertRaises(CapabilityError):
            graph.path_graph(65).masks

    def test_edit_and_relabel(self):
        g = graph.path_graph(4)
        h = g.add_edges([(0, 3)]).remove_edges([(1, 2)])
        self.assertEqual(h.edges(), [(0, 1), (0, 3), (2, 3)])
        r = g.relabel([3, 2, 1, 0])
        self.assertEqual(r.edges(), g.edges())
        with self.assertRaises(GraphInputError):
            g.relabel([0, 0, 1, 2])
        sub = graph.complete_graph(5).induced_subgraph([4, 2, 0])
        self.assertEqual(sub.m, 3)

    def test_sparse_matches_dense(self):
        g = _random_graph(15, 0.3, 1)
        np.testing.assert_array_equal(g.to_sparse().toarray(), g.to_dense())

    def test_degree_profile(self):
        profile = graph.degree_profile(graph.complete_minus_edge(5))
        self.assertEqual(profile.sorted_degrees, [4, 4, 4, 3, 3])
        self.assertFalse(profile.is_regular)
        self.assertEqual(str(profile), "(4^3,3^2)")
        self.assertTrue(graph.degree_profile(graph.cycle_graph(6)).is_regular)


class TestConnectivity(unittest.TestCase):
    def test_components(self):
        g = graph.disjoint_union(graph.path_graph(3), graph.cycle_graph(4))
        self.assertEqual(graph.components(g), [[0, 1, 2], [3, 4, 5, 6]])
        self.assertFalse(graph.is_connected(g))
        self.assertEqual(graph.bfs_distances(g, 0), [0, 1, 2, -1, -1, -1, -1])

    def test_diameter(self):
        self.assertEqual(graph.diameter(graph.path_graph(10)), 9)
        self.assertEqual(graph.diameter(graph.cycle_graph(9)), 4)
        with self.assertRaises(DomainError):
            graph.diameter(graph.graph_from_edges(2, []))

    def test_diameter_matches_networkx_on_large_graphs(self):
        g = graph.path_graph(400).add_edges([(0, 200), (100, 399)])
        self.assertEqual(graph.diameter(g), nx.diameter(g.to_networkx()))

    def test_coalesce(self):
        g = graph.coalesce(graph.complete_graph(3), 2, graph.path_graph(3), 0)
        self.assertEqual(g.n, 5)
        self.assertEqual(g.degrees(), [2, 2, 3, 2, 1])
        self.assertEqual(graph.coalesce_map(3, 2, 3, 0), [2, 3, 4])

    def test_add_pendant(self):
        g = graph.add_pendant(graph.cycle_graph(3), 1)
        self.assertEqual(g.n, 4)
        self.assertEqual(g.neighbors(3), (1,))


class TestFormats(unittest.TestCase):
    def test_graph6_known_values(self):
        # values from the format description
        self.assertEqual(graph.to_graph6(graph.path_graph(5)), "DhC")
        self.assertEqual(graph.to_graph6(graph.complete_graph(4)), "C~")
        self.assertEqual(graph.from_graph6("C~").m, 6)

    def test_graph6_agrees_with_networkx(self):
        for seed, n in enumerate((1, 7, 20, 70)):
            g = _random_graph(n, 0.25, seed)
            s = graph.to_graph6(g)
            expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
            self.assertEqual(s.encode("ascii"), expected)
            self.assertEqual(graph.from_graph6(s), g)

    def test_graph6_rejects_garbage(self):
        with self.assertRaises(GraphInputError):
            graph.from_graph6("D h")
        with self.assertRaises(GraphInputError):
            graph.from_graph6("Dh")

    def test_edge_list(self):
        g = graph.cycle_graph(5)
        text = graph.to_edge_list(g)
        self.assertTrue(text.startswith("5 5\n"))
        self.assertEqual(graph.from_edge_list(text), g)
        with self.assertRaises(GraphInputError):
            graph.from_edge_list("3 2\n0 1\n")

    def test_read_write(self):
        g = _random_graph(12, 0.4, 3)
        for name in ("g.g6", "g.txt"):
            path = os.path.join(tmpdir, name)
            graph.write_graph(g, path)
            self.assertEqual(graph.read_graph(path), g)
        self.assertEqual(graph.graph_format_for("x.edges"), "edges")
        with self.assertRaises(GraphInputError):
            graph.graph_format_for("x.g6", "dot")


class TestCanonicalForm(unittest.TestCase):
    def test_invariant_under_relabeling(self):
        rng = np.random.default_rng(7)
        for seed in range(20):
            g = _random_graph(9, 0.4, seed)
            perm = list(rng.permutation(g.n))
            self.assertEqual(graph.canonical_form(g), graph.canonical_form(g.relabel(perm)))

    def test_agrees_with_networkx_isomorphism(self):
        graphs = [_random_graph(7, 0.45, seed) for seed in range(25)]
        for i, g in enumerate(graphs):
            for h in graphs[i + 1 :]:
                self.assertEqual(
                    graph.is_isomorphic(g, h),
                    nx.is_isomorphic(g.to_networkx(), h.to_networkx()),
                )

    def test_regular_graphs_with_same_degrees(self):
        # the triangular prism and K_{3,3} are both cubic on 6 vertices
        prism = graph.graph_from_edges(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        k33 = graph.graph_from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
        self.assertFalse(graph.is_isomorphic(prism, k33))

    def test_size_limit(self):
        with self.assertRaises(CapabilityError):
            graph.canonical_form(graph.path_graph(13))

    def test_exhaustive_small_orders(self):
        # every labelled graph on n <= 6 vertices, grouped into isomorphism classes
        # by applying all vertex permutations
        class_counts = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
        for n, expected in class_counts.items():
            pairs = list(combinations(range(n), 2))
            bit = {p: b for b, p in enumerate(pairs)}
            perms = list(permutations(range(n)))
            seen = set()
            codes = []
            for mask in range(1 << len(pairs)):
                if mask in seen:
                    continue
                orbit = set()
                for perm in perms:
                    image = 0
                    for b, (u, v) in enumerate(pairs):
                        if mask >> b & 1:
                            pu, pv = perm[u], perm[v]
                            image |= 1 << bit[(min(pu, pv), max(pu, pv))]
                    orbit.add(image)
                seen |= orbit
                orbit_codes = {
                    graph.canonical_form(
                        graph.graph_from_edges(
                            n, [p for b, p in enumerate(pairs) if m >> b & 1]
                        )
                    )
                    for m in orbit
                }
                self.assertEqual(len(orbit_codes), 1, msg=f"n={n} mask={mask}")
                codes.append(orbit_codes.pop())
            self.assertEqual(len(codes), expected, msg=str(n))
            self.assertEqual(len(set(codes)), expected, msg=str(n))

    @unittest.skipIf(not pynauty_available, "pynauty is not available")
    def test_agrees_with_nauty(self):
        def certificate(g):
            adjacency = {v: list(g.neighbors(v)) for v in range(g.n)}
            return pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adjacency))

        graphs = [_random_graph(8, 0.5, seed) for seed in range(15)]
        for i, g in enumerate(graphs):
            for h in graphs[i + 1 :]:
                self.assertEqual(
                    graph.is_isomorphic(g, h), certificate(g) == certificate(h)
                )


class TestInducedEmbedding(unittest.TestCase):
    def test_triangle_in_k4_minus_edge(self):
        g = graph.complete_minus_edge(4)
        emb = graph.find_induced_embedding(g, graph.complete_graph(3))
        self.assertIsNotNone(emb)
        self.assertEqual(emb.mapping, [0, 1, 2])

    def test_induced_rejects_extra_edges(self):
        # P3 is not an induced subgraph of K4
        self.assertIsNone(
            graph.find_induced_embedding(graph.complete_graph(4), graph.path_graph(3))
        )

    def test_closed_vertices(self):
        # a path 0-1-2 whose ends are ports and whose middle must be closed
        g = graph.path_graph(5)
        emb = graph.find_induced_embedding(g, graph.path_graph(3), boundary=[0, 2])
        self.assertEqual(emb.mapping, [0, 1, 2])
        self.assertEqual(emb.ports, [2])
        self.assertEqual(emb.outside_neighbors(g, 2), [3])
        star = graph.star_graph(3)
        self.assertIsNone(
            graph.find_induced_embedding(star, graph.path_graph(3), boundary=[0, 2])
        )

    def test_host_degrees(self):
        g = graph.path_graph(6)
        emb = graph.find_induced_embedding(
            g, graph.path_graph(2), host_degrees={0: 1, 1: 2}
        )
        self.assertEqual(emb.mapping, [0, 1])

    def test_agrees_with_exhaustive_search(self):
        rng = np.random.default_rng(31)
        found = 0
        for trial in range(100):
            host = _random_graph(int(rng.integers(5, 9)), rng.uniform(0.3, 0.7), 100 + trial)
            pattern = _random_graph(int(rng.integers(2, 6)), 0.5, 500 + trial)
            boundary = None
            host_degrees = None
            if trial % 3:
                boundary = sorted(
                    {int(i) for i in rng.choice(pattern.n, size=2, replace=True)}
                )
            if trial % 3 == 2:
                i = boundary[0]
                host_degrees = {i: pattern.degree(i) + int(rng.integers(0, 3))}
            emb = graph.find_induced_embedding(
                host, pattern, boundary=boundary, host_degrees=host_degrees
            )
            expected = _first_induced_map(host, pattern, boundary, host_degrees)
            msg = f"trial {trial}"
            if expected is None:
                self.assertIsNone(emb, msg=msg)
            else:
                self.assertIsNotNone(emb, msg=msg)
                self.assertEqual(emb.mapping, expected, msg=msg)
                found += 1
        self.assertGreater(found, 10)

    def test_accept_skips_rejected_maps(self):
        g = graph.path_graph(5)
        emb = graph.find_induced_embedding(
            g, graph.path_graph(2), accept=lambda m: m[0] == 3
        )
        self.assertEqual(emb.mapping, [3, 2])
        self.assertIsNone(
            graph.find_induced_embedding(g, graph.path_graph(2), accept=lambda m: False)
        )


if __name__ == "__main__":
    unittest.main()
