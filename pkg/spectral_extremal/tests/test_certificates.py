import os
import tempfile

# Set cache dir to a temp dir before importing anything from spectral_extremal
tmpdir = tempfile.mkdtemp()
os.environ["SPECTRAL_EXTREMAL_CACHE_DIR"] = tmpdir

import unittest

from spectral_extremal import certificates as cert
from spectral_extremal.certificates.polynomials import sign_report
from spectral_extremal.constructions import extremal_graph
from spectral_extremal.errors import CapabilityError, ConsistencyError, GraphInputError
from spectral_extremal.graph import find_induced_embedding, is_connected

REPLACEABLE = ["D2", "D3", "M1", "M2", "M3", "M4", "M5", "M6", "M7"]


class TestPatternTable(unittest.TestCase):
    def test_names(self):
        self.assertEqual([p.name for p in cert.forbidden_patterns(3)], ["D1", "D2", "D3", "D4"])
        self.assertEqual(len(cert.forbidden_patterns(4)), 7)
        with self.assertRaises(CapabilityError):
            cert.forbidden_patterns(5)
        with self.assertRaises(GraphInputError):
            cert.pattern_by_name("M8")

    def test_degrees(self):
        for spec in cert.forbidden_patterns(4):
            self.assertEqual(spec.full_degrees(), [4] * spec.n, msg=spec.name)
            self.assertEqual(spec.replacement_full_degrees(), [4] * spec.n, msg=spec.name)
            self.assertTrue(spec.preserves_degrees)
        for spec in cert.forbidden_patterns(3):
            self.assertLessEqual(max(spec.full_degrees()), 3, msg=spec.name)
        self.assertTrue(cert.pattern_by_name("D2").preserves_degrees)
        # D3 trades two adjacent vertices of degree 2 for a pendant vertex
        self.assertFalse(cert.pattern_by_name("D3").preserves_degrees)
        self.assertEqual(sorted(cert.pattern_by_name("D3").full_degrees())[:2], [2, 2])

    def test_replacements(self):
        self.assertFalse(cert.pattern_by_name("D1").has_replacement)
        self.assertFalse(cert.pattern_by_name("D4").has_replacement)
        for name in REPLACEABLE:
            spec = cert.pattern_by_name(name)
            self.assertTrue(spec.has_replacement, msg=name)
            self.assertEqual(spec.replacement.n, spec.n)


class TestSurgery(unittest.TestCase):
    def test_extremal_graphs_avoid_the_patterns(self):
        for n in range(8, 61):
            self.assertEqual(cert.audit_forbidden(extremal_graph(3, n), 3), [], msg=str(n))
        for n in range(10, 61):
            self.assertEqual(cert.audit_forbidden(extremal_graph(4, n), 4), [], msg=str(n))

    def test_caps_hold_inadmissible_copies(self):
        # the caps for n = 0 and 4 (mod 5) contain induced M2, M3 and M4 whose
        # outside edges do not sit the way the replacements need
        for n, name in ((10, "M2"), (15, "M2"), (14, "M3"), (14, "M4"), (19, "M4")):
            g = extremal_graph(4, n)
            spec = cert.pattern_by_name(name)
            plain = find_induced_embedding(
                g, spec.pattern, boundary=spec.boundary, host_degrees=spec.host_degrees()
            )
            self.assertIsNotNone(plain, msg=f"{name} {n}")
            self.assertFalse(cert.is_admissible(g, plain, spec), msg=f"{name} {n}")
            self.assertIsNone(cert.embed_pattern(g, spec), msg=f"{name} {n}")
        g = extremal_graph(4, 10)
        spec = cert.pattern_by_name("M2")
        plain = find_induced_embedding(
            g, spec.pattern, boundary=spec.boundary, host_degrees=spec.host_degrees()
        )
        with self.assertRaises(ConsistencyError):
            cert.apply_replacement(g, plain, spec)

    def test_twin_ports(self):
        self.assertEqual(cert.pattern_by_name("M4").twins, (("v1", "w1"), ("v3", "w3")))
        self.assertEqual(cert.pattern_by_name("M2").twins, ())
        with self.assertRaises(ConsistencyError):
            cert.PatternSpec(
                "X", 4, ["a", "b", "c"], [("a", "b"), ("b", "c")], ["a", "c"],
                twins=[("a", "b")],
            )

    def test_d1_control(self):
        violations = cert.audit_forbidden(cert.d1_control_host(), 3)
        self.assertEqual([v.pattern for v in violations], ["D1"])
        # the middle edge of D1 is the edge ab = (0, 1)
        mapping = violations[0].mapping
        self.assertEqual(sorted(mapping[1:3]), [0, 1])

    def test_hosts_contain_their_pattern(self):
        for name in REPLACEABLE:
            spec = cert.pattern_by_name(name)
            for host in cert.pattern_hosts(name):
                g = host.graph
                self.assertTrue(is_connected(g), msg=host.variant)
                self.assertEqual(g.max_degree, spec.delta)
                self.assertIsNotNone(cert.embed_pattern(g, spec), msg=f"{name} {host.variant}")
                self.assertTrue(cert.is_admissible(g, host.embedding, spec), msg=name)
                self.assertEqual(sorted(host.embedding.ports), spec.boundary)

    def test_replacements_raise_lambda(self):
        for name in REPLACEABLE:
            spec = cert.pattern_by_name(name)
            deltas = [
                cert.replacement_delta(host.graph, host.embedding, spec)
                for host in cert.pattern_hosts(name)
            ]
            self.assertGreater(max(deltas), 1e-8, msg=name)

    def test_replacement_keeps_degrees(self):
        for name in ("D2", "M1", "M6"):
            spec = cert.pattern_by_name(name)
            host = cert.pattern_hosts(name)[0]
            g = host.graph
            new = cert.apply_replacement(g, host.embedding, spec)
            self.assertEqual(new.m, g.m)
            self.assertEqual(new.degrees(), g.degrees())

    def test_surgery_errors(self):
        host = cert.pattern_hosts("M1")[0]
        with self.assertRaises(GraphInputError):
            cert.apply_replacement(host.graph, host.embedding, cert.pattern_by_name("D1"))
        with self.assertRaises(GraphInputError):
            cert.apply_replacement(host.graph, host.embedding, cert.pattern_by_name("M2"))
        with self.assertRaises(GraphInputError):
            cert.pattern_hosts("D4")


class TestPolynomials(unittest.TestCase):
    def test_suite_holds(self):
        reports = cert.polynomial_suite()
        self.assertEqual([r.name for r in reports], ["f", "g", "h"])
        for r in reports:
            self.assertTrue(r.holds, msg=str(r.to_dict()))
            self.assertLessEqual(abs(r.value_at_root), 1e-9)
            self.assertGreater(r.grid_min, 0)

    def test_values(self):
        self.assertGreater(cert.f_poly(3.5), 0)
        self.assertGreater(cert.g_poly(3.7), 0)
        self.assertLess(cert.h_poly(2.0), 0)
        for fn in (cert.f_poly, cert.g_poly, cert.h_poly):
            self.assertAlmostEqual(fn(4.0), 0.0, delta=1e-9)

    def test_failed_sign_pattern(self):
        bad = sign_report("h", cert.h_poly, [(2, 1)], (3.0, 4.0))
        self.assertFalse(bad.holds)

    def test_delta3_pair(self):
        report = cert.delta3_pair_report()
        self.assertTrue(report.holds)
        self.assertLess(report.max_gap_3k, 0)
        self.assertLess(report.max_gap_1, 0)
        values = cert.delta3_pair(2.9)
        self.assertLess(values["g3k"], values["f3k"])
        self.assertLess(values["g1"], values["f1"])


class TestIdentities(unittest.TestCase):
    def test_m4_local(self):
        self.assertAlmostEqual(cert.m4_local(3, 1, 0), 0.6)
        self.assertAlmostEqual(cert.m4_local(3.5, 1, 0.5), 2 / 7)
        for lam in (3.2, 3.6, 3.9):
            self.assertAlmostEqual(cert.m4_local(lam, 0.3, 0.3), 4 - lam)

    def test_suite(self):
        reports = cert.identity_suite()
        self.assertEqual(
            sorted({r.name for r in reports}), ["D2", "M1", "M2", "M3", "M4"]
        )
        for r in reports:
            self.assertTrue(r.hypothesis_met, msg=f"{r.name} {r.variant}")
            self.assertLessEqual(r.max_residual, 1e-8, msg=f"{r.name} {r.residuals}")

    def test_unsupported_pattern(self):
        with self.assertRaises(GraphInputError):
            cert.quadratic_form_identities(cert.pattern_hosts("M5")[0])


if __name__ == "__main__":
    unittest.main()
