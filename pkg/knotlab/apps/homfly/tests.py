from unittest import mock

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from knotlab.apps.invariants.reports import all_invariants
from knotlab.apps.linkcode.braids import from_braid
from knotlab.apps.linkcode.codes import JOINING, SELF, mirror, parse_link
from knotlab.apps.linkcode.descending import alpha_unknot
from knotlab.apps.linkcode.testing import braid_links
from knotlab.apps.polyalg.assembly import homfly_series
from knotlab.apps.polyalg.series import N, XSeries, x
from knotlab.core.errors import PrincipalPartNonzero, RangeOverflow, UnknownCrossing

from .expansion import substitute
from .identities import verify_all_crossings, verify_skein_identities
from .polynomials import DELTA, HomflyPoly, t, z
from .skein import homfly, skein_triple

TREFOIL = 'O1+ U2+ O3+ U1+ O2+ U3+'
TREFOIL_MINUS = 'O1- U2- O3- U1- O2- U3-'
FIGURE_EIGHT = 'U1+ O2- U4- O1+ U3+ O4- U2- O3+'
KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'
HOPF = 'O1+ U2+\nU1+ O2+'
HOPF_MINUS = 'O1- U2-\nU1- O2-'
TORUS_2_4 = 'U1+ O2+ U3+ O4+\nO1+ U2+ O3+ U4+'

FIXTURES = ('.', 'O1+ U1+', '.\n.', HOPF, HOPF_MINUS, TREFOIL, TREFOIL_MINUS,
            FIGURE_EIGHT, KNOT_6_2, TORUS_2_4)


class HomflyValueTests(SimpleTestCase):
    def test_unknots(self):
        self.assertEqual(homfly(parse_link('.')), HomflyPoly(1))
        self.assertEqual(homfly(parse_link('O1+ U1+')), HomflyPoly(1))
        self.assertEqual(homfly(parse_link('O1- U1-')), HomflyPoly(1))

    def test_unlinks(self):
        self.assertEqual(homfly(parse_link('.\n.')), HomflyPoly(DELTA))
        self.assertEqual(homfly(parse_link('.\n.\n.')), HomflyPoly(DELTA ** 2))

    def test_hopf(self):
        self.assertEqual(homfly(parse_link(HOPF)), HomflyPoly(z / t + 1 / (t * z) - 1 / (t**3 * z)))

    def test_trefoils(self):
        self.assertEqual(homfly(parse_link(TREFOIL)), HomflyPoly(2 / t**2 - 1 / t**4 + z**2 / t**2))
        self.assertEqual(homfly(parse_link(TREFOIL_MINUS)), HomflyPoly(-t**4 + t**2 * z**2 + 2 * t**2))

    def test_figure_eight(self):
        self.assertEqual(homfly(parse_link(FIGURE_EIGHT)), HomflyPoly(t**2 + t**-2 - 1 - z**2))

    def test_knot_6_2(self):
        expected = t**4 * z**2 + t**4 - t**2 * z**4 - 3 * t**2 * z**2 - 2 * t**2 + z**2 + 2
        self.assertEqual(homfly(parse_link(KNOT_6_2)), HomflyPoly(expected))

    def test_torus_link(self):
        expected = (t**-3 / z - t**-5 / z + 3 * t**-3 * z - t**-5 * z + t**-3 * z**3)
        self.assertEqual(homfly(parse_link(TORUS_2_4)), HomflyPoly(expected))

    def test_descending_diagrams_are_unlinks(self):
        for code in FIXTURES:
            link = parse_link(code)
            expected = HomflyPoly(DELTA ** max(link.n_components - 1, 0))
            self.assertEqual(homfly(alpha_unknot(link)), expected, code)

    def test_z_degree_floor(self):
        for code in FIXTURES:
            link = parse_link(code)
            self.assertGreaterEqual(homfly(link).min_z_degree(), 1 - max(link.n_components, 1), code)

    def test_z_degree_floor_is_enforced(self):
        with mock.patch('knotlab.apps.homfly.skein.DELTA', t / z**2):
            with self.assertRaises(RangeOverflow) as ctx:
                homfly(parse_link('.\n.'))
        self.assertEqual(ctx.exception.details, {'min_z_degree': -2, 'floor': -1})
        self.assertEqual(ctx.exception.exit_code, 1)

    def test_json_is_sorted(self):
        document = homfly(parse_link(HOPF)).to_json()
        self.assertEqual(document[0], {'t_exp': -3, 'z_exp': -1, 'num': -1, 'den': 1})
        self.assertEqual(len(document), 3)

    @given(braid_links(max_strands=3, max_length=6))
    @settings(max_examples=25, deadline=None)
    def test_skein_relation(self, link):
        for crossing_id in link.crossings():
            plus, minus, zero = skein_triple(link, crossing_id)
            self.assertEqual(
                HomflyPoly(t * homfly(plus).expr - homfly(minus).expr / t),
                HomflyPoly(z * homfly(zero).expr),
            )

    @given(braid_links(max_strands=3, max_length=6))
    @settings(max_examples=25, deadline=None)
    def test_reference_walk_does_not_matter(self, link):
        self.assertEqual(homfly(link, reverse=True), homfly(link))

    @given(braid_links(max_strands=3, max_length=6))
    @settings(max_examples=25, deadline=None)
    def test_mirror_rule(self, link):
        self.assertEqual(homfly(mirror(link)), homfly(link).mirror())


class SkeinTripleTests(SimpleTestCase):
    def test_triple_at_negative_crossing(self):
        link = parse_link(TREFOIL_MINUS)
        plus, minus, zero = skein_triple(link, 1)
        self.assertEqual(minus, link)
        self.assertEqual(plus.sign_of(1), 1)
        self.assertEqual(zero.n_components, 2)

    def test_unknown_crossing(self):
        with self.assertRaises(UnknownCrossing):
            skein_triple(parse_link(HOPF), 7)


class SubstituteTests(SimpleTestCase):
    def test_constants(self):
        self.assertEqual(substitute(HomflyPoly(1)), XSeries.one())
        self.assertEqual(substitute(HomflyPoly(0)), XSeries())

    def test_delta(self):
        expected = XSeries.from_expr(N + N * (N**2 - 1) / 24 * x**2
                                     + N * (N**2 - 1) * (3 * N**2 - 7) / 5760 * x**4)
        self.assertEqual(substitute(HomflyPoly(DELTA)), expected)

    def test_knot_6_2(self):
        expected = XSeries.from_expr(1 + (N**2 - 1) * x**2 + N * (N**2 - 1) * x**3
                                     + (7 * N**4 + 6 * N**2 - 13) / 12 * x**4)
        self.assertEqual(substitute(homfly(parse_link(KNOT_6_2))), expected)

    def test_principal_part(self):
        with self.assertRaises(PrincipalPartNonzero) as ctx:
            substitute(HomflyPoly(1 / z))
        self.assertEqual(ctx.exception.details['x_exps'], [-1])


class MasterOracleTests(SimpleTestCase):
    def test_fixtures(self):
        for code in FIXTURES:
            link = parse_link(code)
            self.assertEqual(substitute(homfly(link)), homfly_series(link, all_invariants(link)), code)

    def test_three_component_links(self):
        for word in ([1, 1, 2, 2], [1, -2, 1, -2, 1, -2]):
            link = from_braid(word, 3)
            self.assertEqual(substitute(homfly(link)), homfly_series(link, all_invariants(link)), word)

    @given(braid_links(max_strands=3, max_length=5))
    @settings(max_examples=15, deadline=None)
    def test_random_braids(self, link):
        self.assertEqual(substitute(homfly(link)), homfly_series(link, all_invariants(link)))


class SkeinIdentityTests(SimpleTestCase):
    def test_trefoil_crossings(self):
        for report in verify_all_crossings(parse_link(TREFOIL)):
            self.assertEqual(report.kind, SELF)
            self.assertTrue(report.ok, report.to_json())
            self.assertEqual(sorted(report.values), ['V1', 'V2', 'V3', 'V4', 'V5', 'V6', 'V7'])

    def test_hopf_joining_crossing(self):
        report = verify_skein_identities(parse_link(HOPF), 1)
        self.assertEqual(report.kind, JOINING)
        self.assertEqual(sorted(report.values), ['V10', 'V8', 'V9'])
        self.assertTrue(report.ok, report.to_json())
        self.assertEqual(report.failures(), [])

    def test_fixtures(self):
        for code in (FIGURE_EIGHT, KNOT_6_2, TORUS_2_4, HOPF_MINUS):
            for report in verify_all_crossings(parse_link(code)):
                self.assertTrue(report.ok, (code, report.to_json()))

    def test_three_component_chain(self):
        for report in verify_all_crossings(from_braid([1, 1, 2, 2], 3)):
            self.assertTrue(report.ok, report.to_json())

    def test_report_json(self):
        document = verify_skein_identities(parse_link(TREFOIL), 2).to_json()
        self.assertEqual(document['crossing'], 2)
        self.assertTrue(document['ok'])
        self.assertIn('V4', document['values'])

    def test_unknown_crossing(self):
        with self.assertRaises(UnknownCrossing):
            verify_skein_identities(parse_link(TREFOIL), 9)

    @given(braid_links(max_strands=3, max_length=5), st.data())
    @settings(max_examples=15, deadline=None)
    def test_random_braids(self, link, data):
        crossing_id = data.draw(st.sampled_from(link.crossings()))
        self.assertTrue(verify_skein_identities(link, crossing_id).ok)
