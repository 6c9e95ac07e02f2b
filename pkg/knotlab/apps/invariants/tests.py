from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings

from knotlab.apps.linkcode.braids import from_braid
from knotlab.apps.linkcode.codes import parse_link, reverse_orientation, sublink
from knotlab.apps.linkcode.descending import ALTERNATE_RULES
from knotlab.apps.linkcode.testing import braid_knots, braid_links
from knotlab.core.errors import ArityError

from .formulas import (
    I3_1, I4_1_1, I4_1_2, I4_2, EvalOptions, i_terms, pairing_table,
    v1, v2, v3_1, v3_2, v4_1, v4_2, v4_3, v4_4,
)
from .reports import all_invariants

UNKNOT = '.'
KINK = 'O1+ U1+'
TREFOIL = 'O1+ U2+ O3+ U1+ O2+ U3+'
FIGURE_EIGHT = 'U1+ O2- U4- O1+ U3+ O4- U2- O3+'
KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'
HOPF = 'O1+ U2+\nU1+ O2+'
TORUS_2_4 = 'U1+ O2+ U3+ O4+\nO1+ U2+ O3+ U4+'

F = Fraction
SIXTH = F(1, 6)
FRAMING = F(1, 360)


class KnotInvariantTests(SimpleTestCase):
    def test_unknot_constants(self):
        for code in (UNKNOT, KINK):
            knot = parse_link(code)
            self.assertEqual(v2(knot), -SIXTH)
            self.assertEqual(v3_1(knot), 0)
            self.assertEqual(v4_1(knot), FRAMING)
            self.assertEqual(v4_2(knot), -FRAMING)

    def test_knot_6_2_values(self):
        knot = parse_link(KNOT_6_2)
        self.assertEqual(v2(knot), -SIXTH - 4)
        self.assertEqual(v3_1(knot), 8)
        self.assertEqual(v4_1(knot), F(34, 3) + FRAMING)
        self.assertEqual(v4_2(knot), F(38, 3) - FRAMING)

    def test_knot_6_2_intermediates(self):
        knot = parse_link(KNOT_6_2)
        table = [value for _, value in pairing_table(knot)]
        self.assertEqual(table, [0, 0, -6, 4, 2, -2, -4, -20, 12, 0])
        opts = EvalOptions()
        self.assertEqual(I3_1.evaluate(knot, opts), 1)
        self.assertEqual(I4_1_1.evaluate(knot, opts), 4)
        self.assertEqual(I4_1_2.evaluate(knot, opts), -2)
        self.assertEqual(I4_2.evaluate(knot, opts), -2)
        self.assertEqual(i_terms(knot), {'I3.1': 1, 'I4.1.1': 4, 'I4.1.2': -2, 'I4.2': -2})

    def test_trefoil_values(self):
        knot = parse_link(TREFOIL)
        self.assertEqual(v2(knot), -SIXTH + 4)
        self.assertEqual(v3_1(knot), 8)
        self.assertEqual(v4_1(knot), F(62, 3) + FRAMING)
        self.assertEqual(v4_2(knot), F(10, 3) - FRAMING)

    def test_figure_eight_values(self):
        knot = parse_link(FIGURE_EIGHT)
        self.assertEqual(v2(knot), -SIXTH - 4)
        self.assertEqual(v3_1(knot), 0)
        self.assertEqual(v4_1(knot), F(34, 3) + FRAMING)
        self.assertEqual(v4_2(knot), F(14, 3) - FRAMING)

    def test_arity(self):
        with self.assertRaises(ArityError):
            v2(parse_link(HOPF))
        with self.assertRaises(ArityError) as ctx:
            v1(parse_link(TREFOIL))
        self.assertEqual(ctx.exception.details, {'expected': 2, 'got': 1})
        with self.assertRaises(ArityError):
            v4_4(parse_link(HOPF))

    @given(braid_knots(max_strands=3, max_length=6))
    @settings(max_examples=30, deadline=None)
    def test_reversal_keeps_v2(self, knot):
        self.assertEqual(v2(reverse_orientation(knot)), v2(knot))


class LinkInvariantTests(SimpleTestCase):
    def test_hopf(self):
        link = parse_link(HOPF)
        self.assertEqual(v1(link), 2)
        self.assertEqual(v3_2(link), F(2, 3))
        self.assertEqual(v4_3(link), 0)

    def test_torus_link_2_4(self):
        link = parse_link(TORUS_2_4)
        self.assertEqual(v1(link), 4)
        self.assertEqual(v3_2(link), F(28, 3))
        self.assertEqual(v4_3(link), 8)

    def test_unlinks(self):
        two = parse_link('.\n.')
        self.assertEqual((v1(two), v3_2(two), v4_3(two)), (0, 0, 0))
        self.assertEqual(v4_4(parse_link('.\n.\n.')), 0)

    def test_switching_joining_crossing_moves_v1_by_two(self):
        self.assertEqual(v1(parse_link('U1- U2+\nO1- O2+')), 0)

    def test_label_swap(self):
        for code in (HOPF, TORUS_2_4):
            link = parse_link(code)
            swapped = sublink(link, [1, 0])
            self.assertEqual(v3_2(swapped), v3_2(link))
            self.assertEqual(v4_3(swapped), v4_3(link))

    def test_triple_permutation(self):
        for link in (from_braid([1, 1, 2, 2], 3), from_braid([1, -2] * 3, 3)):
            self.assertEqual(link.n_components, 3)
            value = v4_4(link)
            for order in ([1, 2, 0], [2, 1, 0], [0, 2, 1]):
                self.assertEqual(v4_4(sublink(link, order)), value)


class ReportTests(SimpleTestCase):
    def test_knot_report_has_knot_invariants_only(self):
        document = all_invariants(parse_link(KNOT_6_2)).to_json()
        self.assertEqual(sorted(document), ['v2', 'v3_1', 'v4_1', 'v4_2'])
        self.assertEqual(document['v2'], {'0': {'num': -25, 'den': 6}})
        self.assertEqual(document['v3_1'], {'0': {'num': 8, 'den': 1}})

    def test_two_unlink_report(self):
        report = all_invariants(parse_link('.\n.'))
        self.assertEqual(report.v1, {(0, 1): 0})
        self.assertEqual(report.v2, {(0,): -SIXTH, (1,): -SIXTH})
        self.assertEqual(report.total('v4_1'), 2 * FRAMING)
        self.assertEqual(report.v4_4, {})

    def test_three_component_keys(self):
        document = all_invariants(from_braid([1, 1, 2, 2], 3)).to_json()
        self.assertEqual(sorted(document['v1']), ['0-1', '0-2', '1-2'])
        self.assertEqual(list(document['v4_4']), ['0-1-2'])

    def test_same_link_different_diagrams(self):
        groups = [
            [from_braid([1, 1, 1], 2), from_braid([1, 1, 1, 2], 3), from_braid([1, 1, 1, 2, 2, -2], 3),
             parse_link(TREFOIL)],
            [from_braid([1, 1], 2), from_braid([1, 1, 1, -1], 2), from_braid([1, 1, 2], 3),
             parse_link(HOPF)],
        ]
        for group in groups:
            expected = all_invariants(group[0]).to_json()
            for link in group[1:]:
                with self.subTest(link=str(link)):
                    self.assertEqual(all_invariants(link).to_json(), expected)


class OptionIndependenceTests(SimpleTestCase):
    def _fixtures(self):
        return [parse_link(code) for code in (TREFOIL, KNOT_6_2, HOPF, TORUS_2_4)] + [from_braid([1, -2] * 3, 3)]

    def test_alpha_choice(self):
        for link in self._fixtures():
            expected = all_invariants(link).to_json()
            for rule in ALTERNATE_RULES:
                with self.subTest(link=str(link), rule=rule):
                    self.assertEqual(all_invariants(link, EvalOptions(alpha=rule)).to_json(), expected)

    def test_pruning_and_selection_order(self):
        for link in self._fixtures():
            expected = all_invariants(link).to_json()
            self.assertEqual(all_invariants(link, EvalOptions(prune=False)).to_json(), expected)
            self.assertEqual(all_invariants(link, EvalOptions(reverse=True)).to_json(), expected)

    @given(braid_links(max_strands=3, max_length=6))
    @settings(max_examples=25, deadline=None)
    def test_alpha_choice_on_random_closures(self, link):
        expected = all_invariants(link).to_json()
        for rule in ALTERNATE_RULES:
            self.assertEqual(all_invariants(link, EvalOptions(alpha=rule)).to_json(), expected)
