from django.test import SimpleTestCase
from hypothesis import given, settings

from knotlab.apps.linkcode.braids import from_braid
from knotlab.apps.linkcode.codes import parse_link, serialize
from knotlab.apps.linkcode.testing import braid_links
from knotlab.apps.matchcount.catalog import default_catalog
from knotlab.apps.matchcount.pairing import pair_sum
from knotlab.core.errors import LengthMismatch, UnknownCrossing, ValidationError

from .operators import R, SplitWord, WordCombo, component_count_after, smooth, split_components

TREFOIL = 'O1+ U2+ O3+ U1+ O2+ U3+'
HOPF = 'O1+ U2+\nU1+ O2+'
FIGURE_EIGHT = 'U1+ O2- U4- O1+ U3+ O4- U2- O3+'
KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'
KINKED_HOPF = 'O1+ U2+ O3+ U3+\nU1+ O2+'
CHAIN = 'U1+ O2+\nO1+ U2+ U3+ O4+\nO3+ U4+'


class SmoothTests(SimpleTestCase):
    def test_gamma_is_identity(self):
        link = parse_link(TREFOIL)
        self.assertEqual(smooth(link, [1], 'C'), link)
        self.assertEqual(smooth(link, [1, 2, 3], 'CCC'), link)

    def test_seifert_smoothing_of_trefoil_gives_hopf(self):
        self.assertEqual(serialize(smooth(parse_link(TREFOIL), [1], 'A')), 'O2+ U3+\nU2+ O3+')

    def test_other_smoothing_reverses_an_arc(self):
        self.assertEqual(serialize(smooth(parse_link(TREFOIL), [1], 'B')), 'O2- U3- O3- U2-')

    def test_kink_splits_off_a_circle(self):
        self.assertEqual(serialize(smooth(parse_link('O1+ U1+'), [1], 'A')), '.\n.')

    def test_joining_crossing_merges(self):
        self.assertEqual(serialize(smooth(parse_link(HOPF), [1], 'A')), 'U2+ O2+')

    def test_double_beta_on_interleaved_pair(self):
        self.assertEqual(serialize(smooth(parse_link(TREFOIL), [1, 2], 'BB')), 'U3- O3-\n.')

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            smooth(parse_link(TREFOIL), [1, 2], 'A')

    def test_unknown_crossing(self):
        with self.assertRaises(UnknownCrossing):
            smooth(parse_link(TREFOIL), [7], 'A')

    def test_bad_letter(self):
        with self.assertRaises(ValidationError):
            SplitWord('AX')

    def test_combo_words_share_length(self):
        with self.assertRaises(LengthMismatch):
            WordCombo.of([(1, 'CC'), (-1, 'A')])

    @given(braid_links(max_strands=4, max_length=8))
    @settings(max_examples=50, deadline=None)
    def test_smoothing_yields_valid_codes(self, link):
        crossings = link.crossings()
        self.assertEqual(smooth(link, crossings, 'C' * len(crossings)), link)
        for letter in 'AB':
            result = smooth(link, crossings[:1], letter)
            self.assertEqual(result.n_crossings, link.n_crossings - 1)


class ComponentCountTests(SimpleTestCase):
    # (code, selected crossings, word, components afterwards)
    TABLE = [
        (TREFOIL, [1], 'A', 2),
        (HOPF, [1], 'A', 1),
        (TREFOIL, [1, 2], 'AC', 2),
        (TREFOIL, [1, 2], 'CA', 2),
        (TREFOIL, [1, 2], 'BB', 2),
        (FIGURE_EIGHT, [1, 3], 'AC', 2),
        (FIGURE_EIGHT, [1, 3], 'CA', 2),
        (FIGURE_EIGHT, [1, 3], 'AA', 3),
        (HOPF, [1, 2], 'BB', 2),
        (KINKED_HOPF, [3, 1], 'CA', 1),
        (KINKED_HOPF, [3, 1], 'AA', 2),
        (KINKED_HOPF, [3, 1], 'CC', 2),
        (KINKED_HOPF, [3, 1], 'AC', 3),
        (CHAIN, [1, 3], 'AA', 1),
        (CHAIN, [1, 3], 'CA', 2),
        (CHAIN, [1, 3], 'AC', 2),
        (KINKED_HOPF, [3], 'A', 3),
    ]

    def test_split_table(self):
        for code, selected, word, expected in self.TABLE:
            with self.subTest(code=code, selected=selected, word=word):
                self.assertEqual(component_count_after(parse_link(code), selected, word), expected)

    def test_table_patterns(self):
        self.assertEqual(parse_link(CHAIN), from_braid([1, 1, 2, 2], 3))
        self.assertEqual(component_count_after(parse_link(TREFOIL), [1], 'B'), 1)
        self.assertEqual(component_count_after(parse_link(HOPF), [1], 'B'), 1)

    def test_split_parts_are_knots(self):
        for code, selected, word, expected in self.TABLE:
            parts = split_components(smooth(parse_link(code), selected, word))
            self.assertEqual(len(parts.terms), expected)
            self.assertTrue(all(knot.n_components == 1 for _, knot in parts.terms))


class RTests(SimpleTestCase):
    def _r(self, crossing):
        combo = WordCombo.of([(1, 'C'), (-1, 'A')])
        return pair_sum(R(parse_link(KNOT_6_2), [crossing], combo), default_catalog().combo([(1, 'v2.D1')]))

    def test_knot_6_2_single_crossing_values(self):
        self.assertEqual(self._r(5), 0)
        for crossing in (1, 2, 3, 4, 6):
            self.assertEqual(self._r(crossing), -1)

    def test_zero_coefficient_gives_empty_sum(self):
        result = R(parse_link(TREFOIL), [1], WordCombo.of([(0, 'A')]))
        self.assertEqual(result.terms, ())

    def test_split_components(self):
        parts = split_components(parse_link(HOPF))
        self.assertEqual([serialize(link) for _, link in parts.terms], ['.', '.'])
        knot = parse_link(TREFOIL)
        self.assertEqual(split_components(knot).terms[0][1], knot)
