from fractions import Fraction

from django.test import SimpleTestCase

from knotlab.apps.linkcode.codes import parse_link
from knotlab.core.errors import UnknownCrossing

from .diagrams import GaussSum, bar_gauss, bar_partial, debug_string, gauss, partial_gauss

TREFOIL = 'O1+ U2+ O3+ U1+ O2+ U3+'
HOPF = 'O1+ U2+\nU1+ O2+'
KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'


class GaussTests(SimpleTestCase):
    def test_trefoil(self):
        diagram = gauss(parse_link(TREFOIL))
        self.assertEqual(diagram.circles, ((1, 2, 3, 1, 2, 3),))
        self.assertEqual(diagram.sign_map, {1: 1, 2: 1, 3: 1})
        self.assertEqual(diagram.n_chords, 3)

    def test_crossingless_unknot(self):
        diagram = gauss(parse_link('.'))
        self.assertEqual(diagram.circles, ((),))
        self.assertEqual(diagram.n_chords, 0)

    def test_endpoints(self):
        diagram = gauss(parse_link(HOPF))
        self.assertEqual(diagram.endpoints(), {1: ((0, 0), (1, 0)), 2: ((0, 1), (1, 1))})

    def test_debug_string(self):
        self.assertEqual(debug_string(gauss(parse_link(HOPF))), '(1+ 2+) (1+ 2+)')
        self.assertEqual(debug_string(gauss(parse_link('O1- U1-\n.'))), '(1- 1-) ()')


class PartialGaussTests(SimpleTestCase):
    def test_subset(self):
        diagram = partial_gauss(parse_link(KNOT_6_2), [2, 4])
        self.assertEqual(diagram.circles, ((2, 4, 2, 4),))
        self.assertEqual(diagram.sign_map, {2: -1, 4: 1})

    def test_all_and_none(self):
        link = parse_link(TREFOIL)
        self.assertEqual(partial_gauss(link, [1, 2, 3]), gauss(link))
        self.assertEqual(partial_gauss(parse_link(HOPF), []).circles, ((), ()))

    def test_unknown_crossing(self):
        with self.assertRaises(UnknownCrossing):
            partial_gauss(parse_link(HOPF), [3])


class BarTests(SimpleTestCase):
    def test_unknot_is_two_term_sum(self):
        bar = bar_gauss(parse_link('O1+ U1+'))
        self.assertEqual([c for c, _ in bar.terms], [Fraction(1), Fraction(-1)])
        self.assertEqual(bar.terms[0][1], bar.terms[1][1])

    def test_descending_terms_agree(self):
        bar = bar_partial(parse_link('O1+ O2-\nU1+ U2-'), [1, 2])
        self.assertEqual(bar.terms[0][1], bar.terms[1][1])

    def test_alpha_only_flips_signs(self):
        bar = bar_gauss(parse_link(KNOT_6_2))
        (_, mine), (_, descending) = bar.terms
        self.assertEqual(mine.circles, descending.circles)
        self.assertEqual(mine.sign_map[1], descending.sign_map[1])
        self.assertEqual(descending.sign_map[2], 1)

    def test_sum_arithmetic(self):
        diagram = gauss(parse_link(HOPF))
        total = GaussSum.of([(1, diagram), (0, diagram)]) + GaussSum.of([(2, diagram)]).scaled(Fraction(1, 2))
        self.assertEqual(total.terms, ((Fraction(1), diagram), (Fraction(1), diagram)))
