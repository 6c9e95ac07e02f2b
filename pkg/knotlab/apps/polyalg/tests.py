from fractions import Fraction

from django.test import SimpleTestCase

from knotlab.apps.invariants.reports import InvariantReport, all_invariants
from knotlab.apps.linkcode.braids import from_braid
from knotlab.apps.linkcode.codes import parse_link
from knotlab.core.errors import MissingInvariant, RangeOverflow

from .assembly import (
    homfly_series, homfly_series_from_kontsevich, kontsevich_series, u_coefficients, w_coefficients,
)
from .series import N, NPoly, XSeries, exp_series, reciprocal, x
from .weights import LINK_KEYS, WEIGHTS, weight, weight_table

KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'
HOPF = 'O1+ U2+\nU1+ O2+'
TORUS_2_4 = 'U1+ O2+ U3+ O4+\nO1+ U2+ O3+ U4+'


def series(expr):
    return XSeries.from_expr(expr)


class NPolyTests(SimpleTestCase):
    def test_coefficients(self):
        poly = NPoly((N**2 - 1) / (2 * N))
        self.assertEqual(poly.coefficients(), {1: Fraction(1, 2), -1: Fraction(-1, 2)})
        self.assertEqual(NPoly.from_coefficients(poly.coefficients()), poly)

    def test_arithmetic_and_evaluate(self):
        a = NPoly(N + 1)
        b = NPoly(N - 1)
        self.assertEqual(a * b, NPoly(N**2 - 1))
        self.assertEqual((a - b).coefficients(), {0: 2})
        self.assertAlmostEqual(NPoly(N**2 / 4).evaluate(3), 2.25)

    def test_zero_has_no_coefficients(self):
        self.assertEqual(NPoly(0).coefficients(), {})
        self.assertTrue((NPoly(N) - NPoly(N)).is_zero())


class XSeriesTests(SimpleTestCase):
    def test_difference_of_squares(self):
        self.assertEqual(series(1 + x) * series(1 - x), series(1 - x**2))

    def test_inverse_powers_cancel(self):
        self.assertEqual(series(1 / x) * series(x), XSeries.one())

    def test_truncation_above_x4(self):
        self.assertEqual(series(x**3) * series(x**3), XSeries())
        self.assertEqual(series(x**2 + x**5), series(x**2))

    def test_window_below(self):
        with self.assertRaises(RangeOverflow):
            series(x**-3) * series(x**-3)
        with self.assertRaises(RangeOverflow):
            series(x**-5)

    def test_exp_and_reciprocal(self):
        e = exp_series(series(x))
        expected = series(1 + x + x**2 / 2 + x**3 / 6 + x**4 / 24)
        self.assertEqual(e, expected)
        self.assertEqual(reciprocal(series(1 + x)), series(1 - x + x**2 - x**3 + x**4))
        self.assertEqual(reciprocal(e), exp_series(series(-x)))
        with self.assertRaises(RangeOverflow):
            exp_series(series(1 + x))
        with self.assertRaises(RangeOverflow):
            reciprocal(series(2 + x))

    def test_json(self):
        value = series(N + (N**2 - 1) * x**2 / 4)
        document = value.to_json()
        self.assertEqual(document[0], {'x_exp': 0, 'n_poly': [{'n_exp': 1, 'num': 1, 'den': 1}]})
        self.assertEqual(document[1]['n_poly'], [
            {'n_exp': 0, 'num': -1, 'den': 4}, {'n_exp': 2, 'num': 1, 'den': 4},
        ])
        self.assertEqual(XSeries.from_json(document), value)


class WeightTableTests(SimpleTestCase):
    def test_has_every_key(self):
        table = weight_table()
        for key in ('chord1', 'c2', 'd3', 'f4a', 'f4b') + LINK_KEYS + ('empty',):
            self.assertIn(key, table)
        self.assertEqual(len(table), 18)
        self.assertEqual(set(table), set(WEIGHTS) | {'empty'})

    def test_table_is_read_only(self):
        with self.assertRaises(TypeError):
            weight_table()['c2'] = XSeries.one()
        self.assertEqual(weight('c2'), series(-x**2 * (N**2 - 1) / 4))

    def test_spot_values(self):
        self.assertEqual(weight('c2'), series(-x**2 * (N**2 - 1) / 4))
        self.assertEqual(weight('d3'), series(x**3 * N * (N**2 - 1) / 8))
        self.assertEqual(weight('ca').coefficient(2).coefficients(), {0: Fraction(1, 4), -2: Fraction(-1, 4)})
        self.assertEqual(weight('fd').coefficient(4).coefficients(), {
            2: Fraction(1, 16), 0: Fraction(-4, 16), -2: Fraction(6, 16), -4: Fraction(-3, 16),
        })
        self.assertAlmostEqual(weight('fj').coefficient(4).evaluate(3), 8 / 1296)


class AssemblyTests(SimpleTestCase):
    def test_knot_6_2_series(self):
        link = parse_link(KNOT_6_2)
        expected = series(1 + (N**2 - 1) * x**2 + N * (N**2 - 1) * x**3
                          + (7 * N**4 + 6 * N**2 - 13) / 12 * x**4)
        self.assertEqual(homfly_series(link, all_invariants(link)), expected)

    def test_unknot_series_is_one(self):
        for code in ('.', 'O1+ U1+'):
            link = parse_link(code)
            self.assertEqual(homfly_series(link, all_invariants(link)), XSeries.one())

    def test_two_unlink(self):
        link = parse_link('.\n.')
        expected = series(N + N * (N**2 - 1) / 24 * x**2 + N * (N**2 - 1) * (3 * N**2 - 7) / 5760 * x**4)
        self.assertEqual(homfly_series(link, all_invariants(link)), expected)

    def test_u_and_w_for_hopf(self):
        report = all_invariants(parse_link(HOPF))
        u = u_coefficients(report)
        self.assertEqual(u['chord1'], -2)
        self.assertEqual(u['c2'], Fraction(1, 6) - Fraction(2, 6))
        w = w_coefficients(report)
        self.assertEqual(w['ca'], 2)
        self.assertEqual(w['ec'], Fraction(8, 6))
        self.assertEqual(w['fc'], 0)

    def test_kontsevich_relates_to_homfly(self):
        unknot = parse_link('.')
        normalizer = reciprocal(kontsevich_series(unknot, all_invariants(unknot)))
        for code in (HOPF, TORUS_2_4, KNOT_6_2, '.\n.'):
            link = parse_link(code)
            report = all_invariants(link)
            framing = exp_series(weight('chord1').scale(-report.total('v1')))
            prefactor = XSeries.monomial(0, NPoly(N ** (link.n_components - 1)))
            self.assertEqual(
                prefactor * framing * kontsevich_series(link, report) * normalizer,
                homfly_series(link, report),
            )
            self.assertEqual(homfly_series_from_kontsevich(link, report), homfly_series(link, report))

    def test_kontsevich_route_on_a_three_component_chain(self):
        link = from_braid([1, 1, 2, 2], 3)
        report = all_invariants(link)
        self.assertEqual(homfly_series_from_kontsevich(link, report), homfly_series(link, report))

    def test_unknot_kontsevich(self):
        unknot = parse_link('.')
        expected = exp_series(
            weight('c2').scale(Fraction(-1, 6))
            + weight('f4a').scale(Fraction(1, 360))
            + weight('f4b').scale(Fraction(-1, 360))
        )
        self.assertEqual(kontsevich_series(unknot, all_invariants(unknot)), expected)

    def test_missing_invariant(self):
        with self.assertRaises(MissingInvariant):
            homfly_series(parse_link(HOPF), all_invariants(parse_link('.')))
        with self.assertRaises(MissingInvariant):
            kontsevich_series(parse_link('.'), InvariantReport(n_components=1))
