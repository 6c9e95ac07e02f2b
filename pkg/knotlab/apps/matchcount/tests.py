import os
import tempfile
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from knotlab.apps.gaussdiag.diagrams import GaussDiagram, GaussSum, gauss
from knotlab.apps.linkcode.codes import parse_link, rotate
from knotlab.apps.linkcode.testing import braid_links
from knotlab.core.errors import CodeSyntaxError, MissingKey, ValidationError

from .catalog import REQUIRED_KEYS, Configuration, catalog_load, default_catalog, parse_catalog
from .pairing import embeddings, pair, pair_sum

KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'
INTERLEAVED = Configuration.from_words('x', [(1, 2, 1, 2)])
INTERLEAVED_DOUBLE = Configuration.from_words('x2', [(1, 2, 1, 2)], doubled=[1])


def three_chords(e1, e2, e3):
    # chord 1 crosses chords 2 and 3, which are nested
    return GaussDiagram(((1, 2, 3, 1, 3, 2),), ((1, e1), (2, e2), (3, e3)))


class PairTests(SimpleTestCase):
    def test_interleaved_pair_counts_crossing_chords(self):
        for e1, e2, e3 in [(1, 1, 1), (-1, 1, 1), (-1, -1, -1), (1, -1, -1)]:
            with self.subTest(signs=(e1, e2, e3)):
                self.assertEqual(pair(three_chords(e1, e2, e3), INTERLEAVED), e1 * e2 + e1 * e3)

    def test_doubled_chord_sums_both_assignments(self):
        for e1, e2, e3 in [(1, 1, 1), (-1, -1, -1), (1, -1, -1)]:
            with self.subTest(signs=(e1, e2, e3)):
                expected = e1 ** 2 * e2 + e1 * e2 ** 2 + e1 ** 2 * e3 + e1 * e3 ** 2
                self.assertEqual(pair(three_chords(e1, e2, e3), INTERLEAVED_DOUBLE), expected)
        self.assertEqual(pair(three_chords(-1, -1, -1), INTERLEAVED_DOUBLE), -4)

    def test_knot_6_2_knot_and_its_descending_version(self):
        catalog = default_catalog()
        link = parse_link(KNOT_6_2)
        self.assertEqual(pair(gauss(link), catalog['v2.D1']), -5)
        descending = parse_link('O1- O2+ O3- O4- O6+ U1- U2+ U3- O5- U6+ U4- U5-')
        self.assertEqual(pair(gauss(descending), catalog['v2.D1']), -1)

    def test_joining_chord_pattern_sums_joining_signs(self):
        hopf = gauss(parse_link('O1+ U2+\nU1+ O2+'))
        self.assertEqual(pair(hopf, default_catalog()['pat.join']), 2)
        descending = gauss(parse_link('O1+ O2-\nU1+ U2-'))
        self.assertEqual(pair(descending, default_catalog()['pat.join']), 0)

    def test_circle_count_mismatch_is_zero(self):
        hopf = gauss(parse_link('O1+ U2+\nU1+ O2+'))
        self.assertEqual(pair(hopf, INTERLEAVED), 0)

    def test_too_few_chords_is_zero(self):
        one = GaussDiagram(((1, 1),), ((1, 1),))
        self.assertEqual(pair(one, INTERLEAVED), 0)

    def test_non_interleaved_pattern(self):
        nested = GaussDiagram(((1, 1, 2, 2),), ((1, -1), (2, 1)))
        self.assertEqual(pair(nested, default_catalog()['pat.pair.P']), -1)
        self.assertEqual(pair(nested, INTERLEAVED), 0)

    @given(braid_links(max_strands=3, max_length=6, max_components=1),
           st.integers(min_value=0, max_value=11))
    @settings(max_examples=40, deadline=None)
    def test_rotation_invariance(self, link, shift):
        catalog = default_catalog()
        rotated = rotate(link, [shift])
        for key in ('v2.D1', 'v3.1.D1', 'v3.1.D2', 'v3.1.D3'):
            self.assertEqual(pair(gauss(link), catalog[key]), pair(gauss(rotated), catalog[key]))

    @given(braid_links(max_strands=3, max_length=6, max_components=1))
    @settings(max_examples=30, deadline=None)
    def test_all_positive_pairing_counts_embeddings(self, link):
        diagram = gauss(link)
        positive = GaussDiagram(diagram.circles, tuple((chord, 1) for chord, _ in diagram.signs))
        for key in ('v2.D1', 'v3.1.D1', 'v4.1.D6'):
            config = default_catalog()[key]
            self.assertEqual(pair(positive, config), len(embeddings(diagram.circles, config)))


class EmbeddingPropertyTests(SimpleTestCase):
    KEYS = ('v2.D1', 'v3.1.D1', 'v3.1.D2', 'v3.1.D3', 'v3.2.D1', 'pat.join', 'pat.pair.P')

    @staticmethod
    def relabelled(config, mapping, extra_doubled=()):
        doubled = [chord for chord, m in config.multiplicity.items() if m == 2] + list(extra_doubled)
        return Configuration.from_words(
            config.key,
            [[mapping[chord] for chord in circle] for circle in config.circles],
            doubled=[mapping[chord] for chord in doubled],
        )

    @staticmethod
    def supports(kappas):
        return {frozenset(chord for chord, _ in kappa) for kappa in kappas}

    @given(braid_links(max_strands=3, max_length=6), st.data())
    @settings(max_examples=40, deadline=None)
    def test_doubling_a_chord_keeps_the_embeddings(self, link, data):
        structure = gauss(link).circles
        for key in self.KEYS:
            config = default_catalog()[key]
            chord = data.draw(st.sampled_from(sorted(config.multiplicity)))
            identity = {c: c for c in config.multiplicity}
            doubled = self.relabelled(config, identity, extra_doubled=[chord])
            self.assertEqual(
                self.supports(embeddings(structure, doubled)),
                self.supports(embeddings(structure, config)),
                (key, chord),
            )

    @given(braid_links(max_strands=3, max_length=6), st.data())
    @settings(max_examples=40, deadline=None)
    def test_chord_labels_do_not_matter(self, link, data):
        diagram = gauss(link)
        for key in self.KEYS:
            config = default_catalog()[key]
            chords = sorted(config.multiplicity)
            targets = data.draw(st.permutations([chord + 10 for chord in chords]))
            mapping = dict(zip(chords, targets))
            self.assertEqual(pair(diagram, self.relabelled(config, mapping)), pair(diagram, config), key)

    def test_knot_6_2_single_pairings(self):
        diagram = gauss(parse_link(KNOT_6_2))
        catalog = default_catalog()
        values = {key: pair(diagram, catalog[key]) for key in ('v3.1.D1', 'v3.1.D2', 'v3.1.D3')}
        self.assertEqual(values, {'v3.1.D1': 5, 'v3.1.D2': 2, 'v3.1.D3': -6})


class PairSumTests(SimpleTestCase):
    def test_knot_6_2_degree_three_combination(self):
        catalog = default_catalog()
        combo = catalog.combo([(2, 'v3.1.D1'), (1, 'v3.1.D2'), (Fraction(1, 2), 'v3.1.D3')])
        self.assertEqual(pair_sum(GaussSum.of([(1, gauss(parse_link(KNOT_6_2)))]), combo), 9)

    def test_bar_pairing_for_knot_6_2(self):
        from knotlab.apps.gaussdiag.diagrams import bar_gauss

        catalog = default_catalog()
        combo = catalog.combo([(1, 'v2.D1')])
        self.assertEqual(pair_sum(bar_gauss(parse_link(KNOT_6_2)), combo), -4)

    def test_empty_sum_is_zero(self):
        self.assertEqual(pair_sum(GaussSum(), default_catalog().combo([(1, 'v2.D1')])), 0)

    def test_bilinear(self):
        catalog = default_catalog()
        diagram = gauss(parse_link(KNOT_6_2))
        single = pair_sum(GaussSum.of([(1, diagram)]), catalog.combo([(1, 'v2.D1')]))
        scaled = pair_sum(GaussSum.of([(3, diagram)]), catalog.combo([(Fraction(1, 2), 'v2.D1')]))
        self.assertEqual(scaled, Fraction(3, 2) * single)


class CatalogTests(SimpleTestCase):
    def test_default_catalog_has_required_keys(self):
        catalog = default_catalog()
        for key in REQUIRED_KEYS:
            self.assertIn(key, catalog)
        self.assertEqual(catalog['v2.D1'].circles, ((1, 2, 1, 2),))
        self.assertEqual(catalog['v1.D1'].circles, ((1,), (1,)))
        self.assertEqual(catalog['v3.1.D3'].multiplicity, {1: 2, 2: 1})

    def test_unknown_key(self):
        with self.assertRaises(MissingKey):
            default_catalog()['v9.D1']

    def _text_without(self, key):
        with open(default_catalog().source, encoding='utf-8') as handle:
            blocks = handle.read().split('\n\n')
        return '\n\n'.join(b for b in blocks if f'key: {key}\n' not in b + '\n')

    def test_missing_required_key(self):
        with self.assertRaises(MissingKey) as ctx:
            parse_catalog(self._text_without('v4.4.B2'))
        self.assertEqual(ctx.exception.details['missing'], ['v4.4.B2'])
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_syntax_error(self):
        with self.assertRaises(CodeSyntaxError):
            parse_catalog('key: broken\ncircles: one\nchords: 1:1\ncircle1: 1 1\n')
        with self.assertRaises(CodeSyntaxError):
            parse_catalog('key: broken\nchords 1:1\n')

    def test_bad_multiplicity(self):
        with self.assertRaises(ValidationError):
            parse_catalog('key: bad\ncircles: 1\nchords: 1:3\ncircle1: 1 1\n')

    def test_load_from_file(self):
        with open(default_catalog().source, encoding='utf-8') as handle:
            text = handle.read()
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'configurations.txt')
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(text)
            catalog = catalog_load(path)
        self.assertEqual(len(catalog), len(default_catalog()))
        self.assertEqual(catalog.source, path)
