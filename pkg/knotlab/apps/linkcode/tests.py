from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from knotlab.core.errors import CodeSyntaxError, UnknownCrossing, ValidationError

from .braids import from_braid
from .codes import (
    JOINING, SELF, LinkCode, Pass, canonical_key, crossing_kinds, mirror, parse_link,
    reverse_orientation, rotate, self_subdiagram, serialize, sublink, switch_crossing, writhe_signs,
)
from .descending import ALTERNATE_RULES, alpha_unknot, defects, is_descending
from .testing import braid_links

TREFOIL = 'O1+ U2+ O3+ U1+ O2+ U3+'
HOPF = 'O1+ U2+\nU1+ O2+'


class ParseLinkTests(SimpleTestCase):
    def test_trefoil_has_three_positive_crossings(self):
        link = parse_link(TREFOIL)
        self.assertEqual(link.n_components, 1)
        self.assertEqual(link.crossings(), [1, 2, 3])
        self.assertEqual(writhe_signs(link), {1: 1, 2: 1, 3: 1})

    def test_empty_text_is_empty_link(self):
        self.assertEqual(parse_link(''), LinkCode(()))
        self.assertEqual(parse_link('# nothing here\n\n').n_components, 0)

    def test_comments_and_blank_lines(self):
        link = parse_link('# hopf link\nO1+ U2+   # first\n\nU1+ O2+\n')
        self.assertEqual(link.n_components, 2)

    def test_dot_is_crossingless_component(self):
        link = parse_link('.\n.')
        self.assertEqual(link.components, ((), ()))
        self.assertEqual(serialize(link), '.\n.')

    def test_sign_mismatch(self):
        with self.assertRaises(ValidationError):
            parse_link('O1+ U1-')

    def test_strand_mismatch(self):
        with self.assertRaises(ValidationError):
            parse_link('O1+ O1+')

    def test_id_used_once(self):
        with self.assertRaises(ValidationError):
            parse_link('O1+ U2+ O2+')

    def test_bad_token(self):
        with self.assertRaises(CodeSyntaxError):
            parse_link('O1+ X1+')
        with self.assertRaises(CodeSyntaxError):
            parse_link('O1 U1')

    def test_validation_errors_exit_with_input_code(self):
        try:
            parse_link('O1+ U1-')
        except ValidationError as exc:
            self.assertEqual(exc.exit_code, 2)
            self.assertIn('ValidationError', str(exc))

    @given(braid_links(max_strands=4, max_length=8))
    @settings(max_examples=50, deadline=None)
    def test_serialize_round_trip(self, link):
        self.assertEqual(parse_link(serialize(link)), link)


class SwitchCrossingTests(SimpleTestCase):
    def test_switch_toggles_strand_and_sign(self):
        link = switch_crossing(parse_link(TREFOIL), 1)
        self.assertEqual(serialize(link), 'U1- U2+ O3+ O1- O2+ U3+')
        self.assertEqual(writhe_signs(link), {1: -1, 2: 1, 3: 1})

    def test_switch_is_involution(self):
        link = parse_link(TREFOIL)
        self.assertEqual(switch_crossing(switch_crossing(link, 2), 2), link)

    def test_hopf_switch_both(self):
        link = switch_crossing(switch_crossing(parse_link(HOPF), 1), 2)
        self.assertEqual(serialize(link), 'U1- O2-\nO1- U2-')

    def test_unknown_crossing(self):
        with self.assertRaises(UnknownCrossing):
            switch_crossing(parse_link(TREFOIL), 9)

    def test_mirror_flips_every_sign(self):
        self.assertEqual(set(writhe_signs(mirror(parse_link(TREFOIL))).values()), {-1})


class SubdiagramTests(SimpleTestCase):
    def test_hopf_component_is_crossingless(self):
        self.assertEqual(self_subdiagram(parse_link(HOPF), 0).components, ((),))

    def test_knot_restricted_to_itself(self):
        link = parse_link(TREFOIL)
        self.assertEqual(self_subdiagram(link, 0), link)

    def test_keeps_only_self_crossings(self):
        link = parse_link('O1+ O3- U2+ U3-\nU1+ O2+')
        part = self_subdiagram(link, 0)
        self.assertEqual(part.crossings(), [3])
        self.assertEqual(set(crossing_kinds(part).values()), {SELF})

    def test_index_error(self):
        with self.assertRaises(IndexError):
            self_subdiagram(parse_link(HOPF), 2)

    def test_sublink_keeps_internal_crossings(self):
        link = from_braid([1, 1, 2, 2], 3)
        self.assertEqual(link.n_components, 3)
        pair = sublink(link, [0, 2])
        self.assertEqual(pair.n_crossings, 0)
        self.assertEqual(sublink(link, [0, 1]).n_crossings, 2)

    def test_crossing_kinds(self):
        kinds = crossing_kinds(parse_link('O1+ O3- U2+ U3-\nU1+ O2+'))
        self.assertEqual(kinds, {1: JOINING, 2: JOINING, 3: SELF})


class CanonicalKeyTests(SimpleTestCase):
    def test_rotation_and_relabel_invariant(self):
        link = parse_link('U1+ O2- U4- O1+ U3+ O4- U2- O3+')
        moved = parse_link('O1+ U2+ O3- U4- O2+ U1+ O4- U3-')
        self.assertEqual(serialize(rotate(link, [3])), 'O1+ U3+ O4- U2- O3+ U1+ O2- U4-')
        self.assertEqual(canonical_key(link), canonical_key(moved))

    def test_component_order_invariant(self):
        link = parse_link('O1+ U2+ O5+ U5+\nU1+ O2+')
        swapped = parse_link('U1+ O2+\nO1+ U2+ O5+ U5+')
        self.assertEqual(canonical_key(link), canonical_key(swapped))

    def test_distinguishes_mirror(self):
        link = parse_link(TREFOIL)
        self.assertNotEqual(canonical_key(link), canonical_key(mirror(link)))


class BraidClosureTests(SimpleTestCase):
    def test_hopf_from_two_letters(self):
        link = from_braid([1, 1], 2)
        self.assertEqual(serialize(link), 'U1+ O2+\nO1+ U2+')

    def test_trefoil_from_three_letters(self):
        link = from_braid([1, 1, 1], 2)
        self.assertEqual(link.n_components, 1)
        self.assertEqual(writhe_signs(link), {1: 1, 2: 1, 3: 1})

    def test_negative_letter_puts_left_strand_over(self):
        link = from_braid([-1], 2)
        self.assertEqual(serialize(link), 'O1- U1-')

    def test_identity_strands_are_crossingless(self):
        link = from_braid([1], 3)
        self.assertEqual(link.n_components, 2)
        self.assertEqual(link.components[1], ())

    def test_bad_generator(self):
        with self.assertRaises(ValidationError):
            from_braid([3], 3)

    @given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8))
    @settings(max_examples=50, deadline=None)
    def test_reverse_orientation_keeps_signs(self, word):
        link = from_braid(word, 3)
        self.assertEqual(writhe_signs(reverse_orientation(link)), writhe_signs(link))

    def test_pass_token(self):
        self.assertEqual(Pass(12, False, -1).token, 'U12-')


class AlphaUnknotTests(SimpleTestCase):
    def test_hopf_loses_one_crossing_sign(self):
        self.assertEqual(serialize(alpha_unknot(parse_link(HOPF))), 'O1+ O2-\nU1+ U2-')

    def test_under_rule_and_reversed_order(self):
        self.assertEqual(serialize(alpha_unknot(parse_link(HOPF), rule='under')), 'U1- U2+\nO1- O2+')
        self.assertEqual(serialize(alpha_unknot(parse_link(HOPF), reverse=True)), 'U1- U2+\nO1- O2+')

    def test_unknown_rule(self):
        with self.assertRaises(ValidationError):
            alpha_unknot(parse_link(HOPF), rule='sideways')

    def test_descending_diagram_is_fixed(self):
        link = parse_link('O1+ O2- U1+ U2-')
        self.assertTrue(is_descending(link))
        self.assertEqual(alpha_unknot(link), link)
        self.assertFalse(is_descending(parse_link(TREFOIL)))

    def test_reference_rule_is_respected(self):
        link = parse_link('U1- U2+\nO1- O2+')
        self.assertFalse(is_descending(link))
        self.assertTrue(is_descending(link, ALTERNATE_RULES[0]))
        self.assertEqual(defects(link), [1, 2])
        self.assertEqual(defects(link, ALTERNATE_RULES[0]), [])

    def test_knot_6_2_defects(self):
        link = parse_link('O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-')
        self.assertEqual(defects(link), [2, 4])
        self.assertEqual(writhe_signs(alpha_unknot(link)), {1: -1, 2: 1, 3: -1, 4: -1, 5: -1, 6: 1})

    @given(braid_links(max_strands=4, max_length=8))
    @settings(max_examples=50, deadline=None)
    def test_idempotent_for_every_rule(self, link):
        for rule in ALTERNATE_RULES + (alpha_unknot,):
            once = rule(link)
            self.assertEqual(rule(once), once)
        self.assertTrue(is_descending(alpha_unknot(link)))
        self.assertEqual(defects(alpha_unknot(link)), [])
