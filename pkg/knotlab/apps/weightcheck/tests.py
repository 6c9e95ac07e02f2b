import numpy as np
from django.test import SimpleTestCase

from knotlab.apps.matchcount.catalog import Configuration
from knotlab.core.errors import UnsupportedDiagram, ValidationError

from .sun import CHORD_DIAGRAMS, check_weight_table, chord_diagram, eval_chord_weight, sun_basis


class SunBasisTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual(len(sun_basis(2)), 3)
        self.assertEqual(len(sun_basis(3)), 8)
        self.assertEqual(len(sun_basis(4)), 15)

    def test_su2_is_half_pauli(self):
        basis = sun_basis(2)
        pauli_z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
        self.assertTrue(np.allclose(basis.matrices[2], pauli_z / 2))

    def test_trace_orthonormal(self):
        for n in (2, 3, 4):
            basis = sun_basis(n)
            self.assertTrue(np.allclose(basis.gram(), np.eye(len(basis)) / 2, atol=1e-12))
            for matrix in basis.matrices:
                self.assertAlmostEqual(abs(np.trace(matrix)), 0.0, places=12)
                self.assertTrue(np.allclose(matrix, matrix.conj().T))

    def test_rejects_small_n(self):
        with self.assertRaises(ValidationError):
            sun_basis(1)


class ChordWeightTests(SimpleTestCase):
    def test_single_chord(self):
        self.assertAlmostEqual(eval_chord_weight(chord_diagram('chord1'), 2).real, 3 / 4)
        self.assertAlmostEqual(eval_chord_weight(chord_diagram('chord1'), 3).real, 8 / 6)

    def test_two_chords_between_two_circles(self):
        self.assertAlmostEqual(eval_chord_weight(chord_diagram('ca'), 2).real, 3 / 16)

    def test_chord_cycle_on_four_circles(self):
        self.assertAlmostEqual(eval_chord_weight(chord_diagram('fj'), 3).real, 8 / 1296)

    def test_imaginary_parts_vanish(self):
        for key in CHORD_DIAGRAMS:
            self.assertAlmostEqual(eval_chord_weight(chord_diagram(key), 2).imag, 0.0, places=9)

    def test_doubled_chord_unsupported(self):
        config = Configuration.from_words('doubled', [(1, 2, 1, 2)], doubled=[1])
        with self.assertRaises(UnsupportedDiagram) as ctx:
            eval_chord_weight(config, 2)
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_table_agrees(self):
        self.assertEqual(check_weight_table(), [])
