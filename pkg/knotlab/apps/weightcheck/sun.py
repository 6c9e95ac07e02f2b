"""
Brute-force su(N) weights of plain chord diagrams.

Each chord carries a label a of the basis T^a of su(N), normalized by
Tr(T^a T^b) = delta^ab / 2. A circle contributes the trace of the product
of its labels in cyclic order; the weight is the sum over all labelings of
the product of circle traces, divided by N per circle.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from typing import Dict, List, Sequence, Tuple

import numpy as np

from knotlab.apps.matchcount.catalog import Configuration
from knotlab.apps.polyalg.weights import weight
from knotlab.core.errors import UnsupportedDiagram, ValidationError

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9

# circle words of the plain chord diagrams in the weight table
CHORD_DIAGRAMS: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    'chord1': ((1, 1),),
    'ca': ((1, 2), (1, 2)),
    'ec': ((1, 2, 3), (3, 2, 1)),
    'fc': ((1, 3), (1, 2), (2, 3)),
    'fd': ((1, 2, 3, 4), (4, 3, 2, 1)),
    'fg': ((1, 2, 3, 4), (1, 2), (3, 4)),
    'fh': ((1, 2), (1, 3, 4), (2, 4, 3)),
    'fj': ((1, 4), (1, 2), (2, 3), (3, 4)),
    'fk': ((1, 2), (1, 2), (3, 4), (3, 4)),
}


@dataclass(frozen=True)
class SunBasis:
    N: int
    matrices: Tuple[np.ndarray, ...]

    def __len__(self):
        return len(self.matrices)

    def gram(self) -> np.ndarray:
        """Matrix of Tr(T^a T^b)."""
        stacked = np.stack(self.matrices)
        return np.einsum('aij,bji->ab', stacked, stacked)


@lru_cache(maxsize=8)
def sun_basis(N: int) -> SunBasis:
    """Generalized Gell-Mann matrices divided by two."""
    if N < 2:
        raise ValidationError(f"su(N) needs N >= 2, got {N}")
    lambdas: List[np.ndarray] = []
    for i in range(N):
        for j in range(i + 1, N):
            symmetric = np.zeros((N, N), dtype=np.complex128)
            symmetric[i, j] = symmetric[j, i] = 1.0
            antisymmetric = np.zeros((N, N), dtype=np.complex128)
            antisymmetric[i, j] = -1.0j
            antisymmetric[j, i] = 1.0j
            lambdas.extend((symmetric, antisymmetric))
    for k in range(1, N):
        diagonal = np.zeros((N, N), dtype=np.complex128)
        diagonal[:k, :k] = np.eye(k)
        diagonal[k, k] = -k
        lambdas.append(diagonal * np.sqrt(2.0 / (k * (k + 1))))
    return SunBasis(N, tuple(m / 2.0 for m in lambdas))


def eval_chord_weight(config: Configuration, N: int) -> complex:
    """
    Weight of ``config`` divided by x to the number of chords.

    Raises:
        UnsupportedDiagram: some chord has multiplicity 2
    """
    doubled = [chord for chord, m in config.multiplicities if m != 1]
    if doubled:
        raise UnsupportedDiagram(
            f"{config.key}: chords {doubled} are doubled; only plain chord diagrams evaluate",
            details={'key': config.key},
        )
    basis = sun_basis(N)
    chords = [chord for chord, _ in config.multiplicities]
    identity = np.eye(N, dtype=np.complex128)
    total = 0j
    for labels in product(range(len(basis)), repeat=len(chords)):
        label_of = dict(zip(chords, labels))
        value = 1 + 0j
        for circle in config.circles:
            loop = reduce(np.matmul, (basis.matrices[label_of[c]] for c in circle), identity)
            value *= np.trace(loop)
        total += value
    return complex(total / N ** len(config.circles))


def chord_diagram(key: str) -> Configuration:
    return Configuration.from_words(key, CHORD_DIAGRAMS[key])


def check_weight_table(ns: Sequence[int] = (2, 3), tolerance: float = TOLERANCE) -> List[Dict]:
    """Compare the numeric weights with the symbolic table; returns the mismatches."""
    mismatches = []
    for key in CHORD_DIAGRAMS:
        config = chord_diagram(key)
        expected_series = weight(key)
        expected = expected_series.coefficient(config.n_chords)
        for n in ns:
            numeric = eval_chord_weight(config, n)
            target = expected.evaluate(n)
            if abs(numeric.real - target) > tolerance or abs(numeric.imag) > tolerance:
                mismatches.append({'key': key, 'N': n, 'numeric': numeric.real, 'expected': target})
    if mismatches:
        logger.warning(f"Weight table disagrees with su(N) traces: {mismatches}")
    return mismatches
