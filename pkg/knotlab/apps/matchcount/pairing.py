"""
Pairing of Gauss diagrams with chord configurations.

An embedding sends the circles of a configuration bijectively to the circles
of a Gauss diagram and its chords injectively to Gauss chords, so that on
every circle the chosen endpoints, read in order, spell the configuration
word up to rotation. Embeddings inducing the same multiplicity map on Gauss
chords count once; each contributes the product of eps^m over its chords.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from knotlab.apps.gaussdiag.diagrams import GaussDiagram, GaussSum

from .catalog import ConfigCombo, Configuration

logger = logging.getLogger(__name__)

Kappa = Tuple[Tuple[int, int], ...]


def _is_rotation(word: Sequence[int], target: Sequence[int]) -> bool:
    if len(word) != len(target):
        return False
    if not word:
        return True
    doubled = tuple(word) + tuple(word)
    target = tuple(target)
    n = len(word)
    return any(doubled[k:k + n] == target for k in range(n))


def _restricted(word: Sequence[int], keep) -> Tuple[int, ...]:
    return tuple(chord for chord in word if chord in keep)


@lru_cache(maxsize=65536)
def embeddings(structure: Tuple[Tuple[int, ...], ...], config: Configuration) -> FrozenSet[Kappa]:
    """
    Distinct multiplicity maps of the embeddings of ``config`` into the chord
    structure ``structure`` (circle words of a Gauss diagram, signs dropped).

    Shared by every sign labelling of the same structure.
    """
    if len(structure) != len(config.circles) or config.n_chords > len(
        {chord for circle in structure for chord in circle}
    ):
        return frozenset()

    g_circle_of: Dict[int, List[int]] = {}
    for c, circle in enumerate(structure):
        for chord in circle:
            g_circle_of.setdefault(chord, []).append(c)
    c_circle_of: Dict[int, List[int]] = {}
    for c, circle in enumerate(config.circles):
        for chord in circle:
            c_circle_of.setdefault(chord, []).append(c)

    c_chords = sorted(c_circle_of)
    multiplicity = config.multiplicity
    found = set()

    for bijection in permutations(range(len(structure))):
        # config circle i lands on Gauss circle bijection[i]
        if any(len(config.circles[i]) > len(structure[bijection[i]]) for i in range(len(structure))):
            continue
        wanted = {
            chord: sorted(bijection[c] for c in circles) for chord, circles in c_circle_of.items()
        }
        candidates = {
            chord: [g for g, circles in g_circle_of.items() if sorted(circles) == wanted[chord]]
            for chord in c_chords
        }
        if any(not options for options in candidates.values()):
            continue

        assignment: Dict[int, int] = {}

        def consistent() -> bool:
            inverse = {g: c for c, g in assignment.items()}
            used_config = set(assignment)
            for i, c_word in enumerate(config.circles):
                g_word = structure[bijection[i]]
                image = tuple(inverse[g] for g in g_word if g in inverse)
                if not _is_rotation(image, _restricted(c_word, used_config)):
                    return False
            return True

        def extend(depth: int) -> None:
            if depth == len(c_chords):
                found.add(tuple(sorted((g, multiplicity[c]) for c, g in assignment.items())))
                return
            chord = c_chords[depth]
            taken = set(assignment.values())
            for g in candidates[chord]:
                if g in taken:
                    continue
                assignment[chord] = g
                if consistent():
                    extend(depth + 1)
                del assignment[chord]

        extend(0)

    return frozenset(found)


def pair(diagram: GaussDiagram, config: Configuration) -> int:
    """Signed count of embeddings of ``config`` into ``diagram``, deduplicated by kappa."""
    signs = diagram.sign_map
    total = 0
    for kappa in embeddings(diagram.circles, config):
        term = 1
        for chord, m in kappa:
            term *= signs[chord] ** m
        total += term
    return total


def pair_sum(diagrams: GaussSum, combo: ConfigCombo) -> Fraction:
    """Bilinear extension of ``pair``."""
    total = Fraction(0)
    for b, diagram in diagrams.terms:
        if b == 0:
            continue
        for c, config in combo.terms:
            if c == 0:
                continue
            value = pair(diagram, config)
            if value:
                total += b * c * value
    return total
