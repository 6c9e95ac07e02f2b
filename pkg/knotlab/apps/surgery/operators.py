"""
Diagram surgery: crossing smoothing by split words, component splitting and
the composite R used by the correction terms.

Split-word letters:

    A  reconnect along the original orientations (Seifert smoothing)
    B  the other reconnection; one of the new arcs runs backwards
    C  leave the crossing alone
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from knotlab.apps.gaussdiag.diagrams import GaussSum, gauss
from knotlab.apps.linkcode.codes import LinkCode, Pass, require_crossings, self_subdiagram
from knotlab.apps.linkcode.descending import DESCENDING
from knotlab.core.errors import LengthMismatch, ValidationError

logger = logging.getLogger(__name__)

LETTERS = frozenset('ABC')


# ============================================================================
# Split words
# ============================================================================

@dataclass(frozen=True)
class SplitWord:
    letters: str

    def __post_init__(self):
        bad = set(self.letters) - LETTERS
        if bad:
            raise ValidationError(f"split letters must be A, B or C, got {sorted(bad)}")

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class WordCombo:
    terms: Tuple[Tuple[Fraction, SplitWord], ...]

    def __post_init__(self):
        if len({len(word) for _, word in self.terms}) > 1:
            raise LengthMismatch("all words of a combination must have the same length")

    @classmethod
    def of(cls, terms: Iterable[Tuple[object, str]]) -> 'WordCombo':
        return cls(tuple((Fraction(c), SplitWord(w)) for c, w in terms))


@dataclass(frozen=True)
class LinkCodeSum:
    terms: Tuple[Tuple[Fraction, LinkCode], ...]


# ============================================================================
# Smoothing
# ============================================================================

def _reconnect(link: LinkCode, cuts: Dict[int, str]) -> LinkCode:
    """
    Smooth every crossing in ``cuts`` at once.

    Arc j of component k runs from just after the (j-1)-th cut pass to just
    before the j-th one; arc 0 wraps around the basepoint. Arc ends are
    named ('in', k, j) at the head and ('out', k, j) at the tail.
    """
    cut_positions: Dict[int, List[int]] = {}
    for k, component in enumerate(link.components):
        cut_positions[k] = [j for j, p in enumerate(component) if p.crossing_id in cuts]

    arcs: Dict[Tuple[int, int], List[Pass]] = {}
    head_of: Dict[Tuple[int, int], Tuple[int, int]] = {}   # pass position -> arc ending there
    tail_of: Dict[Tuple[int, int], Tuple[int, int]] = {}   # pass position -> arc starting there
    for k, positions in cut_positions.items():
        component = link.components[k]
        n = len(component)
        m = len(positions)
        for j in range(m):
            start = positions[j - 1] + 1
            stop = positions[j]
            if j == 0:
                body = [component[i % n] for i in range(start, stop + n)] if m else []
            else:
                body = list(component[start:stop])
            arcs[(k, j)] = body
            head_of[(k, positions[j])] = (k, j)
            tail_of[(k, positions[j - 1])] = (k, j)

    where = link.positions()
    # partner[end] is the arc end glued to ``end`` by the smoothing
    partner: Dict[Tuple[str, Tuple[int, int]], Tuple[str, Tuple[int, int]]] = {}
    for crossing_id, letter in cuts.items():
        p, q = where[crossing_id]
        in_p, out_p = ('in', head_of[p]), ('out', tail_of[p])
        in_q, out_q = ('in', head_of[q]), ('out', tail_of[q])
        if letter == 'A':
            pairs = [(in_p, out_q), (in_q, out_p)]
        else:
            pairs = [(in_p, in_q), (out_p, out_q)]
        for a, b in pairs:
            partner[a] = b
            partner[b] = a

    visited = set()
    reversed_passes: Dict[int, int] = {}
    new_components: List[List[Tuple[Pass, bool]]] = []
    for k, component in enumerate(link.components):
        if not cut_positions[k]:
            new_components.append([(p, False) for p in component])
            continue
        for j in range(len(cut_positions[k])):
            if (k, j) in visited:
                continue
            traced: List[Tuple[Pass, bool]] = []
            arc, forward = (k, j), True
            while True:
                visited.add(arc)
                body = arcs[arc] if forward else list(reversed(arcs[arc]))
                traced.extend((p, not forward) for p in body)
                end = ('in', arc) if forward else ('out', arc)
                kind, arc = partner[end]
                forward = kind == 'out'
                if arc == (k, j) and forward:
                    break
            new_components.append(traced)

    for traced in new_components:
        for p, flipped in traced:
            if flipped:
                reversed_passes[p.crossing_id] = reversed_passes.get(p.crossing_id, 0) + 1

    return LinkCode.build(
        [
            p.with_sign(-p.sign) if reversed_passes.get(p.crossing_id) == 1 else p
            for p, _ in traced
        ]
        for traced in new_components
    )


def smooth(link: LinkCode, selected: Sequence[int], word) -> LinkCode:
    """
    Apply split word ``word`` to the crossings ``selected``, letter by position.

    Reconnection endpoints are fixed by the original orientations. Passes on
    arcs that end up traversed backwards keep their over/under flag; a
    crossing with exactly one such pass changes sign.

    Raises:
        UnknownCrossing: a selected id is not in ``link``
        LengthMismatch: ``selected`` and ``word`` differ in length
    """
    if not isinstance(word, SplitWord):
        word = SplitWord(word)
    selected = list(selected)
    if len(selected) != len(word):
        raise LengthMismatch(f"{len(selected)} crossings but word {word.letters!r}")
    if len(set(selected)) != len(selected):
        raise ValidationError(f"repeated crossing in selection {selected}")
    require_crossings(link, selected)
    cuts = {a: letter for a, letter in zip(selected, word.letters) if letter != 'C'}
    if not cuts:
        return link
    return _reconnect(link, cuts)


def component_count_after(link: LinkCode, selected: Sequence[int], word) -> int:
    return smooth(link, selected, word).n_components


def split_components(link: LinkCode) -> LinkCodeSum:
    return LinkCodeSum(tuple(
        (Fraction(1), self_subdiagram(link, i)) for i in range(link.n_components)
    ))


def R(link: LinkCode, selected: Sequence[int], combo: WordCombo, alpha=DESCENDING) -> GaussSum:
    """Smooth, split into components, unknot each one and take Gauss diagrams."""
    terms = []
    for coefficient, word in combo.terms:
        if coefficient == 0:
            continue
        smoothed = smooth(link, selected, word)
        for _, knot in split_components(smoothed).terms:
            terms.append((coefficient, gauss(alpha(knot))))
    return GaussSum(tuple(terms))
