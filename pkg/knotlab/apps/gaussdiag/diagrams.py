"""
Gauss diagrams and formal rational sums of them.

A Gauss diagram keeps one circle per link component. Each crossing becomes a
chord (labelled by the crossing id) joining its two passes, carrying the
crossing sign. Chords have no direction.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from knotlab.apps.linkcode.codes import LinkCode, require_crossings
from knotlab.apps.linkcode.descending import DESCENDING, AlphaRule


@dataclass(frozen=True)
class GaussDiagram:
    """
    Attributes:
        circles: per circle, the chord ids met in cyclic order
        signs: sorted (chord_id, sign) pairs
    """

    circles: Tuple[Tuple[int, ...], ...]
    signs: Tuple[Tuple[int, int], ...]

    @property
    def sign_map(self) -> Dict[int, int]:
        return dict(self.signs)

    @property
    def n_chords(self) -> int:
        return len(self.signs)

    def endpoints(self) -> Dict[int, Tuple[Tuple[int, int], Tuple[int, int]]]:
        where: Dict[int, list] = {}
        for c, circle in enumerate(self.circles):
            for j, chord in enumerate(circle):
                where.setdefault(chord, []).append((c, j))
        return {chord: tuple(pos) for chord, pos in where.items()}


@dataclass(frozen=True)
class GaussSum:
    """Formal combination of Gauss diagrams, kept unreduced."""

    terms: Tuple[Tuple[Fraction, GaussDiagram], ...] = ()

    def __add__(self, other: 'GaussSum') -> 'GaussSum':
        return GaussSum(self.terms + other.terms)

    def scaled(self, factor) -> 'GaussSum':
        return GaussSum(tuple((Fraction(factor) * c, g) for c, g in self.terms))

    @classmethod
    def of(cls, pairs: Iterable[Tuple[object, GaussDiagram]]) -> 'GaussSum':
        return cls(tuple((Fraction(c), g) for c, g in pairs if c != 0))


def partial_gauss(link: LinkCode, selected: Optional[Iterable[int]] = None) -> GaussDiagram:
    """
    Gauss diagram of ``link`` restricted to the crossings in ``selected``.

    Passing None keeps every crossing.

    Raises:
        UnknownCrossing: a selected id is not a crossing of ``link``
    """
    if selected is None:
        keep = set(link.crossings())
    else:
        keep = set(selected)
        require_crossings(link, keep)
    circles = tuple(
        tuple(p.crossing_id for p in component if p.crossing_id in keep)
        for component in link.components
    )
    signs = {}
    for component in link.components:
        for p in component:
            if p.crossing_id in keep:
                signs[p.crossing_id] = p.sign
    return GaussDiagram(circles, tuple(sorted(signs.items())))


def gauss(link: LinkCode) -> GaussDiagram:
    return partial_gauss(link)


def bar_gauss(link: LinkCode, alpha: AlphaRule = DESCENDING) -> GaussSum:
    """G(L) - G(alpha(L)) as an unreduced two-term sum."""
    return GaussSum(((Fraction(1), gauss(link)), (Fraction(-1), gauss(alpha(link)))))


def bar_partial(link: LinkCode, selected: Iterable[int], alpha: AlphaRule = DESCENDING) -> GaussSum:
    """P(L; A) - P(alpha(L); A)."""
    selected = list(selected)
    return GaussSum((
        (Fraction(1), partial_gauss(link, selected)),
        (Fraction(-1), partial_gauss(alpha(link), selected)),
    ))


def debug_string(diagram: GaussDiagram) -> str:
    """Circles as parenthesised chord lists with signs, e.g. ``(1+ 2+ 1+ 2+)``."""
    signs = diagram.sign_map
    parts = []
    for circle in diagram.circles:
        body = ' '.join(f"{chord}{'+' if signs[chord] > 0 else '-'}" for chord in circle)
        parts.append(f"({body})")
    return ' '.join(parts)
