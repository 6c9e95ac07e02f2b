"""
Signed Gauss codes for oriented link diagrams.

A link code is an ordered list of components. Each component is the cyclic
sequence of passes met while walking along it: every crossing is passed
twice, once over and once under, and both passes carry the crossing sign.

The text form ("SGC v1") has one component per line, tokens like ``O3+`` or
``U12-``, ``#`` comments and blank lines ignored. A component without
crossings is written as a single ``.``.
"""
import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from knotlab.core.errors import CodeSyntaxError, UnknownCrossing, ValidationError

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r'^([OU])(\d+)([+-])$')
EMPTY_COMPONENT = '.'

SELF = 'self'
JOINING = 'joining'


@dataclass(frozen=True)
class Pass:
    """One traversal of a crossing."""

    crossing_id: int
    over: bool
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {self.sign}")
        if self.crossing_id <= 0:
            raise ValidationError(f"crossing ids are positive, got {self.crossing_id}")

    @property
    def token(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing_id}{'+' if self.sign > 0 else '-'}"

    def switched(self) -> 'Pass':
        return Pass(self.crossing_id, not self.over, -self.sign)

    def with_sign(self, sign: int) -> 'Pass':
        return Pass(self.crossing_id, self.over, sign)


@dataclass(frozen=True)
class LinkCode:
    """
    Validated oriented link diagram.

    Attributes:
        components: tuple of components, each a tuple of Pass in traversal
            order. The first pass is the basepoint.
    """

    components: Tuple[Tuple[Pass, ...], ...]

    def __post_init__(self):
        seen: Dict[int, List[Pass]] = {}
        for component in self.components:
            for p in component:
                seen.setdefault(p.crossing_id, []).append(p)
        for crossing_id, passes in seen.items():
            if len(passes) != 2:
                raise ValidationError(
                    f"crossing {crossing_id} appears {len(passes)} times, expected 2",
                    details={'crossing_id': crossing_id},
                )
            first, second = passes
            if first.over == second.over:
                raise ValidationError(
                    f"crossing {crossing_id} needs one over and one under pass",
                    details={'crossing_id': crossing_id},
                )
            if first.sign != second.sign:
                raise ValidationError(
                    f"crossing {crossing_id} has mismatched signs",
                    details={'crossing_id': crossing_id},
                )

    @classmethod
    def build(cls, components: Iterable[Iterable[Pass]]) -> 'LinkCode':
        return cls(tuple(tuple(component) for component in components))

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_crossings(self) -> int:
        return sum(len(component) for component in self.components) // 2

    def crossings(self) -> List[int]:
        """Crossing ids in ascending order."""
        return sorted({p.crossing_id for component in self.components for p in component})

    def traversal_order(self) -> List[int]:
        """Crossing ids in order of first encounter, components in index order."""
        order: List[int] = []
        seen = set()
        for component in self.components:
            for p in component:
                if p.crossing_id not in seen:
                    seen.add(p.crossing_id)
                    order.append(p.crossing_id)
        return order

    def positions(self) -> Dict[int, List[Tuple[int, int]]]:
        """Map crossing id to its two (component, index) positions in traversal order."""
        where: Dict[int, List[Tuple[int, int]]] = {}
        for k, component in enumerate(self.components):
            for j, p in enumerate(component):
                where.setdefault(p.crossing_id, []).append((k, j))
        return where

    def sign_of(self, crossing_id: int) -> int:
        for component in self.components:
            for p in component:
                if p.crossing_id == crossing_id:
                    return p.sign
        raise UnknownCrossing(f"crossing {crossing_id} not in diagram")

    def __str__(self):
        return serialize(self)


# ============================================================================
# Text format
# ============================================================================

def parse_token(token: str) -> Pass:
    match = TOKEN_RE.match(token)
    if not match:
        raise CodeSyntaxError(f"bad token {token!r}", details={'token': token})
    strand, digits, sign = match.groups()
    return Pass(int(digits), strand == 'O', 1 if sign == '+' else -1)


def parse_link(text: str) -> LinkCode:
    """
    Parse SGC v1 text into a validated LinkCode.

    Args:
        text: one component per line

    Raises:
        CodeSyntaxError: a token does not match ``[OU]<digits>[+-]``
        ValidationError: a crossing id is not used exactly twice, or its
            passes disagree on strand or sign
    """
    components = []
    for line in text.splitlines():
        body = line.split('#', 1)[0].strip()
        if not body:
            continue
        if body == EMPTY_COMPONENT:
            components.append(())
            continue
        components.append(tuple(parse_token(token) for token in body.split()))
    return LinkCode(tuple(components))


def serialize(link: LinkCode) -> str:
    lines = []
    for component in link.components:
        lines.append(' '.join(p.token for p in component) if component else EMPTY_COMPONENT)
    return '\n'.join(lines)


# ============================================================================
# Queries
# ============================================================================

def require_crossings(link: LinkCode, crossing_ids: Iterable[int]) -> None:
    known = set(link.crossings())
    for crossing_id in crossing_ids:
        if crossing_id not in known:
            raise UnknownCrossing(
                f"crossing {crossing_id} not in diagram",
                details={'crossing_id': crossing_id},
            )


def crossing_kind(link: LinkCode, crossing_id: int) -> str:
    require_crossings(link, [crossing_id])
    (k1, _), (k2, _) = link.positions()[crossing_id]
    return SELF if k1 == k2 else JOINING


def crossing_kinds(link: LinkCode) -> Dict[int, str]:
    return {
        crossing_id: SELF if where[0][0] == where[1][0] else JOINING
        for crossing_id, where in link.positions().items()
    }


def writhe_signs(link: LinkCode) -> Dict[int, int]:
    signs = {}
    for component in link.components:
        for p in component:
            signs[p.crossing_id] = p.sign
    return signs


# ============================================================================
# Transformations
# ============================================================================

def switch_crossing(link: LinkCode, crossing_id: int) -> LinkCode:
    """Negate the sign of a crossing and swap its over/under passes."""
    require_crossings(link, [crossing_id])
    return LinkCode.build(
        [p.switched() if p.crossing_id == crossing_id else p for p in component]
        for component in link.components
    )


def switch_crossings(link: LinkCode, crossing_ids: Iterable[int]) -> LinkCode:
    targets = set(crossing_ids)
    require_crossings(link, targets)
    if not targets:
        return link
    return LinkCode.build(
        [p.switched() if p.crossing_id in targets else p for p in component]
        for component in link.components
    )


def sublink(link: LinkCode, indices: Sequence[int]) -> LinkCode:
    """Components ``indices`` in the given order, keeping only crossings among them."""
    for i in indices:
        if not 0 <= i < link.n_components:
            raise IndexError(f"component {i} out of range for {link.n_components} components")
    chosen = [link.components[i] for i in indices]
    counts = Counter(p.crossing_id for component in chosen for p in component)
    return LinkCode.build(
        [p for p in component if counts[p.crossing_id] == 2] for component in chosen
    )


def self_subdiagram(link: LinkCode, i: int) -> LinkCode:
    """Component ``i`` alone, with every joining pass deleted."""
    return sublink(link, [i])


def reverse_orientation(link: LinkCode) -> LinkCode:
    """Reverse every component. Crossing signs are unchanged."""
    reversed_components = []
    for component in link.components:
        if component:
            reversed_components.append((component[0],) + tuple(reversed(component[1:])))
        else:
            reversed_components.append(())
    return LinkCode(tuple(reversed_components))


def mirror(link: LinkCode) -> LinkCode:
    return switch_crossings(link, link.crossings())


def rotate(link: LinkCode, shifts: Sequence[int]) -> LinkCode:
    """Move the basepoint of component k forward by ``shifts[k]`` passes."""
    rotated = []
    for component, shift in zip(link.components, shifts):
        if component:
            shift %= len(component)
            rotated.append(component[shift:] + component[:shift])
        else:
            rotated.append(())
    return LinkCode(tuple(rotated))


def canonical_key(link: LinkCode) -> Tuple:
    """
    Hashable key equal for codes that differ only by basepoints, crossing
    labels or component order.

    Components are fixed one at a time: each takes the rotation whose
    relabelled token tuple is smallest given the labels already assigned.
    """
    ordered = sorted(
        link.components,
        key=lambda component: (len(component), sorted((p.over, p.sign) for p in component)),
    )
    labels: Dict[int, int] = {}
    encoded = []
    for component in ordered:
        best = None
        best_labels = labels
        for shift in range(max(len(component), 1)):
            trial = dict(labels)
            rotated = component[shift:] + component[:shift]
            word = []
            for p in rotated:
                if p.crossing_id not in trial:
                    trial[p.crossing_id] = len(trial) + 1
                word.append((trial[p.crossing_id], p.over, p.sign))
            word = tuple(word)
            if best is None or word < best:
                best, best_labels = word, trial
        labels = best_labels
        encoded.append(best)
    return tuple(encoded)
