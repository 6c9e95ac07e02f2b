"""
Descending references: switching crossings until every component is walked
over-first, which turns any diagram into a diagram of split unknots.
"""
from dataclasses import dataclass
from typing import List

from knotlab.core.errors import ValidationError

from .codes import LinkCode, switch_crossings


def alpha_unknot(link: LinkCode, rule: str = 'over', reverse: bool = False) -> LinkCode:
    """
    Switch crossings until the diagram is descending.

    Components are walked in index order (``reverse`` walks them backwards),
    each from its basepoint. With ``rule='over'`` the first pass met at each
    crossing becomes the overpass; with ``rule='under'`` it becomes the
    underpass. Either way the result is a diagram of split unknots.
    """
    if rule not in ('over', 'under'):
        raise ValidationError(f"unknown descending rule {rule!r}")
    order = range(link.n_components - 1, -1, -1) if reverse else range(link.n_components)
    want_over = rule == 'over'
    seen = set()
    to_switch = []
    for k in order:
        for p in link.components[k]:
            if p.crossing_id in seen:
                continue
            seen.add(p.crossing_id)
            if p.over != want_over:
                to_switch.append(p.crossing_id)
    return switch_crossings(link, to_switch)


@dataclass(frozen=True)
class AlphaRule:
    """A choice of descending reference, usable wherever alpha is applied."""

    rule: str = 'over'
    reverse: bool = False

    def __call__(self, link: LinkCode) -> LinkCode:
        return alpha_unknot(link, rule=self.rule, reverse=self.reverse)


DESCENDING = AlphaRule()
ALTERNATE_RULES = (AlphaRule('under'), AlphaRule('over', reverse=True), AlphaRule('under', reverse=True))


def is_descending(link: LinkCode, alpha: AlphaRule = DESCENDING) -> bool:
    return alpha(link) == link


def defects(link: LinkCode, alpha: AlphaRule = DESCENDING) -> List[int]:
    """Crossings, in traversal order, that ``alpha`` switches."""
    reference = alpha(link)
    flips = {
        p.crossing_id
        for mine, theirs in zip(link.components, reference.components)
        for p, q in zip(mine, theirs)
        if p.over != q.over
    }
    return [crossing_id for crossing_id in link.traversal_order() if crossing_id in flips]
