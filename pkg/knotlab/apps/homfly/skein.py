"""
HOMFLY polynomial by skein recursion.

Normalization: t P(L+) - t^-1 P(L-) = z P(L0), P(unknot) = 1.

The recursion walks towards the descending diagram of the input: the first
crossing (traversal order) whose first pass is not the reference one is
switched, and its oriented smoothing has one crossing less. A descending
diagram of c components is the c-component unlink, worth DELTA^(c-1).
"""
import logging
from typing import Dict, Tuple

import sympy as sp

from knotlab.apps.linkcode.codes import (
    LinkCode, canonical_key, require_crossings, switch_crossing,
)
from knotlab.apps.linkcode.descending import AlphaRule, defects, is_descending
from knotlab.apps.surgery.operators import smooth
from knotlab.core.errors import RangeOverflow

from .polynomials import DELTA, HomflyPoly, t, z

logger = logging.getLogger(__name__)


def skein_triple(link: LinkCode, crossing_id: int) -> Tuple[LinkCode, LinkCode, LinkCode]:
    """
    (L+, L-, L0) at ``crossing_id``: the crossing made positive, made
    negative, and smoothed along the orientations.

    Raises:
        UnknownCrossing: ``crossing_id`` is not in ``link``
    """
    require_crossings(link, [crossing_id])
    switched = switch_crossing(link, crossing_id)
    if link.sign_of(crossing_id) > 0:
        plus, minus = link, switched
    else:
        plus, minus = switched, link
    return plus, minus, smooth(link, [crossing_id], 'A')


def homfly(link: LinkCode, reverse: bool = False) -> HomflyPoly:
    """
    Args:
        link: any valid code; the empty link has polynomial 1
        reverse: use the descending reference that walks components backwards

    Raises:
        RangeOverflow: the result has a power of z below z^(1-n)
    """
    reference = AlphaRule(reverse=reverse)
    memo: Dict[Tuple, sp.Expr] = {}

    def solve(diagram: LinkCode) -> sp.Expr:
        key = canonical_key(diagram)
        if key in memo:
            return memo[key]
        if is_descending(diagram, reference):
            value = DELTA ** max(diagram.n_components - 1, 0)
        else:
            crossing_id = defects(diagram, reference)[0]
            switched = solve(switch_crossing(diagram, crossing_id))
            smoothed = solve(smooth(diagram, [crossing_id], 'A'))
            if diagram.sign_of(crossing_id) > 0:
                value = t ** -2 * switched + z / t * smoothed
            else:
                value = t ** 2 * switched - t * z * smoothed
            value = sp.expand(value)
        memo[key] = value
        return value

    result = HomflyPoly(solve(link))
    floor = 1 - max(link.n_components, 1)
    if result.min_z_degree() < floor:
        raise RangeOverflow(
            f"HOMFLY polynomial has z^{result.min_z_degree()}, below z^{floor}",
            details={'min_z_degree': result.min_z_degree(), 'floor': floor},
        )
    logger.debug(f"homfly: {link.n_crossings} crossing(s), {len(memo)} memo entries")
    return result
