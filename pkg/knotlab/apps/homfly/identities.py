"""
Consistency identities between the invariants of a skein triple.

At a self crossing of component c the smoothing splits c into pieces at
positions c and c+1 of L0; V1..V7 must vanish. At a crossing joining
components c < d the smoothing merges them at position c of L0; V8..V10
must vanish. Each identity vanishes on its own.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from knotlab.apps.invariants.formulas import (
    EvalOptions, _options, v1, v2, v3_1, v3_2, v4_1, v4_2, v4_3, v4_4,
)
from knotlab.apps.invariants.reports import fraction_json
from knotlab.apps.linkcode.codes import SELF, LinkCode, crossing_kind, sublink

from .skein import skein_triple

logger = logging.getLogger(__name__)

THIRD = Fraction(1, 3)
SIXTH = Fraction(1, 6)


@dataclass
class SkeinIdentityReport:
    crossing: int
    kind: str
    values: Dict[str, Fraction] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(value == 0 for value in self.values.values())

    def failures(self) -> List[str]:
        return [name for name, value in self.values.items() if value != 0]

    def to_json(self) -> Dict:
        return {
            'crossing': self.crossing,
            'kind': self.kind,
            'ok': self.ok,
            'values': {name: fraction_json(value) for name, value in self.values.items()},
        }


class _Evaluator:
    """Invariants of component subsets of one diagram, cached by index tuple."""

    def __init__(self, link: LinkCode, opts: EvalOptions):
        self.link = link
        self.opts = opts
        self._cache: Dict[tuple, Fraction] = {}

    def __call__(self, formula, *indices: int) -> Fraction:
        key = (formula.__name__,) + tuple(sorted(indices))
        if key not in self._cache:
            self._cache[key] = formula(sublink(self.link, sorted(indices)), self.opts)
        return self._cache[key]


def _self_crossing(c: int, n: int, plus: _Evaluator, minus: _Evaluator,
                   zero: _Evaluator) -> Dict[str, Fraction]:
    signed = ((1, plus), (-1, minus))
    others = [i for i in range(n) if i != c]
    pieces = (c, c + 1)

    def moved(i: int) -> int:
        return i if i < c else i + 1

    lk = zero(v1, *pieces)
    brace = sum(ev(v2, c) for _, ev in signed) - 2 * sum(zero(v2, j) for j in pieces)

    values = {
        'V1': sum(s * ev(v2, c) for s, ev in signed) - 2 * lk,
        'V2': (
            sum(s * ev(v3_1, c) for s, ev in signed)
            - sum(ev(v2, c) for _, ev in signed)
            + 2 * sum(zero(v2, j) for j in pieces)
            - lk ** 2 + THIRD
        ),
        'V3': sum(
            (sum(s * ev(v3_2, i, c) for s, ev in signed)
             - 2 * zero(v1, moved(i), c) * zero(v1, moved(i), c + 1))
            for i in others
        ),
        'V4': (
            sum(s * ev(v4_1, c) for s, ev in signed)
            - sum(ev(v3_1, c) for _, ev in signed)
            + 2 * sum(zero(v3_1, j) for j in pieces)
            + zero(v3_2, *pieces)
            - Fraction(3, 2) * lk * brace
            - THIRD * lk ** 3
            + Fraction(7, 6) * lk
        ),
        'V5': (
            sum(s * ev(v4_2, c) for s, ev in signed)
            + zero(v3_2, *pieces)
            + SIXTH * lk
            - Fraction(1, 2) * lk * brace
        ),
        'V6': sum(
            (sum(s * ev(v4_3, i, c) for s, ev in signed)
             - sum(ev(v3_2, i, c) for _, ev in signed)
             + 2 * sum(zero(v3_2, moved(i), j) for j in pieces)
             - 2 * lk * zero(v1, moved(i), c) * zero(v1, moved(i), c + 1))
            for i in others
        ),
        'V7': sum(
            (sum(s * ev(v4_4, i, j, c) for s, ev in signed)
             - 2 * plus(v1, i, j) * (
                 zero(v1, moved(i), c) * zero(v1, moved(j), c + 1)
                 + zero(v1, moved(i), c + 1) * zero(v1, moved(j), c)
             ))
            for i, j in combinations(others, 2)
        ),
    }
    return {name: Fraction(value) for name, value in values.items()}


def _joining_crossing(c: int, d: int, n: int, plus: _Evaluator, minus: _Evaluator,
                      zero: _Evaluator) -> Dict[str, Fraction]:
    signed = ((1, plus), (-1, minus))
    others = [i for i in range(n) if i not in (c, d)]

    def moved(i: int) -> int:
        return i if i < d else i - 1

    pair_v32 = [(s, ev(v3_2, c, d)) for s, ev in signed]
    p = plus(v1, c, d) - 1
    values = {
        'V8': (
            sum(s * value for s, value in pair_v32)
            + 2 * (plus(v2, c) + plus(v2, d))
            - 2 * zero(v2, c)
            - THIRD
        ),
        'V9': (
            sum(s * ev(v4_3, c, d) for s, ev in signed)
            + 2 * (plus(v3_1, c) + plus(v3_1, d))
            - 2 * zero(v3_1, c)
            + Fraction(p, 2) * sum(s * value for s, value in pair_v32)
            - Fraction(1, 2) * sum(value for _, value in pair_v32)
        ),
        'V10': sum(
            (sum(s * ev(v4_4, i, c, d) for s, ev in signed)
             + 2 * (plus(v3_2, i, c) + plus(v3_2, i, d))
             - 2 * zero(v3_2, moved(i), c))
            for i in others
        ),
    }
    return {name: Fraction(value) for name, value in values.items()}


def verify_skein_identities(link: LinkCode, crossing_id: int,
                            options: Optional[EvalOptions] = None) -> SkeinIdentityReport:
    """
    Evaluate the identities that apply at ``crossing_id``.

    Raises:
        UnknownCrossing: ``crossing_id`` is not in ``link``
    """
    opts = _options(options)
    kind = crossing_kind(link, crossing_id)
    plus, minus, zero = (_Evaluator(diagram, opts) for diagram in skein_triple(link, crossing_id))
    (c, _), (d, _) = link.positions()[crossing_id]
    n = link.n_components
    if kind == SELF:
        values = _self_crossing(c, n, plus, minus, zero)
    else:
        values = _joining_crossing(min(c, d), max(c, d), n, plus, minus, zero)
    report = SkeinIdentityReport(crossing_id, kind, values)
    if not report.ok:
        logger.warning(f"Skein identities {report.failures()} fail at crossing {crossing_id} of {link}")
    return report


def verify_all_crossings(link: LinkCode, options: Optional[EvalOptions] = None) -> Sequence[SkeinIdentityReport]:
    return [verify_skein_identities(link, a, options) for a in link.crossings()]
