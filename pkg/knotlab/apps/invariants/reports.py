"""Evaluating every invariant of a link over its component subsets."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Optional, Tuple

from knotlab.apps.linkcode.codes import LinkCode, sublink

from .formulas import EvalOptions, _options, v1, v2, v3_1, v3_2, v4_1, v4_2, v4_3, v4_4

logger = logging.getLogger(__name__)

KNOT_FIELDS = ('v2', 'v3_1', 'v4_1', 'v4_2')
PAIR_FIELDS = ('v1', 'v3_2', 'v4_3')
TRIPLE_FIELDS = ('v4_4',)
FIELDS = ('v1', 'v2', 'v3_1', 'v3_2', 'v4_1', 'v4_2', 'v4_3', 'v4_4')


def fraction_json(value: Fraction) -> Dict[str, int]:
    return {'num': value.numerator, 'den': value.denominator}


def index_key(indices: Tuple[int, ...]) -> str:
    return '-'.join(str(i) for i in indices)


@dataclass
class InvariantReport:
    """
    Invariant values keyed by component index tuples: ``(i,)`` for the knot
    invariants, ``(i, j)`` with i < j for pairs, ``(i, j, k)`` for triples.
    """

    n_components: int = 0
    v1: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v2: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v3_1: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v3_2: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v4_1: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v4_2: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v4_3: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    v4_4: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)

    def values(self, name: str) -> Dict[Tuple[int, ...], Fraction]:
        return getattr(self, name)

    def total(self, name: str) -> Fraction:
        return sum(self.values(name).values(), Fraction(0))

    def get(self, name: str, *indices: int) -> Fraction:
        return self.values(name)[tuple(indices)]

    def to_json(self) -> Dict[str, Dict[str, Dict[str, int]]]:
        """Invariants with at least one value, e.g. ``{"v1": {"0-1": {"num": 2, "den": 1}}}``."""
        document = {}
        for name in FIELDS:
            values = self.values(name)
            if values:
                document[name] = {index_key(k): fraction_json(v) for k, v in sorted(values.items())}
        return document


def all_invariants(link: LinkCode, options: Optional[EvalOptions] = None) -> InvariantReport:
    """
    Evaluate each invariant on every component subset of matching size; the
    subset keeps only the crossings among its own components.
    """
    opts = _options(options)
    report = InvariantReport(n_components=link.n_components)
    n = link.n_components
    for i in range(n):
        knot = sublink(link, [i])
        report.v2[(i,)] = v2(knot, opts)
        report.v3_1[(i,)] = v3_1(knot, opts)
        report.v4_1[(i,)] = v4_1(knot, opts)
        report.v4_2[(i,)] = v4_2(knot, opts)
    for pair in combinations(range(n), 2):
        two = sublink(link, pair)
        report.v1[pair] = v1(two, opts)
        report.v3_2[pair] = v3_2(two, opts)
        report.v4_3[pair] = v4_3(two, opts)
    for triple in combinations(range(n), 3):
        report.v4_4[triple] = v4_4(sublink(link, triple), opts)
    logger.debug(f"Evaluated invariants on {n} component(s), {link.n_crossings} crossing(s)")
    return report
