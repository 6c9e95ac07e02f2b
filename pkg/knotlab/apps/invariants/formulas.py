"""
Gauss diagram formulas for the link invariants of degree at most four.

Every value is an exact Fraction. Each invariant pairs the (barred) Gauss
diagram of its input with a fixed combination of catalog configurations and
subtracts correction terms built from smoothings of one or two crossings.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from knotlab.apps.gaussdiag.diagrams import GaussSum, bar_gauss, bar_partial, gauss, partial_gauss
from knotlab.apps.linkcode.codes import LinkCode
from knotlab.apps.linkcode.descending import DESCENDING
from knotlab.apps.matchcount.catalog import Catalog, default_catalog
from knotlab.apps.matchcount.pairing import pair_sum
from knotlab.apps.surgery.operators import R, WordCombo
from knotlab.core.errors import ArityError

logger = logging.getLogger(__name__)

SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
FRAMING = Fraction(1, 360)


@dataclass(frozen=True)
class EvalOptions:
    """
    Knobs shared by every formula.

    Attributes:
        catalog: configuration catalog to pair against
        alpha: descending-diagram rule used for barred diagrams and R
        prune: skip the smoothing when the pattern factor is zero
        reverse: list each crossing selection in descending id order
    """

    catalog: Catalog = field(default_factory=default_catalog)
    alpha: Callable[[LinkCode], LinkCode] = DESCENDING
    prune: bool = True
    reverse: bool = False


def _options(options: Optional[EvalOptions]) -> EvalOptions:
    return options if options is not None else EvalOptions()


def _require_arity(link: LinkCode, n: int, name: str) -> None:
    if link.n_components != n:
        raise ArityError(
            f"{name} needs {n} component(s), got {link.n_components}",
            details={'expected': n, 'got': link.n_components},
        )


def _pair(diagrams: GaussSum, opts: EvalOptions, terms: Sequence[Tuple[object, str]]) -> Fraction:
    return pair_sum(diagrams, opts.catalog.combo(terms))


def _plain(link: LinkCode) -> GaussSum:
    return GaussSum.of([(1, gauss(link))])


# ============================================================================
# Correction terms
# ============================================================================

@dataclass(frozen=True)
class CorrectionTerm:
    """
    sum over crossing selections of factor(selection) * <R(selection, words), v2.D1>

    ``barred`` chooses P-bar over P for the factor.
    """

    name: str
    arity: int
    pattern: str
    words: Tuple[Tuple[int, str], ...]
    barred: bool

    def evaluate(self, link: LinkCode, opts: EvalOptions) -> Fraction:
        combo = WordCombo.of(self.words)
        total = Fraction(0)
        for chosen in combinations(link.crossings(), self.arity):
            selection = sorted(chosen, reverse=opts.reverse)
            if self.barred:
                factor_sum = bar_partial(link, selection, opts.alpha)
            else:
                factor_sum = GaussSum.of([(1, partial_gauss(link, selection))])
            factor = _pair(factor_sum, opts, [(1, self.pattern)])
            if factor == 0 and opts.prune:
                continue
            smoothed = pair_sum(R(link, selection, combo, opts.alpha), opts.catalog.combo([(1, 'v2.D1')]))
            if factor and smoothed:
                logger.debug(f"{self.name} {selection}: {factor} * {smoothed}")
            total += factor * smoothed
        return total


I3_1 = CorrectionTerm('I3.1', 1, 'pat.1chord', ((1, 'C'), (-1, 'A')), barred=False)
I3_2 = CorrectionTerm('I3.2', 1, 'pat.join', ((1, 'A'), (-1, 'C')), barred=False)
I4_1_1 = CorrectionTerm(
    'I4.1.1', 2, 'pat.pair.X', ((3, 'CC'), (-2, 'AC'), (-2, 'CA'), (1, 'BB')), barred=True,
)
I4_1_2 = CorrectionTerm(
    'I4.1.2', 2, 'pat.pair.P', ((1, 'CC'), (-1, 'AC'), (-1, 'CA'), (1, 'AA')), barred=True,
)
I4_2 = CorrectionTerm('I4.2', 2, 'pat.pair.X', ((1, 'CC'), (-1, 'AC'), (-1, 'CA'), (1, 'BB')), barred=True)
I4_3_1 = CorrectionTerm('I4.3.1', 2, 'pat.2join', ((1, 'CC'), (-1, 'BB')), barred=True)
I4_3_2 = CorrectionTerm(
    'I4.3.2', 2, 'pat.I432', ((1, 'AC'), (1, 'CA'), (-1, 'CC'), (-1, 'AA')), barred=True,
)
I4_4 = CorrectionTerm('I4.4', 2, 'pat.3chain', ((1, 'CC'), (1, 'AA'), (-1, 'AC'), (-1, 'CA')), barred=True)

TERMS_BY_ARITY = {
    1: (I3_1, I4_1_1, I4_1_2, I4_2),
    2: (I3_2, I4_3_1, I4_3_2),
    3: (I4_4,),
}


def i_terms(link: LinkCode, options: Optional[EvalOptions] = None) -> Dict[str, Fraction]:
    """Correction terms that apply to a link with this many components."""
    opts = _options(options)
    return {term.name: term.evaluate(link, opts) for term in TERMS_BY_ARITY.get(link.n_components, ())}


# ============================================================================
# Invariants
# ============================================================================

def v1(link: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    """Sum of the signs of the crossings between the two components."""
    _require_arity(link, 2, 'v1')
    return _pair(_plain(link), _options(options), [(1, 'v1.D1')])


def v2(knot: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(knot, 1, 'v2')
    opts = _options(options)
    return -SIXTH + _pair(bar_gauss(knot, opts.alpha), opts, [(1, 'v2.D1')])


def v3_1(knot: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(knot, 1, 'v3_1')
    opts = _options(options)
    main = _pair(_plain(knot), opts, [(2, 'v3.1.D1'), (1, 'v3.1.D2'), (HALF, 'v3.1.D3')])
    return main - I3_1.evaluate(knot, opts)


def v3_2(link: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(link, 2, 'v3_2')
    opts = _options(options)
    main = _pair(_plain(link), opts, [(1, 'v3.2.D1'), (1, 'v3.2.D2'), (THIRD, 'v1.D1')])
    return main - I3_2.evaluate(link, opts)


V4_1_COMBO = (
    (1, 'v4.1.D1'), (1, 'v4.1.D2'), (2, 'v4.1.D3'), (4, 'v4.1.D4'), (5, 'v4.1.D5'), (7, 'v4.1.D6'),
    (SIXTH, 'v2.D1'), (HALF, 'v4.1.E1'), (2, 'v4.1.E2'), (2, 'v4.1.E3'),
)
V4_2_COMBO = ((1, 'v4.1.D4'), (1, 'v4.1.D5'), (1, 'v4.1.D6'), (HALF, 'v4.1.E2'), (-SIXTH, 'v2.D1'))
V4_3_COMBO = (
    (1, 'v4.3.A1'), (1, 'v4.3.A2'), (2, 'v4.3.A3'), (1, 'v4.3.A4'),
    (1, 'v4.3.A5'), (1, 'v4.3.A6'), (HALF, 'v4.3.A7'), (HALF, 'v4.3.A8'),
)
V4_4_COMBO = ((1, 'v4.4.B1'), (1, 'v4.4.B2'), (1, 'v4.4.B3'))


def v4_1(knot: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(knot, 1, 'v4_1')
    opts = _options(options)
    main = _pair(bar_gauss(knot, opts.alpha), opts, V4_1_COMBO)
    return main - I4_1_1.evaluate(knot, opts) - I4_1_2.evaluate(knot, opts) + FRAMING


def v4_2(knot: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(knot, 1, 'v4_2')
    opts = _options(options)
    main = _pair(bar_gauss(knot, opts.alpha), opts, V4_2_COMBO)
    return main - I4_2.evaluate(knot, opts) - FRAMING


def v4_3(link: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(link, 2, 'v4_3')
    opts = _options(options)
    main = _pair(bar_gauss(link, opts.alpha), opts, V4_3_COMBO)
    return main - I4_3_1.evaluate(link, opts) - I4_3_2.evaluate(link, opts)


def v4_4(link: LinkCode, options: Optional[EvalOptions] = None) -> Fraction:
    _require_arity(link, 3, 'v4_4')
    opts = _options(options)
    return _pair(bar_gauss(link, opts.alpha), opts, V4_4_COMBO) - I4_4.evaluate(link, opts)


PAIRING_TABLE_KEYS = (
    'v4.1.D1', 'v4.1.D2', 'v4.1.D3', 'v4.1.D4', 'v4.1.D5', 'v4.1.D6',
    'v2.D1', 'v4.1.E1', 'v4.1.E2', 'v4.1.E3',
)


def pairing_table(knot: LinkCode, options: Optional[EvalOptions] = None) -> List[Tuple[str, Fraction]]:
    """Barred pairings of a knot with each configuration entering v4_1 and v4_2."""
    _require_arity(knot, 1, 'pairing_table')
    opts = _options(options)
    barred = bar_gauss(knot, opts.alpha)
    return [(key, _pair(barred, opts, [(1, key)])) for key in PAIRING_TABLE_KEYS]
