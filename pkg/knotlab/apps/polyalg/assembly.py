"""
Degree-four series assembled from an invariant report.

    homfly_series      N^(n-1) * exp(sum u(D) W(D)) * (1 + sum w(D) W(D))
    kontsevich_series  exp(sum of raw knot sums * W(D)) * (1 + sum w(D) W(D))

The two agree once the Kontsevich series is framed by the linking numbers
and normalized by the unknot; ``homfly_series_from_kontsevich`` does that.

The u coefficients fold the unknot constants into the knot sums; the w
coefficients are products of the pair and triple invariants.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict

from knotlab.apps.invariants.reports import InvariantReport, all_invariants
from knotlab.apps.linkcode.codes import LinkCode, parse_link
from knotlab.core.errors import MissingInvariant, ValidationError

from .series import N, NPoly, XSeries, exp_series, reciprocal, series_sum
from .weights import LINK_KEYS, weight

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
FRAMING = Fraction(1, 360)

# four-cycles through four components, as index positions into the sorted quadruple
CYCLES = ((0, 1, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2))
MATCHINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _check_report(link: LinkCode, report: InvariantReport) -> None:
    n = link.n_components
    if report.n_components != n:
        raise MissingInvariant(
            f"report covers {report.n_components} components, link has {n}",
            details={'expected': n, 'got': report.n_components},
        )
    needed = {
        'v2': [(i,) for i in range(n)], 'v3_1': [(i,) for i in range(n)],
        'v4_1': [(i,) for i in range(n)], 'v4_2': [(i,) for i in range(n)],
        'v1': list(combinations(range(n), 2)), 'v3_2': list(combinations(range(n), 2)),
        'v4_3': list(combinations(range(n), 2)), 'v4_4': list(combinations(range(n), 3)),
    }
    for name, keys in needed.items():
        values = report.values(name)
        missing = [k for k in keys if k not in values]
        if missing:
            raise MissingInvariant(f"report lacks {name} for {missing}", details={'invariant': name})


def u_coefficients(report: InvariantReport) -> Dict[str, Fraction]:
    return {
        'chord1': -report.total('v1'),
        'c2': SIXTH + report.total('v2'),
        'd3': report.total('v3_1'),
        'f4a': -FRAMING + report.total('v4_1'),
        'f4b': FRAMING + report.total('v4_2'),
    }


def w_coefficients(report: InvariantReport) -> Dict[str, Fraction]:
    n = report.n_components

    def lk(i: int, j: int) -> Fraction:
        return report.v1[(min(i, j), max(i, j))]

    w = {key: Fraction(0) for key in LINK_KEYS}
    for i, j in combinations(range(n), 2):
        value = lk(i, j)
        w['ca'] += HALF * value ** 2
        w['ec'] += value ** 3 / 6
        w['ef'] += report.v3_2[(i, j)]
        w['fd'] += value ** 4 / 24
        w['fe'] += HALF * value * report.v3_2[(i, j)]
        w['ff'] += report.v4_3[(i, j)]
    for triple in combinations(range(n), 3):
        i, j, k = triple
        w['fc'] += lk(i, j) * lk(j, k) * lk(k, i)
        w['fi'] += report.v4_4[triple]
        for centre in triple:
            a, b = [m for m in triple if m != centre]
            w['fg'] += (HALF * lk(centre, a) ** 2) * (HALF * lk(centre, b) ** 2)
            w['fh'] += lk(centre, a) * lk(centre, b) * HALF * lk(a, b) ** 2
    for quad in combinations(range(n), 4):
        for (p, q), (r, s) in MATCHINGS:
            w['fk'] += (HALF * lk(quad[p], quad[q]) ** 2) * (HALF * lk(quad[r], quad[s]) ** 2)
        for a, b, c, d in CYCLES:
            w['fj'] += lk(quad[a], quad[b]) * lk(quad[b], quad[c]) * lk(quad[c], quad[d]) * lk(quad[d], quad[a])
    return w


def _link_part(report: InvariantReport) -> XSeries:
    w = w_coefficients(report)
    return XSeries.one() + series_sum(weight(key).scale(w[key]) for key in LINK_KEYS if w[key])


def homfly_series(link: LinkCode, report: InvariantReport) -> XSeries:
    """
    Degree-four expansion of the HOMFLY polynomial predicted by the invariants.

    Raises:
        MissingInvariant: ``report`` does not cover every component subset
    """
    if link.n_components == 0:
        raise ValidationError("homfly_series needs at least one component")
    _check_report(link, report)
    u = u_coefficients(report)
    exponent = series_sum(weight(key).scale(value) for key, value in u.items() if value)
    prefactor = XSeries.monomial(0, NPoly(N ** (link.n_components - 1)))
    result = prefactor * exp_series(exponent) * _link_part(report)
    logger.debug(f"homfly_series u={u}")
    return result


def kontsevich_series(link: LinkCode, report: InvariantReport) -> XSeries:
    """Knot sums and link products without the unknot constants or the framing chord."""
    _check_report(link, report)
    raw = {
        'c2': report.total('v2'),
        'd3': report.total('v3_1'),
        'f4a': report.total('v4_1'),
        'f4b': report.total('v4_2'),
    }
    exponent = series_sum(weight(key).scale(value) for key, value in raw.items() if value)
    return exp_series(exponent) * _link_part(report)


@lru_cache(maxsize=1)
def unknot_normalizer() -> XSeries:
    """Reciprocal of the Kontsevich series of the crossingless unknot."""
    unknot = parse_link('.')
    return reciprocal(kontsevich_series(unknot, all_invariants(unknot)))


def homfly_series_from_kontsevich(link: LinkCode, report: InvariantReport) -> XSeries:
    """
    The HOMFLY series rebuilt from ``kontsevich_series``: N^(n-1) times the
    framing factor exp(-x (N^2-1)/(2N) sum v1), divided by the unknot's
    Kontsevich series. Agrees with ``homfly_series`` for every link.
    """
    framing = exp_series(weight('chord1').scale(-report.total('v1')))
    prefactor = XSeries.monomial(0, NPoly(N ** (link.n_components - 1)))
    return prefactor * framing * kontsevich_series(link, report) * unknot_normalizer()
