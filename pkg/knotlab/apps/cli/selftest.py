"""
Fixed checks on the curated fixtures: the worked 6_2 example, component
counts after smoothing, the numeric weight table and the unknot constants.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from knotlab.apps.gaussdiag.diagrams import gauss
from knotlab.apps.homfly.expansion import substitute
from knotlab.apps.homfly.polynomials import HomflyPoly, t, z
from knotlab.apps.homfly.skein import homfly
from knotlab.apps.invariants.formulas import (
    EvalOptions, i_terms, pairing_table, v2, v3_1, v4_1, v4_2,
)
from knotlab.apps.invariants.reports import all_invariants
from knotlab.apps.linkcode.codes import parse_link
from knotlab.apps.linkcode.descending import alpha_unknot
from knotlab.apps.matchcount.pairing import pair
from knotlab.apps.polyalg.assembly import homfly_series
from knotlab.apps.polyalg.series import N, XSeries, x
from knotlab.apps.surgery.operators import component_count_after
from knotlab.apps.weightcheck.sun import check_weight_table, sun_basis

from .corpus import load_fixtures

logger = logging.getLogger(__name__)

WORKED_EXAMPLE = 'knot_6_2'

WORKED_V3_1_PAIRINGS = {'v3.1.D1': 5, 'v3.1.D2': 2, 'v3.1.D3': -6}
WORKED_PAIRINGS = [0, 0, -6, 4, 2, -2, -4, -20, 12, 0]
WORKED_I_TERMS = {'I3.1': 1, 'I4.1.1': 4, 'I4.1.2': -2, 'I4.2': -2}
WORKED_INVARIANTS = {
    'v2': Fraction(-1, 6) - 4,
    'v3_1': Fraction(8),
    'v4_1': Fraction(1, 360) + Fraction(34, 3),
    'v4_2': Fraction(-1, 360) + Fraction(38, 3),
}
WORKED_HOMFLY = t**4 * z**2 + t**4 - t**2 * z**4 - 3 * t**2 * z**2 - 2 * t**2 + z**2 + 2
WORKED_SERIES = (1 + (N**2 - 1) * x**2 + N * (N**2 - 1) * x**3
                 + (7 * N**4 + 6 * N**2 - 13) / 12 * x**4)

TREFOIL = 'O1+ U2+ O3+ U1+ O2+ U3+'
HOPF = 'O1+ U2+\nU1+ O2+'
FIGURE_EIGHT = 'U1+ O2- U4- O1+ U3+ O4- U2- O3+'
KINKED_HOPF = 'O1+ U2+ O3+ U3+\nU1+ O2+'
CHAIN = 'U1+ O2+\nO1+ U2+ U3+ O4+\nO3+ U4+'

# (code, selected crossings, word, components afterwards)
COMPONENT_COUNTS = [
    (TREFOIL, [1], 'A', 2),
    (HOPF, [1], 'A', 1),
    (TREFOIL, [1, 2], 'AC', 2),
    (TREFOIL, [1, 2], 'CA', 2),
    (TREFOIL, [1, 2], 'BB', 2),
    (FIGURE_EIGHT, [1, 3], 'AC', 2),
    (FIGURE_EIGHT, [1, 3], 'CA', 2),
    (FIGURE_EIGHT, [1, 3], 'AA', 3),
    (HOPF, [1, 2], 'BB', 2),
    (KINKED_HOPF, [3, 1], 'CA', 1),
    (KINKED_HOPF, [3, 1], 'AA', 2),
    (KINKED_HOPF, [3, 1], 'CC', 2),
    (KINKED_HOPF, [3, 1], 'AC', 3),
    (CHAIN, [1, 3], 'AA', 1),
    (CHAIN, [1, 3], 'CA', 2),
    (CHAIN, [1, 3], 'AC', 2),
    (KINKED_HOPF, [3], 'A', 3),
    (TREFOIL, [1], 'B', 1),
    (HOPF, [1], 'B', 1),
]


def _expect(failures: List[str], label: str, got, expected) -> None:
    if got != expected:
        failures.append(f"{label}: got {got}, expected {expected}")


def check_worked_pairings(fixtures, options: EvalOptions) -> List[str]:
    failures: List[str] = []
    knot = fixtures[WORKED_EXAMPLE]
    config = options.catalog['v2.D1']
    _expect(failures, 'pairing of G with v2.D1', pair(gauss(knot), config), -5)
    _expect(failures, 'pairing of G(alpha) with v2.D1', pair(gauss(alpha_unknot(knot)), config), -1)
    for key, expected in WORKED_V3_1_PAIRINGS.items():
        _expect(failures, f"pairing of G with {key}", pair(gauss(knot), options.catalog[key]), expected)
    _expect(failures, 'degree-4 pairing table', [v for _, v in pairing_table(knot, options)], WORKED_PAIRINGS)
    _expect(failures, 'correction terms', i_terms(knot, options), WORKED_I_TERMS)
    return failures


def check_worked_invariants(fixtures, options: EvalOptions) -> List[str]:
    failures: List[str] = []
    knot = fixtures[WORKED_EXAMPLE]
    for formula in (v2, v3_1, v4_1, v4_2):
        _expect(failures, formula.__name__, formula(knot, options), WORKED_INVARIANTS[formula.__name__])
    return failures


def check_worked_homfly(fixtures, options: EvalOptions) -> List[str]:
    failures: List[str] = []
    knot = fixtures[WORKED_EXAMPLE]
    poly = homfly(knot)
    _expect(failures, 'homfly', poly, HomflyPoly(WORKED_HOMFLY))
    expected = XSeries.from_expr(WORKED_SERIES)
    _expect(failures, 'substituted homfly', substitute(poly), expected)
    _expect(failures, 'series from invariants', homfly_series(knot, all_invariants(knot, options)), expected)
    return failures


def check_component_counts(fixtures, options: EvalOptions) -> List[str]:
    failures: List[str] = []
    for code, selected, word, expected in COMPONENT_COUNTS:
        got = component_count_after(parse_link(code), selected, word)
        _expect(failures, f"{word} at {selected} of {code!r}", got, expected)
    return failures


def check_weights(fixtures, options: EvalOptions) -> List[str]:
    failures = [f"weight {m['key']} at N={m['N']}: {m['numeric']} != {m['expected']}"
                for m in check_weight_table()]
    for n in (2, 3):
        basis = sun_basis(n)
        residual = float(np.max(np.abs(basis.gram() - np.eye(len(basis)) / 2)))
        if residual >= 1e-12:
            failures.append(f"su({n}) basis orthonormality residual {residual}")
    return failures


def check_unknot(fixtures, options: EvalOptions) -> List[str]:
    failures: List[str] = []
    unknot = fixtures['unknot']
    _expect(failures, 'v2(unknot)', v2(unknot, options), Fraction(-1, 6))
    _expect(failures, 'v4_1(unknot)', v4_1(unknot, options), Fraction(1, 360))
    _expect(failures, 'v4_2(unknot)', v4_2(unknot, options), Fraction(-1, 360))
    _expect(failures, 'series(unknot)', homfly_series(unknot, all_invariants(unknot, options)), XSeries.one())
    return failures


CHECKS: Dict[str, Callable] = {
    'worked_pairings': check_worked_pairings,
    'worked_invariants': check_worked_invariants,
    'worked_homfly': check_worked_homfly,
    'component_counts': check_component_counts,
    'weights': check_weights,
    'unknot': check_unknot,
}


def run_selftest(options: EvalOptions) -> Dict[str, List[str]]:
    """Check name -> failure messages (empty when the check passes)."""
    fixtures = load_fixtures()
    results = {}
    for name, check in CHECKS.items():
        results[name] = check(fixtures, options)
        logger.info(f"selftest {name}: {'ok' if not results[name] else 'FAILED'}")
    return results
