"""
su(N) weights of the chord diagrams appearing up to degree four.

Knot-type keys (``chord1``, ``c2``, ``d3``, ``f4a``, ``f4b``) belong to the
exponentiated part; link-type keys (``ca`` ... ``fk``) to the multi-circle
part. Keys drop the family prefix: ``wK.c2`` is ``c2``, ``wL.ca`` is ``ca``.
Values already carry the powers of -1/2 that accompany each diagram, so
invariant sums multiply them directly.
"""
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

import sympy as sp

from .series import N, NPoly, XSeries

LINK_KEYS = ('ca', 'ec', 'ef', 'fc', 'fd', 'fe', 'ff', 'fg', 'fh', 'fi', 'fj', 'fk')

# key -> (x-degree, coefficient in N)
WEIGHTS: Dict[str, Tuple[int, sp.Expr]] = {
    'chord1': (1, (N**2 - 1) / (2 * N)),
    'c2': (2, -(N**2 - 1) / 4),
    'd3': (3, N * (N**2 - 1) / 8),
    'f4a': (4, -N**2 * (N**2 - 1) / 16),
    'f4b': (4, (N**2 - 1) * (N**2 + 2) / 16),
    'ca': (2, (N**2 - 1) / (4 * N**2)),
    'ec': (3, (N**2 - 1) * (N**2 - 2) / (8 * N**3)),
    'ef': (3, -(N**2 - 1) / (8 * N)),
    'fc': (3, (N**2 - 1) / (8 * N**3)),
    'fd': (4, (N**2 - 1) * (N**4 - 3 * N**2 + 3) / (16 * N**4)),
    'fe': (4, -(N**2 - 1) * (N**2 - 2) / (16 * N**2)),
    'ff': (4, (N**2 - 1) / 16),
    'fg': (4, (N**2 - 1)**2 / (16 * N**4)),
    'fh': (4, (N**2 - 1) * (N**2 - 2) / (16 * N**4)),
    'fi': (4, -(N**2 - 1) / (16 * N**2)),
    'fj': (4, (N**2 - 1) / (16 * N**4)),
    'fk': (4, (N**2 - 1)**2 / (16 * N**4)),
}


@lru_cache(maxsize=1)
def weight_table() -> Mapping[str, XSeries]:
    """Every weight as a monomial x^deg * NPoly; the empty diagram is ``empty``. Read-only."""
    table = {key: XSeries.monomial(degree, NPoly(value)) for key, (degree, value) in WEIGHTS.items()}
    table['empty'] = XSeries.one()
    return MappingProxyType(table)


def weight(key: str) -> XSeries:
    return weight_table()[key]
