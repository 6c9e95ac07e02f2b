"""Substituting t = e^(Nx/2), z = e^(x/2) - e^(-x/2) into a HOMFLY polynomial."""
from functools import lru_cache

import sympy as sp

from knotlab.apps.polyalg.series import MAX_DEGREE, N, XSeries, to_rational, x
from knotlab.core.errors import PrincipalPartNonzero

from .polynomials import HomflyPoly


@lru_cache(maxsize=256)
def _monomial_series(t_exp: int, z_exp: int) -> sp.Expr:
    """t^k z^m expanded in x through x^4."""
    expr = sp.exp(t_exp * N * x / 2) * (2 * sp.sinh(x / 2)) ** z_exp
    return sp.expand(sp.series(expr, x, 0, MAX_DEGREE + 1).removeO())


def substitute(poly: HomflyPoly) -> XSeries:
    """
    Raises:
        PrincipalPartNonzero: negative powers of x survive the substitution
    """
    total = sp.Integer(0)
    for (t_exp, z_exp), coefficient in poly.coefficients().items():
        total += to_rational(coefficient) * _monomial_series(t_exp, z_exp)
    result = XSeries.from_expr(total)
    negative = sorted(k for k in result.terms if k < 0)
    if negative:
        raise PrincipalPartNonzero(
            f"x^{negative[0]} survives substituting {poly}",
            details={'x_exps': negative},
        )
    return result
