"""HOMFLY polynomials as Laurent polynomials in t and z with rational coefficients."""
from fractions import Fraction
from typing import Dict, List, Tuple

import sympy as sp

from knotlab.apps.polyalg.series import to_fraction, to_rational

t, z = sp.symbols('t z')

# value of every extra split unknot
DELTA = (t - 1 / t) / z


class HomflyPoly:
    __slots__ = ('expr',)

    def __init__(self, expr=1):
        self.expr = sp.expand(sp.sympify(expr))
        if self.expr.free_symbols - {t, z}:
            raise ValueError(f"HomflyPoly only depends on t and z, got {self.expr}")

    @classmethod
    def from_coefficients(cls, coefficients: Dict[Tuple[int, int], Fraction]) -> 'HomflyPoly':
        return cls(sp.Add(*(to_rational(c) * t ** i * z ** j for (i, j), c in coefficients.items())))

    def coefficients(self) -> Dict[Tuple[int, int], Fraction]:
        """Map (t exponent, z exponent) to the nonzero coefficient."""
        result: Dict[Tuple[int, int], Fraction] = {}
        for term in sp.Add.make_args(self.expr):
            if term == 0:
                continue
            coefficient, monomial = term.as_coeff_Mul()
            powers = monomial.as_powers_dict()
            key = (int(powers.get(t, 0)), int(powers.get(z, 0)))
            result[key] = result.get(key, Fraction(0)) + to_fraction(coefficient)
        return {k: v for k, v in result.items() if v != 0}

    def min_z_degree(self) -> int:
        return min((j for _, j in self.coefficients()), default=0)

    def mirror(self) -> 'HomflyPoly':
        """Polynomial of the mirror image: t -> 1/t, z -> -z."""
        return HomflyPoly(self.expr.subs({t: 1 / t, z: -z}, simultaneous=True))

    def __eq__(self, other):
        if not isinstance(other, HomflyPoly):
            other = HomflyPoly(other)
        return sp.expand(self.expr - other.expr) == 0

    def __hash__(self):
        return hash(tuple(sorted(self.coefficients().items())))

    def __repr__(self):
        return f"HomflyPoly({self.expr})"

    def __str__(self):
        return str(self.expr)

    def to_json(self) -> List[Dict[str, int]]:
        return [
            {'t_exp': i, 'z_exp': j, 'num': c.numerator, 'den': c.denominator}
            for (i, j), c in sorted(self.coefficients().items())
        ]
