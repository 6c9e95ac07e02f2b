"""
Exact coefficient algebra.

NPoly is a Laurent polynomial in N with rational coefficients; XSeries is a
Laurent series in x whose coefficients are NPolys, kept in the window
x^-4 .. x^4. Products drop everything above x^4 and refuse to produce a term
below x^-4.
"""
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Union

import sympy as sp

from knotlab.core.errors import RangeOverflow

N, x = sp.symbols('N x')

MAX_DEGREE = 4
MIN_DEGREE = -4

Scalar = Union[int, Fraction, sp.Rational]


def to_rational(value: Scalar) -> sp.Rational:
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    return sp.Rational(value)


def to_fraction(value: sp.Rational) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


class NPoly:
    """Laurent polynomial in N, stored as an expanded sympy expression."""

    __slots__ = ('expr',)

    def __init__(self, expr=0):
        self.expr = sp.expand(sp.sympify(expr))
        if self.expr.free_symbols - {N}:
            raise ValueError(f"NPoly only depends on N, got {self.expr}")

    @classmethod
    def from_coefficients(cls, coefficients: Dict[int, Scalar]) -> 'NPoly':
        return cls(sp.Add(*(to_rational(c) * N ** k for k, c in coefficients.items())))

    def coefficients(self) -> Dict[int, Fraction]:
        """Map exponent of N to its nonzero coefficient."""
        result: Dict[int, Fraction] = {}
        for term in sp.Add.make_args(self.expr):
            if term == 0:
                continue
            coefficient, exponent = term.as_coeff_exponent(N)
            result[int(exponent)] = result.get(int(exponent), Fraction(0)) + to_fraction(coefficient)
        return {k: v for k, v in result.items() if v != 0}

    def is_zero(self) -> bool:
        return self.expr == 0

    def evaluate(self, n: Union[int, float]) -> float:
        return float(self.expr.subs(N, n))

    def __add__(self, other: 'NPoly') -> 'NPoly':
        return NPoly(self.expr + other.expr)

    def __sub__(self, other: 'NPoly') -> 'NPoly':
        return NPoly(self.expr - other.expr)

    def __mul__(self, other: 'NPoly') -> 'NPoly':
        return NPoly(self.expr * other.expr)

    def __neg__(self) -> 'NPoly':
        return NPoly(-self.expr)

    def scale(self, factor: Scalar) -> 'NPoly':
        return NPoly(to_rational(factor) * self.expr)

    def __eq__(self, other):
        if not isinstance(other, NPoly):
            other = NPoly(other)
        return sp.expand(self.expr - other.expr) == 0

    def __hash__(self):
        return hash(tuple(sorted(self.coefficients().items())))

    def __repr__(self):
        return f"NPoly({self.expr})"


class XSeries:
    """
    Truncated Laurent series in x with NPoly coefficients.

    Raises:
        RangeOverflow: a term below x^-4 is created
    """

    __slots__ = ('terms',)

    def __init__(self, terms: Dict[int, NPoly] = None):
        cleaned: Dict[int, NPoly] = {}
        for k, coefficient in (terms or {}).items():
            if k < MIN_DEGREE:
                if coefficient.is_zero():
                    continue
                raise RangeOverflow(f"term x^{k} is below the x^{MIN_DEGREE} window", details={'x_exp': k})
            if k > MAX_DEGREE or coefficient.is_zero():
                continue
            cleaned[k] = coefficient
        self.terms = cleaned

    @classmethod
    def one(cls) -> 'XSeries':
        return cls({0: NPoly(1)})

    @classmethod
    def monomial(cls, degree: int, coefficient) -> 'XSeries':
        if not isinstance(coefficient, NPoly):
            coefficient = NPoly(coefficient)
        return cls({degree: coefficient})

    @classmethod
    def from_expr(cls, expr) -> 'XSeries':
        """Collect an expression that is a Laurent polynomial in x and N."""
        grouped: Dict[int, sp.Expr] = {}
        for term in sp.Add.make_args(sp.expand(expr)):
            if term == 0:
                continue
            coefficient, exponent = term.as_coeff_exponent(x)
            grouped[int(exponent)] = grouped.get(int(exponent), 0) + coefficient
        return cls({k: NPoly(v) for k, v in grouped.items()})

    def to_expr(self) -> sp.Expr:
        return sp.Add(*(coefficient.expr * x ** k for k, coefficient in self.terms.items()))

    def coefficient(self, degree: int) -> NPoly:
        return self.terms.get(degree, NPoly(0))

    def min_degree(self) -> int:
        return min(self.terms) if self.terms else MAX_DEGREE + 1

    def __add__(self, other: 'XSeries') -> 'XSeries':
        keys = set(self.terms) | set(other.terms)
        return XSeries({k: self.coefficient(k) + other.coefficient(k) for k in keys})

    def __sub__(self, other: 'XSeries') -> 'XSeries':
        return self + other.scale(-1)

    def __mul__(self, other: 'XSeries') -> 'XSeries':
        product: Dict[int, sp.Expr] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                if k > MAX_DEGREE:
                    continue
                if k < MIN_DEGREE:
                    raise RangeOverflow(f"product term x^{k} is below the x^{MIN_DEGREE} window",
                                        details={'x_exp': k})
                product[k] = product.get(k, 0) + a.expr * b.expr
        return XSeries({k: NPoly(v) for k, v in product.items()})

    def scale(self, factor) -> 'XSeries':
        if isinstance(factor, NPoly):
            return XSeries({k: c * factor for k, c in self.terms.items()})
        return XSeries({k: c.scale(factor) for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __repr__(self):
        return f"XSeries({self.to_expr()})"

    def to_json(self) -> List[Dict]:
        document = []
        for k in sorted(self.terms):
            document.append({
                'x_exp': k,
                'n_poly': [
                    {'n_exp': e, 'num': c.numerator, 'den': c.denominator}
                    for e, c in sorted(self.terms[k].coefficients().items())
                ],
            })
        return document

    @classmethod
    def from_json(cls, document: Iterable[Dict]) -> 'XSeries':
        return cls({
            entry['x_exp']: NPoly.from_coefficients({
                term['n_exp']: Fraction(term['num'], term['den']) for term in entry['n_poly']
            })
            for entry in document
        })


def series_sum(parts: Iterable[XSeries]) -> XSeries:
    total = XSeries()
    for part in parts:
        total = total + part
    return total


def exp_series(s: XSeries) -> XSeries:
    """exp(s) for a series with no constant or negative part."""
    if s.min_degree() < 1:
        raise RangeOverflow("exp_series needs a series starting at x^1 or higher")
    result = XSeries.one()
    power = XSeries.one()
    for k in range(1, MAX_DEGREE + 1):
        power = power * s
        if not power.terms:
            break
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


def reciprocal(s: XSeries) -> XSeries:
    """1 / s for a series whose constant term is 1 and whose other terms have positive degree."""
    rest = s - XSeries.one()
    if rest.min_degree() < 1:
        raise RangeOverflow("reciprocal needs constant term 1 and no negative powers")
    result = XSeries.one()
    power = XSeries.one()
    for k in range(1, MAX_DEGREE + 1):
        power = power * rest.scale(-1)
        if not power.terms:
            break
        result = result + power
    return result
