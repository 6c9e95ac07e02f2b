"""
Management command printing the HOMFLY polynomial of a link code.
"""
from fractions import Fraction

from knotlab.apps.homfly.polynomials import HomflyPoly
from knotlab.apps.homfly.skein import homfly

from ...base import KnotLabCommand


class Command(KnotLabCommand):
    help = 'Compute the HOMFLY polynomial of a link code by skein recursion'
    takes_file = True

    def run(self, **options):
        return {'homfly': homfly(self.read_link(options)).to_json()}

    def render_text(self, document):
        poly = HomflyPoly.from_coefficients({
            (term['t_exp'], term['z_exp']): Fraction(term['num'], term['den'])
            for term in document['homfly']
        })
        return str(poly)
