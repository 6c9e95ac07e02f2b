"""
Management command printing every invariant of a link code.
"""
from fractions import Fraction

from knotlab.apps.invariants.reports import all_invariants

from ...base import KnotLabCommand


class Command(KnotLabCommand):
    help = 'Compute the Vassiliev invariants of degree <= 4 of a link code'
    takes_file = True

    def run(self, **options):
        report = all_invariants(self.read_link(options), self.eval_options(options))
        return report.to_json()

    def render_text(self, document):
        lines = []
        for name, values in sorted(document.items()):
            for index, value in sorted(values.items()):
                lines.append(f"{name}[{index}] = {Fraction(value['num'], value['den'])}")
        return '\n'.join(lines)
