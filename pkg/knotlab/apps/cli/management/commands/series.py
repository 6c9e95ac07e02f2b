"""
Management command printing the degree-4 HOMFLY series assembled from the
invariants of a link code.
"""
from knotlab.apps.invariants.reports import all_invariants
from knotlab.apps.polyalg.assembly import homfly_series, kontsevich_series
from knotlab.apps.polyalg.series import XSeries

from ...base import KnotLabCommand


class Command(KnotLabCommand):
    help = 'Assemble the HOMFLY series in x (through x^4) from the invariants of a link code'
    takes_file = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--kontsevich',
            action='store_true',
            help='Also print the su(N) Kontsevich series (no framing, unknot not divided out)',
        )

    def run(self, **options):
        link = self.read_link(options)
        report = all_invariants(link, self.eval_options(options))
        document = {'series': homfly_series(link, report).to_json()}
        if options.get('kontsevich'):
            document['kontsevich'] = kontsevich_series(link, report).to_json()
        return document

    def render_text(self, document):
        lines = [str(XSeries.from_json(document['series']).to_expr())]
        if 'kontsevich' in document:
            lines.append(f"kontsevich: {XSeries.from_json(document['kontsevich']).to_expr()}")
        return '\n'.join(lines)
