"""
Management command running the fixed checks on the curated fixtures.
"""
from django.core.management.base import CommandError

from ...base import KnotLabCommand
from ...selftest import run_selftest


class Command(KnotLabCommand):
    help = 'Run the worked-example, component-count, weight-table and unknot checks'

    def run(self, **options):
        results = run_selftest(self.eval_options(options))
        return {'checks': results, 'ok': not any(results.values())}

    def render_text(self, document):
        lines = []
        for name, failures in document['checks'].items():
            lines.append(f"{name}: {'ok' if not failures else 'FAILED'}")
            lines.extend(f"  {message}" for message in failures)
        return '\n'.join(lines)

    def after_output(self, document):
        if not document['ok']:
            raise CommandError('selftest failed', returncode=1)
