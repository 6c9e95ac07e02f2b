"""
Management command running the corpus verification suite.
"""
import logging

from django.conf import settings
from django.core.management.base import CommandError

from knotlab.apps.weightcheck.sun import check_weight_table

from ...base import KnotLabCommand
from ...corpus import full_corpus
from ...tasks import verify_code

logger = logging.getLogger(__name__)


class Command(KnotLabCommand):
    help = 'Check HOMFLY agreement, skein identities and invariance on fixtures plus random diagrams'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help='Random corpus seed (default: KNOTLAB_VERIFY_SEED)',
        )
        parser.add_argument(
            '--size',
            type=int,
            default=None,
            help='Number of random diagrams (default: KNOTLAB_VERIFY_SIZE)',
        )

    def run(self, **options):
        seed = options['seed'] if options['seed'] is not None else settings.KNOTLAB_VERIFY_SEED
        size = options['size'] if options['size'] is not None else settings.KNOTLAB_VERIFY_SIZE
        self.eval_options(options)  # unreadable catalog: exit 2 before dispatching

        pending = [
            verify_code.delay(name, code, options.get('catalog'), seed + k)
            for k, (name, code) in enumerate(full_corpus(seed, size))
        ]
        results = [result.get() for result in pending]
        failed = sorted((r for r in results if not r['ok']), key=lambda r: r['name'])

        weight_mismatches = check_weight_table()
        logger.info(f"verify: {len(results) - len(failed)}/{len(results)} diagrams passed")
        return {
            'seed': seed,
            'size': size,
            'diagrams': len(results),
            'failed': failed,
            'weight_mismatches': weight_mismatches,
            'ok': not failed and not weight_mismatches,
        }

    def render_text(self, document):
        lines = [f"{document['diagrams']} diagrams checked (seed {document['seed']})"]
        for result in document['failed']:
            checks = ', '.join(f['check'] for f in result['failures'])
            lines.append(f"FAIL {result['name']}: {checks}")
        for mismatch in document['weight_mismatches']:
            lines.append(f"FAIL weight {mismatch['key']} at N={mismatch['N']}")
        lines.append('OK' if document['ok'] else 'FAILED')
        return '\n'.join(lines)

    def after_output(self, document):
        if not document['ok']:
            raise CommandError('verification failed', returncode=1)
