"""
Shared plumbing for the knotlab management commands.
"""
import json
import logging

from django.core.management.base import BaseCommand, CommandError

from knotlab.apps.invariants.formulas import EvalOptions
from knotlab.apps.matchcount.catalog import cached_catalog, default_catalog
from knotlab.core.errors import KnotLabError

from .corpus import read_code

logger = logging.getLogger(__name__)

JSON = 'json'
TEXT = 'text'


class KnotLabCommand(BaseCommand):
    """
    Adds ``--format`` and ``--catalog`` and turns KnotLabError into a
    CommandError carrying the error's exit code.

    Subclasses implement ``run(**options)`` returning a JSON-serializable
    document and may override ``render_text``.
    """

    takes_file = False

    def add_arguments(self, parser):
        if self.takes_file:
            parser.add_argument('file', type=str, help='SGC v1 link code file')
        parser.add_argument(
            '--format',
            choices=[JSON, TEXT],
            default=JSON,
            help='Output format (default: json)',
        )
        parser.add_argument(
            '--catalog',
            type=str,
            default=None,
            help='Path to configurations.txt (default: KNOTLAB_CATALOG_PATH)',
        )

    def eval_options(self, options) -> EvalOptions:
        path = options.get('catalog')
        try:
            return EvalOptions(catalog=cached_catalog(path) if path else default_catalog())
        except OSError as exc:
            raise CommandError(f"cannot read catalog {path}: {exc}", returncode=2) from exc

    def read_link(self, options):
        try:
            return read_code(options['file'])
        except OSError as exc:
            raise CommandError(f"cannot read {options['file']}: {exc}", returncode=2) from exc

    def handle(self, *args, **options):
        try:
            document = self.run(**options)
        except KnotLabError as exc:
            logger.debug(f"{type(self).__module__} failed with {exc}")
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        if options['format'] == JSON:
            self.stdout.write(json.dumps(document, sort_keys=True, indent=2))
        else:
            self.stdout.write(self.render_text(document))
        self.after_output(document)

    def run(self, **options):
        raise NotImplementedError

    def render_text(self, document) -> str:
        return json.dumps(document, sort_keys=True)

    def after_output(self, document) -> None:
        """Hook for commands whose exit code depends on the result."""
