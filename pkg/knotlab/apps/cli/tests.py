import json
import os
import tempfile
from io import StringIO
from unittest import mock

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from knotlab.apps.homfly.expansion import substitute
from knotlab.apps.homfly.skein import homfly
from knotlab.apps.invariants.formulas import EvalOptions
from knotlab.apps.invariants.reports import all_invariants
from knotlab.apps.linkcode.codes import parse_link
from knotlab.apps.polyalg.assembly import kontsevich_series
from knotlab.apps.polyalg.series import XSeries

from .corpus import load_fixtures, random_corpus
from .selftest import COMPONENT_COUNTS, check_component_counts, check_worked_pairings
from .tasks import run_checks, verify_code

FIXTURES = settings.KNOTLAB_FIXTURES_DIR
HOPF = 'O1+ U2+\nU1+ O2+'
D3_ENTRY = 'key: v4.1.D3\ncircles: 1\nchords: 1:1 2:1 3:1 4:1\ncircle1: 1 2 3 4 1 4 2 3'
D3_TYPO = 'key: v4.1.D3\ncircles: 1\nchords: 1:1 2:1 3:1 4:1\ncircle1: 1 2 3 4 1 4 3 2'


def fixture(name):
    return os.path.join(FIXTURES, f'{name}.sgc')


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class CommandTestMixin:
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        return path


class InvariantsCommandTests(CommandTestMixin, SimpleTestCase):
    def test_worked_example(self):
        document = json.loads(run('invariants', fixture('knot_6_2')))
        self.assertEqual(document['v2'], {'0': {'num': -25, 'den': 6}})
        self.assertEqual(document['v3_1'], {'0': {'num': 8, 'den': 1}})
        self.assertEqual(document['v4_1'], {'0': {'num': 4081, 'den': 360}})
        self.assertNotIn('v1', document)

    def test_hopf_text(self):
        output = run('invariants', fixture('hopf_plus'), '--format', 'text')
        self.assertIn('v1[0-1] = 2', output)
        self.assertIn('v3_2[0-1] = 2/3', output)

    def test_output_is_sorted(self):
        output = run('invariants', fixture('unknot'))
        self.assertEqual(output.strip(), json.dumps(json.loads(output), sort_keys=True, indent=2))

    def test_malformed_file(self):
        path = self.write('bad.sgc', 'O1+ X2+\n')
        with self.assertRaises(CommandError) as ctx:
            run('invariants', path)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('CodeSyntaxError', str(ctx.exception))

    def test_invalid_code(self):
        path = self.write('bad.sgc', 'O1+ U1-\n')
        with self.assertRaises(CommandError) as ctx:
            run('invariants', path)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_missing_file(self):
        with self.assertRaises(CommandError) as ctx:
            run('invariants', os.path.join(self.tmp.name, 'absent.sgc'))
        self.assertEqual(ctx.exception.returncode, 2)


class HomflyCommandTests(SimpleTestCase):
    def test_negative_trefoil(self):
        document = json.loads(run('homfly', fixture('trefoil_minus')))
        self.assertEqual(document['homfly'], [
            {'t_exp': 2, 'z_exp': 0, 'num': 2, 'den': 1},
            {'t_exp': 2, 'z_exp': 2, 'num': 1, 'den': 1},
            {'t_exp': 4, 'z_exp': 0, 'num': -1, 'den': 1},
        ])

    def test_unknot(self):
        document = json.loads(run('homfly', fixture('unknot')))
        self.assertEqual(document['homfly'], [{'t_exp': 0, 'z_exp': 0, 'num': 1, 'den': 1}])

    def test_text(self):
        self.assertEqual(run('homfly', fixture('kink'), '--format', 'text').strip(), '1')


class SeriesCommandTests(SimpleTestCase):
    def test_unknot(self):
        document = json.loads(run('series', fixture('unknot')))
        self.assertEqual(document['series'], [{'x_exp': 0, 'n_poly': [{'n_exp': 0, 'num': 1, 'den': 1}]}])

    def test_hopf_matches_homfly(self):
        document = json.loads(run('series', fixture('hopf_plus')))
        self.assertEqual(document['series'], substitute(homfly(parse_link(HOPF))).to_json())
        self.assertNotIn('kontsevich', document)

    def test_kontsevich_flag(self):
        link = parse_link(HOPF)
        document = json.loads(run('series', fixture('hopf_plus'), '--kontsevich'))
        self.assertEqual(document['kontsevich'], kontsevich_series(link, all_invariants(link)).to_json())
        text = run('series', fixture('unknot'), '--kontsevich', '--format', 'text')
        self.assertEqual(text.splitlines()[0], '1')
        self.assertTrue(text.splitlines()[1].startswith('kontsevich: '))


class SelftestCommandTests(CommandTestMixin, SimpleTestCase):
    def test_passes(self):
        document = json.loads(run('selftest'))
        self.assertTrue(document['ok'], document)
        self.assertEqual(set(document['checks']), {
            'worked_pairings', 'worked_invariants', 'worked_homfly',
            'component_counts', 'weights', 'unknot',
        })

    def test_catalog_typo_is_caught(self):
        with open(settings.KNOTLAB_CATALOG_PATH, encoding='utf-8') as handle:
            text = handle.read()
        self.assertIn(D3_ENTRY, text)
        path = self.write('configurations.txt', text.replace(D3_ENTRY, D3_TYPO))
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('selftest', '--catalog', path, stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        document = json.loads(out.getvalue())
        self.assertTrue(document['checks']['worked_pairings'])
        self.assertTrue(document['checks']['worked_invariants'])

    def test_unreadable_catalog(self):
        with self.assertRaises(CommandError) as ctx:
            run('selftest', '--catalog', os.path.join(self.tmp.name, 'absent.txt'))
        self.assertEqual(ctx.exception.returncode, 2)


class SelftestCheckTests(SimpleTestCase):
    def test_component_table_covers_every_split(self):
        self.assertEqual(len(COMPONENT_COUNTS), 19)
        self.assertEqual(check_component_counts(load_fixtures(), EvalOptions()), [])

    @mock.patch('knotlab.apps.cli.selftest.component_count_after', return_value=0)
    def test_component_count_regression_is_reported(self, mock_count):
        failures = check_component_counts(load_fixtures(), EvalOptions())
        self.assertEqual(len(failures), len(COMPONENT_COUNTS))

    def test_worked_pairings(self):
        self.assertEqual(check_worked_pairings(load_fixtures(), EvalOptions()), [])

    @mock.patch('knotlab.apps.cli.selftest.pair', return_value=0)
    def test_worked_pairing_regression_is_reported(self, mock_pair):
        failures = check_worked_pairings(load_fixtures(), EvalOptions())
        self.assertTrue(any('v3.1.D2' in failure for failure in failures), failures)


class VerifyCommandTests(SimpleTestCase):
    @mock.patch('knotlab.apps.cli.management.commands.verify.full_corpus')
    def test_small_corpus_passes(self, mock_corpus):
        mock_corpus.return_value = [('unlink2', '.\n.'), ('hopf', HOPF)]
        document = json.loads(run('verify', '--seed', '3', '--size', '0'))
        mock_corpus.assert_called_once_with(3, 0)
        self.assertTrue(document['ok'])
        self.assertEqual(document['diagrams'], 2)
        self.assertEqual(document['failed'], [])

    @mock.patch('knotlab.apps.cli.management.commands.verify.verify_code')
    @mock.patch('knotlab.apps.cli.management.commands.verify.full_corpus')
    def test_failure_exits_with_one(self, mock_corpus, mock_task):
        mock_corpus.return_value = [('broken', '.')]
        mock_task.delay.return_value.get.return_value = {
            'name': 'broken', 'code': '.', 'ok': False,
            'failures': [{'check': 'master_oracle', 'detail': {}}],
        }
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', '--size', '0', '--format', 'text', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('FAIL broken: master_oracle', out.getvalue())

    def test_random_corpus_run(self):
        with mock.patch('knotlab.apps.cli.corpus.load_fixtures', return_value={}):
            document = json.loads(run('verify', '--seed', '7', '--size', '4'))
        self.assertTrue(document['ok'], document['failed'])
        self.assertEqual(document['diagrams'], 4)


class TaskTests(SimpleTestCase):
    def test_fixtures_pass(self):
        for name, link in load_fixtures().items():
            if link.n_crossings > 6:
                continue
            self.assertEqual(run_checks(link, EvalOptions()), [], name)

    def test_verify_code_reports_input_errors(self):
        result = verify_code('bad', 'O1+ U1-')
        self.assertFalse(result['ok'])
        self.assertEqual(result['failures'][0]['detail']['type'], 'ValidationError')

    def test_verify_code_passes(self):
        result = verify_code('hopf', HOPF)
        self.assertEqual(result, {'name': 'hopf', 'code': HOPF, 'ok': True, 'failures': []})

    @mock.patch('knotlab.apps.cli.tasks.homfly_series_from_kontsevich')
    def test_kontsevich_mismatch_is_reported(self, mock_framed):
        mock_framed.return_value = XSeries()
        failures = run_checks(parse_link(HOPF), EvalOptions())
        self.assertEqual([f['check'] for f in failures], ['kontsevich'])
        self.assertEqual(failures[0]['detail']['kontsevich'], [])


class CorpusTests(SimpleTestCase):
    def test_fixtures(self):
        fixtures = load_fixtures()
        self.assertEqual(len(fixtures), 13)
        self.assertEqual(fixtures['hopf_plus'], parse_link(HOPF))
        self.assertEqual(fixtures['unlink3'].n_components, 3)
        self.assertEqual(fixtures['borromean'].n_crossings, 6)

    def test_random_corpus_is_reproducible(self):
        self.assertEqual(random_corpus(5, 20), random_corpus(5, 20))

    def test_random_corpus_bounds(self):
        corpus = random_corpus(11, 40, max_crossings=5, max_components=2)
        self.assertEqual(len(corpus), 40)
        for _, link in corpus:
            self.assertLessEqual(link.n_crossings, 5)
            self.assertLessEqual(link.n_components, 2)
