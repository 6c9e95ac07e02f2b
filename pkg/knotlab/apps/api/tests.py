from unittest import mock

from django.urls import reverse
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from knotlab.core.errors import RangeOverflow

KNOT_6_2 = 'O1- U2- O3- U4+ O6+ U1- O2- U3- O5- U6+ O4+ U5-'
HOPF = 'O1+ U2+\nU1+ O2+'


class InvariantsViewTests(APISimpleTestCase):
    def test_worked_example(self):
        response = self.client.post(reverse('invariants'), {'code': KNOT_6_2}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['v2'], {'0': {'num': -25, 'den': 6}})
        self.assertEqual(response.data['v4_2'], {'0': {'num': 4559, 'den': 360}})

    def test_hopf(self):
        response = self.client.post(reverse('invariants'), {'code': HOPF}, format='json')
        self.assertEqual(response.data['v1'], {'0-1': {'num': 2, 'den': 1}})

    def test_syntax_error(self):
        response = self.client.post(reverse('invariants'), {'code': 'O1+ Q1+'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data['type'], 'CodeSyntaxError')
        self.assertIn('Q1+', response.data['error'])

    def test_validation_error(self):
        response = self.client.post(reverse('invariants'), {'code': 'O1+ O1+'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data['type'], 'ValidationError')

    def test_missing_code(self):
        response = self.client.post(reverse('invariants'), {}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data['type'], 'required')


class HomflyViewTests(APISimpleTestCase):
    def test_unlink(self):
        response = self.client.post(reverse('homfly'), {'code': '.\n.'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['homfly'], [
            {'t_exp': -1, 'z_exp': -1, 'num': -1, 'den': 1},
            {'t_exp': 1, 'z_exp': -1, 'num': 1, 'den': 1},
        ])


class SeriesViewTests(APISimpleTestCase):
    def test_unknot(self):
        response = self.client.post(reverse('series'), {'code': 'O1+ U1+'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['series'], [{'x_exp': 0, 'n_poly': [{'n_exp': 0, 'num': 1, 'den': 1}]}])

    @mock.patch('knotlab.apps.api.views.homfly_series')
    def test_check_failure_is_reported(self, mock_series):
        mock_series.side_effect = RangeOverflow('x^-5 is below the window')
        response = self.client.post(reverse('series'), {'code': HOPF}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data, {'error': 'x^-5 is below the window', 'type': 'RangeOverflow'})
