"""
API views computing invariants, HOMFLY polynomials and series of a link code.
"""
import logging

from rest_framework import permissions, status
from rest_framework.response import Response
from rest_framework.views import APIView

from knotlab.apps.homfly.skein import homfly
from knotlab.apps.invariants.reports import all_invariants
from knotlab.apps.polyalg.assembly import homfly_series
from knotlab.core.errors import KnotLabError

from .serializers import LinkCodeSerializer

logger = logging.getLogger(__name__)


def error_response(exc: KnotLabError) -> Response:
    return Response({'error': exc.message, 'type': type(exc).__name__}, status=status.HTTP_400_BAD_REQUEST)


class LinkCodeView(APIView):
    """Base view: validate ``{"code": ...}`` and hand the LinkCode to ``compute``."""

    permission_classes = [permissions.AllowAny]

    def post(self, request):
        serializer = LinkCodeSerializer(data=request.data)
        if not serializer.is_valid():
            detail = serializer.errors['code'][0]
            return Response({'error': str(detail), 'type': detail.code}, status=status.HTTP_400_BAD_REQUEST)
        try:
            document = self.compute(serializer.validated_data['code'])
        except KnotLabError as exc:
            logger.warning(f"{type(self).__name__}: {exc}")
            return error_response(exc)
        return Response(document, status=status.HTTP_200_OK)

    def compute(self, link):
        raise NotImplementedError


class InvariantsView(LinkCodeView):
    def compute(self, link):
        return all_invariants(link).to_json()


class HomflyView(LinkCodeView):
    def compute(self, link):
        return {'homfly': homfly(link).to_json()}


class SeriesView(LinkCodeView):
    def compute(self, link):
        return {'series': homfly_series(link, all_invariants(link)).to_json()}
