"""
URL configuration for the api app.
"""
from django.urls import path

from .views import HomflyView, InvariantsView, SeriesView

urlpatterns = [
    path('invariants/', InvariantsView.as_view(), name='invariants'),
    path('homfly/', HomflyView.as_view(), name='homfly'),
    path('series/', SeriesView.as_view(), name='series'),
]
