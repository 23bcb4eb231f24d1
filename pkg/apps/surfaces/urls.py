from django.urls import path, include

from rest_framework.routers import DefaultRouter

from apps.surfaces.views.surface_view import SurfaceViewSet

router = DefaultRouter()
router.register(r'', SurfaceViewSet, basename='surface')

urlpatterns = [
    path('', include(router.urls)),
]
