from django.urls import path, include

from rest_framework.routers import DefaultRouter

from apps.groups.views.group_view import GroupViewSet

router = DefaultRouter()
router.register(r'', GroupViewSet, basename='group')

urlpatterns = [
    path('', include(router.urls)),
]
