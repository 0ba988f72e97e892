from django.apps import AppConfig


class MedialConfig(AppConfig):
    name = 'apps.medial'
    verbose_name = 'Medial Construction'
