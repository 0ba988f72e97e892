from django.apps import AppConfig


class CmapConfig(AppConfig):
    name = 'apps.cmap'
    verbose_name = 'Signed Cyclic Graphs'
