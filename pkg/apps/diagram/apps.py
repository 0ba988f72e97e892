from django.apps import AppConfig


class DiagramConfig(AppConfig):
    name = 'apps.diagram'
    verbose_name = 'Virtual Link Diagrams'
