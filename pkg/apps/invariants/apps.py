from django.apps import AppConfig


class InvariantsConfig(AppConfig):
    name = 'apps.invariants'
    verbose_name = 'Invariants and Verification'
