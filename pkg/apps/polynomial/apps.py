from django.apps import AppConfig


class PolynomialConfig(AppConfig):
    name = 'apps.polynomial'
    verbose_name = 'Exact Polynomials'
