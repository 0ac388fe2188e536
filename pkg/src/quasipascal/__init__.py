"""Exact computation of the quasi s-Pascal triangle and its identities."""

from .bisnomial import bisnomial_by_expansion
from .exact_core import QPoly, Series, int_binomial, multinomial
from .q_analogue import q_binomial, q_bisnomial, q_quasi
from .quasi_triangle import quasi, quasi_by_lattice_oracle, triangle_rows
from .rays import Direction, ray_sum_direct, sbonacci

__all__ = [
    "Direction",
    "QPoly",
    "Series",
    "bisnomial_by_expansion",
    "int_binomial",
    "multinomial",
    "q_binomial",
    "q_bisnomial",
    "q_quasi",
    "quasi",
    "quasi_by_lattice_oracle",
    "ray_sum_direct",
    "sbonacci",
    "triangle_rows",
]
