"""Support values, wedge distances, epsilon and exponent selection."""
from polyrep.metrics.bundle import (
    MetricsBundle,
    choose_eps_bar,
    choose_exponent,
    compute_metrics,
    eps_bar_is_admissible,
    exponent_float_bound,
)
from polyrep.metrics.support import diameter_sq, diameter_upper, recenter, support_value
from polyrep.metrics.wedge import INFINITY, Wedge, face_epsilon_sq, wedge_distance_sq

__all__ = [
    'support_value',
    'recenter',
    'diameter_sq',
    'diameter_upper',
    'Wedge',
    'INFINITY',
    'wedge_distance_sq',
    'face_epsilon_sq',
    'MetricsBundle',
    'choose_eps_bar',
    'eps_bar_is_admissible',
    'choose_exponent',
    'exponent_float_bound',
    'compute_metrics',
]
