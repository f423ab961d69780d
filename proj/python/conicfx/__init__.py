"""Shift-and-add conic plotting in 16.16 fixed point.

Points are (x, y) tuples in pixels. Errors raise ConicError, a ValueError
whose args are (code, message).
"""

from ._core import (
    FIX_2PI,
    MAX_STEP_EXPONENT,
    ConicError,
    ImplicitConic,
    angular_inc,
    aux_radius,
    aux_radius_exact,
    calibrate,
    calibration_number,
    chord_to_arc_exact,
    circle_step_angle,
    circle_step_forward,
    circle_step_reverse,
    closed_form_circle,
    closed_form_hyper,
    coefficient_distance,
    ellipse_from_implicit,
    from_float,
    hyper_initial_value,
    hyper_step_angle,
    hyper_step_forward,
    hyper_step_reverse,
    implicit_from_conjugate,
    implicit_from_ellipse,
    initial_value,
    kmax_for,
    plot_ellipse,
    plot_elliptic_arc,
    plot_hyperbolic_arc,
    shr,
    to_float,
    translate_to_origin,
    vlen,
)

__all__ = [name for name in dir() if not name.startswith("_")]
