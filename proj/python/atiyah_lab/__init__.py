"""Atiyah determinant laboratory: determinants of point configurations in R^3,
the planar four-point angular decomposition, seeded verification sweeps and
derivative-free extremal search."""

from ._core import (
    DegenerateError,
    InvalidSpecError,
    NotConvexError,
    ParseError,
    __version__,
    atiyah_determinant,
    check_conjectures,
    decompose,
    fixture,
    fixture_names,
    format_points,
    minimize,
    parse_points,
    quad_angles,
    run_verification,
    sample,
    triangle_area,
    verify_theorem1,
)

__all__ = [
    "DegenerateError",
    "InvalidSpecError",
    "NotConvexError",
    "ParseError",
    "__version__",
    "atiyah_determinant",
    "check_conjectures",
    "decompose",
    "fixture",
    "fixture_names",
    "format_points",
    "minimize",
    "parse_points",
    "quad_angles",
    "run_verification",
    "sample",
    "triangle_area",
    "verify_theorem1",
]
