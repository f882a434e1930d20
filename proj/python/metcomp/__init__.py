"""Exact metric-space completion engine.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Points of a completion are regular Cauchy sequences with the
fixed modulus 2^-n, all base arithmetic is exact rational, and every
approximation carries an explicit 2^-k guarantee.
"""

from ._core import (
    DEFAULT_SEED,
    Completion,
    Element,
    FiniteCategory,
    InputError,
    Isometry,
    Point,
    Rational,
    RegularityError,
    RigidityError,
    Space,
    apart,
    approximate_by_base,
    check_commutes,
    check_regularity,
    check_rigidity,
    cli_run,
    completion_iso_roundtrip,
    completion_of,
    embedding_isometry,
    extend_isometry,
    find_ption,
    is_mono,
    is_prime,
    make_point,
    make_space,
    padic_valuation,
    scale_map,
    shift_isometry,
    shifted_completion_of,
    sqrt_point,
    verify_category_axioms,
    verify_isometry,
    verify_metric_axioms,
    __version__,
)

__all__ = [
    "DEFAULT_SEED",
    "Completion",
    "Element",
    "FiniteCategory",
    "InputError",
    "Isometry",
    "Point",
    "Rational",
    "RegularityError",
    "RigidityError",
    "Space",
    "apart",
    "approximate_by_base",
    "check_commutes",
    "check_regularity",
    "check_rigidity",
    "cli_run",
    "completion_iso_roundtrip",
    "completion_of",
    "embedding_isometry",
    "extend_isometry",
    "find_ption",
    "is_mono",
    "is_prime",
    "make_point",
    "make_space",
    "padic_valuation",
    "scale_map",
    "shift_isometry",
    "shifted_completion_of",
    "sqrt_point",
    "verify_category_axioms",
    "verify_isometry",
    "verify_metric_axioms",
    "__version__",
]
