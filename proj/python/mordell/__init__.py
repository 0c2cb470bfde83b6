"""Mordell curves y^2 = x^3 + k^2 carrying three rational points.

Integers may be passed as int or decimal strings; rational coordinates as
int, fractions.Fraction or "n/m" strings. Points are (x, y) tuples, with None
for the point at infinity.
"""

from ._mordell import (
    DegenerateInput,
    Error,
    InvalidArgument,
    ParseError,
    PrecisionUnreachable,
    SingularPoint,
    TangentContained,
    add,
    build_instance,
    canonical_height,
    compute_k,
    compute_points,
    independence_verdict,
    is_on_curve,
    order_of_point,
    regulator,
    scalar_mul,
    tangent_third_point,
    torsion_subgroup,
    verify_derivation,
)

__all__ = [
    "DegenerateInput",
    "Error",
    "InvalidArgument",
    "ParseError",
    "PrecisionUnreachable",
    "SingularPoint",
    "TangentContained",
    "add",
    "build_instance",
    "canonical_height",
    "compute_k",
    "compute_points",
    "independence_verdict",
    "is_on_curve",
    "order_of_point",
    "regulator",
    "scalar_mul",
    "tangent_third_point",
    "torsion_subgroup",
    "verify_derivation",
]
