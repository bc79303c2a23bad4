"""Exact intersection calculus and cone certification for boundary 2-strata.

Thin re-export of the compiled extension module. Strata are passed as
(I, J, K) label triples, class vectors as lists of 420 integers, and
rational LP data (coefficients, certificate functionals) as strings.
"""

from ._stratacones import (
    act,
    class_count,
    class_reps,
    classify,
    custom_membership,
    divisor_count,
    fixture_names,
    gram_rank,
    kv_lift_class,
    kv_lift_count,
    line_arrangement,
    membership,
    pair,
    self_intersection,
    special_labels,
    stratum_class,
    stratum_count,
    surface_class,
)

__all__ = [
    "act",
    "class_count",
    "class_reps",
    "classify",
    "custom_membership",
    "divisor_count",
    "fixture_names",
    "gram_rank",
    "kv_lift_class",
    "kv_lift_count",
    "line_arrangement",
    "membership",
    "pair",
    "self_intersection",
    "special_labels",
    "stratum_class",
    "stratum_count",
    "surface_class",
]
