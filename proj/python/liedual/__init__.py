"""Exact-arithmetic workbench for nilpotent-orbit duality and Hikita-type
verification: partition calculus, signed-permutation coset combinatorics,
orbit-scheme ideals over Q, and the two-sided weight-map comparison."""

from ._liedual import (
    __version__,
    a_group_trivial,
    census,
    collapse,
    dual,
    dual_type,
    flatness,
    free_double_cosets,
    hikita_verify,
    induced_from_zero,
    is_orbit_partition,
    kim_betti,
    orbit_dimension,
    orbit_cartan,
    run,
    sat_regular_levi,
    surjectivity_necessary,
    transpose,
    weight_vectors,
    weyl_order,
)

__all__ = [
    "__version__",
    "a_group_trivial",
    "census",
    "collapse",
    "dual",
    "dual_type",
    "flatness",
    "free_double_cosets",
    "hikita_verify",
    "induced_from_zero",
    "is_orbit_partition",
    "kim_betti",
    "orbit_dimension",
    "orbit_cartan",
    "run",
    "sat_regular_levi",
    "surjectivity_necessary",
    "transpose",
    "weight_vectors",
    "weyl_order",
]
