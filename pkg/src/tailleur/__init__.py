"""Coherent deformations of semigroup and path algebras.

Submodules: ``semigroup`` (finite tables), ``cochains`` (additive cochain
complex), ``twists`` (multiplicative twists and star products), ``nerve``
(simplicial oracle), ``geometry`` (plane and sphere tailleur values),
``lattice`` (tiled phase-space random walk) and ``cli``.
"""
from .cochains import (
    RATIONALS,
    Cochain,
    CoefficientGroup,
    coboundary,
    cohomology_rank,
    comp_i,
    cup,
    is_cocycle,
    make_cochain,
    reduce_mod,
)
from .semigroup import (
    SemigroupTable,
    build_from_table,
    composable_tuples,
    make_poset,
    make_quiver,
    matrix_units,
    monomial_semigroup,
    poset_semigroup,
    quiver_path_semigroup,
)
from .twists import Twist, circle_twist, exp_twist, star, triviality_check, verify_twist

__version__ = "0.1.0"
