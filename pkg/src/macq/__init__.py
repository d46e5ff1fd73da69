"""Moment-angle complexes, their circle quotients, and exact oracles for both."""

from .complexes import (
    SimplicialComplex,
    boundary_simplex,
    cone,
    full_subcomplex,
    intersection,
    is_face,
    l_family,
    link,
    relabel,
    rest,
    simplex,
    skeleton,
    star,
    union,
)
from .chains import hochster_betti, homology, simplicial_homology, zk_chain_complex, zk_homology
from .quotient import ghost_reduce, is_free, koszul_complex, quotient_betti, quotient_matrix
from .spaces import (
    cofibre_type,
    disjoint_points_quotient,
    l_quotient_type,
    l_type,
    link_empty_quotient,
    quotient_type,
    reduced_poincare,
    skeleton_wedge,
    wedge_normal_form,
)

__version__ = "0.1.0"
