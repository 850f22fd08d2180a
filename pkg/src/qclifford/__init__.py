"""Quasi-Clifford algebras of colored graphs.

Exact GF(2) classification of the quadratic form a graph defines, the
isomorphism type of its algebra and Lie algebras, and checks of the
left-regular spin representation.
"""
from .algebra import (AlgebraContext, AlgebraElement, bracket, center_basis, grading,
                      ideal_split, lambda_, multiply, tau_H, tau_Q)
from .classify import (FieldType, IsoType, LieIsoType, algebra_iso, clifford_report, dim_of,
                       en_report, lie_iso)
from .gf2core import (BitVec, QType, QuadClass, QuadSpace, SymplecticDecomposition,
                      classify_quadratic, eval_f, eval_Q, radical_f, radical_Q,
                      random_basis_change, symplectic_decompose)
from .graphs import (ColoredGraph, beineke_check, build_space, family,
                     find_minus_type_6_subgraph, line_graph_root, parse_graph, reduce_graph)
from .lie import closure_points, g_omega_model, identify_K
from .spin import left_regular_rep, plane_models, transpose_check, verify_spin

__version__ = "0.1.0"
