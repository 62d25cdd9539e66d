"""Chess-colourable triangulations of the complex projective plane.

A library and command-line tool that constructs a 15-vertex triangulation of
the complex projective plane together with its 33-vertex subdivision, torus
and solid-torus layers, and crystallographic companion, and machine-checks
their combinatorial, group-theoretic, and numerical properties.
"""

from .complexes import (ComplexError, ParseError, SimplicialComplex,
                        barycentric_subdivision, boundary_matrix,
                        build_complex, cone, dual_graph, euler_characteristic,
                        f_vector, from_text, is_simplicial_map, join, link,
                        relabel, simplex, suspension, to_text)
from .colouring import (chess_colouring, class_report, connection_apply,
                        is_even, projectivity_group, regular_colouring,
                        suspension_colour_class)
from .generators import (gen_boundary_simplex, gen_cross_polytope,
                         gen_grid_torus_9, gen_rp2_6, gen_small, gen_torus_7,
                         gen_torus_36pq, gen_x, gen_x_oracle, gen_xbar, gen_y,
                         subcomplex_t_p)
from .geometry import (BarycentricPoint, ProjectiveOperator, barycentric_point,
                       check_equivariance, check_moment_triangulation, f_map,
                       f_map_x, g_map, m_map, moment_mu, moment_mu_tilde,
                       proj_distance, rep_r, vertex_point)
from .labels import (VertexLabel, grid_label, int_label, mid_label, pair_label,
                     parse_label, perm_label, s3_label)
from .symmetry import (GroupElement, are_isomorphic, automorphism_group,
                       group_elements, orbits, verify_s4xs3_action,
                       x_to_y_vertex_map)
from .verify import (HomologyProfile, SphereCertificate, bistellar_is_sphere,
                     homology, is_closed_pseudomanifold,
                     is_combinatorial_manifold, orientable)

__version__ = "0.1.0"
