"""Exact computations for arrangements of labelled graphs.

A labelled graph ``(G, psi)`` gives the affine arrangement with hyperplanes
``x_i = x_j`` for each edge and ``x_i = a`` for each ``a`` in ``psi(v_i)``.
The package decides supersolvability both from an elimination order on the
graph and from the intersection lattice of the cone, computes
characteristic polynomials and exponents, and applies necessary conditions
for freeness.
"""

from .analysis import (
    Classification,
    ExponentReport,
    FreenessVerdict,
    ScanReport,
    Verdict,
    classify,
    explicit_modular_chain,
    exponents_from_order,
    is_modular_maximal_chain,
    scan,
)
from .arrangement import Arrangement, Hyperplane, build_affine, cone
from .instance import InstanceError, dump_instance, load_instance, parse_instance
from .lattice import (
    Flat,
    IntersectionLattice,
    LatticeTooLarge,
    characteristic_polynomial,
    intersection_poset,
    is_modular,
    join,
    meet,
    mobius,
    modular_maximal_chain,
    to_dot,
)
from .pointcount import count_complement_points, interpolate_count_polynomial
from .polynomial import IntPolynomial, integer_root_factorization
from .psi_graph import (
    Chordal,
    EliminationCertificate,
    NotChordal,
    PsiGraph,
    chordality,
    nonfree_edge_witness,
    psi_elimination_order,
    simplicial_vertices,
    verify_certificate,
)

__version__ = "0.1.0"
