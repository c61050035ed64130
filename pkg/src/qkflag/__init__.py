"""Exact computations in the quantum K-theory of type-A flag manifolds.

The package computes with the torus-equivariant quantum K-theory of
the complete flag manifold through its combinatorial presentation:
permutation windows, a quantum Bruhat graph, wall-crossing chains and
their admissible subsets, tensor-step operators, divided-difference
operators, and quantum double Grothendieck polynomials.  Everything is
exact integer arithmetic over truncated Novikov degrees; there is no
floating point and no external algebra system.
"""

from .chains import LambdaChain, LambdaChainItem, chain_closed_form, chain_for, validate_chain
from .chevalley import (
    AdmissibleSubset,
    KQGClass,
    admissible_subsets,
    f_op,
    identity_class,
    tensor_minuscule,
)
from .demazure import pi, pi_monomial, pi_word, pi_z
from .grothendieck import F_poly, groth, groth_classical, groth_longest
from .qbg import BRUHAT, QUANTUM, QBGEdge, all_edges, edge_kind
from .series import NovikovSeries, ZPolynomial
from .sijection import DPath, classify, enumerate_paths, phi, q_path, telescope_sum
from .verify import (
    Report,
    psi_eval,
    verify_demazure_descent,
    verify_ideal,
    verify_longest,
    verify_main,
    verify_prop_wk,
    verify_sijection,
)
from .weyl import GroupRingElem, all_perms, length, multiply, reduced_word, w_index

__version__ = "0.1.0"

__all__ = [
    "AdmissibleSubset", "BRUHAT", "DPath", "F_poly", "GroupRingElem",
    "KQGClass", "LambdaChain", "LambdaChainItem", "NovikovSeries",
    "QBGEdge", "QUANTUM", "Report", "ZPolynomial", "admissible_subsets",
    "all_edges", "all_perms", "chain_closed_form", "chain_for", "classify",
    "edge_kind", "enumerate_paths", "f_op", "groth", "groth_classical",
    "groth_longest", "identity_class", "length", "multiply", "phi", "pi",
    "pi_monomial", "pi_word", "pi_z", "psi_eval", "q_path", "reduced_word",
    "telescope_sum", "tensor_minuscule", "validate_chain",
    "verify_demazure_descent", "verify_ideal", "verify_longest",
    "verify_main", "verify_prop_wk", "verify_sijection", "w_index",
]
