"""Exact Lusztig q-weight multiplicities for classical types.

Modules:

- ``poly``: integer polynomials in q
- ``roots``: partitions, root systems, Weyl groups, length functions
- ``kostant``: q-Kostant partition function and the KL polynomials
- ``demazure``: truncated Demazure-operator oracle
- ``crystal``: single-box tensors, raising/lowering operators, energy
- ``ssot``: semistandard oscillating tableaux and their column images
- ``tableaux``: charge and Kostka-Foulkes polynomials
- ``harness``: named checks, sweeps, reports and the result cache
"""

from .crystal import BoxTensor, UnsupportedRegion, crystal_e, crystal_f, energy, enumerate_highest, is_classical_highest
from .demazure import FormalCharacter, character_expansion, demazure_kl_check, kl_character_sum, weyl_character
from .kostant import kl_poly, q_kostant, rect_complement, stable_kl_poly
from .poly import QPolynomial
from .roots import GL_A, STANDARD, LengthFunction, ParameterError, Partition, RootSystem, positive_roots, weyl_group
from .ssot import SSOT, OscHStrip, StripError, epsilon_C, ssot_enumerate, ssot_to_tensor, x_polynomial_boxcase
from .tableaux import charge, kostka_foulkes

__version__ = "0.1.0"

__all__ = [
    "BoxTensor", "FormalCharacter", "GL_A", "LengthFunction", "OscHStrip", "ParameterError", "Partition",
    "QPolynomial", "RootSystem", "SSOT", "STANDARD", "StripError", "UnsupportedRegion", "character_expansion",
    "charge", "crystal_e", "crystal_f", "demazure_kl_check", "energy", "enumerate_highest", "epsilon_C",
    "is_classical_highest", "kl_character_sum", "kl_poly", "kostka_foulkes", "positive_roots", "q_kostant",
    "rect_complement", "ssot_enumerate", "ssot_to_tensor", "stable_kl_poly", "weyl_character", "weyl_group",
    "x_polynomial_boxcase",
]
