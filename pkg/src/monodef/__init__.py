"""Hochschild cochains, braces and deformations of monoidal functors, in exact arithmetic."""

from .fields import GF, QQ
from .models import (AlgebraPresentation, BialgebraPresentation, Cochain,
                     build_algebra_model, build_bialgebra_model)
from .complex_ops import brace, bracket, cup, differential, pre_jacobi_defect
from .cohomology import cohomology, differential_matrix, is_coboundary
from .deformation import (DeformationJet, GaugeJet, are_equivalent, check_jet,
                          first_order_classes, gauge_act, gauge_compose,
                          gauge_inverse, lift_to_order, obstruction)
from .poisson import check_poisson, check_symmetric, induced_poisson_bracket, quasiclassical_limit

__version__ = "0.1.0"
