"""Isogeometric SIMP topology optimization on quadratic B-spline meshes."""
from .assembly import Assembler, SingularSystemError, assemble, bezier_displacements, solve_displacements
from .element import (BezierStiffness, ConstitutiveModel, bezier_stiffness, bezier_stiffness_2d,
                      bezier_stiffness_3d, element_stiffness, element_transform)
from .mesh import (BoundaryCase, IgaMesh, boundary_cantilever_3d, boundary_half_mbb,
                   build_connectivity, build_mesh)
from .optimize import (OptimizationConfig, OptimizationResult, oc_update, run_optimization,
                       simp_modulus)
from .splines import ExtractionOperatorSet, KnotVector, global_extraction_matrix

__version__ = "0.1.0"

__all__ = [
    "Assembler", "BezierStiffness", "BoundaryCase", "ConstitutiveModel", "ExtractionOperatorSet",
    "IgaMesh", "KnotVector", "OptimizationConfig", "OptimizationResult", "SingularSystemError",
    "assemble", "bezier_displacements", "bezier_stiffness", "bezier_stiffness_2d",
    "bezier_stiffness_3d", "boundary_cantilever_3d", "boundary_half_mbb", "build_connectivity",
    "build_mesh", "element_stiffness", "element_transform", "global_extraction_matrix",
    "oc_update", "run_optimization", "simp_modulus", "solve_displacements",
]
