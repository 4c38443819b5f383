"""Structured tensor-product IGA meshes, connectivity and benchmark supports.

Indices are 0-based throughout the library.  Control points and elements are
numbered x-fastest, then y, then z (bottom row first).  Global DOF ``n`` of
component ``c`` belongs to control point ``n - c * n_ctrl``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .splines import ExtractionOperatorSet


@dataclass(frozen=True)
class IgaMesh:
    dim: int
    nel: tuple[int, ...]

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError(f"dim must be 2 or 3, got {self.dim}")
        if len(self.nel) != self.dim:
            raise ValueError(f"{self.dim}D mesh needs {self.dim} element counts, got {self.nel}")
        if any(int(n) != n or n < 1 for n in self.nel):
            raise ValueError(f"element counts must be positive integers, got {self.nel}")
        object.__setattr__(self, "nel", tuple(int(n) for n in self.nel))

    @property
    def nelx(self) -> int:
        return self.nel[0]

    @property
    def nely(self) -> int:
        return self.nel[1]

    @property
    def nelz(self) -> int | None:
        return self.nel[2] if self.dim == 3 else None

    @property
    def npts(self) -> tuple[int, ...]:
        return tuple(n + 2 for n in self.nel)

    @property
    def npts_b(self) -> tuple[int, ...]:
        return tuple(2 * n + 1 for n in self.nel)

    @property
    def n_ctrl(self) -> int:
        return int(np.prod(self.npts))

    @property
    def n_ctrl_b(self) -> int:
        return int(np.prod(self.npts_b))

    @property
    def n_elems(self) -> int:
        return int(np.prod(self.nel))

    @property
    def n_dofs(self) -> int:
        return self.dim * self.n_ctrl

    @property
    def n_dofs_b(self) -> int:
        return self.dim * self.n_ctrl_b

    @property
    def dofs_per_elem(self) -> int:
        return self.dim * 3**self.dim

    @property
    def grid_shape(self) -> tuple[int, ...]:
        """Element grid as a C-ordered array shape, ``(nelz, nely, nelx)``."""
        return self.nel[::-1]

    @cached_property
    def extraction(self) -> tuple[ExtractionOperatorSet, ...]:
        return tuple(ExtractionOperatorSet.build(n) for n in self.nel)

    def element_coords(self) -> np.ndarray:
        """``(n_elems, dim)`` element grid coordinates ``(i, j[, k])``, 0-based."""
        grids = np.meshgrid(*[np.arange(n) for n in self.nel[::-1]], indexing="ij")
        return np.stack([g.ravel() for g in grids[::-1]], axis=1)

    def element_types(self) -> np.ndarray:
        """Per element, per direction: 0 interior, 1 first, 2 last, 3 sole element."""
        ijk = self.element_coords()
        n = np.array(self.nel)
        return (ijk == 0).astype(int) + 2 * (ijk == n - 1).astype(int)


def build_mesh(dim: int, nelx: int, nely: int, nelz: int | None = None) -> IgaMesh:
    if dim == 2:
        if nelz is not None:
            raise ValueError("2D mesh takes no nelz")
        return IgaMesh(2, (nelx, nely))
    if nelz is None:
        raise ValueError("3D mesh needs nelz")
    return IgaMesh(dim, (nelx, nely, nelz))


def _local_offsets(strides: Sequence[int]) -> np.ndarray:
    # offsets of the 3**dim element points, x fastest
    axes = [np.arange(3) * s for s in strides]
    grids = np.meshgrid(*axes[::-1], indexing="ij")
    return sum(g.ravel() for g in grids)


def _element_points(mesh: IgaMesh, npts: Sequence[int], step: int) -> np.ndarray:
    strides = np.cumprod([1, *npts[:-1]])
    origin = (mesh.element_coords() * step) @ strides
    return origin[:, None] + _local_offsets(strides)[None, :]


@dataclass(frozen=True)
class ConnectivityTables:
    """Element-to-DOF tables of the B-spline mesh and of its Bézier decomposition."""

    mesh: IgaMesh
    edof: np.ndarray
    edof_b: np.ndarray

    @property
    def triplet_rows(self) -> np.ndarray:
        """Row index of every entry of every element matrix, element-major.

        Within an element the local matrix is flattened column-major, i.e. the
        column DOF is the outer loop.  Large (``n_elems * dofs_per_elem**2``);
        computed on access.
        """
        m = self.edof.shape[1]
        return np.repeat(self.edof[:, None, :], m, axis=1).reshape(-1)

    @property
    def triplet_cols(self) -> np.ndarray:
        m = self.edof.shape[1]
        return np.repeat(self.edof[:, :, None], m, axis=2).reshape(-1)

    def element_points(self, e: int) -> np.ndarray:
        return self.edof[e, : 3**self.mesh.dim]


def build_connectivity(mesh: IgaMesh) -> ConnectivityTables:
    pts = _element_points(mesh, mesh.npts, step=1)
    pts_b = _element_points(mesh, mesh.npts_b, step=2)
    edof = np.hstack([pts + c * mesh.n_ctrl for c in range(mesh.dim)])
    edof_b = np.hstack([pts_b + c * mesh.n_ctrl_b for c in range(mesh.dim)])
    edof.setflags(write=False)
    edof_b.setflags(write=False)
    return ConnectivityTables(mesh, edof, edof_b)


@dataclass(frozen=True)
class BoundaryCase:
    """Supports and point loads.  ``fixed_dofs`` and ``load_dofs`` are 0-based."""

    n_dofs: int
    fixed_dofs: np.ndarray
    load_dofs: np.ndarray
    load_values: np.ndarray
    name: str = "custom"
    free_dofs: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        fixed = np.unique(np.asarray(self.fixed_dofs, dtype=np.int64))
        ldofs = np.asarray(self.load_dofs, dtype=np.int64).reshape(-1)
        lvals = np.asarray(self.load_values, dtype=float).reshape(-1)
        if fixed.size == 0:
            raise ValueError("boundary case needs at least one fixed DOF")
        if ldofs.shape != lvals.shape:
            raise ValueError("load DOFs and load values differ in length")
        if not np.any(lvals != 0.0):
            raise ValueError("boundary case needs a nonzero load")
        for name, idx in (("fixed", fixed), ("load", ldofs)):
            if idx.size and (idx.min() < 0 or idx.max() >= self.n_dofs):
                raise ValueError(f"{name} DOF index out of range [0, {self.n_dofs})")
        free = np.setdiff1d(np.arange(self.n_dofs), fixed)
        for name, value in (("fixed_dofs", fixed), ("load_dofs", ldofs),
                            ("load_values", lvals), ("free_dofs", free)):
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @classmethod
    def from_one_based(cls, n_dofs: int, fixed: Sequence[int],
                       loads: Mapping[int, float], name: str = "custom") -> BoundaryCase:
        """Build from 1-based DOF numbers, the convention of config files."""
        ldofs = np.array(list(loads.keys()), dtype=np.int64) - 1
        lvals = np.array(list(loads.values()), dtype=float)
        if np.any(np.asarray(fixed) < 1) or np.any(ldofs < 0):
            raise ValueError("DOF numbers are 1-based and must be >= 1")
        return cls(n_dofs, np.asarray(fixed, dtype=np.int64) - 1, ldofs, lvals, name)

    def load_vector(self) -> np.ndarray:
        f = np.zeros(self.n_dofs)
        np.add.at(f, self.load_dofs, self.load_values)
        return f


def boundary_half_mbb(mesh: IgaMesh) -> BoundaryCase:
    """Half MBB beam: rollers on the left edge, vertical support at the
    bottom-right corner, unit downward load at the top-left corner."""
    if mesh.dim != 2:
        raise ValueError("half-MBB boundary is defined for 2D meshes only")
    nx, ny = mesh.npts
    n = mesh.n_ctrl
    fixed = np.append(np.arange(0, n, nx), n + nx - 1)
    load_dof = n + nx * (ny - 1)
    return BoundaryCase(mesh.n_dofs, fixed, [load_dof], [-1.0], name="mbb2d")


def boundary_cantilever_3d(mesh: IgaMesh) -> BoundaryCase:
    """Cantilever clamped on the x = 0 face, loaded near the centre of the
    opposite face in the third displacement component."""
    if mesh.dim != 3:
        raise ValueError("cantilever boundary is defined for 3D meshes only")
    nx, ny, nz = mesh.npts
    n = mesh.n_ctrl
    fixed = np.arange(0, mesh.n_dofs, nx)
    # last point of row iy (1-based) in plane iz: nx*iy + nx*ny*(iz-1), minus 1 for 0-based
    hy, hz = ny // 2, nz // 2
    pts = np.array([nx * hy + nx * ny * hz,
                    nx * hy + nx * ny * (hz + 1),
                    nx * (hy + 1) + nx * ny * hz,
                    nx * (hy + 1) + nx * ny * (hz + 1)]) - 1
    return BoundaryCase(mesh.n_dofs, fixed, pts + 2 * n,
                        np.full(4, -1.0 / 4), name="cantilever3d")


PRESETS = {"mbb2d": boundary_half_mbb, "cantilever3d": boundary_cantilever_3d}
