"""SIMP compliance minimization with a sensitivity filter and an OC update."""
from __future__ import annotations

import itertools
import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import scipy.sparse as sp

from .assembly import Assembler, bezier_displacements, rigid_body_modes, solve_displacements
from .element import REFERENCE_SHEAR_SCALE_3D, BezierStiffness, bezier_stiffness
from .mesh import BoundaryCase, IgaMesh

log = logging.getLogger(__name__)


class DegenerateUpdateWarning(UserWarning):
    """The OC step had no usable sensitivity information."""


@dataclass(frozen=True)
class OptimizationConfig:
    nel: tuple[int, ...]
    volfrac: float
    penal: float = 3.0
    rmin: float = 1.5
    E0: float = 1.0
    Emin: float = 1e-3
    nu: float = 0.3
    move: float = 0.2
    eta: float = 0.5
    change_tol: float = 0.01
    bisect_lo: float = 0.0
    bisect_hi: float = 1e9
    bisect_tol: float = 1e-3
    gamma: float = 1e-3
    max_iter: int = 1000
    shear_scale: float = REFERENCE_SHEAR_SCALE_3D
    solver: str = "auto"

    def __post_init__(self):
        object.__setattr__(self, "nel", tuple(int(n) for n in self.nel))
        if len(self.nel) not in (2, 3) or min(self.nel) < 1:
            raise ValueError(f"need 2 or 3 positive element counts, got {self.nel}")
        if not 0.0 < self.volfrac <= 1.0:
            raise ValueError(f"volfrac must lie in (0, 1], got {self.volfrac}")
        if not 0.0 < self.Emin < self.E0:
            raise ValueError(f"need 0 < Emin < E0, got Emin={self.Emin}, E0={self.E0}")
        for name in ("penal", "rmin", "move", "eta", "change_tol", "bisect_hi",
                     "bisect_tol", "gamma", "max_iter"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.solver not in ("auto", "direct", "amg"):
            raise ValueError(f"unknown solver {self.solver!r}")

    @property
    def dim(self) -> int:
        return len(self.nel)


@dataclass
class IterationRecord:
    loop: int
    compliance: float
    volume: float
    change: float


@dataclass
class IterationState:
    """Everything one optimization step saw; handed to the per-iteration callback."""

    record: IterationRecord
    x: np.ndarray
    x_new: np.ndarray
    dc: np.ndarray
    dc_filtered: np.ndarray
    u: np.ndarray
    K: sp.csr_matrix
    f: np.ndarray


@dataclass
class OptimizationResult:
    x: np.ndarray
    shape: tuple[int, ...]
    history: list[IterationRecord] = field(default_factory=list)
    converged: bool = False

    @property
    def iterations(self) -> int:
        return len(self.history)

    @property
    def compliance_history(self) -> np.ndarray:
        return np.array([r.compliance for r in self.history])

    @property
    def change_history(self) -> np.ndarray:
        return np.array([r.change for r in self.history])

    def grid(self) -> np.ndarray:
        """Densities as an array indexed ``[k, j, i]`` (``[j, i]`` in 2D)."""
        return self.x.reshape(self.shape[::-1])


def simp_modulus(x, penal: float = 3.0, E0: float = 1.0, Emin: float = 1e-3):
    x = np.asarray(x, dtype=float)
    if np.any((x < 0.0) | (x > 1.0)):
        raise ValueError("densities must lie in [0, 1]")
    out = Emin + x**penal * (E0 - Emin)
    return out if out.ndim else float(out)


def compliance_and_sensitivity(u_b: np.ndarray, edof_b: np.ndarray, k0: BezierStiffness,
                               x: np.ndarray, penal: float = 3.0, E0: float = 1.0,
                               Emin: float = 1e-3):
    """Compliance, its derivative per element and the unit-modulus element energies.

    The element energy ``ce_e = ub_e^T K0 ub_e`` only needs the Bézier
    displacements of the element, no B-spline element matrix.
    """
    ue = u_b[edof_b]
    ce = np.einsum("ej,jk,ek->e", ue, k0.matrix, ue)
    c = float(np.sum(simp_modulus(x, penal, E0, Emin) * ce))
    dc = -penal * x ** (penal - 1) * (E0 - Emin) * ce
    return c, dc, ce


@dataclass(frozen=True)
class FilterOperator:
    H: sp.csr_matrix
    Hs: np.ndarray
    rmin: float


def build_filter(mesh: IgaMesh, rmin: float) -> FilterOperator:
    """Cone weights ``max(0, rmin - dist)`` between element centroids."""
    if not rmin > 0.0:
        raise ValueError(f"filter radius must be positive, got {rmin}")
    coords = mesh.element_coords()
    nel = np.array(mesh.nel)
    strides = np.cumprod([1, *mesh.nel[:-1]])
    reach = math.ceil(rmin) - 1
    rows, cols, vals = [], [], []
    for off in itertools.product(range(-reach, reach + 1), repeat=mesh.dim):
        w = rmin - math.sqrt(sum(o * o for o in off))
        if w <= 0.0:
            continue
        nb = coords + np.array(off)
        ok = np.all((nb >= 0) & (nb < nel), axis=1)
        rows.append(np.nonzero(ok)[0])
        cols.append(nb[ok] @ strides)
        vals.append(np.full(int(ok.sum()), w))
    n = mesh.n_elems
    H = sp.coo_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                      shape=(n, n)).tocsr()
    H.sort_indices()
    Hs = np.asarray(H.sum(axis=1)).ravel()
    return FilterOperator(H, Hs, float(rmin))


def filter_sensitivity(filt: FilterOperator, x: np.ndarray, dc: np.ndarray,
                       gamma: float = 1e-3) -> np.ndarray:
    return filt.H @ (x * dc) / filt.Hs / np.maximum(gamma, x)


def oc_update(x: np.ndarray, dc: np.ndarray, dv: np.ndarray, volfrac: float,
              move: float = 0.2, eta: float = 0.5, l1: float = 0.0, l2: float = 1e9,
              tol: float = 1e-3) -> np.ndarray:
    """Optimality-criteria update with bisection on the volume multiplier."""
    x = np.asarray(x, dtype=float)
    dc = np.asarray(dc, dtype=float)
    dv = np.broadcast_to(np.asarray(dv, dtype=float), x.shape)
    if np.any(dc > 0.0):
        warnings.warn(f"clamping {int(np.sum(dc > 0))} positive sensitivities to zero",
                      RuntimeWarning, stacklevel=2)
        dc = np.minimum(dc, 0.0)
    lower = np.maximum(0.0, x - move)
    upper = np.minimum(1.0, x + move)
    target = volfrac * x.size

    if not np.any(dc < 0.0):
        warnings.warn("all sensitivities are zero; rescaling toward the volume bound",
                      DegenerateUpdateWarning, stacklevel=2)
        total = x.sum()
        scaled = x * (target / total) if total > 0.0 else np.full_like(x, volfrac)
        return np.clip(scaled, lower, upper)

    # lambda -> 0+: every element with descent information goes to its upper bound
    descent = (dc < 0.0) & (x > 0.0)
    x_hi = np.where(descent, upper, lower)
    if x_hi.sum() <= target:
        return x_hi

    ratio = -dc / dv

    def candidate(lam):
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            step = x * (ratio / lam) ** eta
        # x = 0 times an overflowed factor is still 0
        return np.clip(np.where(np.isnan(step), 0.0, step), lower, upper)

    xnew = candidate(l2)
    while (l2 - l1) / (l1 + l2) > tol:
        lmid = 0.5 * (l1 + l2)
        if not l1 < lmid < l2:
            # bracket exhausted in floating point (multiplier below the smallest double)
            break
        xnew = candidate(lmid)
        if xnew.sum() > target:
            l1 = lmid
        else:
            l2 = lmid
    return xnew


def run_optimization(config: OptimizationConfig, boundary: BoundaryCase,
                     callback: Callable[[IterationState], None] | None = None,
                     k0: BezierStiffness | None = None) -> OptimizationResult:
    mesh = IgaMesh(config.dim, config.nel)
    if boundary.n_dofs != mesh.n_dofs:
        raise ValueError(f"boundary case has {boundary.n_dofs} DOFs, mesh has {mesh.n_dofs}")
    if k0 is None:
        extra = {"shear_scale": config.shear_scale} if config.dim == 3 else {}
        k0 = bezier_stiffness(config.dim, config.nu, **extra)
    assembler = Assembler(mesh, k0)
    edof_b = assembler.conn.edof_b
    filt = build_filter(mesh, config.rmin)
    f = boundary.load_vector()
    near_null = rigid_body_modes(mesh)
    dv = np.ones(mesh.n_elems)

    x = np.full(mesh.n_elems, float(config.volfrac))
    result = OptimizationResult(x, mesh.nel)
    u = None
    change = 1.0
    loop = 0
    while change > config.change_tol and loop < config.max_iter:
        loop += 1
        E = simp_modulus(x, config.penal, config.E0, config.Emin)
        K = assembler.assemble(E)
        u = solve_displacements(K, f, boundary.fixed_dofs, method=config.solver,
                                x0=u, near_null=near_null)
        u_b = bezier_displacements(u, mesh)
        c, dc, _ = compliance_and_sensitivity(u_b, edof_b, k0, x, config.penal,
                                              config.E0, config.Emin)
        dcf = filter_sensitivity(filt, x, dc, config.gamma)
        x_new = oc_update(x, dcf, dv, config.volfrac, config.move, config.eta,
                          config.bisect_lo, config.bisect_hi, config.bisect_tol)
        change = float(np.max(np.abs(x_new - x)))
        record = IterationRecord(loop, c, float(np.mean(x_new)), change)
        result.history.append(record)
        log.debug("iteration %d: c=%.6g vol=%.4f change=%.4f", loop, c, record.volume, change)
        if callback is not None:
            callback(IterationState(record, x, x_new, dc, dcf, u, K, f))
        x = x_new

    result.x = x
    result.converged = change <= config.change_tol
    if not result.converged:
        log.warning("stopped at the iteration cap (%d) with change %.4f", loop, change)
    return result
