"""Global stiffness assembly, reduced solve and Bézier displacement recovery."""
from __future__ import annotations

import itertools
import logging

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .element import BezierStiffness, element_stiffness, element_transform
from .mesh import ConnectivityTables, IgaMesh, build_connectivity

log = logging.getLogger(__name__)

DEFAULT_RTOL = 1e-9
# above this many free DOFs the automatic solver switches from sparse LU to AMG-CG
DIRECT_LIMIT = 40_000


class SingularSystemError(RuntimeError):
    """The reduced stiffness matrix is singular or indefinite."""


def element_matrix_cache(mesh: IgaMesh, k0: BezierStiffness) -> tuple[np.ndarray, np.ndarray]:
    """Distinct unit-modulus element matrices and the per-element index into them.

    On a uniform mesh an element's extraction operator per direction is one of
    first / interior / last (or the identity for a single-element direction),
    so at most ``3**dim`` different ``C_e K0 C_e^T`` products exist.
    """
    types = mesh.element_types()
    codes = types @ (4 ** np.arange(mesh.dim))
    uniq, inverse = np.unique(codes, return_inverse=True)
    mats = []
    for code in uniq:
        t = [(int(code) // 4**a) % 4 for a in range(mesh.dim)]
        ops = [_operator_of_type(mesh.extraction[a].local_ops, t[a]) for a in range(mesh.dim)]
        mats.append(element_stiffness(element_transform(*ops), k0))
    return np.stack(mats), inverse.reshape(-1)


def _operator_of_type(ops: np.ndarray, t: int) -> np.ndarray:
    return {0: ops[min(1, len(ops) - 1)], 1: ops[0], 2: ops[-1], 3: ops[0]}[t]


class Assembler:
    """Reusable assembly of ``K = sum_e E_e C_e K0 C_e^T`` on a fixed pattern.

    The CSR pattern of the global matrix is the control-point stencil (every
    point couples with the points at most two steps away in each direction),
    built once.  Each call only fills the value array.  Element contributions
    are accumulated one local entry at a time over all elements, so the
    summation order is fixed and results are reproducible.
    """

    def __init__(self, mesh: IgaMesh, k0: BezierStiffness,
                 conn: ConnectivityTables | None = None):
        if k0.dim != mesh.dim:
            raise ValueError(f"{k0.dim}D element matrix for a {mesh.dim}D mesh")
        self.mesh = mesh
        self.k0 = k0
        self.conn = conn if conn is not None else build_connectivity(mesh)
        self.ke, self.ke_index = element_matrix_cache(mesh, k0)
        self._build_pattern()

    def _build_pattern(self):
        mesh, dim = self.mesh, self.mesh.dim
        npts = np.array(mesh.npts)
        N = mesh.n_ctrl
        coords = np.stack(np.unravel_index(np.arange(N), mesh.npts[::-1])[::-1], axis=1)
        offsets = np.array(list(itertools.product(range(-2, 3), repeat=dim)))[:, ::-1]
        # offsets are listed z-slowest / x-fastest, i.e. ascending neighbour index
        strides = np.cumprod([1, *mesh.npts[:-1]])
        pairs_p, pairs_q, pairs_o = [], [], []
        for k, off in enumerate(offsets):
            q = coords + off
            ok = np.all((q >= 0) & (q < npts), axis=1)
            p_idx = np.nonzero(ok)[0]
            pairs_p.append(p_idx)
            pairs_q.append(q[ok] @ strides)
            pairs_o.append(np.full(p_idx.size, k))
        p = np.concatenate(pairs_p)
        q = np.concatenate(pairs_q)
        o = np.concatenate(pairs_o)
        order = np.lexsort((q, p))
        p, q, o = p[order], q[order], o[order]
        nnb = np.bincount(p, minlength=N)
        prefix = np.concatenate([[0], np.cumsum(nnb)[:-1]])
        T = int(nnb.sum())
        rank = np.arange(T) - prefix[p]
        rank_table = np.full((N, len(offsets)), -1, dtype=np.int64)
        rank_table[p, o] = rank

        indptr = np.concatenate(
            [dim * (c * T + prefix) for c in range(dim)] + [[dim * dim * T]])
        indices = np.empty(dim * dim * T, dtype=np.int32)
        for c in range(dim):
            for d in range(dim):
                pos = dim * (c * T + prefix[p]) + d * nnb[p] + rank
                indices[pos] = q + d * N
        self.indptr = indptr.astype(np.int64)
        self.indices = indices
        self.nnz = dim * dim * T
        self._T = T
        self._nnb = nnb
        self._prefix = prefix
        self._rank_table = rank_table
        self._offset_index = {tuple(off): k for k, off in enumerate(offsets)}

        perm = sp.csr_matrix((np.arange(1, self.nnz + 1), indices, self.indptr),
                             shape=(mesh.n_dofs, mesh.n_dofs))
        perm_t = perm.T.tocsr()
        perm_t.sort_indices()
        self._transpose = perm_t.data - 1

        # local point pairs: element points a, b and the stencil slot of b - a
        P = 3**dim
        local = np.stack(np.unravel_index(np.arange(P), (3,) * dim)[::-1], axis=1)
        self._point_pairs = [(a, b, self._offset_index[tuple(local[b] - local[a])])
                             for a in range(P) for b in range(P)]

    def assemble(self, moduli: np.ndarray) -> sp.csr_matrix:
        moduli = np.asarray(moduli, dtype=float).reshape(-1)
        if moduli.size != self.mesh.n_elems:
            raise ValueError(f"expected {self.mesh.n_elems} moduli, got {moduli.size}")
        if np.any(moduli <= 0.0):
            raise ValueError("element moduli must be positive")
        dim, P, T = self.mesh.dim, 3**self.mesh.dim, self._T
        pts = self.conn.edof[:, :P]
        data = np.zeros(self.nnz)
        for a, b, slot in self._point_pairs:
            pa = pts[:, a]
            base = dim * self._prefix[pa] + self._rank_table[pa, slot]
            nb = self._nnb[pa]
            for ca in range(dim):
                for cb in range(dim):
                    vals = self.ke[:, ca * P + a, cb * P + b][self.ke_index]
                    data[base + dim * ca * T + cb * nb] += moduli * vals
        data = 0.5 * (data + data[self._transpose])
        n = self.mesh.n_dofs
        return sp.csr_matrix((data, self.indices.copy(), self.indptr.copy()), shape=(n, n))


def assemble(mesh: IgaMesh, k0: BezierStiffness, moduli,
             conn: ConnectivityTables | None = None) -> sp.csr_matrix:
    """One-shot assembly; build an :class:`Assembler` to reuse the pattern."""
    return Assembler(mesh, k0, conn).assemble(moduli)


def assemble_triplets(mesh: IgaMesh, k0: BezierStiffness, moduli,
                      conn: ConnectivityTables | None = None) -> sp.csr_matrix:
    """Plain coordinate-format assembly from the connectivity triplet vectors."""
    conn = conn if conn is not None else build_connectivity(mesh)
    moduli = np.asarray(moduli, dtype=float).reshape(-1)
    if np.any(moduli <= 0.0):
        raise ValueError("element moduli must be positive")
    ke, idx = element_matrix_cache(mesh, k0)
    vals = (ke[idx] * moduli[:, None, None]).transpose(0, 2, 1).reshape(-1)
    n = mesh.n_dofs
    K = sp.coo_matrix((vals, (conn.triplet_rows, conn.triplet_cols)), shape=(n, n)).tocsr()
    return ((K + K.T) / 2).tocsr()


def rigid_body_modes(mesh: IgaMesh) -> np.ndarray:
    """Control values of the rigid motions, ``(n_dofs, 3 or 6)``.

    Quadratic B-splines reproduce linear fields when the control values are
    the field sampled at the Greville abscissae.
    """
    greville = [np.concatenate([[0.0], np.arange(n) + 0.5, [float(n)]]) for n in mesh.nel]
    grids = np.meshgrid(*greville[::-1], indexing="ij")
    X = [g.ravel() for g in grids[::-1]]
    N = mesh.n_ctrl
    zero, one = np.zeros(N), np.ones(N)
    if mesh.dim == 2:
        x, y = X
        modes = [(one, zero), (zero, one), (-y, x)]
    else:
        x, y, z = X
        modes = [(one, zero, zero), (zero, one, zero), (zero, zero, one),
                 (-y, x, zero), (zero, -z, y), (z, zero, -x)]
    return np.stack([np.concatenate(m) for m in modes], axis=1)


def solve_displacements(K: sp.spmatrix, f: np.ndarray, fixed_dofs, method: str = "auto",
                        rtol: float = DEFAULT_RTOL, x0: np.ndarray | None = None,
                        near_null: np.ndarray | None = None) -> np.ndarray:
    """Solve ``K u = f`` with ``u = 0`` on ``fixed_dofs``.

    ``method`` is ``"direct"`` (sparse LU in symmetric mode), ``"amg"``
    (conjugate gradients preconditioned by smoothed-aggregation AMG) or
    ``"auto"``.  Whatever the method, the relative residual of the reduced
    system is checked against ``rtol``.
    """
    n = K.shape[0]
    f = np.asarray(f, dtype=float)
    if f.shape != (n,):
        raise ValueError(f"load vector has shape {f.shape}, expected ({n},)")
    fixed = np.unique(np.asarray(fixed_dofs, dtype=np.int64))
    free = np.setdiff1d(np.arange(n), fixed)
    u = np.zeros(n)
    ff = f[free]
    fnorm = np.linalg.norm(ff)
    if fnorm == 0.0:
        return u
    Kff = sp.csr_matrix(K)[free][:, free]
    if method == "auto":
        method = "direct" if free.size <= DIRECT_LIMIT else "amg"
    if method == "direct":
        uf = _solve_direct(Kff, ff)
    elif method == "amg":
        guess = None if x0 is None else np.asarray(x0, dtype=float)[free]
        B = None if near_null is None else near_null[free]
        uf = _solve_amg(Kff, ff, rtol, guess, B)
    else:
        raise ValueError(f"unknown solver method {method!r}")
    res = np.linalg.norm(Kff @ uf - ff) / fnorm
    if not np.isfinite(res) or res > rtol:
        raise SingularSystemError(
            f"reduced solve residual {res:.3e} exceeds {rtol:.0e}; "
            "the boundary conditions may leave rigid-body motion unconstrained")
    if ff @ uf <= 0.0:
        raise SingularSystemError(
            "nonpositive compliance: reduced stiffness matrix is not positive definite")
    u[free] = uf
    return u


def _solve_direct(Kff: sp.csr_matrix, ff: np.ndarray) -> np.ndarray:
    try:
        lu = spla.splu(Kff.tocsc(), permc_spec="MMD_AT_PLUS_A", diag_pivot_thresh=0.0,
                       options={"SymmetricMode": True})
    except RuntimeError as exc:
        raise SingularSystemError(
            f"sparse factorization failed ({exc}); "
            "the boundary conditions may leave rigid-body motion unconstrained") from exc
    pivots = lu.U.diagonal()
    scale = np.abs(pivots).max()
    if pivots.min() <= 1e-13 * scale:
        raise SingularSystemError(
            f"reduced stiffness matrix is singular or indefinite "
            f"(smallest pivot {pivots.min():.3e}, largest {scale:.3e}); "
            "check that the supports suppress every rigid-body motion")
    uf = lu.solve(ff)
    # one step of iterative refinement keeps high-contrast designs well inside rtol
    return uf + lu.solve(ff - Kff @ uf)


def _solve_amg(Kff, ff, rtol, x0, B):
    import pyamg

    ml = pyamg.smoothed_aggregation_solver(Kff, B=B, symmetry="hermitian",
                                           max_coarse=2000)
    M = ml.aspreconditioner(cycle="V")
    iters = 0

    def count(_):
        nonlocal iters
        iters += 1

    uf, info = spla.cg(Kff, ff, x0=x0, rtol=rtol * 0.5, atol=0.0, maxiter=2000, M=M,
                       callback=count)
    log.debug("AMG-CG converged in %d iterations (info=%d)", iters, info)
    if info < 0:
        raise SingularSystemError(f"conjugate gradients broke down (info={info})")
    return uf


def _apply_transpose_along(arr: np.ndarray, G: sp.spmatrix, axis: int) -> np.ndarray:
    moved = np.moveaxis(arr, axis, -1)
    out = (G.T @ moved.reshape(-1, moved.shape[-1]).T).T
    return np.moveaxis(out.reshape(*moved.shape[:-1], G.shape[1]), -1, axis)


def bezier_displacements(u: np.ndarray, mesh: IgaMesh, extraction=None) -> np.ndarray:
    """Control-point displacements of the Bézier decomposition.

    Each displacement component is mapped with ``(G_z ⊗ G_y ⊗ G_x)^T``,
    applied one direction at a time.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (mesh.n_dofs,):
        raise ValueError(f"displacement vector has shape {u.shape}, expected ({mesh.n_dofs},)")
    G = [e.global_matrix for e in (extraction or mesh.extraction)]
    blocks = []
    for c in range(mesh.dim):
        arr = u[c * mesh.n_ctrl:(c + 1) * mesh.n_ctrl].reshape(mesh.npts[::-1])
        for a in range(mesh.dim):
            arr = _apply_transpose_along(arr, G[a], mesh.dim - 1 - a)
        blocks.append(arr.reshape(-1))
    return np.concatenate(blocks)
