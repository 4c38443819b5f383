"""Open uniform quadratic B-splines and their Bézier extraction.

Everything here works per parametric direction.  Multivariate operators are
tensor (Kronecker) products of these univariate pieces, see
:mod:`igatopt.element`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np
import scipy.sparse as sp

DEGREE = 2

# Bézier extraction pattern of an interior element of a uniform quadratic
# B-spline, columns = B-spline functions, rows = Bernstein polynomials.
_INTERIOR_OPERATOR = np.array([[0.5, 0.0, 0.0],
                               [0.5, 1.0, 0.5],
                               [0.0, 0.0, 0.5]])


@dataclass(frozen=True)
class KnotVector:
    """Open knot vector with unit spacing, ``{0,..,0, 1, 2, .., n_el,..,n_el}``."""

    degree: int
    n_el: int
    knots: np.ndarray

    @classmethod
    def open_uniform(cls, n_el: int, degree: int = DEGREE) -> KnotVector:
        if n_el < 1:
            raise ValueError(f"need at least one element, got n_el={n_el}")
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        knots = np.concatenate([np.zeros(degree),
                                np.arange(n_el + 1, dtype=float),
                                np.full(degree, float(n_el))])
        knots.setflags(write=False)
        return cls(degree, n_el, knots)

    @property
    def n_basis(self) -> int:
        return self.n_el + self.degree

    def span(self, xi: float) -> int:
        """Index ``i`` with ``knots[i] <= xi < knots[i+1]``; the last span is closed."""
        lo, hi = self.knots[0], self.knots[-1]
        if not lo <= xi <= hi:
            raise ValueError(f"xi={xi} outside knot range [{lo}, {hi}]")
        if xi == hi:
            return len(self.knots) - self.degree - 2
        return int(np.searchsorted(self.knots, xi, side="right")) - 1


def bernstein_basis(p: int, xi: float) -> np.ndarray:
    """Bernstein polynomials ``C(p,i) xi^i (1-xi)^(p-i)`` for ``i = 0..p``."""
    if not 0.0 <= xi <= 1.0:
        raise ValueError(f"Bernstein parameter must lie in [0, 1], got {xi}")
    return np.array([comb(p, i) * xi**i * (1.0 - xi) ** (p - i)
                     for i in range(p + 1)])


def bspline_basis(kv: KnotVector, xi: float) -> np.ndarray:
    """All B-spline basis values at ``xi`` via the Cox-de Boor recursion.

    Slow and simple on purpose; the optimizer never calls it, the tests use it
    as an independent reference for the extraction operators.
    """
    t = kv.knots
    p = kv.degree
    s = kv.span(xi)
    # degree 0: indicator of the (half-open, last one closed) span
    values = np.zeros(len(t) - 1)
    values[s] = 1.0
    for q in range(1, p + 1):
        nxt = np.zeros(len(t) - 1 - q)
        for i in range(len(nxt)):
            left = t[i + q] - t[i]
            right = t[i + q + 1] - t[i + 1]
            acc = 0.0
            if left > 0.0:
                acc += (xi - t[i]) / left * values[i]
            if right > 0.0:
                acc += (t[i + q + 1] - xi) / right * values[i + 1]
            nxt[i] = acc
        values = nxt
    return values


def local_extraction_operators(n_el: int) -> np.ndarray:
    """Per-element extraction operators, shape ``(n_el, 3, 3)``.

    ``ops[e]`` maps the Bernstein polynomials of element ``e`` onto its three
    active B-spline functions, ``b = ops[e] @ B``.
    """
    if n_el < 1:
        raise ValueError(f"need at least one element, got n_el={n_el}")
    ops = np.repeat(_INTERIOR_OPERATOR[None], n_el, axis=0)
    ops[0, :, 0] = (1.0, 0.0, 0.0)
    ops[-1, :, 2] = (0.0, 0.0, 1.0)
    return ops


def global_extraction_matrix(n_el: int) -> sp.csr_matrix:
    """Change of basis between B-spline and Bézier control values, one direction.

    Rows index the ``n_el + 2`` B-spline control points and columns the
    ``2 n_el + 1`` Bézier control points; Bézier values are ``G.T @ P``.
    """
    if n_el < 1:
        raise ValueError(f"need at least one element, got n_el={n_el}")
    n_pts, n_bez = n_el + 2, 2 * n_el + 1
    r = np.arange(1, n_el + 1)
    rows = [0, *r, n_el + 1]
    cols = [0, *(2 * r - 1), 2 * n_el]
    vals = [1.0] * len(rows)
    # even Bézier points between two knots average their flanking B-spline points
    m = np.arange(1, n_el)
    rows += [*m, *(m + 1)]
    cols += [*(2 * m), *(2 * m)]
    vals += [0.5] * (2 * len(m))
    return sp.csr_matrix((vals, (rows, cols)), shape=(n_pts, n_bez))


@dataclass(frozen=True)
class ExtractionOperatorSet:
    n_el: int
    local_ops: np.ndarray
    global_matrix: sp.csr_matrix

    @classmethod
    def build(cls, n_el: int) -> ExtractionOperatorSet:
        ops = local_extraction_operators(n_el)
        ops.setflags(write=False)
        return cls(n_el, ops, global_extraction_matrix(n_el))

    def element_type(self, e: int) -> int:
        """0 interior, 1 first, 2 last, 3 sole element of the direction."""
        return int(e == 0) + 2 * int(e == self.n_el - 1)
