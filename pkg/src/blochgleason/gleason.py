"""Additivity constraints on ``P_f`` for ``N >= 3`` and the discrete Cauchy system.

On the two-dimensional face of the measurement simplex with barycentric
weights ``(a, b, 1 - a - b, 0, ..., 0)``, additivity of ``P_f`` reduces to

    f(x) + f(y) + f(x3) + (N - 3) f(-1/(N-1)) = 0,   x = (N a - 1)/(N - 1), ...

:func:`scan_face` evaluates the left side on a triangular grid; any ``f``
other than the identity leaves a visible residual.
"""
from dataclasses import dataclass, asdict
from fractions import Fraction

import numpy as np

from .rules import eval_f

FACE_TOL = 1e-12


def alpha(n):
    """``(n - 3) / (n - 1)``."""
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    return (n - 3) / (n - 1)


def face_arguments(n, a, b):
    """The three non-trivial arguments of ``f`` at face point ``(a, b)``."""
    c = 1.0 - a - b
    return ((n * a - 1.0) / (n - 1), (n * b - 1.0) / (n - 1), (n * c - 1.0) / (n - 1))


def _check_face(n, a, b):
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    if a < -FACE_TOL or b < -FACE_TOL or a + b > 1.0 + FACE_TOL:
        raise ValueError(f"({a}, {b}) is not in the face simplex")


def face_residual(f, n, a, b):
    _check_face(n, a, b)
    x, y, z = face_arguments(n, a, b)
    return (eval_f(f, x) + eval_f(f, y) + eval_f(f, z)
            + (n - 3) * eval_f(f, -1.0 / (n - 1)))


def face_weights(n, a, b):
    """Full barycentric weight vector ``(a, b, 1-a-b, 0, ..., 0)`` of length ``n``."""
    _check_face(n, a, b)
    w = np.zeros(n)
    w[:3] = a, b, 1.0 - a - b
    return w


def reduced_residual(f, n, x, y):
    """``f(x) + f(y) + f(alpha - x - y) - alpha``.

    Equals :func:`face_residual` whenever ``f(-1/(N-1)) = -1/(N-1)``.
    """
    al = alpha(n)
    return eval_f(f, x) + eval_f(f, y) + eval_f(f, al - x - y) - al


@dataclass(frozen=True)
class ScanReport:
    n: int
    grid_resolution: int
    max_abs_residual: float
    argmax: tuple
    f_zero_defect: float
    f_minus_defect: float

    def to_dict(self):
        d = asdict(self)
        d["argmax_a"], d["argmax_b"] = d.pop("argmax")
        return d


def face_grid(m):
    """Grid points ``(i/m, j/m)`` with ``i + j <= m`` in lexicographic ``(i, j)`` order."""
    ij = np.array([(i, j) for i in range(m + 1) for j in range(m + 1 - i)])
    return ij, ij / m


def scan_face(f, n, m=64):
    """Worst face residual on the ``m``-grid plus the two derived-value defects.

    Ties in ``|residual|`` go to the smallest ``(i, j)``, matching a sequential
    left-to-right scan.
    """
    if m < 2:
        raise ValueError(f"grid resolution must be >= 2, got {m}")
    alpha(n)
    ij, ab = face_grid(m)
    a, b = ab[:, 0], ab[:, 1]
    c = (m - ij[:, 0] - ij[:, 1]) / m
    res = (eval_f(f, (n * a - 1.0) / (n - 1)) + eval_f(f, (n * b - 1.0) / (n - 1))
           + eval_f(f, (n * c - 1.0) / (n - 1)) + (n - 3) * eval_f(f, -1.0 / (n - 1)))
    absres = np.abs(res)
    k = int(np.argmax(absres))
    return ScanReport(
        n=n,
        grid_resolution=m,
        max_abs_residual=float(absres[k]),
        argmax=(float(a[k]), float(b[k])),
        f_zero_defect=abs(eval_f(f, 0.0)),
        f_minus_defect=abs(eval_f(f, -1.0 / (n - 1)) + 1.0 / (n - 1)),
    )


def cauchy_residual(f, x, z):
    """``f(x) + f(z) - f(x + z)``; all three arguments must lie in ``[-1, 1]``."""
    for v in (x, z, x + z):
        if abs(v) > 1.0 + FACE_TOL:
            raise ValueError(f"argument {v} outside [-1, 1]")
    return eval_f(f, x) + eval_f(f, z) - eval_f(f, x + z)


def finite_difference_slope(f, xs, h=1e-6):
    """Central differences ``(f(x+h) - f(x-h)) / 2h`` at points kept ``h`` away from the ends."""
    xs = np.clip(np.asarray(xs, dtype=float), -1.0 + h, 1.0 - h)
    return (eval_f(f, xs + h) - eval_f(f, xs - h)) / (2.0 * h)


def cauchy_triples(m):
    """Index triples ``(i, j, i + j)`` with ``0 < |i|, |j|``, ``i <= j`` and ``|i + j| <= m``."""
    return [(i, j, i + j) for i in range(-m, m + 1) for j in range(i, m + 1)
            if i != 0 and j != 0 and abs(i + j) <= m]


def cauchy_grid_solve(m):
    """Least-squares solution of ``g_i + g_j = g_{i+j}`` on nodes ``k/m``, ``k = -m..m``.

    ``g_0 = 0`` and ``g_m = 1`` are imposed exactly by elimination; the
    remaining ``2m - 1`` unknowns are fitted to every triple. Returns the
    array ``g_{-m} .. g_m``; the unique solution is ``g_k = k/m``.
    """
    if m < 2:
        raise ValueError(f"need m >= 2 for a non-trivial system, got {m}")
    fixed = {0: 0.0, m: 1.0}
    free = [k for k in range(-m, m + 1) if k not in fixed]
    col = {k: c for c, k in enumerate(free)}
    triples = cauchy_triples(m)
    A = np.zeros((len(triples), len(free)))
    rhs = np.zeros(len(triples))
    for row, (i, j, s) in enumerate(triples):
        for k, coef in ((i, 1.0), (j, 1.0), (s, -1.0)):
            if k in fixed:
                rhs[row] -= coef * fixed[k]
            else:
                A[row, col[k]] += coef
    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    g = np.empty(2 * m + 1)
    for k, v in fixed.items():
        g[k + m] = v
    for k, c in col.items():
        g[k + m] = sol[c]
    return g


def linear_nodes(m):
    return np.array([float(Fraction(k, m)) for k in range(-m, m + 1)])
