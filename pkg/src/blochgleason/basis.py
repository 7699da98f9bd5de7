"""Generalized Pauli (Gell-Mann) matrices in the computational basis.

Ordering: all symmetric ``U_jk`` (lexicographic in ``(j, k)``, ``1 <= j < k <= n``),
then all antisymmetric ``V_jk`` in the same order, then the diagonal
``W_1 .. W_{n-1}``. Indices ``j``, ``k``, ``l`` are 1-based as in the usual
construction; returned positions are 0-based.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np


@dataclass(frozen=True)
class GeneralizedBasis:
    dim: int
    elements: np.ndarray  # shape (dim**2 - 1, dim, dim)
    c: float  # sqrt(dim (dim - 1) / 2)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class BasisReport:
    max_hermiticity_defect: float
    max_trace_defect: float
    max_orthogonality_defect: float

    def passed(self, tol):
        return max(self.max_hermiticity_defect, self.max_trace_defect,
                   self.max_orthogonality_defect) <= tol


def scale_constant(n):
    return float(np.sqrt(n * (n - 1) / 2.0))


def _pairs(n):
    return list(combinations(range(1, n + 1), 2))


def u_matrix(j, k, n):
    m = np.zeros((n, n), dtype=np.complex128)
    m[j - 1, k - 1] = 1.0
    m[k - 1, j - 1] = 1.0
    return m


def v_matrix(j, k, n):
    m = np.zeros((n, n), dtype=np.complex128)
    m[j - 1, k - 1] = -1j
    m[k - 1, j - 1] = 1j
    return m


def w_matrix(ell, n):
    diag = np.zeros(n)
    diag[:ell] = 1.0
    diag[ell] = -ell
    return np.sqrt(2.0 / (ell * (ell + 1))) * np.diag(diag).astype(np.complex128)


def build_basis(n):
    """The ``n**2 - 1`` generalized Pauli matrices for dimension ``n >= 2``.

    >>> b = build_basis(2)
    >>> b.elements[2].real
    array([[ 1.,  0.],
           [ 0., -1.]])
    """
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    n = int(n)
    pairs = _pairs(n)
    elements = ([u_matrix(j, k, n) for j, k in pairs]
                + [v_matrix(j, k, n) for j, k in pairs]
                + [w_matrix(ell, n) for ell in range(1, n)])
    stacked = np.array(elements)
    stacked.setflags(write=False)
    return GeneralizedBasis(dim=n, elements=stacked, c=scale_constant(n))


def basis_index(kind, j, k_or_ell, n):
    """Zero-based position of ``U_jk``, ``V_jk`` or ``W_l`` in :func:`build_basis` order.

    For ``kind == "W"`` the argument ``j`` is ignored.
    """
    kind = kind.upper()
    n_pairs = n * (n - 1) // 2
    if kind in ("U", "V"):
        k = k_or_ell
        if not (1 <= j < k <= n):
            raise ValueError(f"need 1 <= j < k <= {n}, got j={j}, k={k}")
        # pairs before (j, k): rows 1..j-1 contribute (n - r) each
        pos = (j - 1) * n - (j - 1) * j // 2 + (k - j - 1)
        return pos if kind == "U" else n_pairs + pos
    if kind == "W":
        ell = k_or_ell
        if not (1 <= ell <= n - 1):
            raise ValueError(f"need 1 <= l <= {n - 1}, got {ell}")
        return 2 * n_pairs + ell - 1
    raise ValueError(f"unknown kind {kind!r}; expected U, V or W")


def basis_labels(n):
    """Human-readable ``(kind, j, k_or_ell)`` tuples in basis order."""
    pairs = _pairs(n)
    return ([("U", j, k) for j, k in pairs] + [("V", j, k) for j, k in pairs]
            + [("W", 0, ell) for ell in range(1, n)])


def verify_basis(basis, tol=1e-12):
    """Worst-case defects of the Hermitian, traceless and ``Tr(L_i L_j) = 2 delta_ij`` conditions.

    ``tol`` is only forwarded to :meth:`BasisReport.passed` by callers; the
    report always carries the exact maxima.
    """
    els = np.asarray(basis.elements)
    herm = float(np.max(np.abs(els - np.conj(np.swapaxes(els, 1, 2)))))
    tr = float(np.max(np.abs(np.trace(els, axis1=1, axis2=2))))
    # Tr(A B) = sum_{ab} A_ab B_ba
    gram = np.einsum("iab,jba->ij", els, els)
    ortho = float(np.max(np.abs(gram - 2.0 * np.eye(len(els)))))
    return BasisReport(herm, tr, ortho)
