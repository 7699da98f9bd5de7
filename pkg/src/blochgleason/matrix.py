"""Dense complex matrix helpers and a cyclic Jacobi eigensolver for Hermitian matrices.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. The helpers here
validate shape and finiteness so that downstream modules can assume square,
finite input.
"""
import numpy as np

HERMITIAN_TOL = 1e-12
JACOBI_OFFDIAG_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def as_matrix(a):
    """Return ``a`` as a square, finite complex128 array (a copy is not forced)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def mat_mul(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def adjoint(a):
    return as_matrix(a).conj().T


def trace(a):
    return complex(np.trace(as_matrix(a)))


def is_hermitian(a, tol=HERMITIAN_TOL):
    """True iff the largest entry of ``a - a^dagger`` has modulus at most ``tol``."""
    m = as_matrix(a)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def _offdiag_norm(a):
    off = a - np.diag(np.diag(a))
    return np.linalg.norm(off)


def _rotate(a, p, q):
    # Zero a[p, q] with a unitary acting on rows/columns p and q. The phase of
    # a[p, q] is absorbed first, then a real Jacobi rotation finishes the job.
    apq = a[p, q]
    mod = abs(apq)
    if mod == 0.0:
        return
    phase = apq / mod
    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * mod)
    t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c
    g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def hermitian_eigenvalues(a, tol=HERMITIAN_TOL):
    """Eigenvalues of a Hermitian matrix in ascending order.

    Cyclic Jacobi sweeps over all ``(p, q)`` pairs, stopping once the
    off-diagonal Frobenius norm drops below ``1e-13`` (scaled by the matrix
    norm when that exceeds one) or after 100 sweeps.

    Raises ``ValueError`` when ``a`` is not Hermitian within ``tol``.
    """
    m = as_matrix(a)
    if not is_hermitian(m, tol):
        raise ValueError("matrix is not Hermitian")
    work = 0.5 * (m + m.conj().T)
    n = work.shape[0]
    stop = JACOBI_OFFDIAG_TOL * max(1.0, float(np.linalg.norm(work)))
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(work) < stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, p, q)
    return np.sort(np.diag(work).real)


def min_eigenvalue(a, tol=HERMITIAN_TOL):
    return float(hermitian_eigenvalues(a, tol)[0])
