"""Density operators, Bloch vectors and the simplex spanned by a measurement.

A Bloch vector is a real array of length ``n**2 - 1`` whose components are
ordered as in :func:`blochgleason.basis.build_basis`.
"""
from dataclasses import dataclass

import numpy as np

from .basis import GeneralizedBasis
from .matrix import as_matrix, is_hermitian, min_eigenvalue

POSITIVITY_TOL = 1e-10
ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True)
class Measurement:
    dim: int
    projectors: np.ndarray  # (dim, dim, dim), rank-1 projectors P_i
    vertices: np.ndarray  # (dim, dim**2 - 1), unit Bloch vectors n_i

    def __len__(self):
        return self.dim


@dataclass(frozen=True)
class SimplexDecomposition:
    barycentric: np.ndarray
    r_parallel: np.ndarray
    r_perp: np.ndarray


def as_bloch(r, basis):
    v = np.asarray(r, dtype=float)
    expected = basis.dim ** 2 - 1
    if v.ndim != 1 or v.shape[0] != expected:
        raise ValueError(f"Bloch vector for dim {basis.dim} needs {expected} "
                         f"components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("Bloch vector has non-finite components")
    return v


def bloch_to_density(r, basis: GeneralizedBasis):
    """``(I + c_N r . Lambda) / N``. Hermitian with unit trace, not necessarily positive."""
    r = as_bloch(r, basis)
    n = basis.dim
    return (np.eye(n) + basis.c * np.tensordot(r, basis.elements, axes=1)) / n


def check_hermitian_unit_trace(d, tol=1e-10):
    d = as_matrix(d)
    if not is_hermitian(d, tol):
        raise ValueError("matrix is not Hermitian")
    tr = np.trace(d)
    if abs(tr - 1.0) > tol:
        raise ValueError(f"trace is {tr.real:.17g}, expected 1")
    return d


def density_to_bloch(d, basis: GeneralizedBasis, tol=1e-10):
    """Components ``sqrt(N / (2 (N - 1))) Tr(D Lambda_i)``."""
    d = check_hermitian_unit_trace(d, tol)
    n = basis.dim
    if d.shape[0] != n:
        raise ValueError(f"dimension mismatch: matrix is {d.shape[0]}, basis is {n}")
    # Tr(D L) = sum_ab D_ab L_ba
    traces = np.einsum("ab,iba->i", d, basis.elements)
    return np.sqrt(n / (2.0 * (n - 1))) * traces.real


def is_valid_state(r, basis, tol=POSITIVITY_TOL):
    return min_eigenvalue(bloch_to_density(r, basis)) >= -tol


def purity(r, basis, tol=POSITIVITY_TOL):
    """``Tr(D^2)`` computed from the matrix. Raises for vectors that are not states."""
    d = bloch_to_density(r, basis)
    if min_eigenvalue(d) < -tol:
        raise ValueError("Bloch vector does not describe a positive operator")
    return float(np.real(np.trace(d @ d)))


def measurement_from_vectors(columns, basis, tol=ORTHONORMAL_TOL):
    """Projective measurement onto the orthonormal vectors given as matrix columns.

    ``columns`` may be an ``(N, N)`` array whose columns are the basis vectors
    or a sequence of ``N`` vectors.
    """
    if isinstance(columns, np.ndarray) and columns.ndim == 2:
        vecs = columns.astype(np.complex128).T
    else:
        vecs = np.array([np.asarray(c, dtype=np.complex128) for c in columns])
    n = basis.dim
    if vecs.shape != (n, n):
        raise ValueError(f"need {n} vectors of length {n}, got {vecs.shape}")
    overlap = vecs.conj() @ vecs.T
    if np.max(np.abs(overlap - np.eye(n))) > tol:
        raise ValueError("measurement vectors are not orthonormal")
    projectors = np.einsum("ia,ib->iab", vecs, vecs.conj())
    vertices = np.array([density_to_bloch(p, basis) for p in projectors])
    projectors.setflags(write=False)
    vertices.setflags(write=False)
    return Measurement(dim=n, projectors=projectors, vertices=vertices)


def computational_measurement(basis):
    return measurement_from_vectors(np.eye(basis.dim), basis)


def gram_matrix(m: Measurement):
    return m.vertices @ m.vertices.T


def expected_gram(n):
    """Regular-simplex Gram matrix: 1 on the diagonal, ``-1/(n-1)`` elsewhere."""
    return -1.0 / (n - 1) + np.eye(n) * n / (n - 1)


def simplex_decompose(r, m: Measurement):
    """Split ``r`` into its projection on the measurement simplex span and the rest.

    Barycentric weights use the closed form ``(1 + (N-1) r . n_i) / N``; they
    are non-negative only when ``r`` is a valid state.
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (m.vertices.shape[1],):
        raise ValueError(f"Bloch vector shape {r.shape} does not match "
                         f"measurement of dim {m.dim}")
    n = m.dim
    bary = (1.0 + (n - 1) * (m.vertices @ r)) / n
    r_par = bary @ m.vertices
    return SimplexDecomposition(barycentric=bary, r_parallel=r_par, r_perp=r - r_par)


def random_density(n, seed):
    """``G G^dagger / Tr(G G^dagger)`` for a seeded complex Ginibre matrix ``G``."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    d = g @ g.conj().T
    return d / np.trace(d).real


def random_unitary(n, seed):
    """Haar-random unitary from QR of a seeded Ginibre matrix with R's diagonal phases removed."""
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_measurement(basis, seed):
    return measurement_from_vectors(random_unitary(basis.dim, seed), basis)


def random_ball_vector(dim, rng, max_norm=1.0):
    """Uniform sample from the ``dim``-ball of radius ``max_norm``."""
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    return v * max_norm * rng.random() ** (1.0 / dim)
