"""
Bloch vectors and the measurement simplex
=========================================

Any density matrix D is (I + c_N r . Lambda)/N for a real vector r. The
vectors n_i of a complete projective measurement form a regular simplex, and
the Born probabilities are the barycentric coordinates of r on it.
"""
import numpy as np

from blochgleason import (bloch_to_density, build_basis, computational_measurement,
                          density_to_bloch, gram_matrix, is_valid_state, purity,
                          random_density, random_measurement, simplex_decompose)
from blochgleason.matrix import hermitian_eigenvalues

np.set_printoptions(precision=4, suppress=True)

basis = build_basis(3)
d = random_density(3, seed=1)
r = density_to_bloch(d, basis)
print("Bloch vector of a random qutrit state:", r)
print("norm:", np.linalg.norm(r), " purity:", purity(r, basis))
print("roundtrip error:", np.max(np.abs(bloch_to_density(r, basis) - d)))

m = random_measurement(basis, seed=2)
print("Gram matrix of the measurement vertices (off-diagonal -1/2):")
print(gram_matrix(m))

dec = simplex_decompose(r, m)
born = np.einsum("ab,iba->i", d, m.projectors).real
print("barycentric coordinates:", dec.barycentric)
print("Tr(D P_i):              ", born)

# For N = 2 every vector of the unit ball is a state. For N >= 3 the
# antipode of a pure state is not.
n1 = computational_measurement(basis).vertices[0]
print("-n_1 is a state?", is_valid_state(-n1, basis))
print("eigenvalues of D(-n_1):", hermitian_eigenvalues(bloch_to_density(-n1, basis)))
