"""
Generalized Pauli matrices
==========================

For dimension N the traceless Hermitian operators are spanned by N**2 - 1
matrices: symmetric U_jk, antisymmetric V_jk and diagonal W_l. For N = 2 they
are the Pauli matrices.
"""
import numpy as np

from blochgleason import basis_index, build_basis, verify_basis

np.set_printoptions(precision=4, suppress=True)

# N = 2 gives sigma_1, sigma_2, sigma_3 in that order
qubit = build_basis(2)
for name, m in zip(("sigma_1", "sigma_2", "sigma_3"), qubit.elements):
    print(name)
    print(m)

# For a qutrit there are 8 elements; the last is diag(1, 1, -2)/sqrt(3)
qutrit = build_basis(3)
print("qutrit element count:", len(qutrit))
print("W_2 =")
print(qutrit.elements[basis_index("W", 0, 2, 3)].real)

# Every element is Hermitian and traceless, and Tr(L_i L_j) = 2 delta_ij
for n in range(2, 9):
    rep = verify_basis(build_basis(n))
    print(f"N={n}: hermiticity {rep.max_hermiticity_defect:.1e}, "
          f"trace {rep.max_trace_defect:.1e}, orthogonality {rep.max_orthogonality_defect:.1e}")
