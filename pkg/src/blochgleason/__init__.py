"""Generalized Bloch representation of N-level states and the additivity argument
that singles out the Born rule for N >= 3."""
from .basis import (BasisReport, GeneralizedBasis, basis_index, build_basis,
                    verify_basis)
from .geometry import (Measurement, SimplexDecomposition, bloch_to_density,
                       computational_measurement, density_to_bloch, gram_matrix,
                       is_valid_state, measurement_from_vectors, purity,
                       random_density, random_measurement, random_unitary,
                       simplex_decompose)
from .gleason import (ScanReport, alpha, cauchy_grid_solve, cauchy_residual,
                      face_residual, scan_face)
from .matrix import adjoint, hermitian_eigenvalues, is_hermitian, mat_mul, trace
from .rules import (IDENTITY, SIGN, OutcomeFunction, RuleReport,
                    born_probability, eval_f, odd_power, parse_outcome_function,
                    rule_probability, tabulated, validate_qubit_rule)

__version__ = "0.1.0"
