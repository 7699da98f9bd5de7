"""
Non-Born rules for a qubit
==========================

For N = 2 the two outcome vectors are antipodal, so any odd f with f(1) = 1
yields P_f(r -> n_i) = (1 + f(r . n_i))/2, a valid probability assignment.
"""
import numpy as np

from blochgleason import (SIGN, build_basis, computational_measurement,
                          born_probability, odd_power, rule_probability,
                          validate_qubit_rule)

basis = build_basis(2)
m = computational_measurement(basis)

print(" r.n_1    Born    x^3     x^5     sign")
for x in np.linspace(-1, 1, 9):
    r = np.array([0.0, 0.0, x])
    row = [born_probability(r, m, 1, basis)]
    row += [rule_probability(f, r, m, 1) for f in (odd_power(3), odd_power(5), SIGN)]
    print(f"{x:6.2f}  " + "  ".join(f"{p:6.4f}" for p in row))

for f in (odd_power(3), odd_power(5), SIGN):
    rep = validate_qubit_rule(f, trials=200, seed=0)
    print(f"{f.name:>6}: passed={rep.passed} additivity defect={rep.additivity_defect:.1e}")
