"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line, printed in the terminal summary.
"""
import numpy as np

from blochgleason.basis import build_basis, verify_basis
from blochgleason.geometry import (bloch_to_density, computational_measurement,
                                   density_to_bloch, expected_gram, gram_matrix,
                                   is_valid_state, random_ball_vector,
                                   random_density, random_measurement,
                                   simplex_decompose)
from blochgleason.gleason import cauchy_grid_solve, face_residual, scan_face
from blochgleason.matrix import hermitian_eigenvalues
from blochgleason.rules import (BUILTIN_NONLINEAR, IDENTITY, born_probability,
                                born_probability_trace, odd_power,
                                rule_probability, validate_qubit_rule)

from conftest import ACCEPTANCE_LINES

PAULI = np.array([[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]])


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_1_basis_correctness():
    worst = 0.0
    for n in range(2, 9):
        rep = verify_basis(build_basis(n), 1e-12)
        worst = max(worst, rep.max_hermiticity_defect, rep.max_trace_defect,
                    rep.max_orthogonality_defect)
    pauli = np.array_equal(build_basis(2).elements, PAULI)
    record(1, "basis correctness N=2..8", worst <= 1e-12 and pauli,
           f"max defect {worst:.3g} (tol 1e-12), Pauli exact={pauli}")


def test_2_bijection():
    worst = 0.0
    for n in range(2, 7):
        b = build_basis(n)
        for seed in range(100):
            d = random_density(n, seed)
            worst = max(worst, np.max(np.abs(bloch_to_density(density_to_bloch(d, b), b) - d)))
    record(2, "density<->Bloch roundtrip", worst <= 1e-12,
           f"max entry deviation {worst:.3g} (tol 1e-12) over 500 states")


def test_3_born_equivalence():
    worst_eq = worst_sum = 0.0
    for n in range(2, 7):
        b = build_basis(n)
        for k in range(50):
            r = density_to_bloch(random_density(n, 10_000 + k), b)
            m = random_measurement(b, 20_000 + k)
            bloch = np.array([born_probability(r, m, i, b) for i in range(1, n + 1)])
            tr = np.array([born_probability_trace(r, m, i, b) for i in range(1, n + 1)])
            worst_eq = max(worst_eq, np.max(np.abs(bloch - tr)))
            worst_sum = max(worst_sum, abs(bloch.sum() - 1.0))
    record(3, "Born Bloch formula vs trace", worst_eq <= 1e-12 and worst_sum <= 1e-11,
           f"max |diff| {worst_eq:.3g} (tol 1e-12), max |sum-1| {worst_sum:.3g} (tol 1e-11)")


def test_4_simplex_geometry():
    gram = vsum = bary = 0.0
    for n in range(2, 7):
        b = build_basis(n)
        for k in range(20):
            m = random_measurement(b, 30_000 + k)
            gram = max(gram, np.max(np.abs(gram_matrix(m) - expected_gram(n))))
            vsum = max(vsum, np.max(np.abs(m.vertices.sum(axis=0))))
            r = density_to_bloch(random_density(n, 40_000 + k), b)
            dec = simplex_decompose(r, m)
            born = np.array([born_probability_trace(r, m, i, b) for i in range(1, n + 1)])
            bary = max(bary, np.max(np.abs(dec.barycentric - born)))
    ok = gram <= 1e-10 and vsum <= 1e-10 and bary <= 1e-12
    record(4, "simplex geometry", ok,
           f"Gram {gram:.3g} (tol 1e-10), vertex sum {vsum:.3g} (tol 1e-10), "
           f"barycentric vs Born {bary:.3g} (tol 1e-12)")


def test_5_qubit_exception():
    reports = {f.name: validate_qubit_rule(f, trials=200, seed=5, tol=1e-10)
               for f in BUILTIN_NONLINEAR}
    all_pass = all(r.passed for r in reports.values())
    b = build_basis(2)
    m = computational_measurement(b)
    r = np.array([0.0, 0.0, 0.5])
    gap = abs(rule_probability(odd_power(3), r, m, 1) - born_probability(r, m, 1, b))
    record(5, "qubit non-Born rules are valid", all_pass and gap >= 0.05,
           f"{', '.join(f'{k}={v.passed}' for k, v in reports.items())}; "
           f"witness |P_f - P_Born| = {gap:.4f} (>= 0.05)")


def test_6_gleason_forcing():
    born_worst = 0.0
    nonlinear_min = np.inf
    for n in range(3, 7):
        born_worst = max(born_worst, scan_face(IDENTITY, n, 64).max_abs_residual)
        for f in BUILTIN_NONLINEAR:
            nonlinear_min = min(nonlinear_min, scan_face(f, n, 64).max_abs_residual)
    corner = face_residual(odd_power(3), 3, 1.0, 0.0)
    ok = born_worst <= 1e-12 and nonlinear_min >= 1e-2 and abs(corner - 0.75) <= 1e-12
    record(6, "face constraint forces linearity", ok,
           f"Born max residual {born_worst:.3g} (tol 1e-12), smallest nonlinear max "
           f"{nonlinear_min:.4f} (>= 1e-2), N=3 x^3 corner {corner!r} (0.75 +- 1e-12)")


def test_7_derived_constraints():
    survivors = []
    for n in range(3, 7):
        for f in (IDENTITY,) + BUILTIN_NONLINEAR:
            rep = scan_face(f, n, 64)
            if rep.max_abs_residual <= 1e-12:
                survivors.append(rep)
    worst = max(max(r.f_zero_defect, r.f_minus_defect) for r in survivors)
    record(7, "survivors satisfy f(0)=0 and f(-1/(N-1))=-1/(N-1)",
           bool(survivors) and worst <= 1e-10,
           f"{len(survivors)} surviving (f, N) pairs, worst defect {worst:.3g} (tol 1e-10)")


def test_8_cauchy_uniqueness():
    devs = {m: float(np.max(np.abs(cauchy_grid_solve(m) - np.arange(-m, m + 1) / m)))
            for m in (4, 8, 16, 32)}
    record(8, "discrete Cauchy system has the linear solution only",
           max(devs.values()) <= 1e-8,
           ", ".join(f"m={m}: {d:.3g}" for m, d in devs.items()) + " (tol 1e-8)")


def test_9_state_body_asymmetry():
    rng = np.random.default_rng(9)
    b2 = build_basis(2)
    qubit_ok = all(is_valid_state(random_ball_vector(3, rng), b2) for _ in range(100))
    rejected = {}
    for n in range(3, 7):
        b = build_basis(n)
        n1 = computational_measurement(b).vertices[0]
        lam = hermitian_eigenvalues(bloch_to_density(-n1, b))[0]
        rejected[n] = (not is_valid_state(-n1, b), lam)
    lam3 = rejected[3][1]
    # general witness eigenvalue is -(N-2)/N; N=3 gives -1/3
    general = all(abs(lam + (n - 2) / n) <= 1e-10 for n, (_, lam) in rejected.items())
    ok = qubit_ok and all(r for r, _ in rejected.values()) and abs(lam3 + 1 / 3) <= 1e-10 and general
    record(9, "Bloch ball full for N=2 only", ok,
           f"qubit ball all valid={qubit_ok}; witness min eigenvalues "
           + ", ".join(f"N={n}: {lam:.12f}" for n, (_, lam) in rejected.items())
           + " (N=3 target -1/3 +- 1e-10)")
