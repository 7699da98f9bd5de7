"""
Additivity on a simplex face forces f(x) = x
============================================

For N >= 3, additivity of P_f on a two-dimensional face of the measurement
simplex is a functional equation for f. Scanning the face shows the
identity satisfies it exactly while every non-linear candidate fails.
"""
from blochgleason import IDENTITY, SIGN, face_residual, odd_power, scan_face
from blochgleason.gleason import finite_difference_slope
from blochgleason.rules import tabulated

candidates = {
    "identity": IDENTITY,
    "x^3": odd_power(3),
    "x^5": odd_power(5),
    "sign": SIGN,
    "bent table": tabulated([-1, -0.5, 0, 0.5, 1], [-1, -0.4, 0, 0.4, 1]),
}

for n in (3, 4, 5, 6):
    print(f"N = {n}")
    for name, f in candidates.items():
        rep = scan_face(f, n, 64)
        print(f"  {name:>10}: max |residual| {rep.max_abs_residual:.3e} at {rep.argmax}, "
              f"|f(0)| {rep.f_zero_defect:.2e}, |f(-1/(N-1)) + 1/(N-1)| {rep.f_minus_defect:.2e}")

print("x^3 corner residual at N=3:", face_residual(odd_power(3), 3, 1.0, 0.0))

# A differentiable solution must have constant slope
xs = [-0.9, -0.3, 0.0, 0.4, 0.8]
print("identity slopes:", finite_difference_slope(IDENTITY, xs))
print("x^3 slopes:     ", finite_difference_slope(odd_power(3), xs))
