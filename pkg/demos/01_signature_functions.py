"""Levine-Tristram signatures from Seifert matrices, computed exactly.

Run with ``python3 demos/01_signature_functions.py``.
"""

from fractions import Fraction

from altknots.poly import chebyshev_reduce, delta_n, format_poly, irreducible_over_q, refine_interval, symmetric_normalize
from altknots.seifert import (
    CirclePoint,
    alexander,
    circle_roots,
    jump_at,
    realize_polynomial,
    signature_at,
    torus_jump_list,
    torus_signature,
    torus_two_matrix,
)

# %% The trefoil as T(2,3): its 2x2 Seifert matrix, Alexander polynomial and signature at -1.
V = torus_two_matrix(3)
print("T(2,3) Seifert matrix:", V.entries)
print("Alexander polynomial:", format_poly(alexander(V)))
print("signature at -1:", signature_at(V, CirclePoint.minus_one()))

# %% Walking the upper half circle.  Each rational s gives an exact point
# omega = ((1 - s^2) + 2is) / (1 + s^2), at angle 2 arctan(s).
for s in (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3), None):
    w = CirclePoint(s)
    print(f"  s = {s!s:>4}  x = omega + 1/omega = {w.x!s:>7}  sigma = {signature_at(V, w)}")

# %% Torus knots beyond T(2,q) use a lattice count instead of a matrix.
print("sigma(T(3,7)) at -1:", torus_signature(3, 7, Fraction(1, 2)))
print("T(3,4) jumps (angle/2pi, size):", torus_jump_list(3, 4))

# %% The quartics Delta_n = t^4 + n t^3 - (2n + 1) t^2 + n t + 1.  One conjugate
# pair of roots lies on the unit circle; the signature can only jump there.
for n in range(1, 5):
    d = delta_n(n)
    (eta,) = circle_roots(d)
    iv = refine_interval(eta.reduced, eta.interval, Fraction(1, 1000))
    Vn = realize_polynomial(d)
    assert alexander(Vn) == symmetric_normalize(d)
    print(
        f"n = {n}: {format_poly(d)}  irreducible={irreducible_over_q(d)}"
        f"  reduced={format_poly(chebyshev_reduce(d), 'x')}"
        f"  x in [{iv.lo}, {iv.hi}]  jump={jump_at(Vn, eta)}"
    )
