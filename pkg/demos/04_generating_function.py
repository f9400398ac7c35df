"""
The GL_n generating function
============================

Summing [Trip_mu] / |Aut(E_mu)| over all anti-dominant GL_n weights, with
t^{-deg E_mu} marking the degree, gives a series Omega_n in two alphabets X
(parabolic type at 0) and Y (type at infinity).  It equals the degree-n part
of the plethystic exponential Exp[XY / ((q-1)(1-t))].

The left side is computed from Weyl group combinatorics; the right side from
power sums and plethysm.  We compare them coefficient by coefficient up to t^4.
"""

from steinberg import exp_side, omega_series
from steinberg.symfun import h_at_one_over_one_minus_q

TMAX = 4
exp = exp_side(3, TMAX)
for n in (1, 2, 3):
    omega = omega_series(n, TMAX)[n]
    print(f"n={n}: Omega equals Exp component: {omega == exp[n]}")

# %%
# A sample coefficient: m_{11}(X) m_{11}(Y) in degree 2.
c = exp[2][((1, 1), (1, 1))]
for k, v in enumerate(c.coeffs):
    print(f"  t^{k}: {v}")

# %%
# Specialization: h_n[1/(1-q)] = 1/((1-q)(1-q^2)...(1-q^n)).
for n in range(1, 5):
    print(f"h_{n}[1/(1-q)] =", h_at_one_over_one_minus_q(n))
