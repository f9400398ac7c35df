"""
Principal bundles on the projective line
========================================

A G-bundle on P^1 is E_mu for an anti-dominant cocharacter mu; for GL_n it is
O(m_1) + ... + O(m_n).  Trip_mu(J0, Jinf) counts triples: a parabolic
structure at 0 of type J0, one at infinity of type Jinf, and a nilpotent
global section of ad(E_mu) compatible with both.
"""

from steinberg import Cocharacter, dim_aut, format_poly, gl, parse_datum, trip_count
from steinberg.oracle import oracle_trip, type_from_mask
from steinberg.qalg import eval_at

# %%
# GL_2 with O(-1) + O: the Levi is the torus and the count is 4q^2 for full flags.
for w in [(0, 0), (-1, 0), (-2, 0), (-1, -1)]:
    mu = Cocharacter.from_gl_weights(w)
    dim, aut = dim_aut(gl(2), mu)
    table = [format_poly(trip_count(gl(2), mu, a, b)) for a in range(2) for b in range(2)]
    print(f"mu={w}: dim Aut={dim}, |Aut|={format_poly(aut)}, Trip table={table}")

# %%
# Brute force over F_2: sections are 2x2 matrices of polynomials in s with
# entry (i, j) of degree at most m_j - m_i.
for w in [(-1, 0), (-2, 0), (-2, -1, 0)]:
    n = len(w)
    mu = Cocharacter.from_gl_weights(w)
    for a in range(1 << (n - 1)):
        for b in range(1 << (n - 1)):
            assert eval_at(trip_count(gl(n), mu, a, b), 2) == oracle_trip(n, 2, w, type_from_mask(n, a), type_from_mask(n, b))
    print(f"mu={w}: formula agrees with enumeration over F_2")

# %%
# Other groups: mu is given by its pairings with the simple roots.
mu = Cocharacter((-1, 0))
print("B2, <a1,mu>=-1:", format_poly(trip_count(parse_datum("B2"), mu, 0, 0)))
