"""
Springer and Steinberg point counts
===================================

For a split reductive group H over F_q and a subset J of simple roots, the
generalized Springer variety Sp_H(J) consists of pairs (P, N): a parabolic P
of type J and a nilpotent N in Lie(P).  The Steinberg variety St_H(J1, J2)
pairs two parabolics with a common nilpotent.  Both counts are polynomials in
q.  This script prints a few of them and checks them against brute force
enumeration over F_2 and F_3.
"""

from steinberg import format_poly, parse_datum, sp_count, st_count
from steinberg.oracle import oracle_sp, oracle_st, type_from_mask
from steinberg.qalg import eval_at

# %%
# Springer counts for a few root systems.  Subsets are bitmasks: bit i is the
# (i+1)-th simple root in Bourbaki numbering.
for name in ("A1", "A2", "B2", "G2"):
    H = parse_datum(name)
    print(name)
    for J in range(1 << H.semisimple_rank):
        print(f"  J={J:0{H.semisimple_rank}b}  |Sp| = {format_poly(sp_count(H, J))}")

# %%
# The Steinberg table of GL_3.  J = all simple roots gives G itself, so
# St(all, J) is the Springer count and St(all, all) the nilpotent cone q^6.
G = parse_datum("GL3")
for J1 in range(4):
    row = [format_poly(st_count(G, J1, J2)) for J2 in range(4)]
    print(f"J1={J1:02b}: " + " | ".join(row))

# %%
# Brute force: enumerate all 3x3 matrices over F_2, keep the nilpotent ones
# and count the flags each one preserves.
for J1 in range(4):
    for J2 in range(4):
        formula = eval_at(st_count(G, J1, J2), 2)
        brute = oracle_st(3, 2, type_from_mask(3, J1), type_from_mask(3, J2))
        assert formula == brute, (J1, J2, formula, brute)
print("GL_3 over F_2: all 16 Steinberg counts agree with enumeration")
print("GL_2 over F_3, full flags:", oracle_sp(2, 3, (1,)), "Springer pairs")
