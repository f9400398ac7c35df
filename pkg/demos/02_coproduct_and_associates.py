"""
The coproduct on functions of simple-root subsets
=================================================

Given f on subsets of simple roots, its coproduct is

    Delta(f)(J1, J2) = sum over minimal double coset representatives w of
                       W_{J1} \\ W / W_{J2} of f(J1 ∩ w·J2).

Applied to the Springer count it reproduces the Steinberg count.  Both counts
only depend on the associate class of each subset (the Weyl orbit of its
Levi root subsystem).
"""

from steinberg import associate_classes, build_root_system, coproduct_eval, parse_datum, sp_count, st_count
from steinberg.weyl import min_double_coset_reps

# %%
# Double coset representatives for A2 with J1 = J2 = {alpha_1}.
rs = build_root_system(parse_datum("A2"))
reps = min_double_coset_reps(rs, 0b01, 0b01)
print("A2, D({a1},{a1}) lengths:", [w.length for w in reps])

# %%
# Delta([Sp]) = [St] for every pair of subsets, as an identity of polynomials.
for name in ("A2", "B2", "G2", "A3"):
    H = parse_datum(name)
    n = 1 << H.semisimple_rank
    for J1 in range(n):
        for J2 in range(n):
            lhs = coproduct_eval(H, lambda K: sp_count(H, K), J1, J2)
            assert lhs == st_count(H, J1, J2)
    print(f"{name}: coproduct of the Springer count matches all {n * n} Steinberg counts")

# %%
# Associate classes of A3: {a1}, {a2}, {a3} are all conjugate, as are
# {a1,a2} and {a2,a3}; {a1,a3} (type A1xA1) is on its own.
H = parse_datum("A3")
for cls in associate_classes(build_root_system(H)):
    values = {str(sp_count(H, J)) for J in cls}
    print([f"{J:03b}" for J in cls], "->", values.pop())
