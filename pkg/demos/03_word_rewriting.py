"""From a matrix to a short word over a finite alphabet of Gamma1(9).

The fast evaluator rests on three moves, shown here end to end on one
matrix: split off a Gamma0-transversal factor, decompose the Gamma1 part
into a T/S word of logarithmic length, and rewrite that word as a product
of U-values indexed by a finite table.
"""

from gdsum.cosets import schreier_alphabet, transversal_g1_in_g0, transversal_g1_in_sl2
from gdsum.modgroup import I2, Mat2, ts_decompose, ts_reconstruct
from gdsum.rewriter import (
    expand_factor,
    format_factor,
    format_reduced,
    modified_rewrite,
    reduce_word,
)

N = 9
gamma0 = Mat2(17, 32, 9, 17)
print(f"Target: gamma0 = {gamma0} in Gamma0({N})")

t_g0 = transversal_g1_in_g0(N)
print(f"\nTransversal of Gamma1({N}) in Gamma0({N}), one member per unit d mod {N}:")
for d, m in sorted(t_g0.members.items()):
    print(f"  d={d}: {m}")

g = t_g0.members[gamma0.d % N]
gamma1 = gamma0 * g.inv()
print(f"\nSplit gamma0 = gamma1 * g with g = {g}:")
print(f"  gamma1 = {gamma1}, in Gamma1({N}): {gamma1.in_gamma1(N)}")

w = ts_decompose(gamma1)
sign = "-" if w.negate else ""
print(f"\nT/S word ({w.letters} exponents): {sign}" + " S ".join(f"T^{e}" for e in w.exponents))
assert ts_reconstruct(w) == gamma1

t_sl2 = transversal_g1_in_sl2(N)
print(f"\nFull-group transversal has {len(t_sl2)} members, keyed by (c, d) mod {N}.")
factors = modified_rewrite(w, t_sl2)
print(f"Rewriting gives {len(factors)} U-factors (one per T-power, one per S):")
for f in factors:
    print(f"  {format_factor(f)}")

prod = I2
for f in factors:
    prod = prod * expand_factor(f, t_sl2)
print(f"\nExact product of the factors equals gamma1: {prod == gamma1}")

reduced = reduce_word(factors, N)
print(f"\nT-exponents cycle mod {N} into the finite alphabet ({len(reduced)} terms):")
for f in reduced:
    print(f"  {format_reduced(f)}")

alphabet = schreier_alphabet(N, t_sl2)
print(f"\nThe alphabet has {len(alphabet)} entries = ({N}+3) * {len(t_sl2)};")
print("every term above indexes into it, so a sum over Gamma1 values of the")
print("table evaluates the whole matrix in time proportional to the word length.")
