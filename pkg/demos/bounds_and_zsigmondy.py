"""
Primitive prime divisors along the orbit
========================================

A monic irreducible q is a primitive divisor of c_n if it divides c_n and
no earlier c_m. The Zsigmondy set collects the n without one; the bound
constants A, B cap how far out it can reach.
"""

from arbordyn import bound_constants, global_bound, parse_map, uniform_bound, zsigmondy_set

phi = parse_map("x^2+t", 7)
k = bound_constants(phi)
print("A =", k.A, "B =", k.B)

# which n lack a primitive divisor, up to depth 10
rep = zsigmondy_set(phi, 10)
print("members:", rep.members)

# over Z the constant is the max over the exceptional reductions
g = global_bound(parse_map("x^2+t"))
print("N_phi =", g.N_phi)
for row in g.generic.rows[8:12]:
    print(row.to_json())

# x^2 - t^3 picks up an exceptional prime, 3
print("x^2-t^3:", global_bound(parse_map("x^2-t^3")).N_phi)

# the generic bound, independent of the map
print("generic:", uniform_bound().N)
