"""
Critical orbits of quadratic maps over F_p[t]
=============================================

A quadratic map is written phi = (x - gamma)^2 - c1. Its adjusted critical
orbit c_n grows in height like 2^(n-1), and this script watches that happen.
"""

from arbordyn import adjusted_orbit, height_profile, insep_degree, parse_map
from arbordyn.polyalg import height

# the simplest interesting example, over F_5[t]
phi = parse_map("x^2+t", 5)
print(phi, "over", phi.ring_name())

orb = adjusted_orbit(phi, 6)
for n in range(1, 7):
    print(n, height(orb.c[n]), orb.c[n] if n <= 3 else "...")

# the height profile says which growth law applies
prof = height_profile(phi)
print(prof.to_json())

# a shifted critical point: heights of gamma and c1 are equal, so
# kappa records when the doubling law takes over
shifted = parse_map("(x-(t))^2-2*t-1", 5)
orb = adjusted_orbit(shifted, 6)
print([height(orb.c[n]) for n in range(1, 7)])
print(height_profile(shifted).to_json())

# composing with t -> t^p makes the orbit inseparable
print(insep_degree(parse_map("x^2+t", 3)).to_json())
print(insep_degree(parse_map("x^2-t^3", 3)).to_json())
