"""
Square classes and surjectivity of the arboreal representation
==============================================================

The iterated Galois group is as large as possible exactly when no
nonempty product of orbit elements is a square. Over F_p(t) this is a
GF(2) rank question; over Z it reduces to finitely many primes.
"""

import random

from arbordyn import parse_map
from arbordyn.fields import prime_field
from arbordyn.galois import jones_verify, mason_stothers_check, random_triple, stoll_rank

# rank of the square-class matrix of c_1..c_n; full rank n means surjective
rep = stoll_rank(parse_map("x^2+t", 11), 8)
print("rank", rep.rank, "of", rep.depth)
print("\n".join(rep.matrix_strings()))

# over Z, every candidate prime from subset discriminants gets checked
jr = jones_verify(3, scan_cap=200)
for rec in jr.records:
    print(rec.subset, rec.disc, rec.verdicts)
print("complete:", jr.complete, "bad primes:", jr.bad_primes_found)

# Mason-Stothers on a few random coprime pairs over F_5[t]
rng = random.Random(1)
desc = prime_field(5)
for _ in range(5):
    a, b = random_triple(desc, rng)
    r = mason_stothers_check(a, b)
    print(f"h={r.height} <= 5^{r.e} * ({r.places} - 2) = {r.rhs}")
