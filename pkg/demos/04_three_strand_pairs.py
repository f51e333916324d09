"""Where the construction stops being a representation: k = 3.

At n=1, k=3 the triangle-free family has four webs, while the
noncrossing matchings on the same six boundary points give five
independent webs.  Cabled braids push the four basis webs out of their
span, so the relation check fails.  Generators that need no rotation
still agree with the web computation.

Run: python3 demos/04_three_strand_pairs.py   (under a minute)
"""

from a2braid.braid import check_pure_braid_relations, rho_generator
from a2braid.webs.oracle import oracle_generator_matrix

res = check_pure_braid_relations(1, 3)
print(f"Birman relations at k=3: {sum(r.passed for r in res)}/{len(res)} hold")
for r in [r for r in res if not r.passed][:5]:
    print("  fails:", r.name)
print()
for i, j in [(2, 3), (2, 4), (3, 4), (1, 5), (1, 6), (1, 2), (1, 3)]:
    same = oracle_generator_matrix(1, 3, i, j) == rho_generator(1, 3, i, j)
    print(f"A({i},{j}) closed form vs webs: {'agrees' if same else 'differs'}")
