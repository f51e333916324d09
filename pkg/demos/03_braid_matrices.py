"""Pure braid matrices from the closed formulas, checked against webs.

Run: python3 demos/03_braid_matrices.py
"""

import cmath

from a2braid.braid import basis, check_pure_braid_relations, rho_generator, rho_word
from a2braid.webs.oracle import gram_matrix, oracle_generator_matrix

n, k = 1, 2
print(f"n={n}, k={k}: basis webs indexed by {basis(n, k)}")
print()
print("A(2,3) acts diagonally:")
print(rho_generator(n, k, 2, 3))
print()
print("A(1,3) mixes the two basis webs:")
print(rho_generator(n, k, 1, 3))

print()
print("The same matrices, computed by gluing cabled braids onto basis webs,")
print("reducing, and solving against the Gram matrix")
print(gram_matrix(n, k))
for i in range(1, 2 * k + 1):
    for j in range(i + 1, 2 * k + 1):
        same = oracle_generator_matrix(n, k, i, j) == rho_generator(n, k, i, j)
        print(f"  A({i},{j}): {'agrees' if same else 'differs'}")

print()
res = check_pure_braid_relations(n, k)
print(f"Birman relations at k=2: {sum(r.passed for r in res)}/{len(res)} hold exactly")

print()
w = "A(1,3) A(2,4)^-1 A(1,2)"
m = rho_word(n, k, w)
print(f"{w} evaluated at v = exp(2 pi i / 30), i.e. q a fifth root of unity:")
print(m.evaluate(cmath.exp(2j * cmath.pi / 30)).round(6))
