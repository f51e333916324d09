"""Closed-form trivalent graph values and the recoupling matrix.

Run: python3 demos/01_spider_values.py
"""

from a2braid.coefficients import qnum
from a2braid.linalg import RepMatrix
from a2braid.spider import delta, recoupling_matrix, tet, theta, theta_closed, theta_sum

print("Everything is exact in v = q^(1/6).  [3] =", qnum(3))
print()
print("Closed clasp loops Delta(i, j):")
for i in range(3):
    print("  ", [str(delta(i, j)) for j in range(3)])

print()
print("Theta values have two formulas; they agree as rational functions:")
for n in range(4):
    for i in range(n + 1):
        assert theta_sum(n, i) == theta_closed(n, i)
    print(f"   n={n}:", ", ".join(str(theta(n, i)) for i in range(n + 1)))

print()
print("Tet(2; 1, 1) =", tet(2, 1, 1))

f = RepMatrix(recoupling_matrix(1))
print()
print("Recoupling matrix F at n=1:")
print(f)
print("F @ F is the identity:", (f @ f).is_identity())
