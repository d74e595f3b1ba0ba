"""A quick tour of the exact scalar arithmetic and the quadratic algebra.

Run with: python3 demos/01_field_and_algebra_tour.py
"""

from quadlaw import QuadAlgebra, norm_one_group, prime_field, rationals, split

gf5 = prime_field(5)
print("GF(5):", [x.value for x in gf5.elements()])
print("2 * 3 =", gf5.element(2) * gf5.element(3))
print("inv(2) =", gf5.element(2).inv())
print("squares mod 5:", sorted({(x * x).value for x in gf5.elements()}))

QQ = rationals()
from fractions import Fraction

print("1/2 + 1/3 =", QQ.element(Fraction(1, 2)) + QQ.element(Fraction(1, 3)))

# The quadratic algebra F[tau]/(tau^2 + beta).  Whether -beta is a square
# decides everything: a field extension (elliptic) or F x F (hyperbolic).
for beta in (2, 4):
    alg = QuadAlgebra(gf5.element(beta))
    kind = "hyperbolic" if alg.is_hyperbolic() else "elliptic"
    group = norm_one_group(alg)
    print(f"beta={beta}: {kind}, norm-one group has {len(group)} elements")

hyp = QuadAlgebra(gf5.element(4))
x = hyp.element(2, 1)
pair = split(x)
print("split(2 + tau) =", (pair.first.value, pair.second.value), "norm =", x.norm())
