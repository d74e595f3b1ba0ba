"""From raw coefficients to a normal form, invariants, and isotropy.

Run with: python3 demos/02_normal_forms_and_invariants.py
"""

import random

from quadlaw import (
    Na,
    K,
    act,
    equivalent,
    invariants_J,
    isotropy,
    normal_form,
    prime_field,
    Mat2,
    SBL,
)

spec = prime_field(5)
rng = random.Random(1)

# pick a random law with a non-degenerate attached quadratic form
while True:
    F = SBL(spec, *[rng.randrange(5) for _ in range(6)])
    if not F.qform().is_degenerate():
        break

print("law coefficients:", tuple(x.value for x in F.coeffs()))
q = F.qform()
print("attached Gram matrix:", (q.q11.value, q.q12.value, q.q22.value))

nf = normal_form(F)
print("beta:", nf.algebra.beta, " a:", nf.a, " c:", nf.c)
print("constraint N(c) - N(a) =", nf.c.norm() - nf.a.norm())
print("K =", K(nf), " N(a) =", Na(nf))
try:
    print("J-invariants:", tuple(x.value for x in invariants_J(nf)))
except Exception as e:
    print("J-invariants undefined:", e)

d = isotropy(nf)
print("isotropy case:", d.case_tag, "order:", d.order())

# transforming the law never changes the verdict
u = Mat2(spec.element(1), spec.element(2), spec.element(0), spec.element(1))
res = equivalent(F, act(u, F))
print("F ~ u.F ?", res.verdict, "witness maps F onto u.F:", act(res.witness, F) == act(u, F))
