"""Brute-force census of GF(5) laws whose attached form is the algebra norm.

Run with: python3 demos/03_census_gf5.py
"""

from quadlaw import census, cross_validate

records = census(5, "qN", beta=2)
total = sum(r.members_in_filter for r in records)
print(f"laws with attached form N (beta=2): {total}")
for r in records:
    if r.members_in_filter == 0:
        continue
    inv = None
    if r.invariants is not None:
        inv = tuple(x.value for x in r.invariants)
    print(
        f"  orbit of size {r.orbit_size:4d}  stabilizer {r.stabilizer_size:3d}"
        f"  regular={r.regular}  invariants={inv}"
    )

print("running the full cross-validation at p=5 ...")
report = cross_validate(5, sample_pairs=100)
for c in report.checks:
    print(f"  {c.name}: {len(c.counterexamples)} counterexamples")
print("all good" if report.ok else "MISMATCHES FOUND")
