"""Mod-2 homology of the free mapping space, checked two ways.

For even n the single differential d(iota) = (n+1) u c^n is visible
enough that surviving monomials can be counted by hand, block by block in
the power of c. `mod2_betti_oracle` does that count with plain integers;
the engine does linear algebra over F_2. They must agree cell for cell.
"""

from loophom import (
    GF2,
    LOOP,
    SpaceSpec,
    betti_table,
    check_mod2_oracle,
    e2_page,
    generator_schedule,
    mod2_betti_oracle,
)

n = 2
cutoff = 20

print("Pontrjagin generators for n=2 mod 2, through degree", cutoff)
for name, degree, weight, kind, _ in generator_schedule(n, GF2, LOOP, cutoff):
    print(f"  {name:5s} degree {degree:3d} weight {weight:2d} {kind}")
print()

page = e2_page(n, GF2, LOOP, cutoff)
iota = page.algebra.gen("iota")
print("d(iota) =", page.differential(iota))
print()

spec = SpaceSpec(LOOP, n, GF2)
table = betti_table(spec, range(-2, 3), cutoff)
print(f"Betti numbers by component (ordinary degree <= {cutoff}):")
for k in table.components():
    col = table.column(k)
    row = " ".join(f"{col.get(d, 0)}" for d in range(cutoff + 1))
    print(f"  k={k:2d}: {row}")
print()

print("Independent monomial count at the same spots:")
for k in range(-2, 3):
    row = " ".join(str(mod2_betti_oracle(n, d, k, cutoff)) for d in range(cutoff + 1))
    print(f"  k={k:2d}: {row}")
print()

report = check_mod2_oracle(n, range(-4, 5), cutoff=30)
print(report)
assert report.passed
