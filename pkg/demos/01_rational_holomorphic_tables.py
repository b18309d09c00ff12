"""Rational homology of spaces of rational maps, against the closed form.

Every positive-degree component of the space of degree-k holomorphic maps
from the sphere to projective n-space has the same rational homology:
ones in even degrees 0..2n-2 and odd degrees 2n+1..4n-1. The degree-0
component is just projective n-space. The engine recovers both from the
algebra side, so the two columns printed here must agree.
"""

from loophom import (
    HOL,
    RATIONALS,
    SpaceSpec,
    betti_table,
    closed_form_rational_hol_betti,
    poincare_series,
)

for n in (1, 2, 3):
    spec = SpaceSpec(HOL, n, RATIONALS)
    cutoff = 4 * n
    print(f"== target P^{n}, cutoff {cutoff} ==")
    for k in (0, 1, 2, 3):
        engine = betti_table(spec, [k], cutoff).column(k)
        closed = closed_form_rational_hol_betti(n, k)
        tag = "ok" if engine == closed else "MISMATCH"
        print(f"  k={k}: engine {engine}")
        print(f"       closed {closed}   [{tag}]")
        assert engine == closed
    series = poincare_series(spec, 1, cutoff)
    print(f"  Poincare series of any positive component: {series}")
    print()

print("The free (continuous) components over the rationals, for contrast:")
from loophom import LOOP

spec = SpaceSpec(LOOP, 2, RATIONALS)
for k in (0, 1):
    print(f"  n=2, k={k}: {betti_table(spec, [k], 12).column(k)}")
