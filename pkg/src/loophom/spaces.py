"""Builders for the pages computing mapping-space homology.

The spaces in play are the components of the free mapping space of the
two-sphere into complex projective n-space, and of its subspace of
holomorphic (rational) maps. Components are indexed by the topological
degree k of a map, which the algebra sees as the weight grading.

The engine's model is a single differential bigraded algebra: the
Pontrjagin ring of the based double loop space (or of the space of based
rational maps, for the holomorphic variant) tensored with the cohomology
of projective space placed in negative even degrees. Writing iota for the
class of a degree-one component, u for the fundamental fiber class in
degree 2n - 1 and c for the hyperplane class in degree -2, the one
nonzero differential value is

    d(iota) = (n + 1) * u * c^n,

extended as a derivation. Homology of this complex gives the E-infinity
page; the degree reported to the user is the internal degree shifted up
by 2n (`analysis` handles the shift).

Pontrjagin ring generators over F_p come in an infinite family of
iterated homology operations applied to u. With y in degree d and weight
w the operation lands in degree p*d + (p - 1) and weight p*w; over an odd
prime the family also carries Bockstein partners one degree down. At p=2
this gives degrees 2^(i+1)*n - 1, at odd p degrees 2*p^i*n - 1 and
2*p^i*n - 2. Builders instantiate the family through a degree cutoff and
record the cutoff on the algebra so homology routines cannot silently
read past it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dga import Derivation, DgaPage, InducedMapReport, induced_map_on_homology
from .graded_algebra import GradedAlgebra, generator_horizon
from .scalars import Field

LOOP = "loop"
HOL = "hol"
VARIANTS = (LOOP, HOL)


def _check_args(n: int, field: Field, variant: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if not isinstance(field, Field):
        raise TypeError(f"expected a Field, got {field!r}")


def operation_degree(n: int, p: int, i: int) -> int:
    """Degree of the i-th iterated operation on u: index 0 is u itself.

    Follows the recursion deg Q(y) = p*deg(y) + (p-1) from deg u = 2n-1,
    which closes to 2*p^i*n - 1.
    """
    return 2 * p**i * n - 1


def generator_schedule(n: int, field: Field, variant: str, cutoff: int) -> list:
    """Generator declarations (name, degree, weight, kind, truncation) for
    the Pontrjagin ring, in canonical order: iota, then the operation
    family ascending, Bocksteins interleaved at odd primes.

    Generators of degree above the cutoff are omitted; over the rationals
    the ring is just iota and u and the cutoff is irrelevant.
    """
    _check_args(n, field, variant)
    iota_kind = "laurent" if variant == LOOP else "polynomial"
    rows = [("iota", 0, 1, iota_kind, None)]
    p = field.characteristic
    if p == 0:
        rows.append(("u", 2 * n - 1, 1, "exterior", None))
    elif p == 2:
        rows.append(("u", 2 * n - 1, 1, "polynomial", None))
        top = generator_horizon(lambda i: operation_degree(n, 2, i), cutoff)
        for i in range(1, top + 1):
            rows.append((f"Q{i}u", operation_degree(n, 2, i), 2**i, "polynomial", None))
    else:
        rows.append(("u", 2 * n - 1, 1, "exterior", None))
        i = 1
        while operation_degree(n, p, i) - 1 <= cutoff:
            dq = operation_degree(n, p, i)
            if dq <= cutoff:
                rows.append((f"Q{i}u", dq, p**i, "exterior", None))
            rows.append((f"bQ{i}u", dq - 1, p**i, "polynomial", None))
            i += 1
    return rows


def pontrjagin_algebra(n: int, field: Field, variant: str, cutoff: int = 30) -> GradedAlgebra:
    """The Pontrjagin ring of the based mapping space, weight-graded by
    the degree of maps. The loop variant has iota invertible (laurent);
    the holomorphic variant only its nonnegative powers."""
    rows = generator_schedule(n, field, variant, cutoff)
    horizon = None if field.characteristic == 0 else cutoff
    alg = GradedAlgebra(field, complete_through_degree=horizon)
    for name, degree, weight, kind, truncation in rows:
        alg.declare_generator(name, degree, weight, kind, truncation)
    return alg


def projective_cohomology(n: int, field: Field) -> GradedAlgebra:
    """Cohomology of projective n-space, graded negatively: a single
    truncated class c in degree -2 with c^(n+1) = 0."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    alg = GradedAlgebra(field)
    alg.declare_generator("c", -2, 0, "truncated", truncation=n)
    return alg


def e2_page(n: int, field: Field, variant: str, cutoff: int = 30) -> DgaPage:
    """The starting page: Pontrjagin ring tensored with projective
    cohomology, differential d(iota) = (n+1) u c^n.

    The cutoff bounds Pontrjagin generator degrees. Because c can lower a
    monomial's degree by at most 2n, bases are complete through internal
    degree cutoff - 2n, and the algebra records that horizon (None over
    the rationals, where the generator list is not truncated).
    """
    rows = generator_schedule(n, field, variant, cutoff)
    horizon = None if field.characteristic == 0 else cutoff - 2 * n
    alg = GradedAlgebra(field, complete_through_degree=horizon)
    for name, degree, weight, kind, truncation in rows:
        alg.declare_generator(name, degree, weight, kind, truncation)
    alg.declare_generator("c", -2, 0, "truncated", truncation=n)
    image = alg.monomial_element(alg.monomial({"u": 1, "c": n}), n + 1)
    differential = Derivation.from_generator_images(alg, {"iota": image})
    return DgaPage(alg, differential, label="E2")


@dataclass
class HolLoopInclusion:
    """The holomorphic page sitting inside the loop page, monomial by
    monomial; verified to commute with the differentials on creation."""

    sub_page: DgaPage
    big_page: DgaPage

    def induced_homology(self, degrees, weights) -> InducedMapReport:
        return induced_map_on_homology(self.sub_page, self.big_page, degrees, weights)


def hol_to_loop_inclusion(n: int, field: Field, cutoff: int = 30) -> HolLoopInclusion:
    sub = e2_page(n, field, HOL, cutoff)
    big = e2_page(n, field, LOOP, cutoff)
    # empty ranges still run the generator-matching and chain-map checks
    induced_map_on_homology(sub, big, [], [])
    return HolLoopInclusion(sub, big)


def closed_form_rational_hol_betti(n: int, k: int) -> dict:
    """Rational Betti numbers of the degree-k holomorphic component, by
    degree (ordinary grading).

    For k > 0 the component has the rational homology of projective
    (n-1)-space plus a copy of the reduced homology of projective n-space
    shifted up by 2n - 1: ones in degrees 0, 2, ..., 2n-2 and
    2n+1, 2n+3, ..., 4n-1. The degree-0 component is projective n-space
    itself.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if k < 0:
        raise ValueError("holomorphic components have nonnegative degree")
    if k == 0:
        return {2 * i: 1 for i in range(n + 1)}
    table = {2 * i: 1 for i in range(n)}
    for i in range(1, n + 1):
        table[2 * n - 1 + 2 * i] = 1
    return table
