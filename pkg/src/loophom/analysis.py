"""Betti tables, Poincare series, and checks of the structural theorems.

Gradings. The engine computes in the internal grading of the differential
algebra, where the projective class c sits in degree -2 and a component's
homology occupies degrees -2n and up. Reported tables use one of:

* "ordinary": internal degree + 2n, the honest homology degree of the
  mapping-space component (always nonnegative);
* "regraded": the internal degree itself, which is the grading in which
  different components become comparable.

Cutoffs are always stated in ordinary degree. Pages are built with one
extra degree of generators so the top requested degree is still exact.

Each check_* function returns a VerificationReport whose verdict is
"Pass", "Fail", or "NoClaim"; NoClaim means the hypothesis of the
statement under test is not met by the arguments, so nothing is claimed
either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .dga import DgaPage, _check_horizon, differential_matrix, homology_dimensions
from .errors import OddN
from .linalg import rank_of_columns
from .scalars import GF2, Field, make_field
from .spaces import HOL, LOOP, e2_page

DEFAULT_CUTOFF = 30

_PAGE_CACHE: dict = {}


def _page(n: int, field: Field, variant: str, cutoff: int) -> DgaPage:
    key = (n, field.characteristic, variant, cutoff)
    if key not in _PAGE_CACHE:
        _PAGE_CACHE[key] = e2_page(n, field, variant, cutoff)
    return _PAGE_CACHE[key]


def _coerce_field(field: Union[Field, str, int]) -> Field:
    return field if isinstance(field, Field) else make_field(field)


@dataclass(frozen=True)
class SpaceSpec:
    """Which space: variant ("loop" or "hol"), target dimension n, field."""

    variant: str
    n: int
    field: Field


@dataclass
class BettiTable:
    """Homology dimensions by (component, degree); zeros are omitted."""

    space: SpaceSpec
    grading: str
    cutoff: int
    entries: dict

    def column(self, component: int) -> dict:
        return {d: v for (k, d), v in self.entries.items() if k == component}

    def components(self) -> list:
        return sorted({k for k, _ in self.entries})

    def to_grading(self, grading: str) -> "BettiTable":
        if grading not in ("ordinary", "regraded"):
            raise ValueError(f"unknown grading {grading!r}")
        if grading == self.grading:
            return self
        shift = 2 * self.space.n if grading == "ordinary" else -2 * self.space.n
        entries = {(k, d + shift): v for (k, d), v in self.entries.items()}
        return BettiTable(self.space, grading, self.cutoff, entries)

    def to_ordinary(self) -> "BettiTable":
        return self.to_grading("ordinary")

    def to_regraded(self) -> "BettiTable":
        return self.to_grading("regraded")


def betti_table(
    space: SpaceSpec,
    components: Iterable[int],
    cutoff: int = DEFAULT_CUTOFF,
    grading: str = "ordinary",
) -> BettiTable:
    """Homology dimensions of the chosen components through the cutoff."""
    if grading not in ("ordinary", "regraded"):
        raise ValueError(f"unknown grading {grading!r}")
    comps = sorted(set(components))
    n = space.n
    if space.variant == HOL and any(k < 0 for k in comps):
        raise ValueError("holomorphic components have nonnegative degree")
    page = _page(n, space.field, space.variant, cutoff + 1)
    degrees = range(-2 * n, cutoff - 2 * n + 1)
    profiles = homology_dimensions(page, degrees, comps)
    shift = 2 * n if grading == "ordinary" else 0
    entries = {}
    for (d, w), prof in profiles.items():
        if prof.betti:
            entries[(w, d + shift)] = prof.betti
    return BettiTable(space, grading, cutoff, entries)


@dataclass
class PoincareSeries:
    """Coefficients of the Poincare series of one component."""

    space: SpaceSpec
    component: int
    grading: str
    cutoff: int
    coefficients: dict

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for d in sorted(self.coefficients):
            c = self.coefficients[d]
            head = "" if c == 1 and d != 0 else str(c)
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append(f"{head}t" if head else "t")
            else:
                parts.append(f"{head}t^{d}" if head else f"t^{d}")
        return " + ".join(parts)


def poincare_series(
    space: SpaceSpec,
    component: int,
    cutoff: int = DEFAULT_CUTOFF,
    grading: str = "ordinary",
) -> PoincareSeries:
    table = betti_table(space, [component], cutoff, grading)
    return PoincareSeries(space, component, grading, cutoff, table.column(component))


@dataclass
class VerificationReport:
    check: str
    params: dict
    verdict: str  # "Pass" | "Fail" | "NoClaim"
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.verdict == "Pass"

    @property
    def failed(self) -> bool:
        return self.verdict == "Fail"

    def __str__(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = f"{self.check} [{ps}]: {self.verdict}"
        if self.witness is not None and self.verdict != "Pass":
            out += f" witness={self.witness}"
        return out


def collapse_predicted(n: int, p: int, k: int, variant: str) -> bool:
    """Whether the page of component k is predicted to have no nonzero
    differential mod p.

    Collapse holds iff p divides n+1, or p = 2 with n odd (the same
    condition), or p is odd and divides k. The degree-0 holomorphic
    component is constants only, where the differential has nothing to
    act on, so it collapses unconditionally.
    """
    if (n + 1) % p == 0:
        return True
    if p == 2 and n % 2 == 1:
        return True
    if p % 2 == 1 and k % p == 0:
        return True
    if variant == HOL and k == 0:
        return True
    return False


def check_collapse(
    n: int, p: int, components: Iterable[int], cutoff: int = DEFAULT_CUTOFF
) -> VerificationReport:
    """Compare observed degeneration against the predicted collapse rule,
    for both variants, component by component.

    A component's page collapses when dim E-infinity equals dim E2 at
    every spot through the cutoff, i.e. all differential ranks vanish.
    """
    field = make_field(p)
    comps = sorted(set(components))
    params = {"n": n, "p": p, "components": comps, "cutoff": cutoff}
    cells = {}
    mismatches = []
    for variant in (LOOP, HOL):
        want = [k for k in comps if variant == LOOP or k >= 0]
        if not want:
            continue
        page = _page(n, field, variant, cutoff + 1)
        profiles = homology_dimensions(page, range(-2 * n, cutoff - 2 * n + 1), want)
        for k in want:
            observed = all(
                prof.betti == prof.dim for (d, w), prof in profiles.items() if w == k
            )
            predicted = collapse_predicted(n, p, k, variant)
            cells[(variant, k)] = "collapse" if observed else "non-collapse"
            if observed != predicted:
                mismatches.append(
                    {"variant": variant, "k": k, "observed": observed, "predicted": predicted}
                )
    if mismatches:
        return VerificationReport("collapse", params, "Fail", mismatches)
    return VerificationReport("collapse", params, "Pass", cells)


def check_periodicity(
    n: int, p: int, k: int, component_range: Iterable[int], cutoff: int = DEFAULT_CUTOFF
) -> VerificationReport:
    """Components i and i+k have equal homology after regrading, whenever
    p divides k(n+1); multiplication by iota^k is the underlying map."""
    field = make_field(p)
    comps = sorted(set(component_range))
    params = {"n": n, "p": p, "k": k, "components": comps, "cutoff": cutoff}
    if (k * (n + 1)) % p != 0:
        return VerificationReport("periodicity", params, "NoClaim")
    spec = SpaceSpec(LOOP, n, field)
    needed = sorted(set(comps) | {i + k for i in comps})
    table = betti_table(spec, needed, cutoff, grading="regraded")
    for i in comps:
        a, b = table.column(i), table.column(i + k)
        if a != b:
            diff = sorted(set(a.items()) ^ set(b.items()))
            return VerificationReport(
                "periodicity", params, "Fail", {"i": i, "difference": diff}
            )
    return VerificationReport("periodicity", params, "Pass", {"pairs": len(comps)})


def check_dichotomy(
    n: int,
    field: Union[Field, str, int],
    component_range: Iterable[int],
    cutoff: int = DEFAULT_CUTOFF,
) -> VerificationReport:
    """Every component's homology matches component 0's or component 1's
    (after regrading)."""
    field = _coerce_field(field)
    comps = sorted(set(component_range))
    params = {"n": n, "field": field, "components": comps, "cutoff": cutoff}
    spec = SpaceSpec(LOOP, n, field)
    needed = sorted(set(comps) | {0, 1})
    table = betti_table(spec, needed, cutoff, grading="regraded")
    col0, col1 = table.column(0), table.column(1)
    assignment = {}
    for i in comps:
        col = table.column(i)
        if col == col0:
            assignment[i] = 0
        elif col == col1:
            assignment[i] = 1
        else:
            return VerificationReport("dichotomy", params, "Fail", {"component": i})
    return VerificationReport("dichotomy", params, "Pass", assignment)


def unit_check(n: int, p: int, k: int, cutoff: int = DEFAULT_CUTOFF) -> VerificationReport:
    """When p divides k(n+1), iota^k and iota^-k are permanent cycles whose
    homology classes multiply to the class of 1: a unit and its inverse.

    Verified on the loop page: d kills both powers, neither is a boundary,
    their product is exactly the unit monomial, and the unit is not a
    boundary either.
    """
    field = make_field(p)
    params = {"n": n, "p": p, "k": k, "cutoff": cutoff}
    if k < 1:
        raise ValueError("k must be a positive integer")
    if (k * (n + 1)) % p != 0:
        return VerificationReport("unit", params, "NoClaim")
    page = _page(n, field, LOOP, cutoff + 1)
    alg = page.algebra
    d = page.differential
    _check_horizon(alg, 1)

    def is_boundary(monomial) -> bool:
        w = monomial.weight
        mat = differential_matrix(page, 1, w)
        basis = alg.enumerate_basis(0, w)
        index = {m: i for i, m in enumerate(basis)}
        cols = [mat.column(j) for j in range(mat.ncols)]
        vec = {index[monomial]: field.one}
        base = rank_of_columns(field, len(basis), cols)
        return rank_of_columns(field, len(basis), cols + [vec]) == base

    pos = alg.monomial({"iota": k})
    neg = alg.monomial({"iota": -k})
    problems = []
    if d(alg.monomial_element(pos)):
        problems.append("d(iota^k) != 0")
    if d(alg.monomial_element(neg)):
        problems.append("d(iota^-k) != 0")
    if is_boundary(pos):
        problems.append("iota^k is a boundary")
    if is_boundary(neg):
        problems.append("iota^-k is a boundary")
    product = alg.monomial_element(pos) * alg.monomial_element(neg)
    if product != alg.one():
        problems.append("iota^k * iota^-k != 1")
    if is_boundary(alg.unit_monomial):
        problems.append("1 is a boundary")
    if problems:
        return VerificationReport("unit", params, "Fail", problems)
    return VerificationReport(
        "unit", params, "Pass", {"classes": [f"iota^{k}", f"iota^-{k}", "1"]}
    )


def check_mod2_oracle(
    n: int, components: Iterable[int], cutoff: int = DEFAULT_CUTOFF
) -> VerificationReport:
    """Engine Betti numbers of the mod-2 loop page agree with the
    independent monomial count of `mod2_betti_oracle`, at every ordinary
    degree through the cutoff. Even n only."""
    if n % 2:
        raise OddN(f"the mod-2 count needs even n, got {n}")
    comps = sorted(set(components))
    params = {"n": n, "components": comps, "cutoff": cutoff}
    table = betti_table(SpaceSpec(LOOP, n, GF2), comps, cutoff, grading="ordinary")
    mismatches = []
    checked = 0
    for k in comps:
        col = table.column(k)
        for degree in range(cutoff + 1):
            want = mod2_betti_oracle(n, degree, k, cutoff)
            got = col.get(degree, 0)
            checked += 1
            if want != got:
                mismatches.append(
                    {"k": k, "degree": degree, "engine": got, "oracle": want}
                )
    if mismatches:
        return VerificationReport("mod2-oracle", params, "Fail", mismatches)
    return VerificationReport("mod2-oracle", params, "Pass", {"cells": checked})


def mod2_betti_oracle(n: int, degree: int, weight: int, cutoff: int = DEFAULT_CUTOFF) -> int:
    """Independent count of the mod-2 loop homology dimension for even n,
    at one (ordinary degree, component) spot.

    For even n the mod-2 differential sends iota^a u^b Q c^j to
    iota^(a-1) u^(b+1) Q c^(j+n), nonzero exactly when a is odd and j = 0
    (Q stands for any monomial in the operation family). Surviving
    monomials are counted block by block in the c-exponent j:

    * j = 0: iota-exponent even (the kernel of the only nonzero block);
    * 0 < j < n: everything survives;
    * j = n: iota-exponent odd, plus the u-free monomials with even
      iota-exponent (those are never hit, since every boundary carries at
      least one u factor).

    Pure integer arithmetic; shares nothing with the homology engine.
    """
    if n % 2:
        raise OddN(f"the mod-2 count needs even n, got {n}")
    if degree < 0:
        return 0
    if degree > cutoff:
        raise ValueError(f"degree {degree} past cutoff {cutoff}")
    d_int = degree - 2 * n
    qgens = []
    i = 1
    while 2 ** (i + 1) * n - 1 <= cutoff:
        qgens.append((2 ** (i + 1) * n - 1, 2**i))
        i += 1
    qmons = [(0, 0)]
    for dg, wt in qgens:
        grown = []
        for D, W in qmons:
            e = 0
            while D + e * dg <= degree:
                grown.append((D + e * dg, W + e * wt))
                e += 1
        qmons = grown
    count = 0
    for j in range(n + 1):
        pontrjagin_degree = d_int + 2 * j
        if pontrjagin_degree < 0:
            continue
        for dq, wq in qmons:
            rem = pontrjagin_degree - dq
            if rem < 0 or rem % (2 * n - 1):
                continue
            b = rem // (2 * n - 1)
            a = weight - b - wq
            if j == 0:
                ok = a % 2 == 0
            elif j < n:
                ok = True
            else:
                ok = a % 2 == 1 or (b == 0 and a % 2 == 0)
            if ok:
                count += 1
    return count
