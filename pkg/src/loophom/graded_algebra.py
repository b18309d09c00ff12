"""Free graded-commutative algebras with a second (weight) grading.

Generators come in four kinds:

* ``polynomial``  unbounded nonnegative exponents,
* ``laurent``     arbitrary integer exponents (degree-0 generators only),
* ``exterior``    exponents 0 or 1, square equal to zero,
* ``truncated``   exponents 0..m, higher powers equal to zero.

Elements are finite sums of monomials with exact field coefficients.
Multiplication carries the Koszul sign: commuting odd-degree factors past
each other costs a minus sign (no signs in characteristic 2).

A monomial's degree is the exponent-weighted sum of generator degrees and
its weight the same sum over generator weights, so the algebra is graded
by (degree, weight) pairs. `enumerate_basis` lists the monomials of one
such pair, provided a finiteness certificate holds (see its docstring).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .errors import (
    AlgebraMismatch,
    DuplicateName,
    InfiniteBasis,
    LaurentNonzeroDegree,
    ParityViolation,
    UnknownGenerator,
)
from .scalars import Field, Scalar

KINDS = ("polynomial", "laurent", "exterior", "truncated")


@dataclass(frozen=True, slots=True)
class Generator:
    gid: int
    name: str
    degree: int
    weight: int
    kind: str
    truncation: Optional[int] = None


class Monomial:
    """A product of generator powers, stored as a sorted exponent tuple.

    `exps` is a tuple of (gid, exponent) pairs, strictly increasing in gid,
    with all exponents nonzero. The empty tuple is the unit monomial.
    Degree and weight are cached at construction.
    """

    __slots__ = ("exps", "degree", "weight", "_hash")

    def __init__(self, exps, degree: int, weight: int):
        self.exps = tuple(exps)
        self.degree = degree
        self.weight = weight
        self._hash = hash(self.exps)

    def exponent(self, gid: int) -> int:
        for g, e in self.exps:
            if g == gid:
                return e
        return 0

    @property
    def is_unit(self) -> bool:
        return not self.exps

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def format(self, algebra: "GradedAlgebra") -> str:
        if not self.exps:
            return "1"
        parts = []
        for gid, e in self.exps:
            name = algebra.generators[gid].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial{self.exps}"


UNIT_KEY: tuple = ()


class GradedAlgebra:
    """A free bigraded-commutative algebra over an exact field.

    `complete_through_degree`, when set, records the largest degree d such
    that the declared generators produce the same monomial basis in all
    degrees <= d as some larger intended generator set would. Builders
    that truncate an infinite family of generators set it; homology
    routines refuse to read past it.
    """

    def __init__(self, field: Field, complete_through_degree: Optional[int] = None):
        self.field = field
        self.generators: list[Generator] = []
        self._by_name: dict[str, Generator] = {}
        self.complete_through_degree = complete_through_degree

    # -- construction -----------------------------------------------------

    def declare_generator(
        self,
        name: str,
        degree: int,
        weight: int,
        kind: str,
        truncation: Optional[int] = None,
    ) -> Generator:
        if kind not in KINDS:
            raise ValueError(f"unknown generator kind {kind!r}")
        if name in self._by_name:
            raise DuplicateName(f"generator {name!r} already declared")
        if kind == "laurent" and degree != 0:
            raise LaurentNonzeroDegree(f"laurent generator {name!r} has degree {degree}")
        if kind == "truncated":
            if truncation is None or truncation < 1:
                raise ValueError(f"truncated generator {name!r} needs truncation >= 1")
        elif truncation is not None:
            raise ValueError("truncation only applies to truncated generators")
        if self.field.characteristic != 2:
            if kind == "exterior" and degree % 2 == 0:
                raise ParityViolation(f"even exterior generator {name!r} over {self.field}")
            if kind != "exterior" and degree % 2 != 0:
                raise ParityViolation(f"odd {kind} generator {name!r} over {self.field}")
        gen = Generator(len(self.generators), name, degree, weight, kind, truncation)
        self.generators.append(gen)
        self._by_name[name] = gen
        return gen

    def generator(self, key: Union[int, str]) -> Generator:
        if isinstance(key, str):
            try:
                return self._by_name[key]
            except KeyError:
                raise UnknownGenerator(key) from None
        if 0 <= key < len(self.generators):
            return self.generators[key]
        raise UnknownGenerator(key)

    # -- monomials ---------------------------------------------------------

    def monomial(self, exponents: Mapping[Union[int, str], int]) -> Optional[Monomial]:
        """Canonical monomial for an exponent assignment, or None for zero.

        Exponents past an exterior or truncated bound make the monomial
        zero in the quotient, hence the None. Negative exponents are only
        legal on laurent generators.
        """
        merged: dict[int, int] = {}
        for key, e in exponents.items():
            g = self.generator(key)
            merged[g.gid] = merged.get(g.gid, 0) + e
        degree = weight = 0
        exps = []
        for gid in sorted(merged):
            e = merged[gid]
            if e == 0:
                continue
            g = self.generators[gid]
            if e < 0 and g.kind != "laurent":
                raise ValueError(f"negative exponent on {g.kind} generator {g.name!r}")
            if g.kind == "exterior" and e > 1:
                return None
            if g.kind == "truncated" and e > g.truncation:
                return None
            exps.append((gid, e))
            degree += e * g.degree
            weight += e * g.weight
        return Monomial(exps, degree, weight)

    @property
    def unit_monomial(self) -> Monomial:
        return Monomial((), 0, 0)

    def exponent_vector(self, m: Monomial) -> tuple:
        v = [0] * len(self.generators)
        for gid, e in m.exps:
            v[gid] = e
        return tuple(v)

    def multiply_monomials(self, a: Monomial, b: Monomial):
        """Product of two monomials: (sign, monomial) with monomial None
        when an exterior square or truncation bound kills the product."""
        sign = 1
        if self.field.characteristic != 2:
            # gids of odd-total-degree blocks, ascending; only odd*odd flips
            odd_a = [gid for gid, e in a.exps if (self.generators[gid].degree * e) & 1]
            if odd_a:
                flips = 0
                for gid, e in b.exps:
                    if (self.generators[gid].degree * e) & 1:
                        flips += len(odd_a) - bisect_right(odd_a, gid)
                if flips & 1:
                    sign = -1
        merged = dict(a.exps)
        for gid, e in b.exps:
            merged[gid] = merged.get(gid, 0) + e
        exps = []
        for gid in sorted(merged):
            e = merged[gid]
            if e == 0:
                continue
            g = self.generators[gid]
            if g.kind == "exterior" and e > 1:
                return sign, None
            if g.kind == "truncated" and e > g.truncation:
                return sign, None
            exps.append((gid, e))
        return sign, Monomial(exps, a.degree + b.degree, a.weight + b.weight)

    # -- elements ----------------------------------------------------------

    def element(self, terms: Mapping[Monomial, object]) -> "Element":
        clean = {}
        for m, c in terms.items():
            s = self.field.scalar(c)
            if s:
                clean[m] = s
        return Element(self, clean)

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial: self.field.one})

    def monomial_element(self, m: Optional[Monomial], coeff=1) -> "Element":
        if m is None:
            return self.zero()
        return self.element({m: coeff})

    def gen(self, key: Union[int, str]) -> "Element":
        g = self.generator(key)
        m = Monomial(((g.gid, 1),), g.degree, g.weight)
        return self.monomial_element(m)

    # -- basis enumeration ---------------------------------------------------

    def _certificate(self) -> None:
        """Finiteness certificate for (degree, weight)-homogeneous bases.

        Raises InfiniteBasis unless all of the following hold: no
        non-laurent generator sits in bidegree (0, 0); negative-degree
        generators have bounded exponents (exterior or truncated kind);
        positive-degree polynomial generators have nonnegative weight;
        degree-0 polynomial generators have positive weight; there is at
        most one laurent generator, it carries nonzero weight, and it
        never coexists with a degree-0 polynomial generator.
        """
        laurents = [g for g in self.generators if g.kind == "laurent"]
        if len(laurents) > 1:
            raise InfiniteBasis("more than one laurent generator")
        for g in laurents:
            if g.weight == 0:
                raise InfiniteBasis(f"laurent generator {g.name!r} has weight 0")
        for g in self.generators:
            if g.kind == "laurent":
                continue
            if g.degree == 0 and g.weight == 0:
                raise InfiniteBasis(f"generator {g.name!r} in bidegree (0, 0)")
            if g.degree < 0 and g.kind == "polynomial":
                raise InfiniteBasis(f"unbounded negative-degree generator {g.name!r}")
            if g.kind == "polynomial" and g.degree > 0 and g.weight < 0:
                raise InfiniteBasis(f"negative-weight generator {g.name!r}")
            if g.kind == "polynomial" and g.degree == 0:
                if g.weight < 0:
                    raise InfiniteBasis(f"degree-0 generator {g.name!r} with negative weight")
                if laurents:
                    raise InfiniteBasis(
                        f"degree-0 generator {g.name!r} alongside a laurent generator"
                    )

    def enumerate_basis(self, degree: int, weight: int) -> list[Monomial]:
        """All basis monomials of the given (degree, weight), sorted
        lexicographically on full exponent vectors.

        Exterior and truncated generators range over their finite exponent
        sets; positive-degree generators are bounded by the remaining
        degree budget; degree-0 polynomial generators by the remaining
        weight; the laurent exponent, if any, is solved from the weight
        equation. The certificate in `_certificate` guarantees this
        terminates with the complete list.
        """
        self._certificate()
        bounded = [g for g in self.generators if g.kind in ("truncated", "exterior")]
        positive = [g for g in self.generators if g.kind == "polynomial" and g.degree > 0]
        zero_deg = [g for g in self.generators if g.kind == "polynomial" and g.degree == 0]
        laurent = next((g for g in self.generators if g.kind == "laurent"), None)
        order = bounded + positive + zero_deg
        found: list[Monomial] = []

        def emit(acc):
            exps = tuple(sorted((gid, e) for gid, e in acc))
            found.append(Monomial(exps, degree, weight))

        def rec(i, rem_deg, rem_wt, acc):
            if i == len(order):
                if laurent is None:
                    if rem_deg == 0 and rem_wt == 0:
                        emit(acc)
                    return
                if rem_deg != 0:
                    return
                q, r = divmod(rem_wt, laurent.weight)
                if r == 0:
                    emit(acc + [(laurent.gid, q)] if q else acc)
                return
            g = order[i]
            if g.kind == "truncated":
                top = g.truncation
            elif g.kind == "exterior":
                top = 1
            elif g.degree > 0:
                if rem_deg < 0:
                    return
                top = rem_deg // g.degree
            else:
                if rem_deg != 0 or rem_wt < 0:
                    return
                top = rem_wt // g.weight
            for e in range(top + 1):
                nacc = acc + [(g.gid, e)] if e else acc
                rec(i + 1, rem_deg - e * g.degree, rem_wt - e * g.weight, nacc)

        rec(0, degree, weight, [])
        found.sort(key=self.exponent_vector)
        return found

    def __repr__(self):
        names = ", ".join(g.name for g in self.generators)
        return f"GradedAlgebra({self.field}; {names})"


def generator_horizon(family_degrees: Callable[[int], int], cutoff: int) -> int:
    """Largest index worth instantiating in an increasing generator family.

    `family_degrees(i)` gives the degree of the i-th family member and must
    be strictly increasing. Returns the smallest i_max >= 0 such that every
    member of index > i_max has degree above the cutoff; index 0 is always
    kept.
    """
    i = 0
    d = family_degrees(1)
    while d <= cutoff:
        i += 1
        nxt = family_degrees(i + 1)
        if nxt <= d:
            raise ValueError("family degrees must be strictly increasing")
        d = nxt
    return i


class Element:
    """A finite field-linear combination of monomials in one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Element(self.algebra, terms)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        s = self.algebra.field.scalar(c)
        if not s:
            return self.algebra.zero()
        return Element(self.algebra, {m: v * s for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, m = alg.multiply_monomials(m1, m2)
                if m is None:
                    continue
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = acc.get(m)
                s = c if s is None else s + c
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Element(alg, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers of elements are not defined")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    @property
    def is_homogeneous(self) -> bool:
        seen = {(m.degree, m.weight) for m in self.terms}
        return len(seen) <= 1

    def bidegree(self) -> Optional[tuple]:
        """(degree, weight) of a homogeneous element, None for zero."""
        seen = {(m.degree, m.weight) for m in self.terms}
        if not seen:
            return None
        if len(seen) > 1:
            raise ValueError(f"inhomogeneous element spans {sorted(seen)}")
        return seen.pop()

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(m, self.algebra.field.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for m in sorted(self.terms, key=alg.exponent_vector):
            c = self.terms[m]
            if m.is_unit:
                parts.append(str(c))
            elif c == alg.field.one:
                parts.append(m.format(alg))
            else:
                parts.append(f"{c}*{m.format(alg)}")
        return " + ".join(parts)
