"""Differential graded algebras: derivations, matrices, homology ranks.

A differential here is a square-zero derivation of bidegree (-1, 0): it
lowers degree by one, preserves weight, and satisfies the signed Leibniz
rule. It is determined by its values on generators, and d(d(g)) = 0 on
generators already forces d*d = 0 everywhere, because d*d is itself a
derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import (
    AlgebraMismatch,
    CutoffTooTight,
    FieldMismatch,
    InhomogeneousImage,
    NotAChainMap,
    NotSquareZero,
    WrongBidegree,
)
from .graded_algebra import Element, GradedAlgebra, Monomial
from .linalg import Matrix, kernel_basis, rank_of_columns


class Derivation:
    """A square-zero degree (-1, 0) derivation given on generators.

    Use `from_generator_images`; the bare constructor skips validation.
    """

    def __init__(self, algebra: GradedAlgebra, images: dict):
        self.algebra = algebra
        self.images = images

    @classmethod
    def from_generator_images(
        cls, algebra: GradedAlgebra, images: Mapping[Union[int, str], Element]
    ) -> "Derivation":
        clean: dict[int, Element] = {}
        for key, img in images.items():
            g = algebra.generator(key)
            if img.algebra is not algebra:
                raise AlgebraMismatch(f"image of {g.name!r} lives in a different algebra")
            if not img:
                continue
            try:
                bideg = img.bidegree()
            except ValueError as exc:
                raise InhomogeneousImage(f"image of {g.name!r}: {exc}") from None
            expected = (g.degree - 1, g.weight)
            if bideg != expected:
                raise WrongBidegree(
                    f"image of {g.name!r} has bidegree {bideg}, expected {expected}"
                )
            clean[g.gid] = img
        der = cls(algebra, clean)
        for gid, img in clean.items():
            if der(img):
                name = algebra.generators[gid].name
                raise NotSquareZero(f"d(d({name})) != 0")
        return der

    def is_zero(self) -> bool:
        return not self.images

    def apply_monomial(self, m: Monomial) -> Element:
        """Signed Leibniz expansion over the blocks of one monomial.

        For a block g^e the derivation contributes e * g^(e-1) * d(g),
        valid for negative (laurent) e as well; the sign is the parity of
        the degree of everything to the left of the block.
        """
        alg = self.algebra
        out = alg.zero()
        if not self.images:
            return out
        char2 = alg.field.characteristic == 2
        prefix_parity = 0
        blocks = m.exps
        for idx, (gid, e) in enumerate(blocks):
            g = alg.generators[gid]
            img = self.images.get(gid)
            if img is not None:
                coeff = alg.field.scalar(e)
                if not char2 and (prefix_parity & 1):
                    coeff = -coeff
                if coeff:
                    left_exps = blocks[:idx] + (((gid, e - 1),) if e != 1 else ())
                    right_exps = blocks[idx + 1 :]
                    ldeg = sum(alg.generators[i].degree * x for i, x in left_exps)
                    lwt = sum(alg.generators[i].weight * x for i, x in left_exps)
                    rdeg = sum(alg.generators[i].degree * x for i, x in right_exps)
                    rwt = sum(alg.generators[i].weight * x for i, x in right_exps)
                    term = (
                        alg.monomial_element(Monomial(left_exps, ldeg, lwt))
                        * img
                        * alg.monomial_element(Monomial(right_exps, rdeg, rwt))
                    )
                    out = out + term.scale(coeff)
            prefix_parity += g.degree * e
        return out

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.algebra:
            raise AlgebraMismatch("element of a different algebra")
        out = self.algebra.zero()
        for m, c in x.terms.items():
            out = out + self.apply_monomial(m).scale(c)
        return out


@dataclass
class DgaPage:
    """An algebra with its differential; label is display metadata only."""

    algebra: GradedAlgebra
    differential: Derivation
    label: str = "E2"


@dataclass(frozen=True)
class RankProfile:
    """Linear data of one (degree, weight) spot of a page.

    betti = dim - rank_d_here - rank_d_above is the homology dimension.
    """

    dim: int
    rank_d_here: int
    rank_d_above: int

    @property
    def betti(self) -> int:
        return self.dim - self.rank_d_here - self.rank_d_above


def differential_matrix(page: DgaPage, degree: int, weight: int) -> Matrix:
    """Matrix of d from (degree, weight) to (degree - 1, weight), columns
    and rows in basis enumeration order."""
    alg = page.algebra
    source = alg.enumerate_basis(degree, weight)
    target = alg.enumerate_basis(degree - 1, weight)
    index = {m: i for i, m in enumerate(target)}
    entries = {}
    for j, m in enumerate(source):
        for mt, c in page.differential.apply_monomial(m).terms.items():
            entries[(index[mt], j)] = c
    return Matrix(alg.field, len(target), len(source), entries)


def _check_horizon(alg: GradedAlgebra, top_degree: int) -> None:
    horizon = alg.complete_through_degree
    if horizon is not None and top_degree + 1 > horizon:
        raise CutoffTooTight(
            f"homology at degree {top_degree} needs a complete basis at degree "
            f"{top_degree + 1}, past the algebra's horizon {horizon}"
        )


def homology_dimensions(
    page: DgaPage, degrees: Iterable[int], weights: Iterable[int]
) -> dict:
    """RankProfile for every requested (degree, weight).

    One extra degree above the requested top is enumerated silently so the
    incoming rank is exact there.
    """
    degs = sorted(set(degrees))
    if not degs:
        return {}
    _check_horizon(page.algebra, degs[-1])
    out = {}
    for w in sorted(set(weights)):
        needed = sorted(set(degs) | {d + 1 for d in degs})
        ranks = {}
        dims = {}
        for d in needed:
            mat = differential_matrix(page, d, w)
            ranks[d] = mat.rank()
            dims[d] = mat.ncols
        for d in degs:
            out[(d, w)] = RankProfile(dims[d], ranks[d], ranks[d + 1])
    return out


@dataclass(frozen=True)
class InducedCell:
    rank: int
    betti_sub: int
    betti_big: int

    @property
    def injective(self) -> bool:
        return self.rank == self.betti_sub


@dataclass
class InducedMapReport:
    cells: dict

    @property
    def injective(self) -> bool:
        return all(c.injective for c in self.cells.values())


def _generator_translation(sub: GradedAlgebra, big: GradedAlgebra) -> dict:
    """gid map sub -> big by generator name; checks the data matches.

    A polynomial generator may widen to a laurent one of the same name (a
    subalgebra missing negative powers); all other kind changes are
    rejected.
    """
    if sub.field != big.field:
        raise FieldMismatch(f"{sub.field} vs {big.field}")
    mapping = {}
    for g in sub.generators:
        try:
            h = big.generator(g.name)
        except Exception:
            raise NotAChainMap(f"generator {g.name!r} missing from the big algebra")
        if (g.degree, g.weight) != (h.degree, h.weight):
            raise NotAChainMap(f"generator {g.name!r} changes bidegree")
        if g.kind != h.kind and not (g.kind == "polynomial" and h.kind == "laurent"):
            raise NotAChainMap(f"generator {g.name!r} changes kind {g.kind} -> {h.kind}")
        if g.kind == "truncated" and g.truncation != h.truncation:
            raise NotAChainMap(f"generator {g.name!r} changes truncation")
        mapping[g.gid] = h.gid
    return mapping


def _translate_monomial(m: Monomial, mapping: dict) -> Monomial:
    exps = sorted((mapping[gid], e) for gid, e in m.exps)
    return Monomial(tuple(exps), m.degree, m.weight)


def translate_element(x: Element, big: GradedAlgebra, mapping: dict) -> Element:
    return big.element({_translate_monomial(m, mapping): c for m, c in x.terms.items()})


def induced_map_on_homology(
    sub_page: DgaPage, big_page: DgaPage, degrees: Iterable[int], weights: Iterable[int]
) -> InducedMapReport:
    """Homology of the inclusion sub -> big, per (degree, weight).

    The inclusion sends each sub generator to the big generator of the
    same name. It must commute with the differentials; checking that on
    generators suffices since both sides are derivations along an algebra
    map. The rank of the induced map at a spot is
    rank(image-of-cycles + boundaries) - rank(boundaries).
    """
    sub, big = sub_page.algebra, big_page.algebra
    mapping = _generator_translation(sub, big)
    for g in sub.generators:
        lhs = translate_element(sub_page.differential(sub.gen(g.gid)), big, mapping)
        rhs = big_page.differential(big.gen(mapping[g.gid]))
        if lhs != rhs:
            raise NotAChainMap(f"differentials disagree on generator {g.name!r}")
    degs = sorted(set(degrees))
    if not degs:
        return InducedMapReport({})
    _check_horizon(sub, degs[-1])
    _check_horizon(big, degs[-1])
    report = {}
    for w in sorted(set(weights)):
        for d in degs:
            m_sub_here = differential_matrix(sub_page, d, w)
            m_sub_above = differential_matrix(sub_page, d + 1, w)
            m_big_here = differential_matrix(big_page, d, w)
            m_big_above = differential_matrix(big_page, d + 1, w)
            betti_sub = m_sub_here.ncols - m_sub_here.rank() - m_sub_above.rank()
            betti_big = m_big_here.ncols - m_big_here.rank() - m_big_above.rank()

            big_basis = big.enumerate_basis(d, w)
            big_index = {m: i for i, m in enumerate(big_basis)}
            sub_basis = sub.enumerate_basis(d, w)
            cycle_vectors = []
            for vec in kernel_basis(m_sub_here):
                tv = {}
                for j, c in enumerate(vec):
                    if c:
                        tv[big_index[_translate_monomial(sub_basis[j], mapping)]] = c
                cycle_vectors.append(tv)
            boundary_vectors = [
                m_big_above.column(j) for j in range(m_big_above.ncols)
            ]
            r_bound = rank_of_columns(big.field, len(big_basis), boundary_vectors)
            r_total = rank_of_columns(
                big.field, len(big_basis), boundary_vectors + cycle_vectors
            )
            report[(d, w)] = InducedCell(r_total - r_bound, betti_sub, betti_big)
    return InducedMapReport(report)
