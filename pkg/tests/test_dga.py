"""Derivations, differential matrices, homology, induced maps."""

import random

import pytest

from loophom.dga import (
    Derivation,
    DgaPage,
    differential_matrix,
    homology_dimensions,
    induced_map_on_homology,
)
from loophom.errors import (
    AlgebraMismatch,
    CutoffTooTight,
    FieldMismatch,
    InhomogeneousImage,
    NotAChainMap,
    NotSquareZero,
    WrongBidegree,
)
from loophom.graded_algebra import GradedAlgebra
from loophom.scalars import GF2, RATIONALS, Field
from loophom.spaces import HOL, LOOP, e2_page

F3 = Field(3)


def circle_like_page(field=RATIONALS):
    """Laurent t with d(t) = e: homology is one class in each of
    bidegrees (0, 0) and (-1, 0)."""
    alg = GradedAlgebra(field)
    alg.declare_generator("t", 0, 1, "laurent")
    alg.declare_generator("e", -1, 1, "exterior")
    d = Derivation.from_generator_images(alg, {"t": alg.gen("e")})
    return DgaPage(alg, d)


# -- validation ---------------------------------------------------------------


def test_image_must_live_in_same_algebra():
    page = circle_like_page()
    other = GradedAlgebra(RATIONALS)
    other.declare_generator("e", -1, 1, "exterior")
    with pytest.raises(AlgebraMismatch):
        Derivation.from_generator_images(page.algebra, {"t": other.gen("e")})


def test_image_must_be_homogeneous():
    alg = GradedAlgebra(RATIONALS)
    alg.declare_generator("t", 0, 1, "laurent")
    alg.declare_generator("e", -1, 1, "exterior")
    mixed = alg.gen("e") + alg.monomial_element(alg.monomial({"e": 1, "t": 1}))
    with pytest.raises(InhomogeneousImage):
        Derivation.from_generator_images(alg, {"t": mixed})


def test_image_bidegree_checked():
    alg = GradedAlgebra(RATIONALS)
    alg.declare_generator("t", 0, 1, "laurent")
    alg.declare_generator("e", -1, 1, "exterior")
    wrong = alg.monomial_element(alg.monomial({"e": 1, "t": 1}))  # (-1, 2)
    with pytest.raises(WrongBidegree):
        Derivation.from_generator_images(alg, {"t": wrong})


def test_square_zero_enforced():
    alg = GradedAlgebra(RATIONALS)
    alg.declare_generator("t", 0, 1, "laurent")
    alg.declare_generator("a", 1, 1, "exterior")
    alg.declare_generator("x", 2, 1, "polynomial")
    with pytest.raises(NotSquareZero):
        Derivation.from_generator_images(alg, {"x": alg.gen("a"), "a": alg.gen("t")})


def test_zero_images_dropped():
    alg = GradedAlgebra(RATIONALS)
    alg.declare_generator("t", 0, 1, "laurent")
    d = Derivation.from_generator_images(alg, {"t": alg.zero()})
    assert d.is_zero()


def test_apply_rejects_foreign_element():
    page = circle_like_page()
    other = circle_like_page()
    with pytest.raises(AlgebraMismatch):
        page.differential(other.algebra.gen("t"))


# -- Leibniz and square zero on real pages -------------------------------------


def random_monomials(alg, rng, spots, per_spot=4):
    mons = []
    for d, w in spots:
        basis = alg.enumerate_basis(d, w)
        rng.shuffle(basis)
        mons.extend(basis[:per_spot])
    return mons


@pytest.mark.parametrize(
    "n,field,variant",
    [(2, RATIONALS, LOOP), (1, F3, LOOP), (2, GF2, LOOP), (1, RATIONALS, HOL)],
)
def test_leibniz_rule(n, field, variant):
    page = e2_page(n, field, variant, cutoff=20)
    alg, d = page.algebra, page.differential
    rng = random.Random(42)
    spots = [(deg, w) for deg in range(-2, 7) for w in range(0, 4)]
    mons = random_monomials(alg, rng, spots, per_spot=2)
    pairs = [(rng.choice(mons), rng.choice(mons)) for _ in range(60)]
    for m1, m2 in pairs:
        x = alg.monomial_element(m1)
        y = alg.monomial_element(m2)
        sign = -1 if (m1.degree % 2) and field.characteristic != 2 else 1
        assert d(x * y) == d(x) * y + (x * d(y)).scale(sign)


@pytest.mark.parametrize(
    "n,field,variant",
    [(2, RATIONALS, LOOP), (1, F3, LOOP), (2, GF2, LOOP), (2, F3, HOL)],
)
def test_d_squared_zero_on_elements(n, field, variant):
    page = e2_page(n, field, variant, cutoff=20)
    alg, d = page.algebra, page.differential
    rng = random.Random(7)
    spots = [(deg, w) for deg in range(-3, 6) for w in range(0, 4)]
    for m in random_monomials(alg, rng, spots, per_spot=3):
        assert not d(d(alg.monomial_element(m)))


def test_laurent_power_rule():
    page = e2_page(2, RATIONALS, LOOP, cutoff=20)
    alg, d = page.algebra, page.differential
    d_iota = d(alg.gen("iota"))
    for k in range(-10, 11):
        if k == 0:
            continue
        got = d(alg.monomial_element(alg.monomial({"iota": k})))
        expected = (
            alg.monomial_element(alg.monomial({"iota": k - 1})) * d_iota
        ).scale(k)
        assert got == expected
    assert not d(alg.one())


# -- matrices and homology ------------------------------------------------------


def test_differential_matrix_frozen_example():
    # n = 2 over Q: d(iota) = 3 u c^2, a 1x1 matrix at bidegree (0, 1)
    page = e2_page(2, RATIONALS, LOOP, cutoff=16)
    alg = page.algebra
    mat = differential_matrix(page, 0, 1)
    assert (mat.nrows, mat.ncols) == (1, 1)
    assert mat.entries[(0, 0)] == RATIONALS(3)
    assert [m.format(alg) for m in alg.enumerate_basis(0, 1)] == ["iota"]
    assert [m.format(alg) for m in alg.enumerate_basis(-1, 1)] == ["u*c^2"]


def test_rank_profile_fields():
    page = e2_page(2, RATIONALS, LOOP, cutoff=16)
    prof = homology_dimensions(page, [0], [1])[(0, 1)]
    assert (prof.dim, prof.rank_d_here, prof.rank_d_above) == (1, 1, 0)
    assert prof.betti == 0


def test_weight_one_rational_homology_table():
    # ordinary degrees 0, 2, 5, 7 survive; internal = ordinary - 4
    page = e2_page(2, RATIONALS, LOOP, cutoff=16)
    profs = homology_dimensions(page, range(-4, 5), [1])
    betti = {d: p.betti for (d, _), p in profs.items()}
    assert betti == {-4: 1, -3: 0, -2: 1, -1: 0, 0: 0, 1: 1, 2: 0, 3: 1, 4: 0}


def test_circle_like_homology():
    page = circle_like_page()
    profs = homology_dimensions(page, [-1, 0], [0])
    assert profs[(0, 0)].betti == 1
    assert profs[(-1, 0)].betti == 1
    for w in (1, -1, 2):
        profs = homology_dimensions(page, [-1, 0], [w])
        assert profs[(0, w)].betti == 0
        assert profs[(-1, w)].betti == 0


def test_homology_respects_horizon():
    page = e2_page(1, GF2, LOOP, cutoff=4)  # internal horizon 2
    assert page.algebra.complete_through_degree == 2
    homology_dimensions(page, [1], [1])  # needs degree 2: fine
    with pytest.raises(CutoffTooTight):
        homology_dimensions(page, [2], [1])


def test_rational_page_has_no_horizon():
    page = e2_page(1, RATIONALS, LOOP, cutoff=4)
    assert page.algebra.complete_through_degree is None
    homology_dimensions(page, [30], [12])  # any spot is exact


# -- induced maps ----------------------------------------------------------------


def test_induced_map_widens_polynomial_to_laurent():
    sub = e2_page(1, GF2, HOL, cutoff=12)
    big = e2_page(1, GF2, LOOP, cutoff=12)
    report = induced_map_on_homology(sub, big, range(0, 5), [1, 2])
    assert report.injective
    for cell in report.cells.values():
        assert cell.rank == cell.betti_sub <= cell.betti_big


def test_induced_map_missing_generator():
    sub = GradedAlgebra(GF2)
    sub.declare_generator("z", 2, 1, "polynomial")
    sub_page = DgaPage(sub, Derivation(sub, {}))
    big = e2_page(1, GF2, LOOP, cutoff=10)
    with pytest.raises(NotAChainMap):
        induced_map_on_homology(sub_page, big, [0], [0])


def test_induced_map_bidegree_mismatch():
    sub = GradedAlgebra(GF2)
    sub.declare_generator("u", 3, 1, "polynomial")  # loop n=1 has u in degree 1
    sub_page = DgaPage(sub, Derivation(sub, {}))
    big = e2_page(1, GF2, LOOP, cutoff=10)
    with pytest.raises(NotAChainMap):
        induced_map_on_homology(sub_page, big, [0], [0])


def test_induced_map_field_mismatch():
    sub = e2_page(1, GF2, HOL, cutoff=10)
    big = e2_page(1, F3, LOOP, cutoff=10)
    with pytest.raises(FieldMismatch):
        induced_map_on_homology(sub, big, [0], [0])


def test_induced_map_differentials_must_agree():
    big = e2_page(1, F3, LOOP, cutoff=10)
    sub = GradedAlgebra(F3)
    # same generators as the holomorphic page but with a zero differential
    for g in e2_page(1, F3, HOL, cutoff=10).algebra.generators:
        sub.declare_generator(g.name, g.degree, g.weight, g.kind, g.truncation)
    sub_page = DgaPage(sub, Derivation(sub, {}))
    with pytest.raises(NotAChainMap):
        induced_map_on_homology(sub_page, big, [0], [1])


def test_induced_map_detects_noninjective_spot():
    # a cycle of the subcomplex that bounds upstairs must drop rank
    big_alg = GradedAlgebra(RATIONALS)
    big_alg.declare_generator("t", 0, 1, "laurent")
    big_alg.declare_generator("e", -1, 1, "exterior")
    big = DgaPage(big_alg, Derivation.from_generator_images(big_alg, {"t": big_alg.gen("e")}))
    sub_alg = GradedAlgebra(RATIONALS)
    sub_alg.declare_generator("e", -1, 1, "exterior")
    sub = DgaPage(sub_alg, Derivation(sub_alg, {}))
    report = induced_map_on_homology(sub, big, [-1], [1])
    cell = report.cells[(-1, 1)]
    # e is a cycle in the sub line but bounds t in the big page
    assert cell.betti_sub == 1 and cell.betti_big == 0 and cell.rank == 0
    assert not report.injective
