"""Lattice ideals and the fiber-cone shape check."""

import pytest

from scrollstci import fixtures
from scrollstci.lattice import LatticeBasis, LatticeError, binomial, fiber_spec_check, lattice_ideal
from scrollstci.oracle import IdealHandle, ideal_member, radical_equal
from scrollstci.poly import Ring, parse
from scrollstci.scroll import ScrollBlock, minors_2x2, verdi_generators

R2 = Ring(("x1", "x2"))
R4 = Ring(("x1", "x2", "x3", "x4"))


# --- binomials -----------------------------------------------------------------

def test_binomial_examples():
    assert binomial(R2, (1, -1)) == parse(R2, "x1 - x2")
    ring3 = Ring(("x1", "x2", "x3"))
    assert binomial(ring3, (2, -1, 0)) == parse(ring3, "x1^2 - x2")
    assert binomial(R4, (1, 1, -1, -1)) == parse(R4, "x1*x2 - x3*x4")


def test_binomial_rejects_zero_vector():
    with pytest.raises(LatticeError):
        binomial(R2, (0, 0))


def test_binomial_vanishes_at_ones_and_homogeneity():
    from scrollstci.poly import evaluate

    cases = [(1, -1), (2, -1), (3, -3)]
    for v in cases:
        f = binomial(R2, v)
        assert evaluate(f, {"x1": 1, "x2": 1}) == 0
        assert f.is_homogeneous() == (sum(v) == 0)


# --- lattice ideals -------------------------------------------------------------

def test_single_vector_lattice():
    I = lattice_ideal(R2, LatticeBasis(((1, -1),)))
    assert I.groebner_basis() == IdealHandle(R2, [parse(R2, "x1 - x2")]).groebner_basis()


def test_even_differences_lattice_saturation_is_trivial():
    # x1^{2k} - x2^{2k} factors through x1^2 - x2^2; nothing new appears
    I = lattice_ideal(R2, LatticeBasis(((2, -2),)))
    assert I.groebner_basis() == IdealHandle(R2, [parse(R2, "x1^2 - x2^2")]).groebner_basis()


def test_twisted_cubic_lattice_matches_scroll_minors():
    basis = fixtures.twisted_cubic_basis()
    I = lattice_ideal(R4, basis)
    block = ScrollBlock(tuple(R4.variable(v) for v in R4.variables))
    minors = IdealHandle(R4, minors_2x2(block))
    assert I.groebner_basis() == minors.groebner_basis()
    # and the minors ideal is radical-generated by its two Verdi polynomials
    assert radical_equal(IdealHandle(R4, verdi_generators(block)), minors)


def test_combination_binomials_are_members():
    basis = fixtures.twisted_cubic_basis()
    I = lattice_ideal(R4, basis, check=False)
    for w in basis.combinations(bound=2):
        assert ideal_member(binomial(R4, w), I)


def test_basis_order_and_unimodular_invariance():
    v1, v2 = (1, -2, 1, 0), (0, 1, -2, 1)
    reference = lattice_ideal(R4, LatticeBasis((v1, v2))).groebner_basis()
    swapped = lattice_ideal(R4, LatticeBasis((v2, v1))).groebner_basis()
    assert swapped == reference
    # determinant +-1 transforms of the basis span the same lattice
    sum_first = tuple(a + b for a, b in zip(v1, v2))
    assert lattice_ideal(R4, LatticeBasis((sum_first, v2))).groebner_basis() == reference
    neg = tuple(-a for a in v1)
    diff = tuple(a - b for a, b in zip(v2, v1))
    assert lattice_ideal(R4, LatticeBasis((neg, diff))).groebner_basis() == reference


def test_nonnegative_screen_warns():
    basis = LatticeBasis(((1, 0), (0, 1)))
    warnings = basis.screen_nonnegative()
    assert warnings
    clean = fixtures.twisted_cubic_basis().screen_nonnegative()
    assert clean == []


def test_basis_validation():
    with pytest.raises(LatticeError):
        LatticeBasis(())
    with pytest.raises(LatticeError):
        LatticeBasis(((0, 0),))
    with pytest.raises(LatticeError):
        LatticeBasis(((1, -1), (1, -1, 0)))
    with pytest.raises(LatticeError):
        lattice_ideal(R2, LatticeBasis(((1, -2, 1),)))


# --- fiber shape -----------------------------------------------------------------

def test_fiber_shape_accepts_constructed_fixture():
    assert fiber_spec_check(fixtures.fiber_shaped_spec())


def test_fiber_shape_rejects_non_variable_entries():
    # the scroll entry x - u is not a plain variable
    assert not fiber_spec_check(fixtures.second_curve_spec())


def test_fiber_shape_rejects_two_block_scrolls():
    assert not fiber_spec_check(fixtures.qprime_spec())
