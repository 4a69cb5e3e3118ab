import pytest
from hypothesis import given
from hypothesis import strategies as st

from python_spin_crystal.core.cartan import (
    INFINITY,
    CartanType,
    ContentVector,
    Weight,
    c_coefficients,
    cartan_entry,
    pairing_hi,
    relevant_residues,
)
from python_spin_crystal.core.exceptions import (
    InvalidResidueError,
    UnsupportedRangeError,
)

contents = st.dictionaries(st.integers(0, 3), st.integers(0, 6)).map(
    ContentVector.from_mapping
)


@pytest.mark.parametrize("h, ell", [(3, 1), ("5", 2), (" 7 ", 3), (41, 20)])
def test_from_h(h, ell):
    ct = CartanType.from_h(h)
    assert ct.ell == ell
    assert ct.h == 2 * ell + 1
    assert ct.is_finite


@pytest.mark.parametrize("h", ["inf", "Infinity", "∞"])
def test_from_h_infinite(h):
    ct = CartanType.from_h(h)
    assert not ct.is_finite
    assert ct.ell == INFINITY
    assert str(ct) == "h=inf"


@pytest.mark.parametrize("h", [1, 2, 4, -3, "x", "3.0"])
def test_from_h_rejects(h):
    with pytest.raises(UnsupportedRangeError):
        CartanType.from_h(h)


@pytest.mark.parametrize("ell", [0, -1, 1.5, True])
def test_ell_must_be_positive_integer(ell):
    with pytest.raises(UnsupportedRangeError):
        CartanType(ell)


def test_divides():
    assert CartanType(2).divides(10)
    assert not CartanType(2).divides(3)
    assert CartanType(INFINITY).divides(0)
    assert not CartanType(INFINITY).divides(10)


def test_relevant_residues():
    assert list(relevant_residues(CartanType(2), 10)) == [0, 1, 2]
    assert list(relevant_residues(CartanType(INFINITY), 3)) == [0, 1, 2, 3]


@pytest.mark.parametrize(
    "ell, i, j, entry",
    [
        (1, 0, 1, -4),
        (1, 1, 0, -1),
        (1, 1, 1, 2),
        (2, 0, 1, -2),
        (2, 1, 0, -1),
        (2, 1, 2, -2),
        (2, 2, 1, -1),
        (2, 0, 2, 0),
        (3, 1, 2, -1),
        (3, 2, 3, -2),
        (INFINITY, 0, 1, -2),
        (INFINITY, 1, 0, -1),
        (INFINITY, 5, 6, -1),
        (INFINITY, 6, 5, -1),
        (INFINITY, 3, 7, 0),
    ],
)
def test_cartan_entry(ell, i, j, entry):
    assert cartan_entry(i, j, CartanType(ell)) == entry


@pytest.mark.parametrize("i, j", [(3, 0), (0, 3), (-1, 0)])
def test_cartan_entry_rejects_residues_outside_i(i, j):
    with pytest.raises(InvalidResidueError):
        cartan_entry(i, j, CartanType(2))


@pytest.mark.parametrize("ell", [1, 2, 3, 6])
def test_c_coefficients_annihilate_the_simple_roots(ell):
    ct = CartanType(ell)
    c = c_coefficients(ct)
    for j in range(ell + 1):
        assert sum(c[i] * cartan_entry(i, j, ct) for i in c) == 0


def test_c_coefficients_need_finite_h():
    with pytest.raises(UnsupportedRangeError):
        c_coefficients(CartanType(INFINITY))


def test_pairing_of_lambda0_and_one_box():
    ct = CartanType(2)
    assert pairing_hi(0, ContentVector(), ct) == 1
    assert pairing_hi(1, ContentVector(), ct) == 0
    one_box = ContentVector(((0, 1),))
    assert pairing_hi(0, one_box, ct) == -1
    assert pairing_hi(1, one_box, ct) == 1
    assert pairing_hi(2, one_box, ct) == 0


@pytest.mark.parametrize("residue", [3, 7])
def test_pairing_rejects_content_outside_i(residue):
    with pytest.raises(InvalidResidueError, match=f"residue {residue}"):
        pairing_hi(0, ContentVector(((0, 1), (residue, 1))), CartanType(2))


def test_content_support_is_unbounded_for_infinite_h():
    ContentVector(((40, 2),)).check_support(CartanType(INFINITY))


@given(contents, contents, st.integers(0, 3))
def test_pairing_is_additive(gamma1, gamma2, i):
    ct = CartanType(3)
    lambda0 = 1 if i == 0 else 0
    assert pairing_hi(i, gamma1 + gamma2, ct) == (
        pairing_hi(i, gamma1, ct) + pairing_hi(i, gamma2, ct) - lambda0
    )


@given(contents, st.integers(0, 3), st.integers(-3, 3))
def test_weight_shift_matches_cartan_column(gamma, j, k):
    ct = CartanType(3)
    wt = Weight.from_content(gamma)
    for i in range(4):
        assert wt.shift(j, k).pairing(i, ct) == wt.pairing(i, ct) + k * cartan_entry(
            i, j, ct
        )


def test_content_vector_normalises():
    gamma = ContentVector(((2, 1), (0, 2), (2, 3), (1, 0)))
    assert gamma.counts == ((0, 2), (2, 4))
    assert gamma[2] == 4
    assert gamma[1] == 0
    assert gamma.degree == 6
    assert gamma.support() == (0, 2)
    assert gamma.add(1) == ContentVector(((0, 2), (1, 1), (2, 4)))
    assert str(gamma) == "{0:2, 2:4}"


def test_content_vector_rejects_negative_counts():
    with pytest.raises(UnsupportedRangeError):
        ContentVector(((0, -1),))


def test_weight_str_and_content():
    wt = Weight.from_content(ContentVector(((0, 2), (1, 1))))
    assert str(wt) == "1L0 -2a0 -1a1"
    assert wt.content == ContentVector(((0, 2), (1, 1)))
    assert wt.coefficient(0) == 2
    assert (wt + Weight(1)).lambda0 == 2
