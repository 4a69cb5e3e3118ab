import pytest
from hypothesis import given
from hypothesis import strategies as st

from python_spin_crystal.core.cartan import INFINITY, CartanType, ContentVector
from python_spin_crystal.core.exceptions import (
    InvalidPartitionError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.partitions import (
    EMPTY,
    HStrictPartition,
    enumerate_restricted,
)
from python_spin_crystal.core.type_hints import ModuleType
from python_spin_crystal.reps.blocks import (
    IrreducibleLabel,
    block_of,
    block_size,
    blocks_of_degree,
    count_irreducible_A,
    count_ungraded_S,
    irreducible_labels_A,
    is_projective_S,
    is_projective_W,
    kac_check,
    par_ell,
    type_from_content,
    type_S,
    type_W,
    ungraded_labels_S,
)

H3 = CartanType(1)
H5 = CartanType(2)
INF = CartanType(INFINITY)


def P(*parts):
    return HStrictPartition(parts)


def test_partitions_with_equal_content_share_a_block():
    assert block_of(P(3), H3) == block_of(P(2, 1), H3)
    block = block_of(P(2, 1), H3)
    assert block.core == EMPTY
    assert block.weight == 1
    assert str(block) == "content {0:2, 1:1}, core [], weight 1"


def test_block_of_needs_h_strict():
    with pytest.raises(InvalidPartitionError):
        block_of(P(2, 2), H3)


def test_blocks_of_degree_seven():
    blocks = blocks_of_degree(7, H3)
    members = sorted(blocks.values())
    assert members == [(P(3, 3, 1), P(4, 2, 1)), (P(5, 2),)]
    weights = {block.weight for block in blocks}
    assert weights == {0, 2}


@pytest.mark.parametrize(
    "big_n, ell, expected",
    [(0, 3, 1), (2, 1, 2), (2, 2, 5), (3, 2, 10), (4, 2, 20), (5, 1, 7), (3, 0, 0)],
)
def test_par_ell(big_n, ell, expected):
    assert par_ell(big_n, ell) == expected


@given(st.integers(0, 12), st.integers(0, 3), st.integers(0, 3))
def test_par_ell_convolves(big_n, a, b):
    assert par_ell(big_n, a + b) == sum(
        par_ell(k, a) * par_ell(big_n - k, b) for k in range(big_n + 1)
    )


def _coloured_partitions(big_n, ell, largest):
    """Multisets of (part, colour) pairs summing to big_n, listed in decreasing order"""
    if big_n == 0:
        return 1
    return sum(
        _coloured_partitions(big_n - part, ell, (part, colour))
        for part in range(1, big_n + 1)
        for colour in range(ell)
        if (part, colour) <= largest
    )


@pytest.mark.parametrize("ell", [0, 1, 2, 3])
@pytest.mark.parametrize("big_n", range(11))
def test_par_ell_counts_coloured_partitions(big_n, ell):
    assert par_ell(big_n, ell) == _coloured_partitions(big_n, ell, (big_n, ell))


def test_par_ell_rejects_negative_arguments():
    with pytest.raises(UnsupportedRangeError):
        par_ell(-1, 2)


@pytest.mark.parametrize("ct", [H3, H5, CartanType(3)])
def test_kac_block_sizes(ct):
    for n in range(13):
        report = kac_check(n, ct)
        assert report.ok, report.mismatches
        assert report.checked > 0


def test_kac_needs_finite_h():
    with pytest.raises(UnsupportedRangeError):
        kac_check(4, INF)


def test_blocks_are_singletons_without_bars():
    for n in range(9):
        for members in blocks_of_degree(n, INF).values():
            assert len(members) == 1


def test_block_size():
    assert block_size(P(4, 2, 1), H3) == 2
    assert block_size(P(5, 2), H3) == 1
    with pytest.raises(InvalidPartitionError):
        block_size(P(3), H3)


def test_types():
    assert type_W(P(2), H3) is ModuleType.Q
    assert type_S(P(2), H3) is ModuleType.Q
    assert type_W(P(2, 1), H3) is ModuleType.M
    assert type_S(P(2, 1), H3) is ModuleType.Q
    assert type_from_content(ContentVector(((0, 2), (1, 1)))) is ModuleType.M


def test_projectivity():
    assert is_projective_W(P(5, 2), H3)
    assert is_projective_S(P(5, 2), H3)
    assert not is_projective_W(P(3, 3, 1), H3)
    with pytest.raises(InvalidPartitionError):
        is_projective_S(P(3), H3)


def test_labels():
    assert ungraded_labels_S(3, H3) == [
        IrreducibleLabel(P(2, 1), "+"),
        IrreducibleLabel(P(2, 1), "-"),
    ]
    assert irreducible_labels_A(3, H3) == [IrreducibleLabel(P(2, 1))]
    assert [str(label) for label in ungraded_labels_S(3, H3)] == [
        "[2,1],+",
        "[2,1],-",
    ]
    assert str(IrreducibleLabel(P(2, 1))) == "[2,1]"


@pytest.mark.parametrize("ct", [H3, H5, INF])
def test_label_counts_add_up(ct):
    # each label contributes one module to one side and a pair to the other
    for n in range(1, 9):
        total = count_ungraded_S(n, ct) + count_irreducible_A(n, ct)
        assert total == 3 * len(enumerate_restricted(n, ct))
