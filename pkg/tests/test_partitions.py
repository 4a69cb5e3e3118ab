import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from python_spin_crystal.core.cartan import INFINITY, CartanType, ContentVector
from python_spin_crystal.core.exceptions import (
    InvalidPartitionError,
    InvalidResidueError,
    UndefinedInputError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.partitions import (
    EMPTY,
    BarKind,
    HStrictPartition,
    Node,
    a_of,
    b_of,
    bar_core,
    bar_cores_all_orders,
    bar_weight,
    bar_weight_from_content,
    content,
    enumerate_h_strict,
    enumerate_restricted,
    h_bars,
    is_h_strict,
    is_restricted,
    parse_partition,
    residue,
)

H3 = CartanType(1)
H5 = CartanType(2)
H7 = CartanType(3)
INF = CartanType(INFINITY)

finite_types = st.sampled_from([H3, H5, H7])


def P(*parts):
    return HStrictPartition(parts)


@pytest.mark.parametrize(
    "text, parts",
    [
        ("16,11,10,10,9,5,1", (16, 11, 10, 10, 9, 5, 1)),
        ("[3,1]", (3, 1)),
        (" 4, 2 ", (4, 2)),
        ("", ()),
        ("0", ()),
        ("[]", ()),
    ],
)
def test_parse_partition(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text", ["3,a", "[1,2]", "2,-1", '{"a": 1}', "[1.5]"])
def test_parse_partition_rejects(text):
    with pytest.raises(InvalidPartitionError):
        parse_partition(text)


def test_partition_json_encoding():
    assert str(P(16, 11, 10, 10, 9, 5, 1)) == "[16,11,10,10,9,5,1]"
    assert str(EMPTY) == "[]"
    assert P(3, 1).to_json() == [3, 1]


def test_nodes_and_rows():
    lam = P(3, 1)
    assert lam.degree == 4
    assert len(lam) == 2
    assert list(lam.nodes()) == [Node(1, 1), Node(1, 2), Node(1, 3), Node(2, 1)]
    assert (2, 1) in lam
    assert (2, 2) not in lam
    assert lam.part(3) == 0


def test_adding_and_removing_nodes():
    lam = P(3, 1)
    assert lam.remove_node(Node(1, 3)) == P(2, 1)
    assert lam.remove_node(Node(1, 2)) is None
    assert lam.add_node(Node(2, 2)) == P(3, 2)
    assert lam.add_node(Node(2, 4)) is None
    assert lam.add_node(Node(3, 1)) == P(3, 1, 1)
    assert P(2, 2).add_node(Node(2, 3)) is None
    assert P(1).remove_node(Node(1, 1)) == EMPTY


def test_residues_zigzag():
    assert [residue(col, H5) for col in range(1, 11)] == [0, 1, 2, 1, 0] * 2
    assert [residue(col, H3) for col in range(1, 7)] == [0, 1, 0, 0, 1, 0]
    assert [residue(col, INF) for col in range(1, 5)] == [0, 1, 2, 3]


def test_residue_columns_start_at_one():
    with pytest.raises(UndefinedInputError):
        residue(0, H5)


def test_h_strictness():
    assert is_h_strict(P(10, 10, 9), H5)
    assert not is_h_strict(P(3, 3), H5)
    assert is_h_strict(P(3, 3), H3)
    assert not is_h_strict(P(3, 3), INF)


def test_restrictedness():
    assert not is_restricted(P(3), H3)
    assert not is_restricted(P(4), H3)
    assert is_restricted(P(4, 1), H3)
    assert is_restricted(P(16, 11, 10, 10, 9, 5, 1), H5)
    assert is_restricted(P(40), INF)


@pytest.mark.parametrize(
    "ct, counts",
    [
        (H3, [1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4]),
        (H5, [1, 1, 1, 2, 2]),
        (H7, [1, 1, 1, 2, 2]),
        (INF, [1, 1, 1, 2, 2, 3, 4]),
    ],
)
def test_restricted_counts(ct, counts):
    assert [len(enumerate_restricted(n, ct)) for n in range(len(counts))] == counts


def test_enumeration_of_degree_zero():
    assert enumerate_restricted(0, H3) == (EMPTY,)


def test_enumeration_rejects_negative_degree():
    with pytest.raises(UnsupportedRangeError):
        enumerate_h_strict(-1, H3)


@given(finite_types, st.integers(0, 12))
def test_enumerated_partitions_are_h_strict_of_degree_n(ct, n):
    layer = enumerate_h_strict(n, ct)
    assert len(set(layer)) == len(layer)
    assert list(layer) == sorted(layer)
    for lam in layer:
        assert lam.degree == n
        assert is_h_strict(lam, ct)
        assert content(lam, ct).degree == n
    assert set(enumerate_restricted(n, ct)) <= set(layer)


def test_content():
    assert content(P(5, 1), H5) == ContentVector(((0, 3), (1, 2), (2, 1)))
    assert content(P(3), INF) == ContentVector(((0, 1), (1, 1), (2, 1)))


def test_a_and_b():
    lam = P(16, 11, 10, 10, 9, 5, 1)
    assert b_of(lam, H5) == 4
    assert a_of(lam, H5) == 58
    assert b_of(lam, INF) == 7


def test_bars():
    (bar,) = h_bars(P(5, 1), H5)
    assert bar.kind is BarKind.B1
    assert bar.rows == (1,)
    assert bar.result == P(1)
    (bar,) = h_bars(P(6, 4, 1), H5)
    assert bar.kind is BarKind.B2
    assert bar.rows == (2, 3)
    assert bar.result == P(6)
    assert h_bars(P(4, 1), H3) == []
    assert h_bars(P(7, 5), INF) == []


@pytest.mark.parametrize(
    "lam, ct, core, weight",
    [
        (P(3), H3, EMPTY, 1),
        (P(2, 1), H3, EMPTY, 1),
        (P(4, 1), H3, P(4, 1), 0),
        (P(5, 1), H5, P(1), 1),
        (P(4, 3, 2, 1), INF, P(4, 3, 2, 1), 0),
    ],
)
def test_bar_core_and_weight(lam, ct, core, weight):
    assert bar_core(lam, ct) == core
    assert bar_weight(lam, ct) == weight


@settings(deadline=None)
@given(finite_types, st.integers(0, 12))
def test_bar_core_is_independent_of_removal_order(ct, n):
    for lam in enumerate_h_strict(n, ct):
        assert bar_cores_all_orders(lam, ct) == frozenset({bar_core(lam, ct)})


@settings(deadline=None)
@given(finite_types, st.integers(0, 12))
def test_bar_weight_is_read_off_the_content(ct, n):
    for lam in enumerate_h_strict(n, ct):
        assert bar_weight_from_content(content(lam, ct), ct) == bar_weight(lam, ct)


@settings(deadline=None)
@given(st.sampled_from([H3, H5, H7, INF]), st.integers(0, 12))
def test_a_parity_is_read_off_the_content(ct, n):
    for lam in enumerate_h_strict(n, ct):
        gamma = content(lam, ct)
        nonzero = sum(count for r, count in gamma.counts if r != 0)
        assert a_of(lam, ct) % 2 == nonzero % 2


def test_bar_weight_from_content_needs_finite_h():
    with pytest.raises(UnsupportedRangeError):
        bar_weight_from_content(ContentVector(), INF)


def test_bar_weight_from_content_rejects_residues_outside_i():
    with pytest.raises(InvalidResidueError):
        bar_weight_from_content(ContentVector(((0, 1), (2, 1))), H3)


@pytest.mark.parametrize("ct", [H3, H5])
def test_content_and_bar_core_determine_each_other(ct):
    for n in range(15):
        core_of_content = {}
        content_of_core = {}
        for lam in enumerate_h_strict(n, ct):
            gamma, core = content(lam, ct), bar_core(lam, ct)
            assert core_of_content.setdefault(gamma, core) == core, lam
            assert content_of_core.setdefault(core, gamma) == gamma, lam
