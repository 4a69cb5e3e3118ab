import pytest

from python_spin_crystal.core.cartan import (
    INFINITY,
    CartanType,
    ContentVector,
    Weight,
    pairing_hi,
    relevant_residues,
)
from python_spin_crystal.core.crystal import (
    NEG_INF,
    ElementBi,
    ElementTLambda,
    PartitionElement,
    Rule,
    Sign,
    Signature,
    SignedNode,
    e_tilde,
    eps,
    eps_vector,
    f_tilde,
    good_node,
    phi,
    phi_vector,
    reduce_signature,
    signature,
    tensor,
    verify_axioms,
)
from python_spin_crystal.core.exceptions import InvalidResidueError
from python_spin_crystal.core.partitions import (
    EMPTY,
    HStrictPartition,
    Node,
    content,
    enumerate_h_strict,
    enumerate_restricted,
    is_h_strict,
    is_restricted,
)

H3 = CartanType(1)
H5 = CartanType(2)
H7 = CartanType(3)
INF = CartanType(INFINITY)

E1 = HStrictPartition((16, 11, 10, 10, 9, 5, 1))


def P(*parts):
    return HStrictPartition(parts)


def _signed(signs):
    return Signature(
        tuple(
            SignedNode(Node(1, col), Sign(sign), Rule.R1 if sign == "-" else Rule.A1)
            for col, sign in enumerate(signs, start=1)
        )
    )


@pytest.mark.parametrize(
    "signs, reduced",
    [("", ""), ("+-", ""), ("-+", "-+"), ("+--+", "-+"), ("++--", ""), ("-+-+", "-+")],
)
def test_reduce_signature(signs, reduced):
    assert reduce_signature(_signed(signs)).signs == reduced


def test_e1_statistics():
    assert eps(E1, H5, 0) == 3
    assert phi(E1, H5, 0) == 0
    assert good_node(E1, H5, 0) == Node(1, 16)
    assert e_tilde(E1, H5, 0) == P(15, 11, 10, 10, 9, 5, 1)


def test_e1_signature_reads_bottom_left_to_top_right():
    rows = [entry.node.row for entry in signature(E1, H5, 0)]
    assert rows == sorted(rows, reverse=True)


def test_empty_partition():
    assert eps_vector(EMPTY, H5) == [0, 0, 0]
    assert phi_vector(EMPTY, H5) == [1, 0, 0]
    assert f_tilde(EMPTY, H5, 0) == P(1)
    assert f_tilde(EMPTY, H5, 1) is None
    assert e_tilde(EMPTY, H5, 0) is None


@pytest.mark.parametrize(
    "source, i, target",
    [
        ((), 0, (1,)),
        ((1,), 1, (2,)),
        ((2,), 0, (2, 1)),
        ((2, 1), 0, (3, 1)),
        ((3, 1), 1, (3, 2)),
        ((4, 2), 0, (4, 2, 1)),
        ((4, 2), 1, (5, 2)),
    ],
)
def test_h3_edges(source, i, target):
    assert f_tilde(P(*source), H3, i) == P(*target)
    assert e_tilde(P(*target), H3, i) == P(*source)


def test_h3_operators_that_vanish():
    assert f_tilde(P(1), H3, 0) is None
    assert f_tilde(P(2, 1), H3, 1) is None


def test_infinite_rank_starts_like_a_staircase():
    assert f_tilde(EMPTY, INF, 0) == P(1)
    assert f_tilde(P(1), INF, 1) == P(2)
    assert f_tilde(P(2), INF, 2) == P(3)


@pytest.mark.parametrize("ct", [H3, H5, CartanType(3), INF])
def test_phi_minus_eps_is_the_weight_pairing(ct):
    for n in range(9):
        for lam in enumerate_restricted(n, ct):
            gamma = content(lam, ct)
            for i in relevant_residues(ct, n + 1):
                assert phi(lam, ct, i) - eps(lam, ct, i) == pairing_hi(i, gamma, ct)


@pytest.mark.parametrize("ct", [H3, H5, INF])
def test_operators_are_mutually_inverse(ct):
    for n in range(8):
        for lam in enumerate_restricted(n, ct):
            for i in relevant_residues(ct, n + 1):
                raised = e_tilde(lam, ct, i)
                if raised is not None:
                    assert f_tilde(raised, ct, i) == lam
                lowered = f_tilde(lam, ct, i)
                if lowered is not None:
                    assert e_tilde(lowered, ct, i) == lam


@pytest.mark.parametrize("ct", [H3, H5, INF])
def test_axioms_hold_on_restricted_partitions(ct):
    elements = [
        PartitionElement(lam, ct)
        for n in range(8)
        for lam in enumerate_restricted(n, ct)
    ]
    report = verify_axioms(elements, ct)
    assert report.ok, [str(v) for v in report.violations]
    assert report.checked > len(elements)
    assert report.skipped > 0


@pytest.mark.parametrize("ct", [H3, H5, H7, INF])
def test_axioms_hold_on_every_h_strict_partition(ct):
    elements = [
        PartitionElement(lam, ct)
        for n in range(13)
        for lam in enumerate_h_strict(n, ct)
    ]
    report = verify_axioms(elements, ct)
    assert report.ok, [str(v) for v in report.violations]
    assert report.checked > len(elements)


@pytest.mark.parametrize("ct", [H3, H5, H7, INF])
def test_operators_keep_partitions_restricted(ct):
    for n in range(11):
        for lam in enumerate_restricted(n, ct):
            for i in relevant_residues(ct, n + 1):
                for image in (e_tilde(lam, ct, i), f_tilde(lam, ct, i)):
                    if image is not None:
                        assert is_h_strict(image, ct), (lam, i, image)
                        assert is_restricted(image, ct), (lam, i, image)


def _steps(lam, ct, i, operator):
    count = 0
    while True:
        lam = operator(lam, ct, i)
        if lam is None:
            return count
        count += 1


@pytest.mark.parametrize("ct", [H3, H5, H7, INF])
def test_eps_and_phi_count_operator_steps(ct):
    for n in range(11):
        for lam in enumerate_restricted(n, ct):
            for i in relevant_residues(ct, n + 1):
                assert eps(lam, ct, i) == _steps(lam, ct, i, e_tilde), (lam, i)
                assert phi(lam, ct, i) == _steps(lam, ct, i, f_tilde), (lam, i)


class MiscountingElement(PartitionElement):
    def phi(self, i):
        return super().phi(i) + 1


def test_axiom_checker_reports_violations():
    report = verify_axioms([MiscountingElement(EMPTY, H3)], H3, residues=[0])
    axioms = {violation.axiom for violation in report.violations}
    assert "C1" in axioms
    assert str(report.violations[0]).startswith("(C1) at [], i=0")


def test_axiom_checker_needs_closure_under_e_tilde():
    report = verify_axioms([PartitionElement(P(2), H3)], H3)
    assert [violation.axiom for violation in report.violations] == ["C4"]


def test_element_bi():
    b = ElementBi(1, 2, H5)
    assert b.eps(1) == -2
    assert b.phi(1) == 2
    assert b.eps(0) == NEG_INF
    assert b.e_tilde(1) == ElementBi(1, 3, H5)
    assert b.f_tilde(1) == ElementBi(1, 1, H5)
    assert b.f_tilde(0) is None
    assert b.wt() == Weight(0, ((1, -2),))
    assert str(b) == "b_1(2)"


def test_element_bi_rejects_bad_residue():
    with pytest.raises(InvalidResidueError):
        ElementBi(3, 0, H5)


def test_element_t_lambda():
    t = ElementTLambda(Weight(2), H5)
    assert t.eps(0) == t.phi(0) == NEG_INF
    assert t.e_tilde(0) is None
    assert t.f_tilde(2) is None
    assert t.wt() == Weight(2)


def test_tensor_rule():
    b = tensor(PartitionElement(EMPTY, H5), ElementBi(0, 0, H5))
    assert b.eps(0) == 0
    assert b.phi(0) == 1
    assert b.e_tilde(0) is None
    assert b.f_tilde(0) == tensor(PartitionElement(P(1), H5), ElementBi(0, 0, H5))
    assert b.wt() == Weight(1)
    assert tensor(None, ElementBi(0, 0, H5)) is None


def test_tensor_acts_on_the_right_when_the_left_is_exhausted():
    b = tensor(PartitionElement(P(1), H5), ElementBi(0, 0, H5))
    # phi_0 of [1] is 0, so f_0 moves into B_0
    assert b.f_tilde(0) == tensor(PartitionElement(P(1), H5), ElementBi(0, -1, H5))
    assert b.wt() == Weight.from_content(ContentVector(((0, 1),)))


def test_axioms_hold_on_a_tensor_product():
    elements = [
        tensor(PartitionElement(lam, H3), ElementBi(1, k, H3))
        for n in range(7)
        for lam in enumerate_restricted(n, H3)
        for k in range(4)
    ]
    report = verify_axioms(elements, H3)
    assert report.ok, [str(v) for v in report.violations]
    assert report.checked == 2 * len(elements)
    assert report.skipped > 0
