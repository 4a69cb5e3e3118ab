import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

from python_spin_crystal.core.cartan import (
    CartanType,
    ContentVector,
    Weight,
    relevant_residues,
    weight_residue_bound,
)
from python_spin_crystal.core.partitions import (
    HStrictPartition,
    Node,
    content,
    is_h_strict,
    residue,
)
from python_spin_crystal.core.type_hints import CrystalStatistic, Residue

BASE_LOGGER = logging.getLogger(__name__)

NEG_INF = -math.inf


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"


class Rule(Enum):
    R1 = "R1"
    R2 = "R2"
    A1 = "A1"
    A2 = "A2"


@dataclass(frozen=True)
class SignedNode:
    node: Node
    sign: Sign
    rule: Rule


def _rim_key(entry: SignedNode) -> Tuple[int, int]:
    # bottom left to top right
    return -entry.node.row, entry.node.col


@dataclass(frozen=True)
class Signature:
    entries: Tuple[SignedNode, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[SignedNode]:
        return iter(self.entries)

    @property
    def signs(self) -> str:
        return "".join(entry.sign.value for entry in self.entries)

    def minuses(self) -> List[SignedNode]:
        return [entry for entry in self.entries if entry.sign is Sign.MINUS]

    def pluses(self) -> List[SignedNode]:
        return [entry for entry in self.entries if entry.sign is Sign.PLUS]


def removable_nodes(
    lam: HStrictPartition, ct: CartanType, i: Residue
) -> List[SignedNode]:
    found: List[SignedNode] = []
    for row, length in enumerate(lam.parts, start=1):
        if length == lam.part(row + 1):
            continue
        shorter = lam.with_row_length(row, length - 1)
        if residue(length, ct) != i or shorter is None or not is_h_strict(shorter, ct):
            continue
        found.append(SignedNode(Node(row, length), Sign.MINUS, Rule.R1))
        # (R2): the pair (row, length - 1), (row, length) can be removed together
        if length >= 2 and residue(length - 1, ct) == i:
            both = lam.with_row_length(row, length - 2)
            if both is not None and is_h_strict(both, ct):
                found.append(SignedNode(Node(row, length - 1), Sign.MINUS, Rule.R2))
    return sorted(found, key=_rim_key)


def addable_nodes(
    lam: HStrictPartition, ct: CartanType, i: Residue
) -> List[SignedNode]:
    found: List[SignedNode] = []
    for row in range(1, len(lam) + 2):
        length = lam.part(row)
        if row > 1 and length == lam.part(row - 1):
            continue
        longer = lam.with_row_length(row, length + 1)
        if longer is None or residue(length + 1, ct) != i:
            continue
        if not is_h_strict(longer, ct):
            continue
        found.append(SignedNode(Node(row, length + 1), Sign.PLUS, Rule.A1))
        # (A2): the pair (row, length + 1), (row, length + 2) can be added together
        if residue(length + 2, ct) == i:
            both = lam.with_row_length(row, length + 2)
            if both is not None and is_h_strict(both, ct):
                found.append(SignedNode(Node(row, length + 2), Sign.PLUS, Rule.A2))
    return sorted(found, key=_rim_key)


@lru_cache(maxsize=None)
def signature(lam: HStrictPartition, ct: CartanType, i: Residue) -> Signature:
    entries = removable_nodes(lam, ct, i) + addable_nodes(lam, ct, i)
    return Signature(tuple(sorted(entries, key=_rim_key)))


def reduce_signature(sig: Signature) -> Signature:
    """Erase neighbouring (+, -) pairs until the signs read -...-+...+"""
    stack: List[SignedNode] = []
    for entry in sig:
        if entry.sign is Sign.MINUS and stack and stack[-1].sign is Sign.PLUS:
            stack.pop()
        else:
            stack.append(entry)
    return Signature(tuple(stack))


@lru_cache(maxsize=None)
def _reduced(lam: HStrictPartition, ct: CartanType, i: Residue) -> Signature:
    return reduce_signature(signature(lam, ct, i))


def eps(lam: HStrictPartition, ct: CartanType, i: Residue) -> int:
    return len(_reduced(lam, ct, i).minuses())


def phi(lam: HStrictPartition, ct: CartanType, i: Residue) -> int:
    return len(_reduced(lam, ct, i).pluses())


def good_node(lam: HStrictPartition, ct: CartanType, i: Residue) -> Optional[Node]:
    normal = _reduced(lam, ct, i).minuses()
    return normal[-1].node if normal else None


def cogood_node(lam: HStrictPartition, ct: CartanType, i: Residue) -> Optional[Node]:
    conormal = _reduced(lam, ct, i).pluses()
    return conormal[0].node if conormal else None


def e_tilde(
    lam: HStrictPartition, ct: CartanType, i: Residue
) -> Optional[HStrictPartition]:
    node = good_node(lam, ct, i)
    return None if node is None else lam.remove_node(node)


def f_tilde(
    lam: HStrictPartition, ct: CartanType, i: Residue
) -> Optional[HStrictPartition]:
    node = cogood_node(lam, ct, i)
    return None if node is None else lam.add_node(node)


def eps_vector(
    lam: HStrictPartition, ct: CartanType, residues: Optional[Iterable[Residue]] = None
) -> List[int]:
    if residues is None:
        residues = relevant_residues(ct, lam.degree)
    return [eps(lam, ct, i) for i in residues]


def phi_vector(
    lam: HStrictPartition, ct: CartanType, residues: Optional[Iterable[Residue]] = None
) -> List[int]:
    if residues is None:
        residues = relevant_residues(ct, lam.degree)
    return [phi(lam, ct, i) for i in residues]


def weight(lam: HStrictPartition, ct: CartanType) -> Weight:
    return Weight.from_content(content(lam, ct))


def weight_content(lam: HStrictPartition, ct: CartanType) -> Tuple[int, ContentVector]:
    wt = weight(lam, ct)
    return wt.lambda0, wt.content


class CrystalElement(ABC):
    """
    An element of a Kashiwara crystal: the crystal operators return another element
    of the same crystal, or None for 0.
    """

    ct: CartanType

    @abstractmethod
    def eps(self, i: Residue) -> CrystalStatistic:
        ...

    @abstractmethod
    def phi(self, i: Residue) -> CrystalStatistic:
        ...

    @abstractmethod
    def e_tilde(self, i: Residue) -> Optional["CrystalElement"]:
        ...

    @abstractmethod
    def f_tilde(self, i: Residue) -> Optional["CrystalElement"]:
        ...

    @abstractmethod
    def wt(self) -> Weight:
        ...

    @abstractmethod
    def residue_bound(self) -> int:
        """Largest residue on which the element can have a finite statistic"""


@dataclass(frozen=True)
class PartitionElement(CrystalElement):
    lam: HStrictPartition
    ct: CartanType

    def eps(self, i: Residue) -> CrystalStatistic:
        return eps(self.lam, self.ct, i)

    def phi(self, i: Residue) -> CrystalStatistic:
        return phi(self.lam, self.ct, i)

    def e_tilde(self, i: Residue) -> Optional[CrystalElement]:
        result = e_tilde(self.lam, self.ct, i)
        return None if result is None else PartitionElement(result, self.ct)

    def f_tilde(self, i: Residue) -> Optional[CrystalElement]:
        result = f_tilde(self.lam, self.ct, i)
        return None if result is None else PartitionElement(result, self.ct)

    def wt(self) -> Weight:
        return weight(self.lam, self.ct)

    def residue_bound(self) -> int:
        return self.lam.part(1)

    def __str__(self) -> str:
        return str(self.lam)


@dataclass(frozen=True)
class ElementBi(CrystalElement):
    i: Residue
    n: int
    ct: CartanType

    def __post_init__(self):
        self.ct.check_residue(self.i)

    def eps(self, i: Residue) -> CrystalStatistic:
        return -self.n if i == self.i else NEG_INF

    def phi(self, i: Residue) -> CrystalStatistic:
        return self.n if i == self.i else NEG_INF

    def e_tilde(self, i: Residue) -> Optional[CrystalElement]:
        return ElementBi(self.i, self.n + 1, self.ct) if i == self.i else None

    def f_tilde(self, i: Residue) -> Optional[CrystalElement]:
        return ElementBi(self.i, self.n - 1, self.ct) if i == self.i else None

    def wt(self) -> Weight:
        return Weight().shift(self.i, self.n)

    def residue_bound(self) -> int:
        return self.i

    def __str__(self) -> str:
        return f"b_{self.i}({self.n})"


@dataclass(frozen=True)
class ElementTLambda(CrystalElement):
    weight: Weight
    ct: CartanType

    def eps(self, i: Residue) -> CrystalStatistic:
        return NEG_INF

    def phi(self, i: Residue) -> CrystalStatistic:
        return NEG_INF

    def e_tilde(self, i: Residue) -> Optional[CrystalElement]:
        return None

    def f_tilde(self, i: Residue) -> Optional[CrystalElement]:
        return None

    def wt(self) -> Weight:
        return self.weight

    def residue_bound(self) -> int:
        return weight_residue_bound(self.weight)

    def __str__(self) -> str:
        return f"t[{self.weight}]"


@dataclass(frozen=True)
class TensorElement(CrystalElement):
    left: CrystalElement
    right: CrystalElement
    ct: CartanType = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ct", self.left.ct)

    def eps(self, i: Residue) -> CrystalStatistic:
        return max(
            self.left.eps(i), self.right.eps(i) - self.left.wt().pairing(i, self.ct)
        )

    def phi(self, i: Residue) -> CrystalStatistic:
        return max(
            self.left.phi(i) + self.right.wt().pairing(i, self.ct), self.right.phi(i)
        )

    def e_tilde(self, i: Residue) -> Optional[CrystalElement]:
        if self.left.phi(i) >= self.right.eps(i):
            return tensor(self.left.e_tilde(i), self.right)
        return tensor(self.left, self.right.e_tilde(i))

    def f_tilde(self, i: Residue) -> Optional[CrystalElement]:
        if self.left.phi(i) > self.right.eps(i):
            return tensor(self.left.f_tilde(i), self.right)
        return tensor(self.left, self.right.f_tilde(i))

    def wt(self) -> Weight:
        return self.left.wt() + self.right.wt()

    def residue_bound(self) -> int:
        return max(self.left.residue_bound(), self.right.residue_bound())

    def __str__(self) -> str:
        return f"{self.left} ⊗ {self.right}"


def tensor(
    b: Optional[CrystalElement], b2: Optional[CrystalElement]
) -> Optional[CrystalElement]:
    """b ⊗ b2, with b ⊗ 0 = 0 = 0 ⊗ b2"""
    if b is None or b2 is None:
        return None
    return TensorElement(b, b2)


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    element: str
    residue: Residue
    detail: str

    def __str__(self) -> str:
        return f"({self.axiom}) at {self.element}, i={self.residue}: {self.detail}"


@dataclass
class AxiomReport:
    checked: int = 0
    skipped: int = 0
    violations: List[AxiomViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, element: CrystalElement, i: Residue, detail: str):
        self.violations.append(AxiomViolation(axiom, str(element), i, detail))


def verify_axioms(
    elements: Iterable[CrystalElement],
    ct: CartanType,
    residues: Optional[Iterable[Residue]] = None,
) -> AxiomReport:
    """
    Checks (C1)-(C5) on a finite set closed under every e_tilde.
    f_tilde images that fall outside the set are not checked for (C4) and are
    counted as skipped instead.
    """
    logger = BASE_LOGGER.getChild("verify_axioms")
    pool = set(elements)
    report = AxiomReport()
    for b in sorted(pool, key=str):
        if residues is None:
            checked_residues: Iterable[Residue] = relevant_residues(
                ct, b.residue_bound() + 1
            )
        else:
            checked_residues = residues
        for i in checked_residues:
            report.checked += 1
            _check_element(b, i, ct, pool, report)
    logger.debug(
        f"Checked {report.checked} (element, residue) pairs, "
        f"{len(report.violations)} violations, {report.skipped} skipped"
    )
    return report


def _check_element(
    b: CrystalElement,
    i: Residue,
    ct: CartanType,
    pool: set,
    report: AxiomReport,
) -> None:
    e, f = b.eps(i), b.phi(i)
    wt = b.wt()
    if f == NEG_INF or e == NEG_INF:
        if f != e:
            report.add("C1", b, i, f"phi={f} but eps={e}")
    elif f - e != wt.pairing(i, ct):
        report.add("C1", b, i, f"phi-eps={f - e}, <h_i,wt>={wt.pairing(i, ct)}")
    raised = b.e_tilde(i)
    lowered = b.f_tilde(i)
    if f == NEG_INF and (raised is not None or lowered is not None):
        report.add("C5", b, i, "phi is -inf but a crystal operator is nonzero")
    if raised is not None:
        if raised.eps(i) != e - 1 or raised.phi(i) != f + 1:
            report.add(
                "C2", b, i, f"e_tilde gives eps={raised.eps(i)} phi={raised.phi(i)}"
            )
        if raised.wt() != wt.shift(i, 1):
            report.add("C2", b, i, "e_tilde does not add alpha_i to the weight")
        if raised not in pool:
            report.add("C4", b, i, f"set is not closed under e_tilde: {raised}")
        elif raised.f_tilde(i) != b:
            report.add("C4", b, i, f"f_tilde(e_tilde(b)) = {raised.f_tilde(i)}")
    if lowered is not None:
        if lowered.eps(i) != e + 1 or lowered.phi(i) != f - 1:
            report.add(
                "C3", b, i, f"f_tilde gives eps={lowered.eps(i)} phi={lowered.phi(i)}"
            )
        if lowered.wt() != wt.shift(i, -1):
            report.add("C3", b, i, "f_tilde does not subtract alpha_i from the weight")
        if lowered not in pool:
            report.skipped += 1
        elif lowered.e_tilde(i) != b:
            report.add("C4", b, i, f"e_tilde(f_tilde(b)) = {lowered.e_tilde(i)}")
