import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from python_spin_crystal.core.cartan import CartanType, ContentVector
from python_spin_crystal.core.exceptions import (
    InvalidPartitionError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.partitions import (
    HStrictPartition,
    a_of,
    b_of,
    bar_core,
    bar_weight,
    content,
    enumerate_restricted,
    is_h_strict,
    is_restricted,
)
from python_spin_crystal.core.type_hints import ModuleType

BASE_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockId:
    """Identified by content alone; the bar core and weight are carried for display"""

    content: ContentVector
    core: HStrictPartition = field(compare=False)
    weight: int = field(compare=False)

    def __str__(self) -> str:
        return f"content {self.content}, core {self.core}, weight {self.weight}"


def require_h_strict(lam: HStrictPartition, ct: CartanType) -> None:
    if not is_h_strict(lam, ct):
        raise InvalidPartitionError(f"{lam} is not h-strict for {ct}")


def require_restricted(lam: HStrictPartition, ct: CartanType) -> None:
    require_h_strict(lam, ct)
    if not is_restricted(lam, ct):
        raise InvalidPartitionError(f"{lam} is not restricted for {ct}")


def block_of(lam: HStrictPartition, ct: CartanType) -> BlockId:
    require_h_strict(lam, ct)
    return BlockId(content(lam, ct), bar_core(lam, ct), bar_weight(lam, ct))


@lru_cache(maxsize=None)
def _layer_by_content(
    n: int, ct: CartanType
) -> Dict[ContentVector, Tuple[HStrictPartition, ...]]:
    grouped: Dict[ContentVector, List[HStrictPartition]] = defaultdict(list)
    for lam in enumerate_restricted(n, ct):
        grouped[content(lam, ct)].append(lam)
    return {gamma: tuple(members) for gamma, members in grouped.items()}


def blocks_of_degree(
    n: int, ct: CartanType
) -> Dict[BlockId, Tuple[HStrictPartition, ...]]:
    return {
        block_of(members[0], ct): members
        for _, members in sorted(_layer_by_content(n, ct).items(), key=lambda kv: kv[1])
    }


@lru_cache(maxsize=None)
def par_ell(big_n: int, ell: int) -> int:
    """Coefficient of q^N in prod_k (1 - q^k)^(-ell)"""
    if big_n < 0 or ell < 0:
        raise UnsupportedRangeError(f"par_ell needs N, ell >= 0, got {big_n}, {ell}")
    coefficients = [1] + [0] * big_n
    for _ in range(ell):
        for k in range(1, big_n + 1):
            for m in range(k, big_n + 1):
                coefficients[m] += coefficients[m - k]
    return coefficients[big_n]


def block_size(lam: HStrictPartition, ct: CartanType) -> int:
    require_restricted(lam, ct)
    return len(_layer_by_content(lam.degree, ct)[content(lam, ct)])


@dataclass
class KacReport:
    n: int
    ct: CartanType
    checked: int = 0
    mismatches: List[Tuple[HStrictPartition, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def kac_check(n: int, ct: CartanType) -> KacReport:
    """block_size(lam) == par_ell(bar_weight(lam), ell) across the whole degree"""
    if not ct.is_finite:
        raise UnsupportedRangeError("the Kac block-size formula needs a finite h")
    report = KacReport(n, ct)
    for lam in enumerate_restricted(n, ct):
        report.checked += 1
        size = block_size(lam, ct)
        expected = par_ell(bar_weight(lam, ct), int(ct.ell))
        if size != expected:
            report.mismatches.append((lam, size, expected))
    if report.mismatches:
        BASE_LOGGER.error(f"Kac formula fails at n={n}, {ct}: {report.mismatches}")
    return report


def type_W(lam: HStrictPartition, ct: CartanType) -> ModuleType:
    return ModuleType.from_parity(b_of(lam, ct))


def type_S(lam: HStrictPartition, ct: CartanType) -> ModuleType:
    return ModuleType.from_parity(a_of(lam, ct))


def type_from_content(gamma: ContentVector) -> ModuleType:
    return ModuleType.from_parity(gamma[0])


def is_projective_W(lam: HStrictPartition, ct: CartanType) -> bool:
    require_restricted(lam, ct)
    return bar_weight(lam, ct) == 0


def is_projective_S(lam: HStrictPartition, ct: CartanType) -> bool:
    return is_projective_W(lam, ct)


@dataclass(frozen=True)
class IrreducibleLabel:
    partition: HStrictPartition
    # None when the label is not split into a +/- pair
    sign: Optional[str] = None

    def __str__(self) -> str:
        return str(self.partition) + ("" if self.sign is None else f",{self.sign}")


def ungraded_labels_S(n: int, ct: CartanType) -> List[IrreducibleLabel]:
    """D(lam) when a(lam) is even, the pair D(lam, +), D(lam, -) when it is odd"""
    labels: List[IrreducibleLabel] = []
    for lam in enumerate_restricted(n, ct):
        if a_of(lam, ct) % 2 == 0:
            labels.append(IrreducibleLabel(lam))
        else:
            labels += [IrreducibleLabel(lam, "+"), IrreducibleLabel(lam, "-")]
    return labels


def irreducible_labels_A(n: int, ct: CartanType) -> List[IrreducibleLabel]:
    """E(lam) when a(lam) is odd, the pair E(lam, +), E(lam, -) when it is even"""
    labels: List[IrreducibleLabel] = []
    for lam in enumerate_restricted(n, ct):
        if a_of(lam, ct) % 2 == 1:
            labels.append(IrreducibleLabel(lam))
        else:
            labels += [IrreducibleLabel(lam, "+"), IrreducibleLabel(lam, "-")]
    return labels


def count_ungraded_S(n: int, ct: CartanType) -> int:
    return len(ungraded_labels_S(n, ct))


def count_irreducible_A(n: int, ct: CartanType) -> int:
    return len(irreducible_labels_A(n, ct))
