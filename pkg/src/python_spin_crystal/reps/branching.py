import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from python_spin_crystal.core.cartan import CartanType, relevant_residues
from python_spin_crystal.core.crystal import e_tilde, eps, f_tilde, phi
from python_spin_crystal.core.exceptions import UnsupportedRangeError
from python_spin_crystal.core.partitions import HStrictPartition, a_of, b_of
from python_spin_crystal.core.type_hints import ModuleType, Residue
from python_spin_crystal.reps.blocks import require_restricted, type_S

BASE_LOGGER = logging.getLogger(__name__)


class Algebra(Enum):
    W = "W"
    S = "S"


class Direction(Enum):
    RESTRICT = "res"
    INDUCE = "ind"


@dataclass(frozen=True)
class BranchPiece:
    i: Residue
    outer_mult: int
    # soc e_i D(lam) when restricting, cosoc f_i D(lam) when inducing
    socle: HStrictPartition
    socle_mult: int

    @property
    def irreducible(self) -> bool:
        return self.socle_mult == 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "i": self.i,
            "outer_mult": self.outer_mult,
            "socle": self.socle.to_json(),
            "socle_mult": self.socle_mult,
            "irreducible": self.irreducible,
        }


@dataclass(frozen=True)
class BranchReport:
    """
    What the branching theorems determine about res or ind of an irreducible: for
    every residue with a nonzero statistic, the outer multiplicity, the (co)socle
    label and its multiplicity. Other composition factors are not described.
    """

    algebra: Algebra
    direction: Direction
    source: HStrictPartition
    ct: CartanType
    pieces: Tuple[BranchPiece, ...] = ()

    def outer_multiplicity(self, i: Residue) -> int:
        self.ct.check_residue(i)
        return outer_multiplicity(self.source, self.ct, self.algebra, i)

    def piece(self, i: Residue) -> Optional[BranchPiece]:
        for piece in self.pieces:
            if piece.i == i:
                return piece
        return None

    @property
    def completely_reducible(self) -> bool:
        return all(piece.socle_mult <= 1 for piece in self.pieces)

    def to_json(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.value,
            "direction": self.direction.value,
            "source": self.source.to_json(),
            "pieces": [piece.to_json() for piece in self.pieces],
            "completely_reducible": self.completely_reducible,
        }


def outer_multiplicity(
    lam: HStrictPartition, ct: CartanType, algebra: Algebra, i: Residue
) -> int:
    """How many copies of e_i D(lam) (or f_i D(lam)) make up the i-th summand"""
    if algebra is Algebra.W:
        return 2 if i != 0 or b_of(lam, ct) % 2 else 1
    if a_of(lam, ct) % 2:
        return 1 if i == 0 else 2
    return 1


def _branch(
    lam: HStrictPartition, ct: CartanType, algebra: Algebra, direction: Direction
) -> BranchReport:
    require_restricted(lam, ct)
    pieces: List[BranchPiece] = []
    for i in relevant_residues(ct, lam.degree + 1):
        if direction is Direction.RESTRICT:
            mult, target = eps(lam, ct, i), e_tilde(lam, ct, i)
        else:
            mult, target = phi(lam, ct, i), f_tilde(lam, ct, i)
        if mult == 0 or target is None:
            continue
        outer = outer_multiplicity(lam, ct, algebra, i)
        pieces.append(BranchPiece(i, outer, target, mult))
    report = BranchReport(algebra, direction, lam, ct, tuple(pieces))
    BASE_LOGGER.debug(
        f"{direction.value}_{algebra.value} {lam}: {len(pieces)} piece(s), "
        f"completely reducible {report.completely_reducible}"
    )
    return report


def restrict_W(lam: HStrictPartition, ct: CartanType) -> BranchReport:
    return _branch(lam, ct, Algebra.W, Direction.RESTRICT)


def induce_W(lam: HStrictPartition, ct: CartanType) -> BranchReport:
    return _branch(lam, ct, Algebra.W, Direction.INDUCE)


def restrict_S(lam: HStrictPartition, ct: CartanType) -> BranchReport:
    return _branch(lam, ct, Algebra.S, Direction.RESTRICT)


def induce_S(lam: HStrictPartition, ct: CartanType) -> BranchReport:
    return _branch(lam, ct, Algebra.S, Direction.INDUCE)


def branch(
    lam: HStrictPartition, ct: CartanType, algebra: Algebra, direction: Direction
) -> BranchReport:
    return _branch(lam, ct, algebra, direction)


def _eps_sum_and_zero(lam: HStrictPartition, ct: CartanType) -> Tuple[int, int]:
    require_restricted(lam, ct)
    values = [eps(lam, ct, i) for i in relevant_residues(ct, lam.degree)]
    return sum(values), values[0]


def jantzen_seitz_S(lam: HStrictPartition, ct: CartanType) -> bool:
    """Whether res D(lam) to S(n-1) is irreducible"""
    total, zero = _eps_sum_and_zero(lam, ct)
    if a_of(lam, ct) % 2 == 0:
        return zero == total == 1
    return total == 1


def jantzen_seitz_A(lam: HStrictPartition, ct: CartanType) -> bool:
    total, zero = _eps_sum_and_zero(lam, ct)
    if a_of(lam, ct) % 2 == 0:
        return total == 1
    return zero == total == 1


def _finite_h(n: int, ct: CartanType) -> int:
    if not ct.is_finite:
        raise UnsupportedRangeError("basic spin data needs a finite h")
    if n < 1:
        raise UnsupportedRangeError(f"basic spin data needs n >= 1, got {n}")
    return int(ct.h)


def omega(n: int, ct: CartanType) -> HStrictPartition:
    """The label of the basic spin module"""
    h = _finite_h(n, ct)
    a, b = divmod(n, h)
    if b:
        return HStrictPartition((h,) * a + (b,))
    return HStrictPartition((h,) * (a - 1) + (h - 1, 1))


def basic_spin_dims(n: int, ct: CartanType) -> Tuple[int, int]:
    h = _finite_h(n, ct)
    if n % h:
        return 2**n, 2 ** (n // 2)
    return 2 ** (n - 1), 2 ** ((n - 1) // 2)


@dataclass(frozen=True)
class CliffordModule:
    n: int
    dim: int
    type: ModuleType


def clifford_module(n: int) -> CliffordModule:
    """The irreducible supermodule of the Clifford superalgebra on n generators"""
    if n < 0:
        raise UnsupportedRangeError(f"n must be non-negative, got {n}")
    return CliffordModule(n, 2 ** ((n + 1) // 2), ModuleType.from_parity(n))


@dataclass(frozen=True)
class BasicSpinReport:
    n: int
    ct: CartanType
    omega: HStrictPartition
    dim_W: int
    dim_S: int
    type_W: ModuleType
    type_S: ModuleType
    clifford: CliffordModule

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "h": int(self.ct.h),
            "omega": self.omega.to_json(),
            "dim_W": self.dim_W,
            "dim_S": self.dim_S,
            "type_W": self.type_W.value,
            "type_S": self.type_S.value,
            "clifford_dim": self.clifford.dim,
            "clifford_type": self.clifford.type.value,
        }


def basic_spin(n: int, ct: CartanType) -> BasicSpinReport:
    label = omega(n, ct)
    dim_w, dim_s = basic_spin_dims(n, ct)
    return BasicSpinReport(
        n=n,
        ct=ct,
        omega=label,
        dim_W=dim_w,
        dim_S=dim_s,
        type_W=ModuleType.from_parity(b_of(label, ct)),
        type_S=type_S(label, ct),
        clifford=clifford_module(n),
    )
