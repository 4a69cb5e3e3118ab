import math
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from python_spin_crystal.core.exceptions import (
    InvalidResidueError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.type_hints import Residue

INFINITY = math.inf

Counts = Tuple[Tuple[Residue, int], ...]


@dataclass(frozen=True)
class CartanType:
    """
    Type A_{2l}^{(2)} for a positive integer l, or B_infinity when l is INFINITY.
    The quantum characteristic h = 2l + 1 is derived, and the residue set is
    I = {0, ..., l} (all non-negative integers when l is infinite).
    Cartan entries are computed from index formulas on demand, so the infinite type
    never materialises a matrix.
    """

    ell: Union[int, float]

    def __post_init__(self):
        if self.ell == INFINITY:
            return
        if isinstance(self.ell, bool) or not isinstance(self.ell, int) or self.ell < 1:
            raise UnsupportedRangeError(
                f"ell must be a positive integer or infinity, not {self.ell!r}"
            )

    @staticmethod
    def from_h(h: Union[int, str]) -> "CartanType":
        if isinstance(h, str):
            text = h.strip().lower()
            if text in ("inf", "infinity", "∞"):
                return CartanType(INFINITY)
            try:
                h = int(text)
            except ValueError:
                raise UnsupportedRangeError(
                    f"h must be an odd integer >= 3 or inf: {h}"
                )
        if h < 3 or h % 2 == 0:
            raise UnsupportedRangeError(f"h must be an odd integer >= 3 or inf: {h}")
        return CartanType((h - 1) // 2)

    @property
    def is_finite(self) -> bool:
        return self.ell != INFINITY

    @property
    def h(self) -> Union[int, float]:
        if self.is_finite:
            return 2 * int(self.ell) + 1
        return INFINITY

    def divides(self, k: int) -> bool:
        # infinity divides 0 and nothing else
        if self.is_finite:
            return k % int(self.h) == 0
        return k == 0

    def check_residue(self, i: Residue) -> None:
        if isinstance(i, bool) or not isinstance(i, int) or i < 0 or i > self.ell:
            raise InvalidResidueError(f"residue {i!r} is not in I for {self}")

    def __str__(self) -> str:
        return f"h={self.h_label}"

    @property
    def h_label(self) -> str:
        return str(self.h) if self.is_finite else "inf"


def relevant_residues(ct: CartanType, bound: int = 0) -> range:
    """
    The whole of I for finite l; residues 0..bound otherwise, which covers every
    addable or removable node of a diagram with at most bound columns.
    """
    if ct.is_finite:
        return range(int(ct.ell) + 1)
    return range(bound + 1)


def cartan_entry(i: Residue, j: Residue, ct: CartanType) -> int:
    ct.check_residue(i)
    ct.check_residue(j)
    if i == j:
        return 2
    if abs(i - j) != 1:
        return 0
    if ct.ell == 1:
        return -4 if (i, j) == (0, 1) else -1
    if (i, j) == (0, 1):
        return -2
    if ct.is_finite and (i, j) == (ct.ell - 1, ct.ell):
        return -2
    return -1


def _normalise(counts: Iterable[Tuple[Residue, int]]) -> Counts:
    merged: Dict[Residue, int] = {}
    for residue, count in counts:
        merged[residue] = merged.get(residue, 0) + count
    return tuple(sorted((r, c) for r, c in merged.items() if c != 0))


def _pairing(i: Residue, lambda0: int, gamma: Counts, ct: CartanType) -> int:
    ct.check_residue(i)
    value = lambda0 if i == 0 else 0
    for j, count in gamma:
        if abs(i - j) <= 1:
            value -= count * cartan_entry(i, j, ct)
    return value


@dataclass(frozen=True)
class ContentVector:
    """Finitely supported residue -> non-negative count map, kept sorted."""

    counts: Counts = ()

    def __post_init__(self):
        counts = _normalise(self.counts)
        for residue, count in counts:
            if residue < 0 or count < 0:
                raise UnsupportedRangeError(f"invalid content entry {residue}: {count}")
        object.__setattr__(self, "counts", counts)

    @staticmethod
    def from_mapping(mapping: Mapping[Residue, int]) -> "ContentVector":
        return ContentVector(tuple(mapping.items()))

    def __getitem__(self, i: Residue) -> int:
        return dict(self.counts).get(i, 0)

    def __add__(self, other: "ContentVector") -> "ContentVector":
        return ContentVector(self.counts + other.counts)

    def add(self, i: Residue, k: int = 1) -> "ContentVector":
        return ContentVector(self.counts + ((i, k),))

    @property
    def degree(self) -> int:
        return sum(count for _, count in self.counts)

    def support(self) -> Tuple[Residue, ...]:
        return tuple(residue for residue, _ in self.counts)

    def check_support(self, ct: CartanType) -> None:
        """Contents read from user input may name residues outside I"""
        for residue in self.support():
            ct.check_residue(residue)

    def as_dict(self) -> Dict[Residue, int]:
        return dict(self.counts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{r}:{c}" for r, c in self.counts) + "}"


def pairing_hi(i: Residue, gamma: ContentVector, ct: CartanType) -> int:
    """<h_i, Lambda_0 - sum_j gamma_j alpha_j>"""
    gamma.check_support(ct)
    return _pairing(i, 1, gamma.counts, ct)


def c_coefficients(ct: CartanType) -> Dict[Residue, int]:
    if not ct.is_finite:
        raise UnsupportedRangeError("c only exists in a completion for B_infinity")
    return {i: (1 if i == 0 else 2) for i in range(int(ct.ell) + 1)}


@dataclass(frozen=True)
class Weight:
    """
    lambda0 * Lambda_0 - sum_i gamma_i alpha_i, with gamma allowed to be negative
    """

    lambda0: int = 0
    gamma: Counts = ()

    def __post_init__(self):
        object.__setattr__(self, "gamma", _normalise(self.gamma))

    @staticmethod
    def from_content(content: ContentVector, lambda0: int = 1) -> "Weight":
        return Weight(lambda0, content.counts)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.lambda0 + other.lambda0, self.gamma + other.gamma)

    def shift(self, i: Residue, k: int) -> "Weight":
        """The weight plus k * alpha_i"""
        return Weight(self.lambda0, self.gamma + ((i, -k),))

    def pairing(self, i: Residue, ct: CartanType) -> int:
        return _pairing(i, self.lambda0, self.gamma, ct)

    @property
    def content(self) -> ContentVector:
        return ContentVector(self.gamma)

    def coefficient(self, i: Residue) -> int:
        return dict(self.gamma).get(i, 0)

    def __str__(self) -> str:
        terms = [f"{self.lambda0}L0"] + [f"{-c:+d}a{r}" for r, c in self.gamma]
        return " ".join(terms)


def weight_residue_bound(weight: Optional[Weight]) -> int:
    if weight is None or not weight.gamma:
        return 0
    return max(residue for residue, _ in weight.gamma)
