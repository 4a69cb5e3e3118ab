import json
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

from python_spin_crystal.core.cartan import CartanType, ContentVector
from python_spin_crystal.core.exceptions import (
    InvalidPartitionError,
    UndefinedInputError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.type_hints import Parts, Residue

BASE_LOGGER = logging.getLogger(__name__)


class Node(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class HStrictPartition:
    """
    A weakly decreasing sequence of positive parts.
    Whether it is h-strict (or restricted) depends on h and is checked by
    is_h_strict/is_restricted rather than stored.
    """

    parts: Parts = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part <= 0:
                raise InvalidPartitionError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, row: int) -> int:
        """Length of row (1-indexed), 0 past the last row"""
        if 1 <= row <= len(self.parts):
            return self.parts[row - 1]
        return 0

    def __contains__(self, node: object) -> bool:
        if not isinstance(node, tuple) or len(node) != 2:
            return False
        row, col = node
        return row >= 1 and 1 <= col <= self.part(row)

    def nodes(self) -> Iterator[Node]:
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield Node(row, col)

    def with_row_length(self, row: int, length: int) -> Optional["HStrictPartition"]:
        """
        The diagram with row resized, or None when the result is not a Young diagram
        """
        parts = list(self.parts) + [0] * max(0, row - len(self.parts))
        parts[row - 1] = length
        if any(a < b for a, b in zip(parts, parts[1:])) or length < 0:
            return None
        return HStrictPartition(tuple(p for p in parts if p > 0))

    def remove_node(self, node: Node) -> Optional["HStrictPartition"]:
        if node.col != self.part(node.row):
            return None
        return self.with_row_length(node.row, node.col - 1)

    def add_node(self, node: Node) -> Optional["HStrictPartition"]:
        if node.col != self.part(node.row) + 1:
            return None
        return self.with_row_length(node.row, node.col)

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


EMPTY = HStrictPartition()


def parse_partition(text: str) -> HStrictPartition:
    """Accepts "16,11,10" as well as the JSON array "[16,11,10]"."""
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        elif text in ("", "0"):
            values = []
        else:
            values = [int(value) for value in text.split(",") if value.strip()]
    except ValueError as exc:
        raise InvalidPartitionError(f"cannot parse partition {text!r}: {exc}")
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise InvalidPartitionError(f"cannot parse partition {text!r}")
    return HStrictPartition(tuple(values))


def is_h_strict(lam: HStrictPartition, ct: CartanType) -> bool:
    return all(ct.divides(a) for a, b in zip(lam.parts, lam.parts[1:]) if a == b)


def is_restricted(lam: HStrictPartition, ct: CartanType) -> bool:
    if not ct.is_finite:
        return True
    h = int(ct.h)
    for row, length in enumerate(lam.parts, start=1):
        gap = length - lam.part(row + 1)
        if gap > h or (gap == h and length % h == 0):
            return False
    return True


def residue(col: int, ct: CartanType) -> Residue:
    if col < 1:
        raise UndefinedInputError(f"columns are numbered from 1, got {col}")
    if not ct.is_finite:
        return col - 1
    h = int(ct.h)
    t = (col - 1) % h
    return min(t, h - 1 - t)


def content(lam: HStrictPartition, ct: CartanType) -> ContentVector:
    return _content(lam.parts, ct)


@lru_cache(maxsize=None)
def _content(parts: Parts, ct: CartanType) -> ContentVector:
    counts: Counter = Counter()
    for length in parts:
        for col in range(1, length + 1):
            counts[residue(col, ct)] += 1
    return ContentVector.from_mapping(counts)


def _h_strict_parts(n: int, largest: int, ct: CartanType) -> Iterator[Parts]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        # a part may only repeat when h divides it
        bound = first if ct.divides(first) else first - 1
        for rest in _h_strict_parts(n - first, bound, ct):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_h_strict(n: int, ct: CartanType) -> Tuple[HStrictPartition, ...]:
    if n < 0:
        raise UnsupportedRangeError(f"degree must be non-negative, got {n}")
    found = tuple(sorted(HStrictPartition(p) for p in _h_strict_parts(n, n, ct)))
    BASE_LOGGER.debug(f"{len(found)} h-strict partitions of {n} for {ct}")
    return found


@lru_cache(maxsize=None)
def enumerate_restricted(n: int, ct: CartanType) -> Tuple[HStrictPartition, ...]:
    return tuple(lam for lam in enumerate_h_strict(n, ct) if is_restricted(lam, ct))


class BarKind(Enum):
    B1 = "B1"
    B2 = "B2"


@dataclass(frozen=True)
class Bar:
    kind: BarKind
    rows: Tuple[int, ...]
    nodes: Tuple[Node, ...]
    result: HStrictPartition


def _resorted(parts: List[int]) -> HStrictPartition:
    return HStrictPartition(tuple(sorted((p for p in parts if p > 0), reverse=True)))


def h_bars(lam: HStrictPartition, ct: CartanType) -> List[Bar]:
    """
    All h-bars of lam in canonical order: B1 bars by row, then B2 bars by row pair.
    A removal only counts if the re-sorted diagram is again h-strict.
    """
    if not ct.is_finite:
        return []
    h = int(ct.h)
    parts = list(lam.parts)
    bars: List[Bar] = []
    for row, length in enumerate(parts, start=1):
        if length < h:
            continue
        if not ct.divides(length) and (length - h) in parts:
            continue
        result = _resorted(parts[: row - 1] + [length - h] + parts[row:])
        if is_h_strict(result, ct):
            nodes = tuple(Node(row, col) for col in range(length - h + 1, length + 1))
            bars.append(Bar(BarKind.B1, (row,), nodes, result))
    for first in range(1, len(parts) + 1):
        for second in range(first + 1, len(parts) + 1):
            if parts[first - 1] + parts[second - 1] != h:
                continue
            rest = [p for r, p in enumerate(parts, start=1) if r not in (first, second)]
            result = _resorted(rest)
            if is_h_strict(result, ct):
                nodes = tuple(
                    Node(r, col)
                    for r in (first, second)
                    for col in range(1, parts[r - 1] + 1)
                )
                bars.append(Bar(BarKind.B2, (first, second), nodes, result))
    return bars


@lru_cache(maxsize=None)
def _strip_bars(lam: HStrictPartition, ct: CartanType) -> Tuple[HStrictPartition, int]:
    weight = 0
    while True:
        bars = h_bars(lam, ct)
        if not bars:
            return lam, weight
        lam = bars[0].result
        weight += 1


def bar_core(lam: HStrictPartition, ct: CartanType) -> HStrictPartition:
    return _strip_bars(lam, ct)[0]


def bar_weight(lam: HStrictPartition, ct: CartanType) -> int:
    return _strip_bars(lam, ct)[1]


@lru_cache(maxsize=None)
def bar_cores_all_orders(
    lam: HStrictPartition, ct: CartanType
) -> FrozenSet[HStrictPartition]:
    bars = h_bars(lam, ct)
    if not bars:
        return frozenset({lam})
    cores: FrozenSet[HStrictPartition] = frozenset()
    for bar in bars:
        cores = cores | bar_cores_all_orders(bar.result, ct)
    return cores


def bar_weight_from_content(gamma: ContentVector, ct: CartanType) -> int:
    if not ct.is_finite:
        raise UnsupportedRangeError("bar weights need a finite h")
    gamma.check_support(ct)
    ell = int(ct.ell)
    g = [gamma[i] for i in range(ell + 1)]
    if ell == 1:
        twice = 4 * g[0] * g[1] - g[0] * (g[0] - 1) - 4 * g[1] ** 2
    else:
        twice = (
            2 * sum(g[i] * g[i + 1] for i in range(ell - 1))
            + 4 * g[ell - 1] * g[ell]
            - g[0] * (g[0] - 1)
            - 2 * sum(g[i] ** 2 for i in range(1, ell))
            - 4 * g[ell] ** 2
        )
    return twice // 2


def b_of(lam: HStrictPartition, ct: CartanType) -> int:
    return sum(1 for part in lam.parts if not ct.divides(part))


def a_of(lam: HStrictPartition, ct: CartanType) -> int:
    return lam.degree - b_of(lam, ct)
