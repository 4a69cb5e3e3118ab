import logging
import re
from collections import Counter, defaultdict
from itertools import combinations
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from python_spin_crystal.core.cartan import (
    CartanType,
    ContentVector,
    cartan_entry,
    pairing_hi,
)
from python_spin_crystal.core.exceptions import (
    InvalidResidueError,
    UndefinedInputError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.type_hints import Residue, ResidueWord

BASE_LOGGER = logging.getLogger(__name__)

_TERM = re.compile(r"^(?:(\d+)\.)?(\d*|\([\d,]*\))$")


def word_str(word: ResidueWord) -> str:
    if all(r < 10 for r in word):
        return "".join(str(r) for r in word)
    return "(" + ",".join(str(r) for r in word) + ")"


def parse_word(text: str) -> ResidueWord:
    text = text.strip()
    if text.startswith("("):
        return tuple(int(r) for r in text[1:-1].split(",") if r)
    return tuple(int(r) for r in text)


def word_content(word: ResidueWord) -> ContentVector:
    return ContentVector(tuple(Counter(word).items()))


class Character:
    """
    Formal character: an integer combination of residue words of one common length.
    Zero coefficients are never stored, and the zero character of a degree is
    Character({}, degree).
    """

    def __init__(
        self, coefficients: Mapping[ResidueWord, int], degree: Optional[int] = None
    ):
        cleaned = {tuple(w): c for w, c in coefficients.items() if c != 0}
        lengths = {len(w) for w in cleaned}
        if degree is not None:
            lengths.add(degree)
        if len(lengths) > 1:
            raise UndefinedInputError(f"words of mixed lengths {sorted(lengths)}")
        self._degree = lengths.pop() if lengths else 0
        self._coefficients: Dict[ResidueWord, int] = dict(sorted(cleaned.items()))

    @staticmethod
    def of_word(word: Iterable[Residue], coefficient: int = 1) -> "Character":
        word = tuple(word)
        return Character({word: coefficient}, len(word))

    @staticmethod
    def parse(text: str) -> "Character":
        """Reads the canonical form, "2.iij"-style with concrete residues"""
        coefficients: Dict[ResidueWord, int] = defaultdict(int)
        for term in re.sub(r"\s+", "", text).split("+"):
            match = _TERM.match(term)
            if match is None:
                raise UndefinedInputError(f"cannot parse character term {term!r}")
            coefficient, word = match.groups()
            coefficients[parse_word(word)] += int(coefficient or 1)
        return Character(coefficients)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coefficients(self) -> Dict[ResidueWord, int]:
        return dict(self._coefficients)

    def words(self) -> Iterator[ResidueWord]:
        return iter(self._coefficients)

    def __getitem__(self, word: ResidueWord) -> int:
        return self._coefficients.get(tuple(word), 0)

    def __len__(self) -> int:
        return len(self._coefficients)

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __add__(self, other: "Character") -> "Character":
        if self and other and self.degree != other.degree:
            raise UndefinedInputError(
                f"cannot add characters of degrees {self.degree} and {other.degree}"
            )
        total: Dict[ResidueWord, int] = defaultdict(int, self._coefficients)
        for word, coefficient in other._coefficients.items():
            total[word] += coefficient
        return Character(total, self.degree if self else other.degree)

    def __mul__(self, scalar: int) -> "Character":
        return Character(
            {w: scalar * c for w, c in self._coefficients.items()}, self.degree
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (self.degree, self._coefficients) == (other.degree, other._coefficients)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self._coefficients.items())))

    def total(self) -> int:
        return sum(self._coefficients.values())

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(
            (word_str(w) if c == 1 else f"{c}.{word_str(w)}")
            for w, c in self._coefficients.items()
        )

    def __repr__(self) -> str:
        return f"Character({self})"


def kato_character(i: Residue, n: int) -> Character:
    """ch L(i^n) = n! [i^n]"""
    if n < 0:
        raise UnsupportedRangeError(f"n must be non-negative, got {n}")
    return Character.of_word((i,) * n, factorial(n))


def wedge_character(
    i: Residue, j: Residue, a: int, b: int, ct: CartanType
) -> Character:
    """
    ch L(i^a j i^b) for neighbouring residues i, j with m = -<h_i, alpha_j>.
    Closed forms exist for a + b <= m + 1 only.
    """
    ct.check_residue(i)
    ct.check_residue(j)
    if abs(i - j) != 1:
        raise InvalidResidueError(f"{i} and {j} are not neighbours")
    if a < 0 or b < 0:
        raise UnsupportedRangeError(f"a and b must be non-negative, got {a}, {b}")
    m = -cartan_entry(i, j, ct)

    def term(x: int, y: int) -> Character:
        word = (i,) * x + (j,) + (i,) * y
        return Character.of_word(word, factorial(x) * factorial(y))

    if a + b <= m:
        return term(a, b)
    if a + b == m + 1:
        if b >= 1:
            return term(a, b) + term(a + 1, b - 1)
        return term(m, 1) + term(m + 1, 0)
    raise UnsupportedRangeError(
        f"no closed form for L({i}^{a} {j} {i}^{b}) when a + b > {m + 1}"
    )


def _interleavings(
    left: ResidueWord, right: ResidueWord
) -> Iterator[ResidueWord]:
    n = len(left) + len(right)
    for positions in combinations(range(n), len(left)):
        chosen = set(positions)
        lefts, rights = iter(left), iter(right)
        yield tuple(next(lefts) if k in chosen else next(rights) for k in range(n))


def shuffle(c1: Character, c2: Character) -> Character:
    result: Dict[ResidueWord, int] = defaultdict(int)
    for w1, k1 in c1.coefficients.items():
        for w2, k2 in c2.coefficients.items():
            for word in _interleavings(w1, w2):
                result[word] += k1 * k2
    BASE_LOGGER.debug(f"shuffle of {len(c1)} by {len(c2)} words gave {len(result)}")
    return Character(result, c1.degree + c2.degree)


def _require_nonzero(c: Character) -> None:
    if not c:
        raise UndefinedInputError("statistics of the zero character are undefined")


def _run_length(word: ResidueWord, i: Residue) -> int:
    length = 0
    for r in word:
        if r != i:
            break
        length += 1
    return length


def eps_from_character(c: Character, i: Residue) -> int:
    _require_nonzero(c)
    return max(_run_length(tuple(reversed(w)), i) for w in c.words())


def eps_star_from_character(c: Character, i: Residue) -> int:
    _require_nonzero(c)
    return max(_run_length(w, i) for w in c.words())


def character_content(c: Character) -> ContentVector:
    _require_nonzero(c)
    contents = {word_content(w) for w in c.words()}
    if len(contents) != 1:
        raise UndefinedInputError(f"{c} mixes words of different content")
    return contents.pop()


def phi_from_character(c: Character, i: Residue, ct: CartanType) -> int:
    return eps_from_character(c, i) + pairing_hi(i, character_content(c), ct)


def survives_lambda0(c: Character) -> bool:
    """Whether the module factors through the cyclotomic quotient of level Lambda_0"""
    _require_nonzero(c)
    for word in c.words():
        if word and (word[0] != 0 or word[:2] == (0, 0)):
            return False
    return True