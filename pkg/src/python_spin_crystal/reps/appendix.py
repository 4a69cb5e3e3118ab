"""
Loading of the tabulated characters of small irreducible modules, and their
comparison with the crystal.

The tables are written with letter templates (see data/appendix.txt) which are
instantiated for a given l before any comparison happens.
"""
import logging
import re
from dataclasses import dataclass, field
from itertools import permutations, product
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Set, Tuple, Union

from python_spin_crystal.core.cartan import CartanType, relevant_residues
from python_spin_crystal.core.crystal import eps, phi
from python_spin_crystal.core.crystal_graph import path_to_partition
from python_spin_crystal.core.exceptions import (
    FixtureParseError,
    UnsupportedRangeError,
)
from python_spin_crystal.core.partitions import enumerate_restricted
from python_spin_crystal.core.type_hints import ResidueWord
from python_spin_crystal.reps.blocks import type_from_content, type_W
from python_spin_crystal.reps.characters import (
    Character,
    character_content,
    eps_from_character,
    phi_from_character,
    survives_lambda0,
    word_content,
    word_str,
)

BASE_LOGGER = logging.getLogger(__name__)

DEFAULT_FIXTURE = Path(__file__).parent.parent / "data" / "appendix.txt"

_SYMBOL = re.compile(r"([ijkl])('*)|(\d)")
_TERM = re.compile(r"^(?:(\d+)\.)?(perms\((.+)\)|(.+))$")
_SECTION = re.compile(r"^\[(generic|ell=(\d+))\]$")
_COMPARATOR = re.compile(r"(<=|>=|<|>|=)")
_OPERAND = re.compile(r"^(i|ell|\d+)(?:([+-])(\d+))?$")


@dataclass(frozen=True)
class Symbol:
    """A letter plus a shift (i'' is ("i", 2)), or a concrete residue (letter None)"""

    letter: Optional[str]
    value: int

    def resolve(self, assignment: Mapping[str, int]) -> int:
        if self.letter is None:
            return self.value
        return assignment[self.letter] + self.value


WordTemplate = Tuple[Symbol, ...]


@dataclass(frozen=True)
class TermTemplate:
    coefficient: int
    word: WordTemplate
    permuted: bool = False


Operand = Tuple[Optional[str], int]


@dataclass(frozen=True)
class Comparison:
    operands: Tuple[Operand, ...]
    operators: Tuple[str, ...]

    def holds(self, env: Mapping[str, int]) -> bool:
        values = [
            (env[name] if name is not None else 0) + offset
            for name, offset in self.operands
        ]
        return all(
            _compare(a, op, b)
            for a, op, b in zip(values, self.operators, values[1:])
        )


def _compare(a: int, op: str, b: int) -> bool:
    return {
        "<": a < b,
        "<=": a <= b,
        ">": a > b,
        ">=": a >= b,
        "=": a == b,
    }[op]


# alternatives of conjunctions; the empty tuple of alternatives is "true"
Condition = Tuple[Tuple[Comparison, ...], ...]


def condition_holds(condition: Condition, env: Mapping[str, int]) -> bool:
    if not condition:
        return True
    return any(all(c.holds(env) for c in conjunction) for conjunction in condition)


@dataclass(frozen=True)
class AppendixRow:
    line_number: int
    section: Optional[int]  # None for the generic tables, otherwise the l it is for
    degree: int
    label_text: str
    label: WordTemplate
    terms: Tuple[TermTemplate, ...]
    condition: Condition

    def letters(self) -> Dict[str, int]:
        """Every letter used, with the largest shift it carries"""
        shifts: Dict[str, int] = {}
        words = [self.label] + [term.word for term in self.terms]
        for word in words:
            for symbol in word:
                if symbol.letter is not None:
                    shifts[symbol.letter] = max(
                        shifts.get(symbol.letter, 0), symbol.value
                    )
        return shifts


@dataclass(frozen=True)
class AppendixEntry:
    label: ResidueWord
    character: Character
    line_number: int = 0
    template: str = ""
    flags: Tuple[str, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.label)

    def __str__(self) -> str:
        return f"L({word_str(self.label)}) = {self.character}"


def parse_word_template(text: str, line_number: int) -> WordTemplate:
    symbols: List[Symbol] = []
    position = 0
    while position < len(text):
        match = _SYMBOL.match(text, position)
        if match is None:
            raise FixtureParseError(f"unexpected {text[position:]!r}", line_number)
        letter, primes, digit = match.groups()
        if letter is not None:
            symbols.append(Symbol(letter, len(primes)))
        else:
            symbols.append(Symbol(None, int(digit)))
        position = match.end()
    return tuple(symbols)


def _parse_terms(text: str, line_number: int) -> Tuple[TermTemplate, ...]:
    terms: List[TermTemplate] = []
    for raw in text.split("+"):
        match = _TERM.match(raw)
        if not raw or match is None:
            raise FixtureParseError(f"cannot read term {raw!r}", line_number)
        coefficient, _, permuted, plain = match.groups()
        word = parse_word_template(permuted or plain, line_number)
        terms.append(TermTemplate(int(coefficient or 1), word, permuted is not None))
    return tuple(terms)


def _parse_operand(text: str, line_number: int) -> Operand:
    match = _OPERAND.match(text)
    if match is None:
        raise FixtureParseError(f"cannot read operand {text!r}", line_number)
    base, sign, amount = match.groups()
    offset = int(amount or 0) * (-1 if sign == "-" else 1)
    if base.isdigit():
        return None, int(base) + offset
    return base, offset


def parse_condition(text: str, line_number: int) -> Condition:
    if text == "true":
        return ()
    alternatives = []
    for alternative in text.split("|"):
        conjunction = []
        for chain in alternative.split("&"):
            pieces = _COMPARATOR.split(chain)
            if len(pieces) < 3:
                raise FixtureParseError(f"not a comparison: {chain!r}", line_number)
            operands = tuple(_parse_operand(p, line_number) for p in pieces[::2])
            conjunction.append(Comparison(operands, tuple(pieces[1::2])))
        alternatives.append(tuple(conjunction))
    return tuple(alternatives)


def _parse_row(line: str, line_number: int, section: Optional[int]) -> AppendixRow:
    columns = [re.sub(r"\s+", "", column) for column in line.split("|", 3)]
    if len(columns) != 4:
        raise FixtureParseError(
            "expected degree | label | character | condition", line_number
        )
    degree_text, label_text, character_text, condition_text = columns
    if not degree_text.isdigit():
        raise FixtureParseError(f"bad degree {degree_text!r}", line_number)
    degree = int(degree_text)
    label = parse_word_template(label_text, line_number)
    terms = _parse_terms(character_text, line_number)
    for word in [label] + [term.word for term in terms]:
        if len(word) != degree:
            raise FixtureParseError(
                f"word of length {len(word)} in degree {degree}", line_number
            )
    condition = parse_condition(condition_text, line_number)
    row = AppendixRow(line_number, section, degree, label_text, label, terms, condition)
    uses_i = any(
        name == "i"
        for conjunction in condition
        for comparison in conjunction
        for name, _ in comparison.operands
    )
    if uses_i and "i" not in row.letters():
        raise FixtureParseError(
            "condition mentions i but the row has no i", line_number
        )
    return row


def parse_appendix(text: str) -> List[AppendixRow]:
    rows: List[AppendixRow] = []
    section: Optional[int] = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        header = _SECTION.match(line)
        if header is not None:
            section = None if header.group(1) == "generic" else int(header.group(2))
            continue
        if line.startswith("["):
            raise FixtureParseError(f"unknown section {line}", line_number)
        rows.append(_parse_row(line, line_number, section))
    return rows


def _non_adjacent(
    assignment: Mapping[str, int], shifts: Mapping[str, int]
) -> bool:
    letters = sorted(assignment)
    for a, b in ((a, b) for x, a in enumerate(letters) for b in letters[x + 1:]):
        low_a, high_a = assignment[a], assignment[a] + shifts[a]
        low_b, high_b = assignment[b], assignment[b] + shifts[b]
        if not (low_b > high_a + 1 or low_a > high_b + 1):
            return False
    return True


def _assignments(row: AppendixRow, ell: int) -> Iterator[Dict[str, int]]:
    shifts = row.letters()
    letters = sorted(shifts)
    ranges = [range(ell + 1 - shifts[letter]) for letter in letters]
    for values in product(*ranges):
        assignment = dict(zip(letters, values))
        env = {"ell": ell, **({"i": assignment["i"]} if "i" in assignment else {})}
        if condition_holds(row.condition, env) and _non_adjacent(assignment, shifts):
            yield assignment


def _instantiate_word(word: WordTemplate, assignment: Mapping[str, int]) -> ResidueWord:
    return tuple(symbol.resolve(assignment) for symbol in word)


def instantiate(row: AppendixRow, ct: CartanType) -> List[AppendixEntry]:
    ell = int(ct.ell)
    entries: List[AppendixEntry] = []
    for assignment in _assignments(row, ell):
        coefficients: Dict[ResidueWord, int] = {}
        for term in row.terms:
            word = _instantiate_word(term.word, assignment)
            words = set(permutations(word)) if term.permuted else {word}
            for w in words:
                coefficients[w] = coefficients.get(w, 0) + term.coefficient
        label = _instantiate_word(row.label, assignment)
        entries.append(
            AppendixEntry(
                label,
                Character(coefficients, row.degree),
                row.line_number,
                f"L({row.label_text})",
            )
        )
    return entries


def load_appendix(
    ct: CartanType, path: Optional[Union[str, Path]] = None
) -> List[AppendixEntry]:
    """
    Every table entry that applies for this l, one per label. When two rows
    produce the same label, the first is kept and the conflict is flagged on it.
    """
    if not ct.is_finite:
        raise UnsupportedRangeError("the character tables exist for finite l only")
    fixture = Path(path) if path is not None else DEFAULT_FIXTURE
    rows = parse_appendix(fixture.read_text(encoding="utf-8"))
    logger = BASE_LOGGER.getChild("load_appendix")
    by_label: Dict[ResidueWord, AppendixEntry] = {}
    for row in rows:
        if row.section is not None and row.section != ct.ell:
            continue
        for entry in instantiate(row, ct):
            kept = by_label.get(entry.label)
            if kept is None:
                by_label[entry.label] = entry
                continue
            if kept.character != entry.character:
                flag = (
                    f"L({word_str(entry.label)}) from line {entry.line_number} "
                    f"conflicts with line {kept.line_number} and was dropped"
                )
                logger.warning(flag)
                by_label[entry.label] = AppendixEntry(
                    kept.label,
                    kept.character,
                    kept.line_number,
                    kept.template,
                    kept.flags + (flag,),
                )
    entries = sorted(by_label.values(), key=lambda e: (e.degree, e.label))
    logger.info(f"Loaded {len(entries)} entries for {ct} from {fixture.name}")
    return entries


@dataclass
class CrossCheckReport:
    ct: CartanType
    checked: int = 0
    # degree -> number of distinct surviving characters
    survivors: Dict[int, int] = field(default_factory=dict)
    expected: Dict[int, int] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_survivor(entry: AppendixEntry, ct: CartanType) -> List[str]:
    name = f"L({word_str(entry.label)}) (line {entry.line_number})"
    lam = path_to_partition(entry.label, ct)
    if lam is None:
        return [f"{name}: label is not a path from []"]
    failures = []
    for i in relevant_residues(ct):
        from_character = eps_from_character(entry.character, i)
        if from_character != eps(lam, ct, i):
            failures.append(
                f"{name}: eps_{i} is {from_character}, crystal gives "
                f"{eps(lam, ct, i)} at {lam}"
            )
        from_character = phi_from_character(entry.character, i, ct)
        if from_character != phi(lam, ct, i):
            failures.append(
                f"{name}: phi_{i} is {from_character}, crystal gives "
                f"{phi(lam, ct, i)} at {lam}"
            )
    if type_from_content(word_content(entry.label)) != type_W(lam, ct):
        failures.append(f"{name}: type of {lam} disagrees with its content")
    return failures


def cross_check(
    entries: List[AppendixEntry], ct: CartanType, max_n: Optional[int] = None
) -> CrossCheckReport:
    report = CrossCheckReport(ct)
    surviving: Dict[int, Set[Character]] = {}
    for entry in entries:
        if max_n is not None and entry.degree > max_n:
            continue
        report.checked += 1
        report.flags.extend(entry.flags)
        surviving.setdefault(entry.degree, set())
        if character_content(entry.character) != word_content(entry.label):
            report.flags.append(
                f"L({word_str(entry.label)}) (line {entry.line_number}): character "
                f"content differs from the label content"
            )
            continue
        if not survives_lambda0(entry.character):
            continue
        surviving[entry.degree].add(entry.character)
        report.failures.extend(_check_survivor(entry, ct))
    for degree in sorted(surviving):
        report.survivors[degree] = len(surviving[degree])
        report.expected[degree] = len(enumerate_restricted(degree, ct))
        if report.survivors[degree] != report.expected[degree]:
            report.failures.append(
                f"degree {degree}: {report.survivors[degree]} surviving characters, "
                f"{report.expected[degree]} restricted partitions"
            )
    if report.failures:
        BASE_LOGGER.error(f"{len(report.failures)} table mismatch(es) for {ct}")
    return report
