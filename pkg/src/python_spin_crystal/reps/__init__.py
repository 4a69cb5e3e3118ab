from python_spin_crystal.reps.blocks import BlockId, block_of, block_size, kac_check
from python_spin_crystal.reps.branching import (
    Algebra,
    BranchReport,
    Direction,
    basic_spin,
    branch,
    jantzen_seitz_A,
    jantzen_seitz_S,
)
from python_spin_crystal.reps.characters import Character, shuffle

__all__ = [
    "BlockId",
    "block_of",
    "block_size",
    "kac_check",
    "Algebra",
    "Direction",
    "BranchReport",
    "branch",
    "basic_spin",
    "jantzen_seitz_S",
    "jantzen_seitz_A",
    "Character",
    "shuffle",
]
