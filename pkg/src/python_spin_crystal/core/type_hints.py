from enum import Enum
from typing import Tuple, Union

Residue = int
ResidueWord = Tuple[Residue, ...]
Parts = Tuple[int, ...]

# eps/phi of the elementary crystals may be -inf
CrystalStatistic = Union[int, float]


class ModuleType(Enum):
    """Endomorphism superalgebra of dimension 1 (M) or 2 (Q)"""

    M = "M"
    Q = "Q"

    @staticmethod
    def from_parity(k: int) -> "ModuleType":
        return ModuleType.M if k % 2 == 0 else ModuleType.Q
