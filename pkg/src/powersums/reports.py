from __future__ import annotations

import enum
from dataclasses import dataclass, field

from powersums.arith import Modulus, Residue


class Claim(enum.Enum):
    FERMAT = "fermat"
    THEOREM1 = "theorem1"
    HERMITE_BACHMANN = "hb"
    PASCAL_IDENTITY = "pascal"


@dataclass(frozen=True)
class CongruenceReport:
    """Verdict for one instance of a claim.

    Congruence claims carry a ``modulus`` and a canonical ``expected``
    residue; ``holds`` means ``lhs mod modulus == expected.value``. The
    exact Pascal identity has no modulus and ``expected`` is the exact
    right-hand side.
    """

    claim: Claim
    lhs: int | Residue
    modulus: Modulus | None
    expected: Residue | int
    holds: bool = field(init=False)

    def __post_init__(self):
        lhs = int(self.lhs)
        if self.modulus is None:
            holds = lhs == int(self.expected)
        else:
            holds = lhs % self.modulus.m == int(self.expected)
        object.__setattr__(self, "holds", holds)

    @property
    def lhs_value(self) -> int:
        return int(self.lhs)
