"""Division-ring tags and the K (x) K transition table.

Two tag flavors share this module: `RingTag`, the classification-side label
(R, C, H and the semisimple doubles), and `StateRingTag`, the state-calculus
label which additionally carries a conjugation bar (C~, H~; R is
self-conjugate).

`ring_transition` implements the eleven printed K (x) K rows plus their
conjugate-symmetric completion: bars flip under conjugation of both inputs,
opposite-orientation complex pairs contract to R, and quaternionic parity
adds mod 2.  The completion is a documented extrapolation; the printed rows
are kept verbatim in PRINTED_TRANSITIONS for oracle cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class RingTag(Enum):
    R = "R"
    C = "C"
    H = "H"
    RR = "R(+)R"
    HH = "H(+)H"
    CC = "C(+)C"

    def __str__(self):
        return self.value

    @property
    def doubled(self) -> bool:
        return self in (RingTag.RR, RingTag.HH, RingTag.CC)

    @property
    def base(self) -> "RingTag":
        return {RingTag.RR: RingTag.R, RingTag.HH: RingTag.H,
                RingTag.CC: RingTag.C}.get(self, self)

    @property
    def dim_r(self) -> int:
        """Real dimension of the tagged ring."""
        return {RingTag.R: 1, RingTag.C: 2, RingTag.H: 4,
                RingTag.RR: 2, RingTag.HH: 8, RingTag.CC: 4}[self]

    @staticmethod
    def doubled_of(base: "RingTag") -> "RingTag":
        return {RingTag.R: RingTag.RR, RingTag.H: RingTag.HH,
                RingTag.C: RingTag.CC}[base]


@dataclass(frozen=True)
class StateRingTag:
    """State-calculus ring label: base in {R, C, H}, optional conjugation bar.

    `doubled` exists for displaying R(+)R / H(+)H forms; the fusion calculus
    itself only composes undoubled tags.
    """

    base: str
    conjugated: bool = False
    doubled: bool = False

    def __post_init__(self):
        if self.base not in ("R", "C", "H"):
            raise ValueError(f"unknown ring base {self.base!r}")
        if self.base == "R" and self.conjugated:
            # R is self-conjugate: normalize
            object.__setattr__(self, "conjugated", False)

    def conjugate(self) -> "StateRingTag":
        if self.base == "R":
            return self
        return StateRingTag(self.base, not self.conjugated, self.doubled)

    @property
    def is_complex(self) -> bool:
        return self.base == "C"

    def __str__(self):
        s = self.base + ("~" if self.conjugated else "")
        return f"{s}(+){s}" if self.doubled else s

    @staticmethod
    def parse(text: str) -> "StateRingTag":
        t = text.strip()
        doubled = False
        for sep in ("(+)", "+", "⊕"):
            if sep in t:
                a, b = t.split(sep, 1)
                if a.strip() != b.strip():
                    raise ValueError(f"unbalanced doubled ring {text!r}")
                t, doubled = a.strip(), True
                break
        conj = False
        if t.endswith("~") or t.endswith("̄") or t.endswith("¯"):
            conj, t = True, t[:-1]
        t = {"ℝ": "R", "ℂ": "C", "ℍ": "H"}.get(t, t)
        return StateRingTag(t, conj, doubled)


R = StateRingTag("R")
C = StateRingTag("C")
CBAR = StateRingTag("C", conjugated=True)
H = StateRingTag("H")
HBAR = StateRingTag("H", conjugated=True)

# The eleven printed rows of the K (x) K transition table, in printed order.
PRINTED_TRANSITIONS = (
    (R, R, R),
    (R, H, H),
    (H, R, H),
    (H, H, R),
    (C, R, C),
    (R, C, C),
    (C, H, C),
    (H, C, C),
    (C, C, C),
    (C, CBAR, R),
    (H, HBAR, R),
)


def ring_transition(k1: StateRingTag, k2: StateRingTag) -> StateRingTag:
    """K (x) K composition of state ring tags.

    Rules: a complex factor wins and keeps its orientation; two complex
    factors keep the common orientation or, when the orientations are
    opposite, contract to R; without complex factors the quaternionic parity
    adds mod 2 and the surviving H inherits the product of bars.
    """
    if k1.doubled or k2.doubled:
        raise ValueError("ring_transition composes undoubled tags only")
    c1, c2 = k1.base == "C", k2.base == "C"
    if c1 and c2:
        if k1.conjugated == k2.conjugated:
            return StateRingTag("C", k1.conjugated)
        return R
    if c1:
        return StateRingTag("C", k1.conjugated)
    if c2:
        return StateRingTag("C", k2.conjugated)
    h_parity = (k1.base == "H") ^ (k2.base == "H")
    if not h_parity:
        return R
    return StateRingTag("H", k1.conjugated ^ k2.conjugated)
