"""The cone of representation labels (l, l-dot) and its degree oracle.

A label is the factor-count pair (k, r) with l = k/2, l-dot = r/2.  The
closed-form degree is (k+1)(r+1); `sym_dimension_oracle` recomputes it as the
exact rank of the symmetrization projector on the full 2^(k+r)-dimensional
spintensor space, with no reference to the formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exactla import Echelon

ORACLE_CAP = 8  # the projector space is 2^(k+r)-dimensional


class ReprLabel(NamedTuple):
    k: int
    r: int

    @property
    def l(self):
        return Fraction(self.k, 2)

    @property
    def ldot(self):
        return Fraction(self.r, 2)

    @property
    def spin(self):
        return Fraction(abs(self.k - self.r), 2)

    def __str__(self):
        return f"({self.l},{self.ldot})"


def degree(label, r=None) -> int:
    """dim Sym_(k,r) = (k+1)(r+1)."""
    k, r = (label, r) if r is not None else (label.k, label.r)
    if k < 0 or r < 0:
        raise ValueError("labels are non-negative")
    return (k + 1) * (r + 1)


def _orbit(word, k, r):
    """Closure of an index word under the block transpositions of S_k x S_r."""
    swaps = [(i, i + 1) for i in range(k - 1)]
    swaps += [(k + i, k + i + 1) for i in range(r - 1)]
    seen = {word}
    frontier = [word]
    while frontier:
        w = frontier.pop()
        for i, j in swaps:
            lw = list(w)
            lw[i], lw[j] = lw[j], lw[i]
            t = tuple(lw)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return seen


def sym_dimension_oracle(k: int, r: int) -> int:
    """Exact rank of the (S_k x S_r)-symmetrizer on (C^2)^(x)(k+r).

    Brute force: apply the projector to every basis spintensor (each image is
    the uniform average over the permutation orbit of its index word) and
    row-reduce.  Capped at k + r <= 8.
    """
    if k < 0 or r < 0:
        raise ValueError("labels are non-negative")
    m = k + r
    if m > ORACLE_CAP:
        raise ValueError(f"oracle capped at k+r <= {ORACLE_CAP}")
    dim = 1 << m
    words = [tuple((w >> i) & 1 for i in range(m)) for w in range(dim)]
    pos = {w: i for i, w in enumerate(words)}
    ech = Echelon(dim)
    rank = 0
    for w in words:
        orb = _orbit(w, k, r)
        coeff = Fraction(1, len(orb))
        row = [Fraction(0)] * dim
        for t in orb:
            row[pos[t]] += coeff
        if ech.insert(row) is not None:
            rank += 1
    return rank


@dataclass(frozen=True)
class ConeRow:
    label: ReprLabel
    spin: Fraction
    statistics: str
    degree: int
    mass: Fraction


def enumerate_cone(max_m: int, m_e=1) -> list:
    """All labels with k + r <= max_m, grouped by spin line.

    Rows are sorted by (spin line, total factor count, k); each (k, r) is
    emitted once with its unsigned spin line, degree, parity and mass.
    """
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    m_e = Fraction(m_e)
    rows = []
    for m in range(max_m + 1):
        for k in range(m + 1):
            r = m - k
            lab = ReprLabel(k, r)
            mass = m_e * (lab.l + Fraction(1, 2)) * (lab.ldot + Fraction(1, 2))
            rows.append(ConeRow(lab, lab.spin,
                                "fermion" if m % 2 else "boson",
                                degree(lab), mass))
    rows.sort(key=lambda row: (row.spin, row.label.k + row.label.r, row.label.k))
    return rows
