"""Exact linear algebra over Q and Q(i): incremental row echelon spans.

Vectors are dense lists of field scalars (Fraction or QC).  Pivoted rows are
normalized to leading coefficient 1, so membership reduction is a plain
back-substitution.  Everything is exact; ranks are never approximate.
"""

from __future__ import annotations


class Echelon:
    """Incremental reduced span of exact vectors."""

    def __init__(self, width: int):
        self.width = width
        self.rows = []        # normalized rows, ascending pivot column
        self.pivots = []      # pivot column per row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec):
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c:
                for j in range(piv, self.width):
                    if row[j]:
                        vec[j] = vec[j] - c * row[j]
        return vec

    def insert(self, vec):
        """Add `vec` to the span; returns the pivot column, or None if dependent."""
        vec = self._reduce(vec)
        for j in range(self.width):
            if vec[j]:
                inv = vec[j]
                vec = [x / inv for x in vec]
                at = 0
                while at < len(self.pivots) and self.pivots[at] < j:
                    at += 1
                self.rows.insert(at, vec)
                self.pivots.insert(at, j)
                return j
        return None

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))


def span_rank(vectors, width: int) -> int:
    ech = Echelon(width)
    for v in vectors:
        ech.insert(v)
    return ech.rank


def span_basis(mvs):
    """Reduce multivectors to a linearly independent sublist (same order)."""
    out = []
    ech = None
    for mv in mvs:
        if ech is None:
            ech = Echelon(mv.alg.dim)
        if ech.insert(mv.to_row()) is not None:
            out.append(mv)
    return out


def express(target, basis):
    """Coefficients c with target = sum c_i * basis_i, or None if not in span.

    `target` and `basis` are multivectors sharing one parent algebra.
    """
    if not basis:
        return None if target else []
    alg = basis[0].alg
    width = alg.dim
    ech = Echelon(width + len(basis))
    zero = alg.scalar(0)
    one = alg.scalar(1)
    for i, mv in enumerate(basis):
        row = mv.to_row() + [zero] * len(basis)
        row[width + i] = one
        piv = ech.insert(row)
        if piv is None or piv >= width:
            raise ValueError("basis vectors are linearly dependent")
    tail = [zero] * len(basis)
    red = ech._reduce(target.to_row() + tail)
    if any(red[:width]):
        return None
    return [-x for x in red[width:]]
