"""Mod-8 classification of Cl(p,q) and its independent linear-algebra oracle.

`classify` is the closed-form type table: the division ring depends only on
(p-q) mod 8 and the matrix rank follows from the dimension identity
2^(p+q) = rank^2 * dim_R(ring) (doubled rings contribute twice the half-ring).

`division_ring_oracle` recomputes the ring with no reference to that table:
it builds a primitive idempotent f, spans f*Cl*f exactly, and certifies the
result by dimension plus explicit sign witnesses (an element of negative
square for C, an anticommuting pair of negative squares for H, which also
rules out the 4-dimensional impostor Mat_2(R)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Multivector, as_signature, clifford
from .exactla import express
from .ideals import (OracleFailure, candidate_element, find_square_set,
                     idempotent_factor_count, idempotent_from_factors,
                     max_commuting_square_set, ring_basis)
from .rings import RingTag

_RING_BY_MOD8 = {
    0: RingTag.R, 1: RingTag.RR, 2: RingTag.R, 3: RingTag.C,
    4: RingTag.H, 5: RingTag.HH, 6: RingTag.H, 7: RingTag.C,
}
_LOG2_DIM = {RingTag.R: 0, RingTag.C: 1, RingTag.H: 2,
             RingTag.RR: 1, RingTag.HH: 3}

# Display aliases for the three two-dimensional building blocks
# (Rosenfeld's terminology); ring-theoretic data is what the code exposes.
DISPLAY_ALIASES = {
    (0, 2): "quaternion algebra",
    (2, 0): "anti-quaternion algebra",
    (1, 1): "pseudo-quaternion algebra",
}


@dataclass(frozen=True)
class AlgebraType:
    mod8_class: int
    ring: RingTag
    matrix_rank: int
    simple: bool

    def __str__(self):
        if self.ring.doubled:
            half = str(self.ring.base)
            if self.matrix_rank > 1:
                half = f"{half}({self.matrix_rank})"
            return f"{half}(+){half}"
        r = str(self.ring)
        return f"{r}({self.matrix_rank})" if self.matrix_rank > 1 else r


def classify(sig) -> AlgebraType:
    """Type of Cl(p,q) over R from the mod-8 table."""
    sig = as_signature(sig)
    m8 = (sig.p - sig.q) % 8
    ring = _RING_BY_MOD8[m8]
    # 2^n = rank^2 * dim_R(ring); doubled tags already carry both blocks
    exp = sig.n - _LOG2_DIM[ring]
    assert exp % 2 == 0, "dimension identity violated"
    return AlgebraType(m8, ring, 1 << (exp // 2), m8 not in (1, 5))


@dataclass(frozen=True)
class ComplexAlgebraType:
    """Type of the complexified algebra C (x) Cl(p,q): depends only on n mod 2."""

    n: int
    matrix_rank: int
    simple: bool

    def __str__(self):
        if self.simple:
            return f"C({self.matrix_rank})"
        return f"C({self.matrix_rank})(+)C({self.matrix_rank})"


def classify_complex(n: int) -> ComplexAlgebraType:
    if n % 2 == 0:
        return ComplexAlgebraType(n, 1 << (n // 2), True)
    return ComplexAlgebraType(n, 1 << ((n - 1) // 2), False)


def omega_square_sign(sig) -> int:
    """Sign of omega^2 for even p+q: +1 iff p-q = 0,4 (mod 8).

    The rule is cross-checked against the direct product computation on every
    call; a mismatch would be an internal error.
    """
    sig = as_signature(sig)
    if sig.n % 2:
        raise ValueError("omega_square_sign requires even p+q")
    alg = clifford(sig.p, sig.q)
    computed = alg.square_sign(alg.volume_key)
    rule = 1 if (sig.p - sig.q) % 8 in (0, 4) else -1
    assert computed == rule, "omega^2 rule disagrees with direct computation"
    return computed


def central_split_key(alg):
    """A central non-scalar basis element squaring to +1, or None.

    Its presence makes the algebra split as a direct sum (semisimple over its
    base field); (1 +- z)/2 are then the central projectors.
    """
    gen_keys = [1 << i for i in range(alg.n)] if alg.is_clifford else None
    if gen_keys is None:
        gen_keys = alg.generator_keys()
    for k in alg.basis[1:]:
        if alg.square_sign(k) == 1 and all(alg.keys_commute(k, g) for g in gen_keys):
            return k
    return None


def division_tag_of_idempotent(alg, f: Multivector) -> str:
    """Base tag 'R' | 'C' | 'H' of f*Cl*f, certified by sign witnesses."""
    basis = ring_basis(f)
    d = len(basis)
    if alg.field == "C":
        if d == 1:
            return "C"
        raise OracleFailure(f"complexified ring dimension {d} not 1")
    if d == 1:
        return "R"
    if d == 2:
        x = basis[1]
        gamma = _pure_square(f, x)
        if gamma < 0:
            return "C"
        raise OracleFailure(f"2-dim ring with non-negative pure square {gamma}")
    if d == 4:
        u = _pure_part(f, basis[1])
        a = _coeff_of(f, u * u)
        if a >= 0:
            raise OracleFailure("4-dim ring: first pure square not negative")
        for cand in basis[2:]:
            v = _pure_part(f, cand)
            s = _coeff_of(f, u * v + v * u)
            v = v - (s / (2 * a)) * u
            if u * v + v * u:
                raise OracleFailure("4-dim ring: could not anticommutize")
            b = _coeff_of(f, v * v)
            if v and b < 0:
                return "H"
        raise OracleFailure("4-dim ring without a second negative square")
    raise OracleFailure(f"ring dimension {d} not in {{1, 2, 4}}")


def _coeff_of(f, x):
    """Coefficient gamma with x = gamma * f, else OracleFailure."""
    co = express(x, [f])
    if co is None:
        raise OracleFailure("element escapes span{f}")
    return co[0]


def _pure_part(f, x):
    # remove the f-component so the square lands back in span{f}
    co = express(x * x, [f, x])
    if co is None:
        raise OracleFailure("x^2 escapes span{f, x}")
    alpha, beta = co
    return x - (beta / 2) * f


def _pure_square(f, x):
    xt = _pure_part(f, x)
    return _coeff_of(f, xt * xt)


def division_ring_oracle(sig, exhaustive: bool = False) -> RingTag:
    """Recompute the division ring of Cl(p,q) by exact span, table-free.

    Default path: k factors from the Radon-Hurwitz count, lexicographic
    factor search, then span of f*Cl*f with sign certification.  With
    `exhaustive=True` the factor count itself is re-derived by the
    brute-force maximum search (slower, fully independent).
    """
    sig = as_signature(sig)
    alg = clifford(sig.p, sig.q)
    if exhaustive:
        k, cands = max_commuting_square_set(alg)
    else:
        k = idempotent_factor_count(sig)
        cands = find_square_set(alg, k)
    return division_ring_of(alg, cands)


def division_ring_of(alg, cands=None) -> RingTag:
    """Division ring tag of a blade-indexed algebra (Clifford or tensor).

    Semisimple algebras (a central +1-square present) report the doubled tag
    of one factor, matching the lambda+- split.
    """
    if cands is None:
        k, cands = max_commuting_square_set(alg)
    f = idempotent_from_factors(
        alg, [candidate_element(alg, c) for c in cands]).element
    base = division_tag_of_idempotent(alg, f)
    tag = {"R": RingTag.R, "C": RingTag.C, "H": RingTag.H}[base]
    if central_split_key(alg) is not None:
        return RingTag.doubled_of(tag)
    return tag
