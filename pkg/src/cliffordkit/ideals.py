"""Primitive idempotents, minimal left ideals, and Radon-Hurwitz counting.

A primitive idempotent of Cl(p,q) is built as f = prod_i (1 + T_i)/2 from k
pairwise-commuting, independent basis elements T_i squaring to +1, where
k = q - r_{q-p} and r is the period-8 Radon-Hurwitz sequence.  The base values
of r are not taken on faith: `max_commuting_square_set` re-derives them by
exhaustive search (see tests and scripts/derive_radon_hurwitz.py), and the
frozen table below is regression-checked against that oracle.

The search machinery works for any blade-indexed algebra (Clifford or plain
tensor products of Clifford algebras): a candidate set is valid iff the masks
are F2-linearly independent and pairwise commuting, which already rules out
-1 from the generated group, hence f != 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CliffordAlgebra, Multivector, QC_I, as_signature, clifford
from .exactla import Echelon, span_basis

# Frozen from the brute-force derivation over all signatures with p+q <= 8.
RADON_HURWITZ_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


class SearchError(RuntimeError):
    """No commuting +1-square set of the requested size exists."""


class OracleFailure(RuntimeError):
    """The computed ring f*Cl*f has an impossible shape (idempotent bug)."""


def radon_hurwitz(i: int) -> int:
    """r_i extended by r_{i+8} = r_i + 4 in both directions."""
    return RADON_HURWITZ_BASE[i % 8] + 4 * ((i - (i % 8)) // 8)


def idempotent_factor_count(sig) -> int:
    """k = q - r_{q-p}, the number of commuting (1+T)/2 factors."""
    sig = as_signature(sig)
    return sig.q - radon_hurwitz(sig.q - sig.p)


def complex_factor_count(n: int) -> int:
    # complexified algebras: minimal ideal has complex dimension 2^(n - k)
    return (n + 1) // 2


def _algebra(alg, field="R"):
    if isinstance(alg, CliffordAlgebra) or hasattr(alg, "mul_key"):
        return alg
    sig = as_signature(alg)
    return clifford(sig.p, sig.q, field)


# ---------------------------------------------------------------------------
# candidate machinery
#
# A candidate is (key, imag): the basis element `key`, multiplied by i when
# imag is set (complexified algebras only), chosen so its square is +1.

def square_candidates(alg, phases: bool = False):
    out = []
    for k in alg.basis[1:]:
        s = alg.square_sign(k)
        if s == 1:
            out.append((k, False))
        elif phases and s == -1:
            out.append((k, True))  # (i*k)^2 = -k^2 = +1
    return out


def candidate_element(alg, cand) -> Multivector:
    key, imag = cand
    return alg.blade(key, QC_I if imag else 1)


def _adjacency(alg, cands):
    n = len(cands)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if alg.keys_commute(cands[i][0], cands[j][0]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def find_square_set(alg, k: int, phases: bool = False):
    """Lexicographically smallest set of k commuting independent +1-squares.

    Candidates follow the canonical (grade, mask) basis order (each key is
    i-phased exactly when its square is -1).  Returns a list of candidates;
    raises SearchError when no set of size k exists (a wrong k would).
    """
    alg = _algebra(alg)
    if k == 0:
        return []
    cands = square_candidates(alg, phases)
    adj = _adjacency(alg, cands)
    full = (1 << len(cands)) - 1

    def rec(chosen, span, candmask, start):
        if len(chosen) == k:
            return list(chosen)
        m = candmask >> start << start
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            key = cands[i][0]
            if key in span:
                continue
            new_span = span | {alg.key_xor(key, s) for s in span} | {key}
            chosen.append(cands[i])
            got = rec(chosen, new_span, candmask & adj[i], i + 1)
            if got is not None:
                return got
            chosen.pop()
        return None

    got = rec([], set(), full, 0)
    if got is None:
        raise SearchError(f"no commuting +1-square set of size {k} in {alg!r}")
    return got


def max_commuting_square_set(alg):
    """Exhaustive maximum over independent pairwise-commuting +1-square sets.

    Enumerates each totally-singular F2-subspace exactly once via canonical
    generator chains, so the maximum is exact.  Real algebras only.
    Returns (k, candidate list).
    """
    alg = _algebra(alg)
    cands = [c[0] for c in square_candidates(alg, phases=False)]
    idx = {k: i for i, k in enumerate(cands)}
    m = len(cands)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if alg.keys_commute(cands[i], cands[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best_k, best = 0, []

    def rec(gens, span, candmask, start):
        nonlocal best_k, best
        if len(gens) > best_k:
            best_k, best = len(gens), list(gens)
        mm = candmask >> start << start
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            key = cands[i]
            if key in span:
                continue
            coset = [alg.key_xor(key, s) for s in span]
            # canonical chains only: the new generator must open its coset
            if any(idx[c] < i for c in coset):
                continue
            gens.append(key)
            rec(gens, span | set(coset) | {key}, candmask & adj[i], i + 1)
            gens.pop()

    rec([], set(), (1 << m) - 1, 0)
    return best_k, [(k, False) for k in best]


@dataclass(frozen=True)
class Idempotent:
    """f = prod (1 + T_i)/2 together with its commuting factor blades T_i."""

    element: Multivector
    factors: tuple

    @property
    def alg(self):
        return self.element.alg

    def __str__(self):
        if not self.factors:
            return "1"
        return "".join(f"(1/2)(1 + {t})" for t in self.factors)


def idempotent_from_factors(alg, factors) -> Idempotent:
    """Build prod (1+T)/2 from multivector factors, verifying f^2 = f."""
    alg = _algebra(alg)
    f = alg.one()
    half = alg.scalar(1) / 2
    for t in factors:
        f = f * ((alg.one() + t) * half)
    if (not f) or f * f != f:
        raise ValueError("factors do not yield a nonzero idempotent")
    return Idempotent(f, tuple(factors))


def primitive_idempotent(sig, field: str = "R") -> Idempotent:
    """Canonical primitive idempotent of Cl(p,q) (or its complexification).

    Deterministic: the factor set is the lexicographically smallest in the
    (grade, mask) blade order.  The printed choices of the source material,
    where they differ, live in `paper_idempotents`.
    """
    alg = _algebra(sig, field)
    if alg.field == "C":
        k = complex_factor_count(alg.n)
        cands = find_square_set(alg, k, phases=True)
    else:
        k = idempotent_factor_count(alg.sig)
        cands = find_square_set(alg, k, phases=False)
    return idempotent_from_factors(alg, [candidate_element(alg, c) for c in cands])


@dataclass
class LeftIdealBasis:
    """Exact basis of Cl*f (row-reduced), with the ideal's dimension."""

    idempotent: Idempotent
    basis: list

    @property
    def dimension(self) -> int:
        """Dimension over the algebra's base field (R or C)."""
        return len(self.basis)


def left_ideal_basis(f) -> LeftIdealBasis:
    """Row-reduce { blade * f : all basis blades } exactly."""
    if isinstance(f, Multivector):
        f = Idempotent(f, ())
    alg = f.alg
    fe = f.element
    rows = [alg.blade(k) * fe for k in alg.basis]
    return LeftIdealBasis(f, span_basis(rows))


def ring_basis(f) -> list:
    """Exact basis of f*Cl*f (the division ring of f when f is primitive)."""
    if isinstance(f, Multivector):
        f = Idempotent(f, ())
    alg = f.alg
    fe = f.element
    out = []
    ech = Echelon(alg.dim)
    for k in alg.basis:
        x = fe * alg.blade(k) * fe
        if x and ech.insert(x.to_row()) is not None:
            out.append(x)
            if len(out) > 8:
                break  # hopeless; caller reports failure
    return out


def expected_ideal_dimension(alg) -> int:
    if alg.field == "C":
        return 1 << (alg.n - complex_factor_count(alg.n))
    return 1 << (alg.n - idempotent_factor_count(alg.sig))


def is_primitive(f) -> bool:
    """Certify minimality: ideal dimension 2^(n-k) and a division-ring f*Cl*f."""
    if isinstance(f, Multivector):
        f = Idempotent(f, ())
    alg = f.alg
    fe = f.element
    if not fe or fe * fe != fe:
        return False
    if left_ideal_basis(f).dimension != expected_ideal_dimension(alg):
        return False
    from .classify import division_tag_of_idempotent
    try:
        division_tag_of_idempotent(alg, fe)
    except OracleFailure:
        return False
    return True


def spinor_dimension(f) -> int:
    """Ideal dimension over the division ring f*Cl*f (the spinspace dimension)."""
    if isinstance(f, Multivector):
        f = Idempotent(f, ())
    from .classify import division_tag_of_idempotent
    tag = division_tag_of_idempotent(f.alg, f.element)
    per = {"R": 1, "C": 2, "H": 4}[tag] if f.alg.field == "R" else 1
    return left_ideal_basis(f).dimension // per


def paper_idempotents() -> dict:
    """The idempotents printed in the source material, as certified objects.

    Keys: 'f20', 'f11', 'f02', 'f24' (real), plus both readings of the
    de Sitter idempotent: 'f41_complex' (written with an explicit i) and
    'f41_real' (the same element with i realized as the central volume
    element; see `realify`).
    """
    out = {}
    a20 = clifford(2, 0)
    out["f20"] = idempotent_from_factors(a20, [a20.gen(1)])
    a11 = clifford(1, 1)
    out["f11"] = idempotent_from_factors(a11, [a11.blade(0b11)])
    a02 = clifford(0, 2)
    out["f02"] = idempotent_from_factors(a02, [])
    a24 = clifford(2, 4)
    out["f24"] = idempotent_from_factors(
        a24, [a24.blade(0b010001), a24.blade(0b100010)])
    c41 = clifford(4, 1, "C")
    out["f41_complex"] = idempotent_from_factors(
        c41, [c41.gen(1), c41.blade(0b00110, QC_I)])
    a41 = clifford(4, 1)
    omega = a41.blade(a41.volume_key)
    out["f41_real"] = idempotent_from_factors(
        a41, [a41.gen(1), omega * a41.blade(0b00110)])
    return out


def realify(mv: Multivector) -> Multivector:
    """Send a+bi coefficients to a + b*omega in the real algebra (odd n, w^2=-1).

    This is the inverse leg of the center identification Z = {1, omega} = C
    that the complexified idempotent forms rely on.
    """
    alg = mv.alg
    if alg.field != "C":
        raise ValueError("realify expects a complexified algebra element")
    real = clifford(alg.sig.p, alg.sig.q)
    if real.n % 2 == 0 or real.square_sign(real.volume_key) != -1:
        raise ValueError("realify needs odd n with omega^2 = -1")
    omega = real.blade(real.volume_key)
    out = real.zero()
    for k, v in mv.c.items():
        b = real.blade(k)
        out = out + b * v.re + (omega * b) * v.im
    return out
