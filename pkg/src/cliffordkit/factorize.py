"""Tensor factorization of Cl(p,q) into two-dimensional factors, and friends.

The tensor product here is the plain (ungraded) one: basis keys of
A_1 (x) ... (x) A_m are tuples of factor blade masks, multiplied
component-wise with no cross signs.  The volume-element twists of the
factorization theorem live entirely in the witness generators

    X[i,j] = w_1 (x) ... (x) w_{i-1} (x) g_j (x) 1 (x) ... (x) 1,

which anticommute pairwise because each preceding volume element w_l of an
even factor anticommutes with that factor's generators.  A factor chain is
accepted only after its witness is verified exactly: correct squares,
pairwise anticommutation, and full span (the 2^n subset products hit 2^n
distinct basis keys).

`karoubi_factorize` peels factors greedily - (2,0) while p >= 2, else (1,1),
else (0,2) - flipping the remaining signature after each negative factor
(omega^2 = -1).  This reproduces every first-printed chain of the source
tables for m = 2..5; the printed alternatives are kept in PAPER_CHAINS and
verified as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .core import (CliffordAlgebra, Multivector, QC, Signature, as_signature,
                   blade_name, clifford, grade)
from .rings import RingTag, StateRingTag, ring_transition

TWO_DIM_FACTORS = (Signature(2, 0), Signature(1, 1), Signature(0, 2))
FACTOR_RINGS = {Signature(2, 0): StateRingTag("R"),
                Signature(1, 1): StateRingTag("R"),
                Signature(0, 2): StateRingTag("H")}


class IsoError(RuntimeError):
    """A claimed isomorphism failed verification; .reason names the violation."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class TensorAlgebra:
    """Plain tensor product of Clifford algebras over a common base field."""

    is_clifford = False

    def __init__(self, factors):
        self.factors = tuple(factors)
        self.field = "C" if any(f.field == "C" for f in self.factors) else "R"
        self.n = sum(f.n for f in self.factors)
        self.dim = 1
        for f in self.factors:
            self.dim *= f.dim
        if self.dim > 1 << 12:
            raise ValueError("tensor algebra dimension exceeds the 2^12 cap")
        self.basis = tuple(iproduct(*(f.basis for f in self.factors)))
        self.index = {k: i for i, k in enumerate(self.basis)}
        self.unit_key = (0,) * len(self.factors)

    def __repr__(self):
        return " (x) ".join(repr(f) for f in self.factors)

    def mul_key(self, a, b):
        sign = 1
        key = []
        for f, ka, kb in zip(self.factors, a, b):
            k, s = f.mul_key(ka, kb)
            key.append(k)
            sign *= s
        return tuple(key), sign

    def square_sign(self, a):
        return self.mul_key(a, a)[1]

    def keys_commute(self, a, b):
        return self.mul_key(a, b)[1] == self.mul_key(b, a)[1]

    def key_xor(self, a, b):
        return tuple(x ^ y for x, y in zip(a, b))

    def key_grade(self, a):
        return sum(grade(m) for m in a)

    def key_name(self, a):
        return "(x)".join(blade_name(m) for m in a)

    def generator_keys(self):
        out = []
        at = 0
        for f in self.factors:
            for i in range(f.n):
                key = [0] * len(self.factors)
                key[at] = 1 << i
                out.append(tuple(key))
            at += 1
        return out

    def scalar(self, x):
        if self.field == "C":
            return x if isinstance(x, QC) else QC(x)
        return Fraction(x)

    def mv(self, coeffs):
        return Multivector(self, {k: v for k, v in coeffs.items() if v})

    def blade(self, key, coeff=1):
        return self.mv({tuple(key): self.scalar(coeff)})

    def zero(self):
        return Multivector(self, {})

    def one(self):
        return self.blade(self.unit_key)

    def pure(self, *parts):
        """Tensor product of one multivector per factor."""
        if len(parts) != len(self.factors):
            raise ValueError("one part per factor required")
        out = {self.unit_key: self.scalar(1)}
        for at, (f, mv) in enumerate(zip(self.factors, parts)):
            if mv.alg is not f:
                raise ValueError(f"part {at} belongs to {mv.alg!r}, not {f!r}")
            nxt = {}
            for key, v in out.items():
                for m, c in mv.c.items():
                    k2 = key[:at] + (m,) + key[at + 1:]
                    nxt[k2] = nxt.get(k2, 0) + v * c
            out = nxt
        return self.mv(out)

    def embed(self, at, mv):
        """mv in factor `at`, tensored with 1 elsewhere."""
        parts = [f.one() for f in self.factors]
        parts[at] = mv
        return self.pure(*parts)


@lru_cache(maxsize=None)
def _tensor_cached(algebras):
    return TensorAlgebra(algebras)


def tensor_algebra(factors) -> TensorAlgebra:
    algs = tuple(f if isinstance(f, CliffordAlgebra) else clifford(as_signature(f))
                 for f in factors)
    return _tensor_cached(algs)


@dataclass
class TensorWitness:
    """Verified generator images of `target` inside the tensor algebra.

    images[i] realizes target generator e_{i+1}; all Clifford relations and
    the full-span condition have been checked exactly.
    """

    target: Signature
    factors: tuple
    tensor: TensorAlgebra
    images: tuple


def _candidate_images(ta, twist_left: bool):
    """Mutually anticommuting single-blade images, one per factor generator.

    Each generator is dressed with the volume elements of the preceding
    factors (twist_left) or of the following ones; either way the dressed
    images anticommute provided the dressing factors are even-dimensional.
    """
    if twist_left:
        if any(f.n % 2 for f in ta.factors[:-1]):
            raise IsoError("odd-dimensional factor cannot carry a left twist")
    else:
        if any(f.n % 2 for f in ta.factors[1:]):
            raise IsoError("odd-dimensional factor cannot carry a right twist")
    images = []
    for at, f in enumerate(ta.factors):
        for j in range(1, f.n + 1):
            parts = [g.one() for g in ta.factors]
            parts[at] = f.gen(j)
            dress = range(at) if twist_left else range(at + 1, len(ta.factors))
            for l in dress:
                parts[l] = ta.factors[l].blade(ta.factors[l].volume_key)
            images.append(ta.pure(*parts))
    return images


def _sort_by_square(ta, images, target):
    plus, minus = [], []
    for img in images:
        sq = img * img
        if sq == ta.one():
            plus.append(img)
        elif sq == -ta.one():
            minus.append(img)
        else:
            raise IsoError("a generator image has a non-scalar square")
    if len(plus) != target.p or len(minus) != target.q:
        raise IsoError(
            f"square multiset mismatch: got {len(plus)} plus / {len(minus)} "
            f"minus, target {target} needs {target.p}/{target.q}")
    return plus + minus


def verify_tensor_iso(target, factors) -> TensorWitness:
    """Construct and verify Cl(target) ~ factor_1 (x) ... (x) factor_m.

    Tries the volume twist on the left first, then on the right (the tensor
    product is symmetric but the twisted witness is not).  Raises IsoError
    naming the violated condition.
    """
    target = as_signature(target)
    sigs = [as_signature(f) for f in factors]
    if sum(s.n for s in sigs) != target.n:
        raise IsoError(f"dimension mismatch: {target} vs {sigs}")
    ta = tensor_algebra(sigs)
    images = None
    errors = []
    for twist_left in (True, False):
        try:
            images = _sort_by_square(ta, _candidate_images(ta, twist_left), target)
            break
        except IsoError as e:
            errors.append(e.reason)
    if images is None:
        raise IsoError("; ".join(errors))
    n = target.n
    for i in range(n):
        for j in range(i + 1, n):
            if images[i] * images[j] + images[j] * images[i]:
                raise IsoError(f"images {i + 1} and {j + 1} do not anticommute")
    # span: subset products of single-key images must hit 2^n distinct keys
    keys = {ta.unit_key}
    prods = [ta.one()]
    for img in images:
        prods = prods + [x * img for x in prods]
    for x in prods:
        (k, _v), = x.c.items()
        keys.add(k)
    if len(keys) != 1 << n:
        raise IsoError("images do not generate the full tensor algebra")
    return TensorWitness(target, tuple(sigs), ta, tuple(images))


@dataclass
class FactorChain:
    """Karoubi chain of two-dimensional factors with its verified witness."""

    target: Signature
    factors: tuple
    witness: TensorWitness

    @property
    def ring_trace(self):
        """Factor rings in order, as folded by the K (x) K transitions."""
        return tuple(FACTOR_RINGS[s] for s in self.factors)

    def folded_ring(self) -> StateRingTag:
        tags = self.ring_trace
        acc = StateRingTag("R")
        for t in tags:
            acc = ring_transition(acc, t)
        return acc


def karoubi_factor_signatures(sig):
    """The greedy factor chain for even-dimensional Cl(p,q), no verification."""
    sig = as_signature(sig)
    if sig.n % 2:
        raise ValueError("factorization peels pairs: p+q must be even "
                         "(odd algebras go through split_semisimple or the "
                         "even-subalgebra isomorphism)")
    p, q = sig.p, sig.q
    chain = []
    while p + q:
        if p >= 2:
            chain.append(Signature(2, 0))
            p, q = q, p - 2      # negative factor: flip remaining Q
        elif p >= 1 and q >= 1:
            chain.append(Signature(1, 1))
            p, q = p - 1, q - 1  # positive factor: keep Q
        else:
            chain.append(Signature(0, 2))
            p, q = q - 2, p      # negative factor: flip remaining Q
    return tuple(chain)


def karoubi_factorize(sig) -> FactorChain:
    """Factor Cl(p,q) (even p+q) into {(2,0),(1,1),(0,2)} with verified witness."""
    sig = as_signature(sig)
    chain = karoubi_factor_signatures(sig)
    witness = verify_tensor_iso(sig, chain)  # must never fail: internal error
    return FactorChain(sig, chain, witness)


# Every explicitly printed chain of the m = 2..5 factorization tables,
# including the alternatives, with the printed arrow target ring.
PAPER_CHAINS = {
    (4, 0): [(((2, 0), (0, 2)), "H")],
    (3, 1): [(((2, 0), (1, 1)), "R")],
    (2, 2): [(((2, 0), (2, 0)), "R")],
    (1, 3): [(((1, 1), (0, 2)), "H")],
    (0, 4): [(((0, 2), (2, 0)), "H")],
    (6, 0): [(((2, 0), (0, 2), (2, 0)), "H")],
    (5, 1): [(((2, 0), (1, 1), (0, 2)), "H")],
    (4, 2): [(((2, 0), (2, 0), (2, 0)), "R"),
             (((1, 1), (2, 0), (1, 1)), "R"),
             (((0, 2), (0, 2), (2, 0)), "R")],
    (3, 3): [(((2, 0), (2, 0), (1, 1)), "R"),
             (((0, 2), (1, 1), (0, 2)), "R")],
    (2, 4): [(((2, 0), (2, 0), (0, 2)), "H"),
             (((1, 1), (1, 1), (0, 2)), "H")],
    (1, 5): [(((1, 1), (0, 2), (2, 0)), "H")],
    (0, 6): [(((0, 2), (2, 0), (0, 2)), "R")],
    (8, 0): [(((2, 0), (0, 2), (2, 0), (0, 2)), "R")],
    (7, 1): [(((2, 0), (1, 1), (0, 2), (2, 0)), "H")],
    (6, 2): [(((2, 0), (2, 0), (2, 0), (0, 2)), "H"),
             (((1, 1), (2, 0), (1, 1), (0, 2)), "H"),
             (((0, 2), (0, 2), (2, 0), (0, 2)), "H")],
    (5, 3): [(((2, 0), (2, 0), (2, 0), (1, 1)), "R")],
    (4, 4): [(((2, 0), (2, 0), (2, 0), (2, 0)), "R"),
             (((1, 1), (2, 0), (2, 0), (1, 1)), "R"),
             (((0, 2), (2, 0), (2, 0), (0, 2)), "R")],
    (3, 5): [(((2, 0), (2, 0), (1, 1), (0, 2)), "H")],
    (2, 6): [(((2, 0), (2, 0), (0, 2), (2, 0)), "H"),
             (((1, 1), (1, 1), (0, 2), (2, 0)), "H")],
    (1, 7): [(((1, 1), (0, 2), (2, 0), (0, 2)), "R")],
    (0, 8): [(((0, 2), (2, 0), (0, 2), (2, 0)), "R")],
    (10, 0): [(((2, 0), (0, 2), (2, 0), (0, 2), (2, 0)), "R")],
}


@dataclass
class SemisimpleSplit:
    """Central projectors lambda+- and the factor signature Cl(q,p-1).

    For omega^2 = +1 (p-q = 1,5 mod 8) the projectors are real; for
    omega^2 = -1 (p-q = 3,7 mod 8) the algebra is simple over R and the split
    lives in the complexification, with lambda+- = (1 +- i*omega)/2.
    """

    sig: Signature
    lambda_plus: Multivector
    lambda_minus: Multivector
    factor: Signature
    complexified: bool


def split_semisimple(sig) -> SemisimpleSplit:
    sig = as_signature(sig)
    if sig.n % 2 == 0:
        raise ValueError("split_semisimple requires odd p+q")
    real = clifford(sig.p, sig.q)
    w2 = real.square_sign(real.volume_key)
    if w2 == 1:
        alg = real
        omega = alg.blade(alg.volume_key)
        complexified = False
    else:
        alg = clifford(sig.p, sig.q, "C")
        omega = alg.i() * alg.blade(alg.volume_key)
        complexified = True
    half = alg.scalar(1) / 2
    lp = (alg.one() + omega) * half
    lm = (alg.one() - omega) * half
    assert lp * lp == lp and lm * lm == lm and not (lp * lm)
    if sig.p >= 1:
        factor = Signature(sig.q, sig.p - 1)
    else:
        factor = Signature(0, sig.q - 1)
    return SemisimpleSplit(sig, lp, lm, factor, complexified)


@dataclass
class EvenIsoWitness:
    """Verified images of Cl(q,p-1) generators inside the even part of Cl(p,q)."""

    source: Signature
    target: Signature
    images: tuple


def even_subalgebra_iso(sig) -> EvenIsoWitness:
    """The isomorphism Cl+(p,q) ~ Cl(q,p-1), by explicit degree-2 images.

    Generators of the target map to e_1 e_j products: j > p gives the q
    positive squares, 2 <= j <= p the p-1 negative ones.
    """
    sig = as_signature(sig)
    if sig.p < 1:
        raise ValueError("even_subalgebra_iso requires p >= 1")
    alg = clifford(sig.p, sig.q)
    target = Signature(sig.q, sig.p - 1)
    e1 = alg.gen(1)
    images = [e1 * alg.gen(sig.p + j) for j in range(1, sig.q + 1)]
    images += [e1 * alg.gen(1 + i) for i in range(1, sig.p)]
    _verify_generator_images(alg, target, images, even_only=True)
    return EvenIsoWitness(sig, target, tuple(images))


@dataclass
class DoublingWitness:
    """Verified iso C (x) Cl(q,p-1) ~ Cl(p,q) with i realized as omega."""

    target: Signature
    factor: Signature
    images: tuple
    i_image: Multivector


def complex_doubling_iso(sig) -> DoublingWitness:
    """Realize Cl(p,q) (odd n, omega^2 = -1) as the complexification of
    Cl(q,p-1): the center {1, omega} plays the field C.
    """
    sig = as_signature(sig)
    alg = clifford(sig.p, sig.q)
    if sig.n % 2 == 0 or alg.square_sign(alg.volume_key) != -1:
        raise IsoError(f"{sig}: need odd p+q with omega^2 = -1")
    omega = alg.blade(alg.volume_key)
    ev = even_subalgebra_iso(sig)
    images = ev.images
    for img in images:
        if img * omega != omega * img:
            raise IsoError("omega is not central")  # cannot happen
    # span over R: even-part products times {1, omega} must fill 2^n keys
    keys = set()
    prods = [alg.one()]
    for img in images:
        prods = prods + [x * img for x in prods]
    for x in prods:
        (k, _v), = x.c.items()
        keys.add(k)
        (k2, _v2), = (omega * x).c.items()
        keys.add(k2)
    if len(keys) != alg.dim:
        raise IsoError("doubling images do not span the algebra")
    return DoublingWitness(sig, ev.target, images, omega)


def _verify_generator_images(alg, target, images, even_only=False):
    if len(images) != target.n:
        raise IsoError("wrong number of generator images")
    one = alg.one()
    for i, img in enumerate(images):
        want = one if i < target.p else -one
        if img * img != want:
            raise IsoError(f"image {i + 1} squares to the wrong sign for {target}")
        if even_only and any(grade(k) % 2 for k in img.c):
            raise IsoError(f"image {i + 1} is not even")
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] * images[j] + images[j] * images[i]:
                raise IsoError(f"images {i + 1}, {j + 1} do not anticommute")
    keys = set()
    prods = [one]
    for img in images:
        prods = prods + [x * img for x in prods]
    for x in prods:
        (k, _v), = x.c.items()
        keys.add(k)
    want_dim = alg.dim // 2 if even_only else alg.dim
    if len(keys) != want_dim:
        raise IsoError("generator images do not span the expected subalgebra")


def complexify(sig) -> CliffordAlgebra:
    """C (x) Cl(p,q): same blades, complex-rational coefficients."""
    sig = as_signature(sig)
    return clifford(sig.p, sig.q, "C")


def tensor_division_ring(factors) -> RingTag:
    """Division ring of a verified plain tensor of Clifford algebras."""
    from .classify import division_ring_of
    return division_ring_of(tensor_algebra(factors))
