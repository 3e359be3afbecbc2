"""The eight discrete symmetries of a complexified Clifford algebra.

Each symmetry is a composition of three commuting primitive maps: grade
involution (star), reversion (tilde), and the pseudo-automorphism (bar,
coefficient conjugation).  The label dictionary is fixed:

    Id            P = star        T = tilde       PT = tilde star
    C = bar       CP = bar star   CT = bar tilde  CPT = bar tilde star

On a purely real algebra bar reduces to the identity, so only four maps are
distinct there; all eight separate on complexified algebras.  The composition
table is computed by probing on a full R-basis, never asserted from labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (Multivector, grade_involution, pseudo_automorphism,
                   reversion)

LABELS = ("Id", "P", "T", "PT", "C", "CP", "CT", "CPT")

_COMPONENTS = {
    "Id": (False, False, False),
    "P": (True, False, False),
    "T": (False, True, False),
    "PT": (True, True, False),
    "C": (False, False, True),
    "CP": (True, False, True),
    "CT": (False, True, True),
    "CPT": (True, True, True),
}


@dataclass(frozen=True)
class DiscreteSymmetry:
    """One of the eight maps, decomposed into its commuting components."""

    label: str
    star: bool
    tilde: bool
    bar: bool

    def __call__(self, a: Multivector) -> Multivector:
        if self.tilde:
            a = reversion(a)
        if self.star:
            a = grade_involution(a)
        if self.bar:
            a = pseudo_automorphism(a)
        return a

    @property
    def antiautomorphism(self) -> bool:
        """True when the map reverses products (reversion occurs oddly)."""
        return self.tilde


def symmetry(label: str) -> DiscreteSymmetry:
    try:
        return DiscreteSymmetry(label, *_COMPONENTS[label])
    except KeyError:
        raise ValueError(f"unknown symmetry label {label!r}") from None


ALL_SYMMETRIES = tuple(symmetry(l) for l in LABELS)


def apply(sym, a: Multivector) -> Multivector:
    if isinstance(sym, str):
        sym = symmetry(sym)
    return sym(a)


def _probes(alg):
    """An R-basis of the algebra: equality on it is equality of R-linear maps."""
    out = [alg.blade(k) for k in alg.basis]
    if alg.field == "C":
        out += [alg.blade(k) * alg.i() for k in alg.basis]
    return out


def _fingerprint(fn, probes):
    return tuple(fn(x).key() for x in probes)


def composition_table(alg) -> dict:
    """(a, b) -> label of a after b, identified by probing on an R-basis.

    Raises if some composite matches no (or more than one) of the eight maps,
    which cannot happen for genuine involutive components.
    """
    probes = _probes(alg)
    prints = {}
    for s in ALL_SYMMETRIES:
        fp = _fingerprint(s, probes)
        prints.setdefault(fp, []).append(s.label)
    table = {}
    for a in ALL_SYMMETRIES:
        for b in ALL_SYMMETRIES:
            fp = _fingerprint(lambda x: a(b(x)), probes)
            labels = prints.get(fp)
            if labels is None:
                raise RuntimeError(f"composite {a.label} after {b.label} "
                                   f"matches none of the eight maps")
            table[(a.label, b.label)] = labels[0]
    return table


@dataclass
class GroupStructure:
    order: int
    abelian: bool
    exponent: int
    distinct_maps: int

    @property
    def elementary_abelian(self) -> bool:
        return self.abelian and self.exponent <= 2

    def __str__(self):
        if self.order == 8 and self.elementary_abelian:
            return "Z2 x Z2 x Z2"
        return f"group of order {self.order}"


def group_structure(alg) -> GroupStructure:
    """Computed (not asserted) group data of the eight maps on `alg`."""
    probes = _probes(alg)
    prints = {s.label: _fingerprint(s, probes) for s in ALL_SYMMETRIES}
    distinct = len(set(prints.values()))
    table = composition_table(alg)
    abelian = all(table[(a, b)] == table[(b, a)] for a in LABELS for b in LABELS)
    exponent = 1
    for s in LABELS:
        if table[(s, s)] != "Id":
            exponent = 4  # cannot happen for involutive components
            break
        if s != "Id":
            exponent = 2
    return GroupStructure(order=8, abelian=abelian, exponent=exponent,
                          distinct_maps=distinct)
