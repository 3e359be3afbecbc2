from fractions import Fraction

import pytest
from hypothesis import given

from cliffordkit import (QC, Signature, center_basis, clifford, conjugation,
                         even_subalgebra_basis, grade, grade_involution,
                         pseudo_automorphism, reversion, volume_element)
from conftest import complex_multivectors, multivector_pairs, multivector_triples


def test_signature_validation():
    Signature(12, 0)
    with pytest.raises(ValueError):
        Signature(13, 0)
    with pytest.raises(ValueError):
        Signature(-1, 2)


def test_generator_relations():
    for p, q in [(2, 0), (1, 1), (0, 2), (1, 3), (3, 2)]:
        alg = clifford(p, q)
        gens = alg.gens()
        for i, e in enumerate(gens):
            want = alg.one() if i < p else -alg.one()
            assert e * e == want
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                assert gens[i] * gens[j] == -(gens[j] * gens[i])


def test_cl20_basics():
    alg = clifford(2, 0)
    e1, e2 = alg.gens()
    assert e1 * e1 == alg.one()
    e12 = e1 * e2
    assert e12 * e12 == -alg.one()


def test_cl02_bivector_squares_to_minus_one():
    # forced by e1^2 = e2^2 = -1 and anticommutation
    alg = clifford(0, 2)
    e12 = alg.blade(0b11)
    assert e12 * e12 == -alg.one()


def test_quaternion_units_in_spacetime_algebra():
    # phi = e123 and psi = e124 in Cl(1,3) are quaternion units
    alg = clifford(1, 3)
    phi = alg.blade(0b0111)
    psi = alg.blade(0b1011)
    assert phi * phi == -alg.one()
    assert psi * psi == -alg.one()
    assert phi * psi == -(psi * phi)


@given(multivector_triples())
def test_associativity(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)


@given(multivector_pairs())
def test_distributivity(ab):
    a, b = ab
    c = a + b
    assert a * c + b * c == (a + b) * c


def test_involution_examples():
    alg = clifford(2, 0)
    e1, e2 = alg.gens()
    assert grade_involution(e1) == -e1
    e12 = e1 * e2
    assert reversion(e12) == -e12        # e2 e1 = -e1 e2
    x = alg.one() + e1 + e12
    assert conjugation(x) == alg.one() - e1 - e12


@given(multivector_pairs())
def test_reversion_antihomomorphism(ab):
    a, b = ab
    assert reversion(a * b) == reversion(b) * reversion(a)


@given(multivector_pairs())
def test_grade_involution_homomorphism(ab):
    a, b = ab
    assert grade_involution(a * b) == grade_involution(a) * grade_involution(b)


@given(multivector_pairs())
def test_conjugation_antihomomorphism(ab):
    a, b = ab
    assert conjugation(a * b) == conjugation(b) * conjugation(a)


def test_pseudo_automorphism_conjugates_coefficients():
    alg = clifford(1, 1, "C")
    x = alg.gen(1) * alg.i()
    assert pseudo_automorphism(x) == -x
    real = alg.blade(0b10, Fraction(3, 2))
    assert pseudo_automorphism(real) == real


def test_pseudo_automorphism_identity_on_real_algebra():
    alg = clifford(2, 1)
    x = alg.gen(1) + alg.blade(0b110, Fraction(-2, 3))
    assert pseudo_automorphism(x) is x


@given(complex_multivectors())
def test_pseudo_automorphism_involutive(a):
    assert pseudo_automorphism(pseudo_automorphism(a)) == a


@given(st_pairs := multivector_pairs(algebras=[clifford(1, 1, "C"),
                                               clifford(2, 0, "C")]))
def test_pseudo_automorphism_multiplicative(ab):
    a, b = ab
    bar = pseudo_automorphism
    assert bar(a * b) == bar(a) * bar(b)


def test_volume_and_center():
    # Cl(3,0): omega^2 = -1 and Z = {1, omega}
    alg = clifford(3, 0)
    w = volume_element(alg)
    assert w * w == -alg.one()
    zb = center_basis(alg)
    assert [x.c for x in zb] == [alg.one().c, w.c]

    # Cl(1,0): omega^2 = +1, Z spanned by {1, e1}
    alg = clifford(1, 0)
    w = volume_element(alg)
    assert w * w == alg.one()
    assert len(center_basis(alg)) == 2

    # Cl(2,0): trivial center
    alg = clifford(2, 0)
    assert len(center_basis(alg)) == 1


def test_center_matches_parity_of_n():
    for p, q in [(2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
                 (2, 2), (3, 2)]:
        alg = clifford(p, q)
        want = 1 if alg.n % 2 == 0 else 2
        assert len(center_basis(alg)) == want


def test_omega_square_mod4_rule():
    # omega^2 = +1 iff p-q = 0,1 (mod 4), by direct computation
    for p in range(5):
        for q in range(5 - p):
            if p + q == 0:
                continue
            alg = clifford(p, q)
            w = volume_element(alg)
            want = alg.one() if (p - q) % 4 in (0, 1) else -alg.one()
            assert w * w == want, (p, q)


def test_omega_commutes_with_generators_iff_n_odd():
    for p, q in [(3, 0), (1, 2), (2, 1), (2, 0), (1, 1), (2, 2), (4, 1)]:
        alg = clifford(p, q)
        w = volume_element(alg)
        central = all(w * g == g * w for g in alg.gens())
        assert central == (alg.n % 2 == 1), (p, q)


def test_even_subalgebra_basis():
    assert even_subalgebra_basis((1, 1)) == [0b00, 0b11]
    assert len(even_subalgebra_basis((2, 4))) == 32
    # closure: products of even blades stay even
    alg = clifford(2, 2)
    evens = even_subalgebra_basis(alg)
    for a in evens:
        for b in evens:
            prod = alg.blade(a) * alg.blade(b)
            assert all(grade(k) % 2 == 0 for k in prod.c)


def test_qc_arithmetic():
    a = QC(1, 2)
    b = QC(Fraction(1, 2), -1)
    assert a * b == QC(Fraction(5, 2), 0)
    assert (a / b) * b == a
    assert a.conjugate() == QC(1, -2)
    assert QC(3) == 3 and bool(QC(0, 0)) is False


def test_complex_algebra_rejects_plain_real_mixup():
    alg = clifford(1, 0)
    with pytest.raises(TypeError):
        alg.blade(0, QC(1, 1))
