import random

import pytest
from gmpy2 import mpq

from matalg.errors import InputError
from matalg.scalars import (
    GF,
    QQ,
    ExtensionField,
    Poly,
    PrimeField,
    factor,
    find_irreducible_poly,
    is_k_closed,
    is_prime,
    poly_gcd,
    poly_irreducible,
    poly_splits,
)
from matalg.scalars.factor import rational_roots

import oracles


def P(F, *coeffs):
    return Poly(F, [F.from_int(c) for c in coeffs])


GF2, GF3, GF5, GF7 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)


def test_prime_check():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(InputError, match="not prime"):
        PrimeField(4)


def test_extension_modulus_must_be_irreducible():
    with pytest.raises(InputError):
        ExtensionField(2, [1, 0, 1])
    F = ExtensionField(2, [1, 1, 1])
    assert F.order == 4


def test_rational_canonical_form():
    assert QQ.parse("2/4") == mpq(1, 2)
    assert QQ.format(QQ.parse("-6/4")) == "-3/2"
    with pytest.raises(InputError):
        QQ.parse("1/0")


@pytest.mark.parametrize("F", [QQ, GF2, GF7, ExtensionField(3, [1, 0, 1]), ExtensionField(2, [1, 1, 0, 1])])
def test_field_axioms_sampled(F):
    rng = random.Random(0)
    for _ in range(200):
        a, b, c = (F.random(rng) for _ in range(3))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        if not F.is_zero(a):
            assert F.is_one(F.mul(a, F.inv(a)))


def test_poly_degree_and_monic():
    f, g = P(QQ, 1, 2, 3), P(QQ, -1, 0, 5)
    assert (f * g).degree == 4
    m = f.monic()
    assert m.is_monic() and m.monic() == m


def test_poly_gcd_examples():
    assert poly_gcd(P(QQ, -1, 0, 1), P(QQ, -1, 1)) == P(QQ, -1, 1)
    f = P(QQ, 2, 0, 4)
    assert poly_gcd(f, Poly(QQ, [])) == f.monic()
    assert poly_gcd(P(GF2, 1, 1, 1), P(GF2, 1, 0, 1)) == P(GF2, 1)


def test_poly_irreducible_examples():
    assert poly_irreducible(P(QQ, 1, 0, 1)).holds
    assert poly_irreducible(P(GF2, 1, 1, 1)).holds
    v = poly_irreducible(P(QQ, -1, 0, 1))
    assert v.holds is False and v.witness == P(QQ, -1, 1)


def test_poly_splits_examples():
    f = P(QQ, -1, 1) * P(QQ, -1, 1) * P(QQ, -2, 1)
    v = poly_splits(f)
    assert v.holds and v.info["roots"] == {mpq(1): 2, mpq(2): 1}
    assert not poly_splits(P(GF7, 1, 0, 1)).holds
    v = poly_splits(P(GF7, -1, 0, 1))
    assert v.holds and set(v.info["roots"]) == {1, 6}


def test_find_irreducible_examples():
    assert find_irreducible_poly(GF2, 2) == P(GF2, 1, 1, 1)
    assert find_irreducible_poly(QQ, 3) == P(QQ, -2, 0, 0, 1)
    assert find_irreducible_poly(GF3, 2) == P(GF3, 1, 0, 1)


def test_is_k_closed_examples():
    for F, k, w in [(GF5, 2, P(GF5, 2, 0, 1)), (QQ, 4, P(QQ, -2, 0, 0, 0, 1)), (GF2, 3, P(GF2, 1, 1, 0, 1))]:
        v = is_k_closed(F, k)
        assert v.holds is False and v.witness == w


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducibility_matches_trial_division(p):
    F = PrimeField(p)
    rng = random.Random(p)
    for _ in range(150):
        d = rng.randint(1, 6)
        coeffs = [rng.randrange(p) for _ in range(d)] + [1]
        assert poly_irreducible(Poly(F, coeffs)).holds == oracles.irreducible_mod_p(coeffs, p)


@pytest.mark.parametrize("F", [GF2, GF3, GF7, ExtensionField(2, [1, 1, 1]), QQ])
def test_factor_reconstructs(F):
    rng = random.Random(1)
    for _ in range(60):
        pieces = [Poly(F, [F.random(rng) for _ in range(rng.randint(1, 3))] + [F.one]) for _ in range(rng.randint(1, 3))]
        f = pieces[0]
        for g in pieces[1:]:
            f = f * g
        prod = Poly(F, [F.one])
        for g, m in factor(f):
            assert g.is_monic() and poly_irreducible(g).holds
            for _ in range(m):
                prod = prod * g
        assert prod == f.monic()


def test_rational_roots_large_coefficients():
    # roots with huge numerators must not stall a divisor search
    r1, r2 = mpq(10**40 + 7, 3), mpq(-5, 10**30 + 1)
    f = Poly(QQ, [-r1, mpq(1)]) * Poly(QQ, [-r2, mpq(1)]) * P(QQ, 1, 0, 1)
    assert rational_roots(f) == sorted([r1, r2])


def test_gf_helper():
    assert GF(5) == GF5
    assert GF(2, [1, 1, 1]).order == 4
