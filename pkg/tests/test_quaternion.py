import random

import pytest
from gmpy2 import mpq

from matalg.quaternion import HQ, I, J, K, Quaternion, quat_inverse, quat_min_poly_over_center
from matalg.scalars import QQ, Poly


def rand_q(rng):
    return Quaternion(*[mpq(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])


def test_units_multiply_like_quaternions():
    assert I * I == J * J == K * K == Quaternion(-1)
    assert I * J == K and J * I == -K
    assert I * J * K == Quaternion(-1)


def test_norm_is_multiplicative_and_inverse():
    rng = random.Random(3)
    for _ in range(200):
        p, q = rand_q(rng), rand_q(rng)
        assert (p * q).norm() == p.norm() * q.norm()
        if q != Quaternion(0):
            assert q * quat_inverse(q) == Quaternion(1) == quat_inverse(q) * q


def test_inverse_examples():
    assert quat_inverse(Quaternion(1)) == Quaternion(1)
    assert quat_inverse(I) == -I
    assert quat_inverse(Quaternion(1, 1)) == Quaternion(mpq(1, 2), mpq(-1, 2))
    with pytest.raises(ZeroDivisionError):
        quat_inverse(Quaternion(0))


def test_center():
    assert Quaternion(3).is_central() and not I.is_central()
    assert HQ.center == QQ and HQ.center_degree == 4


def test_min_poly_examples():
    x = lambda *c: Poly(QQ, [mpq(v) for v in c])
    assert quat_min_poly_over_center(Quaternion(3)) == x(-3, 1)
    assert quat_min_poly_over_center(I) == x(1, 0, 1)
    assert quat_min_poly_over_center(Quaternion(1, 0, 1)) == x(2, -2, 1)


def test_parse_and_format_round_trip():
    q = HQ.parse({"a": "1/2", "c": "-3"})
    assert q == Quaternion(mpq(1, 2), 0, -3)
    assert HQ.parse(HQ.format(q)) == q
    assert HQ.parse("5") == Quaternion(5)
