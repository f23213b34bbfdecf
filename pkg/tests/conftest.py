import random
from fractions import Fraction

import pytest

from matalg import Matrix, PrimeField, QQ

ACCEPTANCE = {}


def record(criterion: int, ok: bool, detail: str):
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")


def to_ints(M):
    """Entries as plain ints (GF(p)) or Fractions (Q)."""
    if M.field == QQ:
        return [[Fraction(int(x.numerator), int(x.denominator)) for x in r] for r in M.data]
    return [[int(x) for x in r] for r in M.data]


def random_matrix(F, n, rng, density=1.0, spread=3):
    data = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if rng.random() < density:
                row.append(F.random(rng) if F != QQ else F.from_int(rng.randint(-spread, spread)))
            else:
                row.append(F.zero)
        data.append(row)
    return Matrix(F, data, n, n)


def random_invertible(F, n, rng):
    from matalg.linalg import is_invertible
    while True:
        P = random_matrix(F, n, rng)
        if is_invertible(P):
            return P


@pytest.fixture
def rng():
    return random.Random(12345)


GF2, GF3, GF5, GF7 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)
