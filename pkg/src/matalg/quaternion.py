"""Rational quaternions as an exact division ring with center Q."""

from __future__ import annotations

import gmpy2

from .errors import InputError
from .scalars.fields import QQ, Domain
from .scalars.poly import Poly

mpq = gmpy2.mpq


class Quaternion:
    """a + b*i + c*j + d*k with rational components."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = mpq(a)
        self.b = mpq(b)
        self.c = mpq(c)
        self.d = mpq(d)

    def __add__(self, o):
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        if not isinstance(o, Quaternion):
            o = Quaternion(o)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, c):
        return Quaternion(c) * self

    def __eq__(self, o):
        if not isinstance(o, Quaternion):
            if isinstance(o, (int, type(mpq(0)))):
                o = Quaternion(o)
            else:
                return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def is_central(self) -> bool:
        return not (self.b or self.c or self.d)

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"Quaternion({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        parts = []
        for v, unit in zip(self.coords(), ("", "i", "j", "k")):
            if v:
                if unit and abs(v) == 1:
                    parts.append(("-" if v < 0 else "") + unit)
                else:
                    parts.append(f"{v}{unit}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def quat_inverse(q: Quaternion) -> Quaternion:
    n = q.norm()
    if n == 0:
        raise ZeroDivisionError("zero quaternion has no inverse")
    return Quaternion(q.a / n, -q.b / n, -q.c / n, -q.d / n)


def quat_min_poly_over_center(q: Quaternion) -> Poly:
    if q.is_central():
        return Poly(QQ, [-q.a, mpq(1)])
    return Poly(QQ, [q.norm(), -2 * q.a, mpq(1)])


I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


class QuaternionRing(Domain):
    """The division ring H_Q; its center is Q with basis 1, i, j, k over it."""

    name = "H"
    commutative = False
    characteristic = 0

    def __init__(self):
        self.zero = Quaternion()
        self.one = Quaternion(1)

    def __eq__(self, other):
        return isinstance(other, QuaternionRing)

    def __hash__(self):
        return hash("H")

    @property
    def center(self):
        return QQ

    @property
    def center_degree(self) -> int:
        return 4

    def center_basis(self):
        return [self.one, I, J, K]

    def center_coords(self, q):
        return (q.a, q.b, q.c, q.d)

    def from_center_coords(self, coords):
        return Quaternion(*coords)

    def embed(self, c):
        return Quaternion(c)

    def is_central(self, q):
        return q.is_central()

    def central_value(self, q):
        if not q.is_central():
            raise ValueError(f"{q} is not central")
        return q.a

    def conj(self, q):
        return q.conjugate()

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return quat_inverse(x)

    def is_zero(self, x):
        return not x

    def from_int(self, n):
        return Quaternion(n)

    def parse(self, obj):
        if isinstance(obj, Quaternion):
            return obj
        if isinstance(obj, dict):
            extra = set(obj) - {"a", "b", "c", "d"}
            if extra:
                raise InputError(f"unexpected quaternion keys {sorted(extra)}")
            return Quaternion(*(QQ.parse(obj.get(key, "0")) for key in "abcd"))
        return Quaternion(QQ.parse(obj))

    def format(self, q):
        return {key: str(v) for key, v in zip("abcd", q.coords())}

    def random(self, rng, spread=2):
        return Quaternion(*(rng.randint(-spread, spread) for _ in range(4)))

    def sort_key(self, q):
        return q.coords()

    def descriptor(self):
        return {"field": "H"}


HQ = QuaternionRing()
