"""Ground domains: the rationals, prime fields and their extensions.

Every domain exposes the same small interface (``add``, ``mul``, ``inv``,
``parse``/``format`` ...) plus a few vector kernels that the elimination
code leans on.  Scalars are plain Python values in canonical form, so
equality of scalars is ``==`` on the representation:

* rationals are ``gmpy2.mpq`` (always in lowest terms),
* GF(p) residues are ``int`` in ``[0, p)``,
* GF(p^k) residues are ``tuple`` of ``k`` ints (ascending coefficients).

The same interface is implemented by the quaternion ring in
:mod:`matalg.quaternion`; code that must respect a side convention passes
``side="left"`` or ``side="right"`` to the kernels.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from operator import mul

import gmpy2

from ..errors import DomainMismatch, InputError

mpq = gmpy2.mpq

MAX_PRIME = 2**31


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Domain:
    """Common interface of every scalar domain."""

    commutative = True
    characteristic = 0
    order = None  # number of elements, None when infinite

    # -- center interface (a field is its own center) --
    @property
    def center(self):
        return self

    @property
    def center_degree(self) -> int:
        return 1

    def center_basis(self):
        return [self.one]

    def center_coords(self, a):
        return (a,)

    def from_center_coords(self, coords):
        return coords[0]

    def embed(self, c):
        return c

    def is_central(self, a) -> bool:
        return True

    def central_value(self, a):
        return a

    def conj(self, a):
        return a

    # -- derived arithmetic --
    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_one(self, a) -> bool:
        return a == self.one

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # -- vector kernels (generic versions; fields override for speed) --
    def dot(self, xs, ys):
        acc = self.zero
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def axpy(self, u, c, v, side="left"):
        """Return ``u - c*v`` (``side="left"``) or ``u - v*c`` (``side="right"``)."""
        if side == "left":
            return [self.sub(a, self.mul(c, b)) for a, b in zip(u, v)]
        return [self.sub(a, self.mul(b, c)) for a, b in zip(u, v)]

    def scale(self, v, c, side="left"):
        if side == "left":
            return [self.mul(c, b) for b in v]
        return [self.mul(b, c) for b in v]

    def matmul(self, a_rows, b_rows):
        cols = list(zip(*b_rows))
        return tuple(tuple(self.dot(row, col) for col in cols) for row in a_rows)

    def check_same(self, other):
        if self != other:
            raise DomainMismatch(f"domain mismatch: {self} vs {other}")

    def __repr__(self):
        return self.name


class RationalField(Domain):
    name = "Q"
    characteristic = 0

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return mpq(n)

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys), self.zero)

    def axpy(self, u, c, v, side="left"):
        return [a - c * b for a, b in zip(u, v)]

    def scale(self, v, c, side="left"):
        return [c * b for b in v]

    def matmul(self, a_rows, b_rows):
        cols = list(zip(*b_rows))
        z = self.zero
        return tuple(tuple(sum(map(mul, row, col), z) for col in cols) for row in a_rows)

    def parse(self, obj):
        if isinstance(obj, bool):
            raise InputError(f"invalid rational {obj!r}")
        if isinstance(obj, int):
            return mpq(obj)
        if isinstance(obj, str) and re.fullmatch(r"\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*", obj):
            num, _, den = obj.replace(" ", "").partition("/")
            den = int(den) if den else 1
            if den == 0:
                raise InputError(f"zero denominator in {obj!r}")
            return mpq(int(num), den)
        if type(obj).__name__ in ("mpq", "Fraction"):
            return mpq(obj)
        raise InputError(f"invalid rational {obj!r}")

    def format(self, a):
        return str(a)

    def random(self, rng, spread=2):
        return mpq(rng.randint(-spread, spread))

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"field": "Q"}


class PrimeField(Domain):
    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise InputError(f"prime must be an integer, got {p!r}")
        if p >= MAX_PRIME:
            raise InputError(f"p={p} exceeds the supported bound 2^31")
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.degree = 1
        self.zero = 0
        self.one = 1
        self.name = f"GF({p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.p

    def pth_root(self, a):
        return a

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys)) % self.p

    def axpy(self, u, c, v, side="left"):
        p = self.p
        return [(a - c * b) % p for a, b in zip(u, v)]

    def scale(self, v, c, side="left"):
        p = self.p
        return [(c * b) % p for b in v]

    def matmul(self, a_rows, b_rows):
        p = self.p
        cols = list(zip(*b_rows))
        return tuple(tuple(sum(map(mul, row, col)) % p for col in cols) for row in a_rows)

    def parse(self, obj):
        if isinstance(obj, bool):
            raise InputError(f"invalid residue {obj!r}")
        if isinstance(obj, int):
            return obj % self.p
        if isinstance(obj, str) and re.fullmatch(r"\s*[+-]?\d+\s*", obj):
            return int(obj) % self.p
        raise InputError(f"invalid residue mod {self.p}: {obj!r}")

    def format(self, a):
        return str(a)

    def elements(self):
        return range(self.p)

    def random(self, rng, spread=None):
        return rng.randrange(self.p)

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"field": "GF", "p": self.p}


class ExtensionField(Domain):
    """GF(p^k) as GF(p)[x] / (modulus); residues are length-k tuples."""

    def __init__(self, p: int, modulus):
        base = PrimeField(p)
        coeffs = [base.parse(c) for c in modulus]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        k = len(coeffs) - 1
        if k < 1 or coeffs[-1] != 1:
            raise InputError("extension modulus must be monic of degree >= 1")
        self.base = base
        self.p = p
        self.degree = k
        self.modulus = tuple(coeffs)
        self.characteristic = p
        self.order = p**k
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.name = f"GF({p}^{k})"
        from .poly import Poly
        from .factor import is_irreducible_ff

        if not is_irreducible_ff(Poly(base, coeffs)):
            raise InputError(f"modulus {list(coeffs)} is not irreducible over GF({p})")
        # x^(k+i) expressed in the basis 1..x^(k-1), for reduction
        red = []
        cur = [(-c) % p for c in coeffs[:k]]
        for _ in range(k - 1):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(a + top * r) % p for a, r in zip(cur, red[0])]
        red.append(tuple(cur))
        self._reduce_rows = red

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other.p == self.p and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GFext", self.p, self.modulus))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        low = prod[:k]
        for i, c in enumerate(prod[k:]):
            if c:
                low = [u + c * r for u, r in zip(low, self._reduce_rows[i])]
        return tuple(u % p for u in low)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def is_zero(self, a):
        return not any(a)

    def from_int(self, n):
        return ((n % self.p),) + (0,) * (self.degree - 1)

    def pth_root(self, a):
        return self.pow(a, self.p ** (self.degree - 1))

    def generator(self):
        """The class of x."""
        if self.degree == 1:
            return (self._reduce_rows[0][0],)
        return (0, 1) + (0,) * (self.degree - 2)

    def parse(self, obj):
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return self.from_int(self.base.parse(obj))
        if isinstance(obj, (list, tuple)):
            coeffs = [self.base.parse(c) for c in obj]
            if len(coeffs) > self.degree:
                raise InputError(f"residue {obj!r} has degree >= {self.degree}")
            return tuple(coeffs) + (0,) * (self.degree - len(coeffs))
        raise InputError(f"invalid element of {self.name}: {obj!r}")

    def format(self, a):
        coeffs = list(a)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return [str(c) for c in coeffs]

    def elements(self):
        for m in range(self.order):
            digits = []
            for _ in range(self.degree):
                m, r = divmod(m, self.p)
                digits.append(r)
            yield tuple(digits)

    def random(self, rng, spread=None):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def sort_key(self, a):
        return tuple(reversed(a))

    def descriptor(self):
        return {"field": "GFext", "p": self.p, "modulus": list(self.modulus)}


QQ = RationalField()


def GF(p: int, modulus=None):
    return PrimeField(p) if modulus is None else ExtensionField(p, modulus)
