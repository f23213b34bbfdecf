"""Dense univariate polynomials over a commutative domain."""

from __future__ import annotations

from ..errors import DomainMismatch


class Poly:
    """Polynomial with ascending coefficients and no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(c) for c in ints])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field, roots):
        f = cls(field, [field.one])
        for r in roots:
            f = f * cls(field, [field.neg(r), field.one])
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.field.is_one(self.coeffs[-1])

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other):
        if self.field != other.field:
            raise DomainMismatch(f"polynomials over {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.field, [self.field.mul(c, other) for c in self.coeffs])
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def __pow__(self, e: int):
        result = Poly(self.field, [self.field.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        inv_lc = F.inv(other.lc)
        if len(rem) <= d:
            return Poly(F), self
        quot = [F.zero] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if F.is_zero(c):
                continue
            q = F.mul(c, inv_lc)
            quot[i - d] = q
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = F.sub(rem[i - d + j], F.mul(q, b))
        return Poly(F, quot), Poly(F, rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other) -> bool:
        return (other % self).is_zero()

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        inv = self.field.inv(self.lc)
        return Poly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_matrix(self, A):
        """Horner evaluation at a square matrix; coefficients act as central scalars."""
        from ..linalg import Matrix

        n = A.rows
        D = A.field
        result = Matrix.zeros(D, n, n)
        eye = Matrix.identity(D, n)
        for c in reversed(self.coeffs):
            result = result @ A + eye.scale(D.embed(c))
        return result

    def pow_mod(self, e: int, modulus):
        result = Poly(self.field, [self.field.one]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def compose_xp(self, p: int):
        """f(x^p)."""
        F = self.field
        out = [F.zero] * (p * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * p] = c
        return Poly(F, out)

    def sort_key(self):
        return (self.degree, tuple(self.field.sort_key(c) for c in reversed(self.coeffs)))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if F.is_zero(c):
                continue
            s = F.format(c)
            if isinstance(s, list):
                parts = [v if j == 0 else (f"{v}*" if v != "1" else "") + ("a" if j == 1 else f"a^{j}")
                         for j, v in enumerate(s) if v != "0"]
                s = parts[0] if len(parts) == 1 else "(" + " + ".join(parts) + ")"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and s == "1":
                terms.append(mono)
            elif mono and s == "-1":
                terms.append("-" + mono)
            else:
                terms.append(s + ("*" + mono if mono else ""))
        out = " + ".join(terms)
        return out.replace("+ -", "- ")


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) = monic(f) and gcd(0, 0) = 0."""
    if f.field != g.field:
        raise DomainMismatch(f"polynomials over {f.field} and {g.field}")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(f: Poly, g: Poly):
    """Return (d, s, t) with s*f + t*g = d monic."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly(F, [F.one]), Poly(F)
    t0, t1 = Poly(F), Poly(F, [F.one])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = F.inv(r0.lc)
    return r0 * inv, s0 * inv, t0 * inv
