"""Factorization and irreducibility of univariate polynomials.

Finite fields: square-free decomposition, distinct-degree factorization
and Cantor-Zassenhaus equal-degree splitting; Rabin's test for
irreducibility.  Rationals: the rational-root test, mod-p irreducibility
certificates and Zassenhaus recombination after Hensel lifting.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

import gmpy2

from ..errors import InconclusiveError, InputError
from .fields import PrimeField, RationalField, prime_factors
from .poly import Poly, poly_gcd, poly_xgcd

mpq = gmpy2.mpq

# Rational inputs above this degree are factored only as far as cheap
# certificates allow.
MAX_QQ_FACTOR_DEGREE = 12

_ENUM_ROOTS_LIMIT = 10_000


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

def _pth_root_poly(f: Poly) -> Poly:
    F = f.field
    p = F.characteristic
    return Poly(F, [F.pth_root(c) for c in f.coeffs[::p]])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Pairs (g, m) of pairwise coprime monic square-free g with f = lc * prod g^m."""
    F = f.field
    if f.degree < 1:
        return []
    f = f.monic()
    one = Poly(F, [F.one])
    out: dict[Poly, int] = {}

    def record(g, m):
        if g.degree >= 1:
            out[g] = out.get(g, 0) + m

    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w != one:
        y = poly_gcd(w, c)
        record(w // y, i)
        i += 1
        w = y
        c = c // y
    if c != one:
        p = F.characteristic
        if p == 0:  # cannot happen in characteristic zero
            raise AssertionError("square-free decomposition did not terminate")
        for g, m in squarefree_decomposition(_pth_root_poly(c)):
            record(g, m * p)
    return sorted(out.items(), key=lambda gm: gm[0].sort_key())


def radical(f: Poly) -> Poly:
    out = Poly(f.field, [f.field.one])
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def _frobenius_powers(f: Poly, count: int) -> list[Poly]:
    """[x^(q^1), ..., x^(q^count)] mod f."""
    q = f.field.order
    h = Poly.x(f.field) % f
    out = []
    for _ in range(count):
        h = h.pow_mod(q, f)
        out.append(h)
    return out


def is_irreducible_ff(f: Poly) -> bool:
    """Rabin's irreducibility test over a finite field."""
    n = f.degree
    if n < 1:
        raise InputError("constant polynomial")
    if n == 1:
        return True
    f = f.monic()
    x = Poly.x(f.field)
    powers = _frobenius_powers(f, n)
    if powers[-1] != x % f:
        return False
    for r in prime_factors(n):
        if poly_gcd(f, powers[n // r - 1] - x).degree != 0:
            return False
    return True


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic square-free f into products of irreducibles of equal degree."""
    F = f.field
    q = F.order
    x = Poly.x(F)
    out = []
    rest = f
    h = x % rest
    d = 1
    while rest.degree >= 2 * d:
        h = h.pow_mod(q, rest)
        g = poly_gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
        d += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree(g: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of g, a product of distinct degree-d irreducibles."""
    if g.degree == d:
        return [g]
    F = g.field
    q = F.order
    while True:
        a = Poly(F, [F.random(rng) for _ in range(g.degree)])
        if a.degree < 1:
            continue
        if q % 2:
            b = a.pow_mod((q**d - 1) // 2, g) - Poly(F, [F.one])
        else:
            bits = (q.bit_length() - 1) * d
            t = a % g
            b = t
            for _ in range(bits - 1):
                t = (t * t) % g
                b = b + t
        h = poly_gcd(g, b)
        if 0 < h.degree < g.degree:
            return equal_degree(h, d, rng) + equal_degree(g // h, d, rng)


def factor_ff(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicity, in a canonical order."""
    rng = random.Random(0)
    out = []
    for s, m in squarefree_decomposition(f):
        for g, d in distinct_degree(s):
            for h in equal_degree(g, d, rng):
                out.append((h.monic(), m))
    return sorted(out, key=lambda gm: gm[0].sort_key())


def roots_ff(f: Poly) -> list:
    """Distinct roots of f in its (finite) coefficient field."""
    F = f.field
    g = radical(f)
    if g.degree < 1:
        return []
    x = Poly.x(F)
    lin = poly_gcd(g, x.pow_mod(F.order, g) - x)
    if lin.degree < 1:
        return []
    if F.order <= _ENUM_ROOTS_LIMIT:
        roots = [a for a in F.elements() if F.is_zero(lin(a))]
    else:
        roots = [F.neg(h.coeffs[0]) for h in equal_degree(lin, 1, random.Random(0))]
    return sorted(roots, key=F.sort_key)


# ---------------------------------------------------------------------------
# integer polynomials (ascending lists of ints)
# ---------------------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zz_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zz_exact_div(f, g):
    """Quotient f/g over Z, or None when g does not divide f in Z[x]."""
    f = list(f)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return None if any(f) else []
    if f[0] and g[0] and f[0] % g[0]:
        return None
    q = [0] * (len(f) - dg)
    lg = g[-1]
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c == 0:
            continue
        if c % lg:
            return None
        t = c // lg
        q[i - dg] = t
        for j, b in enumerate(g):
            f[i - dg + j] -= t * b
    if any(f[:dg]):
        return None
    return q


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _primitive(a):
    a = _trim(list(a))
    if not a:
        return a
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _to_zz(f: Poly):
    """Primitive integer polynomial with positive leading coefficient and same roots."""
    den = 1
    for c in f.coeffs:
        den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
    return _primitive([int(c * den) for c in f.coeffs])


def _from_zz(a) -> Poly:
    return Poly(RationalField(), [mpq(c) for c in a])


def rational_roots(f: Poly) -> list:
    """Distinct rational roots, ascending.

    Roots of the square-free part modulo a good prime are lifted p-adically
    by Newton steps past the bound on lc*root, then tested exactly. This
    avoids enumerating divisors of possibly huge coefficients.
    """
    roots = set()
    s = radical(f) if f.degree >= 1 else f
    a = _to_zz(s)
    while a and a[0] == 0:
        roots.add(mpq(0))
        a = a[1:]
    if len(a) == 2:
        roots.add(mpq(-a[0], a[1]))
    elif len(a) > 2:
        lc = a[-1]
        bound = abs(lc) * (1 + max(abs(c) for c in a[:-1]))
        p = _good_primes(a, 1)[0]
        deriv = [i * a[i] for i in range(1, len(a))]

        def ev(poly, x, m):
            acc = 0
            for c in reversed(poly):
                acc = (acc * x + c) % m
            return acc

        for r0 in range(p):
            if ev(a, r0, p):
                continue
            r, m = r0, p
            while m <= 2 * bound:
                m = m * m
                r = (r - ev(a, r, m) * pow(ev(deriv, r, m), -1, m)) % m
            cand = mpq(_sym([lc * r], m)[0], lc)
            acc = mpq(0)
            for c in reversed(a):
                acc = acc * cand + c
            if acc == 0:
                roots.add(cand)
    return sorted(roots)


def _mod_poly(a, p):
    return Poly(PrimeField(p), [c % p for c in a])


def _good_primes(a, limit):
    lc = a[-1]
    out = []
    p = 2
    while len(out) < limit:
        p += 1
        if not gmpy2.is_prime(p) or lc % p == 0:
            continue
        fp = _mod_poly(a, p)
        if poly_gcd(fp, fp.derivative()).degree == 0:
            out.append(p)
    return out


def _zz_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _zz_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _hensel_pair(f, g, h, p, e):
    """Lift f = g*h (mod p) to mod p^e; g stays monic."""
    Fp = PrimeField(p)
    G, H = _mod_poly(g, p), _mod_poly(h, p)
    _, s, t = poly_xgcd(G, H)
    m = p
    for _ in range(e - 1):
        err = _zz_sub(f, _zz_mul(g, h))
        c = Poly(Fp, [(x // m) % p for x in err])
        r = (c * t) % G
        dh = (c - r * H) // G
        mp = m * p
        g = [x % mp for x in _zz_add(g, [m * y for y in r.coeffs])]
        h = _trim([x % mp for x in _zz_add(h, [m * y for y in dh.coeffs])])
        m = mp
    return g, h


def _hensel_multi(f, factors, p, e):
    M = p**e
    if len(factors) == 1:
        inv = pow(f[-1], -1, M)
        return [[c * inv % M for c in f]]
    k = len(factors) // 2
    g = Poly(PrimeField(p), [1])
    for fac in factors[:k]:
        g = g * fac
    h = Poly(PrimeField(p), [f[-1] % p])
    for fac in factors[k:]:
        h = h * fac
    G, H = _hensel_pair(f, list(g.coeffs), list(h.coeffs), p, e)
    return _hensel_multi(G, factors[:k], p, e) + _hensel_multi(H, factors[k:], p, e)


def _sym(a, M):
    half = M // 2
    return [c % M - M if c % M > half else c % M for c in a]


def _zassenhaus(a, p, modp_factors):
    """Factor primitive square-free a over Z given its monic factorization mod p."""
    n = len(a) - 1
    norm = math.isqrt(sum(c * c for c in a)) + 1
    bound = 2 * abs(a[-1]) * (2**n) * norm
    e = 1
    while p**e <= bound:
        e += 1
    M = p**e
    lifted = _hensel_multi(a, modp_factors, p, e)
    result = []
    rest = a
    d = 1
    while 2 * d <= len(lifted):
        for subset in combinations(range(len(lifted)), d):
            cand = [rest[-1]]
            for i in subset:
                cand = [c % M for c in _zz_mul(cand, lifted[i])]
            cand = _primitive(_sym(cand, M))
            quot = _zz_exact_div(rest, cand)
            if quot is not None:
                result.append(cand)
                rest = _primitive(quot)
                lifted = [g for i, g in enumerate(lifted) if i not in subset]
                break
        else:
            d += 1
    result.append(rest)
    return result


def _factor_zz_squarefree(a) -> list[list[int]]:
    if len(a) <= 2:
        return [a]
    primes = _good_primes(a, 5)
    best = None
    for p in primes:
        facs = factor_ff(_mod_poly(a, p))
        if len(facs) == 1:
            return [a]
        if best is None or len(facs) < len(best[1]):
            best = (p, [g for g, _ in facs])
    p, facs = best
    return _zassenhaus(a, p, facs)


def _modp_certificate(a, tries=8):
    """A prime p such that a is irreducible mod p, or None."""
    for p in _good_primes(a, tries):
        if is_irreducible_ff(_mod_poly(a, p)):
            return p
    return None


def factor_qq(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicity.

    Raises InconclusiveError when a square-free part above degree 12 resists
    the cheap certificates.
    """
    out = []
    for s, m in squarefree_decomposition(f):
        a = _to_zz(s)
        pieces = []
        if len(a) - 1 <= MAX_QQ_FACTOR_DEGREE:
            pieces = _factor_zz_squarefree(a)
        else:
            rest = s
            for r in rational_roots(s):
                pieces.append([int(-r.numerator), int(r.denominator)])
                rest = rest // Poly(s.field, [-r, mpq(1)])
            if rest.degree >= 1:
                b = _to_zz(rest)
                if rest.degree > 1 and _modp_certificate(b) is None:
                    raise InconclusiveError(
                        f"cannot factor a degree-{rest.degree} rational polynomial")
                pieces.append(b)
        for piece in pieces:
            out.append((_from_zz(piece).monic(), m))
    return sorted(out, key=lambda gm: gm[0].sort_key())


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factorization over Q or a finite field."""
    if f.degree < 1:
        return []
    if isinstance(f.field, RationalField):
        return factor_qq(f)
    if f.field.order is None:
        raise InputError(f"factorization over {f.field} is not supported")
    return factor_ff(f)
