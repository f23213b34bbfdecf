from __future__ import annotations

import random

import gmpy2

from ..errors import InputError
from ..verdict import Verdict
from .factor import (
    MAX_QQ_FACTOR_DEGREE,
    _factor_zz_squarefree,
    _from_zz,
    _modp_certificate,
    _to_zz,
    factor_ff,
    is_irreducible_ff,
    rational_roots,
    roots_ff,
)
from .fields import RationalField
from .poly import Poly, poly_gcd

mpq = gmpy2.mpq

_ENUMERATION_LIMIT = 2**16


def _require_nonconstant(f: Poly):
    if f.degree < 1:
        raise InputError("constant polynomial")


def poly_irreducible(f: Poly) -> Verdict:
    """Irreducibility over the coefficient field.

    Reducible verdicts carry a proper monic factor as witness.  Over Q the
    answer is exact up to degree 12; above that only a rational root or a
    mod-p certificate can decide, otherwise the verdict is unknown.
    """
    _require_nonconstant(f)
    F = f.field
    if f.degree == 1:
        return Verdict(True, info={"method": "linear"})
    if not isinstance(F, RationalField):
        if is_irreducible_ff(f):
            return Verdict(True, info={"method": "rabin"})
        g, _ = factor_ff(f)[0]
        return Verdict(False, witness=g, info={"method": "rabin"})

    roots = rational_roots(f)
    if roots:
        witness = min((Poly(F, [-r, mpq(1)]) for r in roots), key=Poly.sort_key)
        return Verdict(False, witness=witness, info={"method": "rational-root"})
    if f.degree <= 3:
        return Verdict(True, info={"method": "rational-root"})
    g = poly_gcd(f, f.derivative())
    if g.degree > 0:
        return Verdict(False, witness=g, info={"method": "square-free"})
    a = _to_zz(f)
    p = _modp_certificate(a)
    if p is not None:
        return Verdict(True, info={"method": "mod-p", "prime": p})
    if f.degree > MAX_QQ_FACTOR_DEGREE:
        return Verdict(None, info={"method": "none", "reason": f"degree {f.degree} above 12 over Q"})
    pieces = _factor_zz_squarefree(a)
    if len(pieces) == 1:
        return Verdict(True, info={"method": "zassenhaus"})
    witness = min((_from_zz(b).monic() for b in pieces), key=Poly.sort_key)
    return Verdict(False, witness=witness, info={"method": "zassenhaus"})


def poly_splits(f: Poly) -> Verdict:
    """Does f split into linear factors over its field?

    ``info["roots"]`` maps each root to its multiplicity; when f does not
    split the witness is the cofactor left after removing the linear part.
    """
    _require_nonconstant(f)
    F = f.field
    if isinstance(F, RationalField):
        candidates = rational_roots(f)
    else:
        candidates = roots_ff(f)
    roots = {}
    rest = f
    for r in candidates:
        lin = Poly(F, [F.neg(r), F.one])
        m = 0
        while rest.degree >= 1:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
            m += 1
        roots[r] = m
    splits = rest.degree == 0
    return Verdict(splits, witness=None if splits else rest.monic(),
                   info={"roots": roots, "lc": f.lc})


def find_irreducible_poly(F, k: int, seed: int = 0) -> Poly:
    """A monic irreducible polynomial of degree k over F.

    Finite fields are enumerated in lexicographic order (leading
    coefficients most significant) when q^k <= 2^16, otherwise sampled
    from a seeded generator.  Over Q the answer is x^k - 2.
    """
    if k < 1:
        raise InputError("degree must be >= 1")
    if isinstance(F, RationalField):
        return Poly(F, [mpq(-2)] + [mpq(0)] * (k - 1) + [mpq(1)])
    if F.order is None:
        raise InputError(f"no irreducible-polynomial search over {F}")
    q = F.order
    elems = list(F.elements()) if q <= _ENUMERATION_LIMIT else None
    if q**k <= _ENUMERATION_LIMIT:
        for m in range(q**k):
            coeffs = []
            for _ in range(k):
                m, r = divmod(m, q)
                coeffs.append(elems[r])
            f = Poly(F, coeffs + [F.one])
            if is_irreducible_ff(f):
                return f
    rng = random.Random(seed)
    while True:
        f = Poly(F, [F.random(rng) for _ in range(k)] + [F.one])
        if is_irreducible_ff(f):
            return f


def is_k_closed(F, k: int, seed: int = 0) -> Verdict:
    """No supported exact field is k-closed; the verdict carries the witness."""
    if k < 2:
        raise InputError("k-closedness is defined for k >= 2")
    f = find_irreducible_poly(F, k, seed)
    return Verdict(False, witness=f, info={"k": k})
