"""Executable checks of the Burnside and Wedderburn type statements.

Each routine verifies hypotheses on the concrete input, runs the
constructive part of the argument where there is one, and reports what
was certified together with any witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .closure import (
    AlgebraBasis,
    MatrixSpan,
    _common_shape,
    close,
    ideal_close,
    is_nilpotent_algebra,
    nilpotent_span,
    semigroup_close,
    DEFAULT_SEMIGROUP_CAP,
)
from .errors import HypothesisViolation, InputError, RankOneNotFound
from .linalg import (
    Matrix,
    companion,
    direct_sum,
    f_triangularizable_single,
    inverse,
    is_nilpotent,
    kernel_basis,
    min_poly,
    rank,
)
from .module_structure import (
    _candidates,
    commutant,
    compress,
    hyperinvariant_check,
    is_irreducible,
    triangularize,
)
from .scalars.ops import find_irreducible_poly, is_k_closed
from .verdict import Verdict

EXTENDED_SEARCH = 256


# -- rank one elements and matrix units --

def _nonzero_min_rank(A: MatrixSpan, seed):
    best, best_rank = None, None
    for _, x in _candidates(A, seed):
        if x.is_zero():
            continue
        r = rank(x)
        if best_rank is None or r < best_rank:
            best, best_rank = x, r
            if r == 1:
                break
    return best, best_rank


def find_rank_one(A: MatrixSpan, seed: int = 0) -> Matrix:
    """A rank-one element of A.

    Starts from the least-rank element among the scanned candidates, then
    lowers the rank: if T B restricted to range(T) has an eigenvalue c in F
    and is not scalar there, T B T - c T is a nonzero element of smaller rank.
    """
    F = A.field
    T, r = _nonzero_min_rank(A, seed)
    if T is None:
        raise RankOneNotFound(0, "the algebra is zero")
    while r > 1:
        lowered = False
        for B in A.basis:
            X = compress(T, [B])[0]
            v = f_triangularizable_single(X)
            for c in v.info["eigenvalues"]:
                Y = T @ B @ T - T.scale(F.embed(c))
                ry = rank(Y)
                if 0 < ry < r:
                    T, r, lowered = Y, ry, True
                    break
            if lowered:
                break
        if not lowered:
            raise RankOneNotFound(r)
    return T


def rank_one_idempotent(A: MatrixSpan, T: Matrix | None = None, seed: int = 0):
    """(E, P): a rank-one idempotent E of A and P with P^-1 E P = E_11."""
    F = A.field
    n = A.n
    if T is None:
        T = find_rank_one(A, seed)
    elif rank(T) != 1:
        raise HypothesisViolation(f"T has rank {rank(T)}, not 1")
    i, j = next((i, j) for i in range(n) for j in range(n) if not F.is_zero(T[i, j]))
    tinv = F.inv(T[i, j])
    for B in A.basis:
        M = T @ B @ T
        if M.is_zero():
            continue
        c = F.mul(M[i, j], tinv)
        if not F.is_central(c) or M != T.scale(c):
            continue
        E = (T @ B).scale(F.inv(c))
        k = next(k for k in range(n) if any(not F.is_zero(x) for x in E.column(k)))
        u = E.column(k)
        P = Matrix.from_columns(F, [u] + [list(v) for v in kernel_basis(E).basis], n)
        return E, P
    raise HypothesisViolation("no B in the algebra with T B T a nonzero central multiple of T")


@dataclass
class MatrixUnits:
    """Units E_ij = P e_ij P^-1 of A; P^-1 A P contains every standard unit."""

    P: Matrix
    units: list
    normalizers: list = field(default_factory=list)


def _units_recursive(A: MatrixSpan, seed):
    F, n = A.field, A.n
    if n == 1:
        if A.dim == 0:
            raise HypothesisViolation("zero corner algebra")
        return Matrix.identity(F, 1), []
    E, P = rank_one_idempotent(A, seed=seed)
    Pinv = inverse(P)
    conj = [Pinv @ X @ P for X in A.basis]
    corner = AlgebraBasis(F, n - 1, [X.submatrix(range(1, n), range(1, n)) for X in conj])
    if corner.dim == 0:
        raise HypothesisViolation(f"corner algebra of size {n - 1} is zero")
    Q1, norms = _units_recursive(corner, seed)
    R = P @ direct_sum([Matrix.identity(F, 1), Q1], F)
    Rinv = inverse(R)
    conj = [Rinv @ X @ R for X in A.basis]
    col = next(((i, X[i, 0]) for X in conj for i in range(1, n) if not F.is_zero(X[i, 0])), None)
    row = next(((j, X[0, j]) for X in conj for j in range(1, n) if not F.is_zero(X[0, j])), None)
    if col is None or row is None:
        raise HypothesisViolation(f"no link between E_11 and the corner of size {n - 1}")
    (i0, a), (j0, b) = col, row
    S = Matrix.diag(F, [b] + [F.one] * (n - 1))
    R = R @ S
    a2 = F.mul(a, b)
    if not F.is_central(a2):
        raise HypothesisViolation(f"normalizer {a2} is not central")
    return R, norms + [{"size": n, "i0": i0 + 1, "j0": j0 + 1, "a": a2, "b": b}]


def construct_matrix_units(A: MatrixSpan, seed: int = 0) -> MatrixUnits:
    """Similarity P with every standard unit in P^-1 A P, following the inductive argument."""
    F, n = A.field, A.n
    R, norms = _units_recursive(A, seed)
    Rinv = inverse(R)
    conj = MatrixSpan(F, n, [Rinv @ X @ R for X in A.basis])
    std = [[Matrix.unit(F, n, i, j) for j in range(n)] for i in range(n)]
    for row in std:
        for U in row:
            if not conj.contains(U):
                raise HypothesisViolation("a standard unit is missing after the similarity")
    units = [[R @ U @ Rinv for U in row] for row in std]
    _check_units(units, F, n)
    if F.commutative:
        if conj.dim != n * n:
            raise AssertionError("units do not span the algebra")
    else:
        if any(not F.is_central(x) for X in conj.basis for r in X.data for x in r) or conj.dim != n * n:
            raise AssertionError("conjugated algebra is not M_n of the center")
    return MatrixUnits(R, units, norms)


def _check_units(units, F, n):
    Z = Matrix.zeros(F, n)
    for i, j, k, l in itertools.product(range(n), repeat=4):
        want = units[i][l] if j == k else Z
        if units[i][j] @ units[k][l] != want:
            raise AssertionError(f"E_{i+1}{j+1} E_{k+1}{l+1} is wrong")
    total = Z
    for i in range(n):
        total = total + units[i][i]
    if not total.is_identity():
        raise AssertionError("units do not sum to I")


# -- Burnside --

@dataclass
class BurnsideReport:
    status: str  # certified, inapplicable, refuted-hypothesis
    n: int
    dimension: int
    hypotheses: bool
    hypothesis_witness: Matrix | None = None
    irreducibility: Verdict | None = None
    similarity: MatrixUnits | None = None
    reason: str = ""


def _split_failure(mats, F):
    for M in mats:
        v = f_triangularizable_single(M)
        if not v.holds:
            return M
    return None


def burnside_certify(G, field=None, n=None, unital=False, seed: int = 0, units=None) -> BurnsideReport:
    """Check the hypotheses on the closure and certify the full-algebra conclusion.

    ``units`` forces (or skips) the matrix-unit construction; by default it
    runs over the quaternions only.
    """
    gens, F, n = _common_shape(G, field, n)
    A = close(gens, unital=unital, field=F, n=n)
    bad = _split_failure(A.basis, F)
    if bad is not None:
        return BurnsideReport("inapplicable", n, A.dim, False, bad,
                              reason="a member of the algebra is not triangularizable over the center")
    irr = is_irreducible(A.basis, F, n, seed=seed) if A.dim else is_irreducible(gens, F, n, seed=seed)
    if not irr.holds:
        return BurnsideReport("inapplicable", n, A.dim, True, irreducibility=irr, reason="the algebra is reducible")
    build = (not F.commutative) if units is None else units
    if F.commutative and A.dim != n * n:
        rng = random.Random(seed)
        for _ in range(EXTENDED_SEARCH):
            X = A.random_element(rng)
            if not f_triangularizable_single(X).holds:
                return BurnsideReport("refuted-hypothesis", n, A.dim, False, X, irr,
                                      reason="an algebra member outside the basis is not triangularizable")
        raise AssertionError(f"irreducible algebra of triangularizable matrices with dimension {A.dim} < {n * n}")
    similarity = None
    if build:
        try:
            similarity = construct_matrix_units(A, seed)
        except (HypothesisViolation, RankOneNotFound) as exc:
            return BurnsideReport("refuted-hypothesis", n, A.dim, False, irreducibility=irr, reason=str(exc))
    return BurnsideReport("certified", n, A.dim, True, irreducibility=irr, similarity=similarity)


def triangularizable_algebra_test(G, field=None, n=None, seed: int = 0) -> Verdict:
    """Triangularizability of the generated algebra against its members.

    For a field that is not 2-closed the two agree; the verdict records both.
    """
    gens, F, n = _common_shape(G, field, n)
    A = close(gens, field=F, n=n)
    bad = _split_failure(A.basis, F)
    tri = triangularize(A.basis if A.dim else gens, F, n, seed=seed)
    members = bad is None
    if tri.triangularized and not members:
        raise AssertionError("triangularized algebra with a non-triangularizable member")
    if members and not tri.triangularized:
        rng = random.Random(seed)
        for _ in range(EXTENDED_SEARCH):
            X = A.random_element(rng)
            if not f_triangularizable_single(X).holds:
                bad, members = X, False
                break
        else:
            raise AssertionError("members triangularizable but the algebra is not")
    return Verdict(tri.triangularized, witness=tri.witness if not tri.triangularized else None,
                   info={"members": members, "member_witness": bad, "report": tri})


# -- the field audit and its counterexample --

def _divisors_above_one(n):
    return [k for k in range(2, n + 1) if n % k == 0]


def counterexample_algebra(F, n: int, k: int, seed: int = 0) -> AlgebraBasis:
    """The commutant of C + ... + C, C the companion of an irreducible degree-k polynomial."""
    if k < 2 or n % k:
        raise InputError(f"k={k} must be a divisor of n={n} with k > 1")
    f = find_irreducible_poly(F, k, seed)
    C = companion(f)
    A = direct_sum([C] * (n // k), F)
    alg = close(commutant([A]).basis, unital=True)
    expected = (n // k) ** 2 * k
    if alg.dim != expected or alg.dim >= n * n:
        raise AssertionError(f"counterexample has dimension {alg.dim}, expected {expected}")
    if min_poly(A) != f:
        raise AssertionError("minimal polynomial of the block matrix differs from f")
    irr = is_irreducible(alg.basis, F, n, seed=seed)
    if not irr.holds:
        raise AssertionError("counterexample algebra is reducible")
    alg.construction = {"poly": f, "companion": C, "matrix": A, "irreducibility": irr}
    return alg


@dataclass
class FieldAudit:
    field: object
    n: int
    conditions: dict
    k: int
    poly: object
    algebra: AlgebraBasis


def burnside_field_audit(F, n: int, seed: int = 0) -> FieldAudit:
    """Evaluate the five equivalent conditions for Burnside's theorem in M_n(F)."""
    if n < 2:
        raise InputError("the audit needs n > 1")
    closed = {k: is_k_closed(F, k, seed) for k in _divisors_above_one(n)}
    k = min(closed)
    alg = counterexample_algebra(F, n, k, seed)
    A = alg.construction["matrix"]
    family = list(alg.basis)
    closure_dim = close(family, unital=True).dim
    comm_dim = commutant(family).dim
    hyper = hyperinvariant_check(A, seed)
    conditions = {
        "i": {"holds": False, "witness": "proper irreducible algebra", "dimension": alg.dim},
        "ii": {"holds": closure_dim == n * n, "closure_dim": closure_dim},
        "iii": {"holds": comm_dim == 1, "commutant_dim": comm_dim},
        "iv": {"holds": not hyper.holds, "matrix": A, "min_poly": hyper.info["min_poly"]},
        "v": {"holds": all(v.holds for v in closed.values()),
              "witnesses": {kk: v.witness for kk, v in closed.items()}},
    }
    if any(c["holds"] for c in conditions.values()):
        raise AssertionError("a condition holds although the field is not k-closed")
    return FieldAudit(F, n, conditions, k, alg.construction["poly"], alg)


# -- Wedderburn --

@dataclass
class WedderburnReport:
    status: str  # certified, inapplicable, inconclusive
    reason: str = ""
    dimension: int = 0
    index: int | None = None
    chain: list = field(default_factory=list)
    witness: object = None


def wedderburn_verify(N, field=None, n=None) -> WedderburnReport:
    """A span of nilpotents closed under products is a nilpotent algebra."""
    mats, F, n = _common_shape(N, field, n)
    for M in mats:
        if not is_nilpotent(M).holds:
            return WedderburnReport("inapplicable", "non-nilpotent-member", witness=M)
    V = MatrixSpan(F, n, mats)
    for X, Y in itertools.product(mats, repeat=2):
        if not V.contains(X @ Y):
            return WedderburnReport("inapplicable", "not-an-algebra", V.dim, witness=(X, Y, X @ Y))
    if not V.is_closed():
        raise AssertionError("span failed the closure check")
    v = is_nilpotent_algebra(V)
    chain = v.info["chain"]
    if not v.holds:
        raise AssertionError("span of nilpotents closed under products is not nilpotent")
    if v.info["index"] > min(V.dim + 1, n) or any(b >= a for a, b in zip(chain, chain[1:])):
        raise AssertionError(f"nilpotency bound violated: chain {chain}")
    return WedderburnReport("certified", "", V.dim, v.info["index"], chain)


def wedderburn_matrix_verify(A: MatrixSpan, seed: int = 0) -> WedderburnReport:
    F, n = A.field, A.n
    bad = _split_failure(A.basis, F)
    if bad is not None:
        return WedderburnReport("inapplicable", "not-triangularizable", A.dim, witness=bad)
    C = F.center
    for B in A.basis:
        t = F.center_coords(B.trace())[0]
        if not C.is_zero(t):
            return WedderburnReport("inapplicable", "not-spanned-by-nilpotents", A.dim, witness=B)
    found = MatrixSpan(F, n)
    basis = A.basis
    pool = itertools.chain(basis, (x @ y for x, y in itertools.product(basis, repeat=2)))
    for X in pool:
        if found.dim == A.dim:
            break
        if not X.is_zero() and is_nilpotent(X).holds:
            found.add(X)
    rng = random.Random(seed)
    for _ in range(EXTENDED_SEARCH):
        if found.dim == A.dim:
            break
        X = A.random_element(rng)
        if is_nilpotent(X).holds:
            found.add(X)
    if found.dim < A.dim:
        return WedderburnReport("inconclusive", "not-verified", A.dim, witness=found.dim)
    v = is_nilpotent_algebra(A)
    if not v.holds or v.info["index"] > max(n, 1):
        raise AssertionError(f"A^n != 0 for an algebra spanned by nilpotents: chain {v.info['chain']}")
    return WedderburnReport("certified", "", A.dim, v.info["index"], v.info["chain"])


# -- semigroup ideals --

CONDITIONS = ("i", "ii", "iii", "iv", "v", "vi")


def _nsigma_holds(X, F, n):
    span, _ = nilpotent_span(X, F, n)
    return all(span.contains(x) for x in X)


def ideal_condition_holds(cond: str, A: Matrix, J, n: int | None = None) -> bool:
    """Does A satisfy the given condition of the semigroup-ideal statement?"""
    J = list(J)
    F = A.field
    n = A.rows if n is None else n
    if cond == "i":
        return _nsigma_holds([J1 @ A @ J2 for J1 in J for J2 in J], F, n)
    if cond == "ii":
        return _nsigma_holds([A @ Jx for Jx in J], F, n)
    if cond == "iii":
        return _nsigma_holds([Jx @ A for Jx in J], F, n)
    if cond == "iv":
        return all((J1 @ A @ J2).power(n).is_zero() for J1 in J for J2 in J)
    if cond == "v":
        return all((A @ Jx).power(n).is_zero() for Jx in J)
    if cond == "vi":
        return all((Jx @ A).power(n).is_zero() for Jx in J)
    raise InputError(f"unknown condition {cond!r}")


@dataclass
class IdealAudit:
    status: str
    semigroup_size: int
    ideal_size: int
    algebra_dim: int
    zero_satisfies: dict
    failures: dict
    counterexamples: dict
    trials: int
    seed: int


def semigroup_ideal_audit(S_gens, J_gens, field=None, n=None, trials: int = 100, seed: int = 0,
                          cap: int = DEFAULT_SEMIGROUP_CAP, samples=()) -> IdealAudit:
    """Only A = 0 satisfies each condition; nonzero samples must fail all six."""
    gens, F, n = _common_shape(S_gens, field, n)
    if n < 2:
        raise InputError("the statement needs n > 1")
    S = semigroup_close(gens, cap, F, n)
    if not is_irreducible(list(S), F, n, seed=seed).holds:
        raise HypothesisViolation("the semigroup is reducible")
    J = ideal_close(S, J_gens)
    if all(x.is_zero() for x in J):
        raise HypothesisViolation("the ideal is zero")
    alg = close(list(S), unital=True, field=F, n=n)
    zero = Matrix.zeros(F, n)
    zero_ok = {c: ideal_condition_holds(c, zero, J, n) for c in CONDITIONS}
    rng = random.Random(seed)
    tested = [M for M in samples if not M.is_zero()]
    while len(tested) < trials + len(samples):
        X = alg.random_element(rng)
        if not X.is_zero():
            tested.append(X)
    failures = {c: 0 for c in CONDITIONS}
    bad = {}
    for X in tested:
        for c in CONDITIONS:
            if ideal_condition_holds(c, X, J, n):
                bad.setdefault(c, X)
            else:
                failures[c] += 1
    ok = all(zero_ok.values()) and not bad
    return IdealAudit("certified" if ok else "refuted-hypothesis", len(S), len(J), alg.dim,
                      zero_ok, failures, bad, len(tested), seed)
