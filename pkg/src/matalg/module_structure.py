"""Invariant subspaces of matrix collections.

Irreducibility is decided with a MeatAxe-style search (Norton's criterion
with the Holt-Rees refinement): a proper spin is a witness, and a good
singular element whose kernel vector and dual vector both spin to the full
space certifies irreducibility.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .closure import AlgebraBasis, MatrixSpan, _common_shape, close
from .errors import DimensionMismatch, DomainMismatch, InconclusiveError, InputError
from .linalg import (
    Echelon,
    Matrix,
    Subspace,
    char_poly,
    inverse,
    kernel_basis,
    left_kernel_basis,
    min_poly,
)
from .linalg import spin as _spin
from .scalars.factor import factor
from .scalars.ops import poly_irreducible
from .verdict import Verdict

RANDOM_BUDGET = 64
PRODUCT_BUDGET = 256
EXHAUSTIVE_LIMIT = 2**14
# candidates whose polynomial cannot be factored before a search phase gives up
FACTOR_STRIKES = 8


def _as_generators(G):
    if isinstance(G, MatrixSpan):
        return list(G.basis)
    return list(G)


def spin(v, G, field=None) -> Subspace:
    """Smallest subspace containing v and invariant under G."""
    gens = _as_generators(G)
    if field is None:
        field = gens[0].field if gens else None
    if field is None:
        raise InputError("spin of an empty collection needs a field")
    return _spin(gens, v, field)


def spin_rows(w, G, field):
    """Echelon basis of the smallest row space containing w and closed under w -> w*g."""
    gens = _as_generators(G)
    ech = Echelon(field, len(w), side="left")
    queue = []
    if ech.add(w):
        queue.append(list(w))
    while queue:
        u = queue.pop()
        for g in gens:
            y = g.apply_right(u)
            if ech.add(y):
                queue.append(y)
    return ech.basis()


def annihilator(rows, field, n) -> Subspace:
    """{u : r u = 0 for every row r}."""
    if not rows:
        return Subspace.full(field, n)
    return kernel_basis(Matrix(field, rows, len(rows), n))


class IrreducibilityVerdict(Verdict):
    """Verdict whose witness is a proper invariant subspace when reducible.

    ``info`` holds the certificate: the method and, for MeatAxe
    certificates, the element, the irreducible factor, the kernel and dual
    vectors and the seed.
    """

    @property
    def irreducible(self):
        return self.holds

    @property
    def certificate(self):
        return self.info


def _reducible(witness, **info):
    return IrreducibilityVerdict(False, witness=witness, info=info)


def _irreducible(**info):
    return IrreducibilityVerdict(True, info=info)


def _candidates(A, seed):
    """Basis elements, products of basis pairs, then seeded random combinations."""
    basis = A.basis
    for i, B in enumerate(basis):
        yield ("basis", i), B
    count = 0
    for i, j in itertools.product(range(len(basis)), repeat=2):
        if count >= PRODUCT_BUDGET:
            break
        count += 1
        yield ("product", i, j), basis[i] @ basis[j]
    rng = random.Random(seed)
    for t in range(RANDOM_BUDGET):
        yield ("random", t), A.random_element(rng)


def _factors_of(x, commutative):
    poly = char_poly(x) if commutative else min_poly(x)
    try:
        return [f for f, _ in factor(poly)]
    except InconclusiveError:
        return None


def _standard_spins(gens, F, n):
    eye = Matrix.identity(F, n)
    for i in range(n):
        S = _spin(gens, eye.column(i), F)
        if S.is_proper_nonzero():
            return S
    return None


def is_irreducible(G, field=None, n=None, seed: int = 0) -> IrreducibilityVerdict:
    """Decide whether the collection G has no nontrivial common invariant subspace."""
    gens, F, n = _common_shape(_as_generators(G), field, n)
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        witness = Subspace.span(F, n, [0]) if n > 1 else None
        return _reducible(witness, method="zero-collection")
    if n == 1:
        return _irreducible(method="dimension-one")
    W = _standard_spins(nonzero, F, n)
    if W is not None:
        return _reducible(W, method="spin")
    A = close(nonzero, unital=True, verify=False)
    if F.commutative and A.dim == n * n:
        return _irreducible(method="burnside-full", dimension=A.dim)

    seen = set()
    strikes = 0
    for tag, x in _candidates(A, seed):
        if x in seen:
            continue
        seen.add(x)
        factors = _factors_of(x, F.commutative)
        if factors is None:
            strikes += 1
            if strikes >= FACTOR_STRIKES:
                break
            continue
        for p in factors:
            theta = p.eval_matrix(x)
            K = kernel_basis(theta)
            if K.dim == 0:
                continue
            for v in K.basis:
                S = _spin(nonzero, v, F)
                if S.dim < n:
                    return _reducible(S, method="meataxe-spin", element=tag, seed=seed)
            good = K.dim == p.degree if F.commutative else K.dim == 1
            if not good:
                continue
            w = left_kernel_basis(theta)[0]
            rows = spin_rows(w, nonzero, F)
            if len(rows) < n:
                return _reducible(annihilator(rows, F, n), method="meataxe-dual", element=tag, seed=seed)
            return _irreducible(method="meataxe", element=tag, matrix=x, factor=p,
                                kernel_vector=tuple(K.basis[0]), dual_vector=tuple(w), seed=seed)

    C = commutant(nonzero, F, n)
    phi = _singular_in(C, seed)
    if phi is not None:
        return _reducible(kernel_basis(phi), method="commutant-kernel", seed=seed)
    if F.commutative:
        e = _field_degree(C, seed)
        if e is not None and A.dim * C.dim == n * n:
            return _irreducible(method="double-centralizer", commutant_dim=C.dim, seed=seed)
        if F.order is not None and F.order**n <= EXHAUSTIVE_LIMIT:
            return _exhaustive(nonzero, F, n)
    raise InconclusiveError(f"irreducibility undecided after {RANDOM_BUDGET} random elements (seed {seed})")


def _singular_in(C: MatrixSpan, seed):
    """A nonzero singular element of C, or None."""
    F = C.field
    commutative = F.commutative
    strikes = 0
    for tag, y in _candidates(C, seed + 1):
        if y.is_zero():
            continue
        if kernel_basis(y).dim > 0:
            return y
        factors = _factors_of(y, commutative)
        if factors is None:
            strikes += 1
            if strikes >= FACTOR_STRIKES:
                return None
            continue
        for p in factors:
            z = p.eval_matrix(y)
            if not z.is_zero():
                return z
    return None


def _field_degree(C: MatrixSpan, seed):
    """dim C when some element generates C as a field over F, else None."""
    strikes = 0
    for tag, y in _candidates(C, seed + 2):
        m = min_poly(y)
        if m.degree == C.dim:
            v = poly_irreducible(m)
            if v.holds:
                return C.dim
            if v.holds is None:
                strikes += 1
                if strikes >= FACTOR_STRIKES:
                    return None
    return None


def _exhaustive(gens, F, n):
    for coords in itertools.product(list(F.elements()), repeat=n):
        lead = next((c for c in coords if not F.is_zero(c)), None)
        if lead is None or not F.is_one(lead):
            continue
        S = _spin(gens, list(coords), F)
        if S.dim < n:
            return _reducible(S, method="exhaustive")
    return _irreducible(method="exhaustive")


# -- commutant --

def commutant(G, field=None, n=None) -> AlgebraBasis:
    """{X : XB = BX for every B in G}, solved over the center field."""
    gens, F, n = _common_shape(_as_generators(G), field, n)
    C = F.center
    unknowns = []
    for i in range(n):
        for j in range(n):
            for u in F.center_basis():
                data = [[F.zero] * n for _ in range(n)]
                data[i][j] = u
                unknowns.append(Matrix(F, data, n, n))
    columns = []
    for Z in unknowns:
        col = []
        for B in gens:
            col.extend((Z @ B - B @ Z).center_vector())
        columns.append(col)
    rows = len(columns[0]) if columns else 0
    system = Matrix(C, [[col[r] for col in columns] for r in range(rows)], rows, len(columns))
    K = kernel_basis(system)
    out = AlgebraBasis(F, n, unital=True)
    for v in K.basis:
        X = Matrix.zeros(F, n)
        for c, Z in zip(v, unknowns):
            if not C.is_zero(c):
                X = X + Z.scale(F.embed(c))
        out.add(X)
    return out


# -- chains --

@dataclass
class SubspaceChain:
    """0 = M_0 < M_1 < ... < M_k = D^n; the first dims[i] columns of P span M_i."""

    field: object
    n: int
    dims: list
    P: Matrix
    quotient_actions: list = field(default_factory=list)

    @property
    def subspaces(self):
        cols = self.P.columns()
        return [Subspace(self.field, self.n, cols[:d]) for d in self.dims]

    @property
    def quotient_dims(self):
        return [b - a for a, b in zip(self.dims, self.dims[1:])]


def _least_witness(gens, F, m, seed):
    v = is_irreducible(gens, F, m, seed=seed)
    if v.holds:
        return None
    cands = [v.witness] if v.witness is not None else []
    eye = Matrix.identity(F, m)
    for i in range(m):
        S = _spin(gens, eye.column(i), F)
        if S.is_proper_nonzero():
            cands.append(S)
    return min(cands, key=lambda S: S.pivots)


def _adapted_basis(W: Subspace):
    """[basis of W | standard vectors completing it]."""
    F, m = W.field, W.ambient
    eye = Matrix.identity(F, m)
    cols = [list(v) for v in W.basis] + [eye.column(j) for j in range(m) if j not in set(W.pivots)]
    return Matrix.from_columns(F, cols, m)


def _chain_basis(gens, F, m, seed):
    """(P, dims) with the leading columns of P spanning a composition chain."""
    if m <= 1:
        return Matrix.identity(F, m), list(range(m + 1)) if m == 1 else [0]
    W = _least_witness(gens, F, m, seed)
    if W is None:
        return Matrix.identity(F, m), [0, m]
    w = W.dim
    P = _adapted_basis(W)
    Pinv = inverse(P)
    conj = [Pinv @ g @ P for g in gens]
    top = [g.submatrix(range(w), range(w)) for g in conj]
    bottom = [g.submatrix(range(w, m), range(w, m)) for g in conj]
    P1, d1 = _chain_basis(top, F, w, seed)
    P2, d2 = _chain_basis(bottom, F, m - w, seed)
    from .linalg import direct_sum

    return P @ direct_sum([P1, P2], F), d1 + [w + d for d in d2[1:]]


def composition_chain(G, field=None, n=None, seed: int = 0) -> SubspaceChain:
    """Maximal chain of invariant subspaces with irreducible quotients."""
    gens, F, n = _common_shape(_as_generators(G), field, n)
    P, dims = _chain_basis(gens, F, n, seed)
    Pinv = inverse(P)
    forms = [Pinv @ g @ P for g in gens]
    actions = []
    for a, b in zip(dims, dims[1:]):
        actions.append([g.submatrix(range(a, b), range(a, b)) for g in forms])
    return SubspaceChain(F, n, dims, P, actions)


@dataclass
class TriangularizationReport:
    status: str  # "triangularized" or "obstructed"
    chain: SubspaceChain
    P: Matrix | None = None
    triangular_forms: list = field(default_factory=list)
    inner_eigenvalues: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def triangularized(self):
        return self.status == "triangularized"


def triangularize(G, field=None, n=None, seed: int = 0) -> TriangularizationReport:
    gens, F, n = _common_shape(_as_generators(G), field, n)
    chain = composition_chain(gens, F, n, seed)
    for i, d in enumerate(chain.quotient_dims):
        if d > 1:
            lower, upper = chain.dims[i], chain.dims[i + 1]
            cols = chain.P.columns()
            witness = {
                "lower": Subspace(F, n, cols[:lower]),
                "upper": Subspace(F, n, cols[:upper]),
                "dim": d,
                "action": chain.quotient_actions[i],
            }
            return TriangularizationReport("obstructed", chain, witness=witness)
    Pinv = inverse(chain.P)
    forms = [Pinv @ g @ chain.P for g in gens]
    eig = [[f[i, i] for i in range(n)] for f in forms]
    return TriangularizationReport("triangularized", chain, chain.P, forms, eig)


def inner_eigenvalues(A: Matrix, chain) -> list:
    """Diagonal coefficients of A along a triangularizing chain."""
    subs = chain.subspaces if isinstance(chain, SubspaceChain) else list(chain)
    F, n = A.field, A.rows
    cols = []
    prev = Subspace.zero(F, n)
    for S in subs:
        if S.dim == 0:
            continue
        if S.dim != prev.dim + 1 or not S.contains_subspace(prev):
            raise DimensionMismatch("chain is not a maximal chain with one-dimensional quotients")
        x = next(v for v in S.basis if not prev.contains(v))
        cols.append(list(x))
        prev = S
    if len(cols) != n:
        raise DimensionMismatch("chain does not reach the whole space")
    P = Matrix.from_columns(F, cols, n)
    B = inverse(P) @ A @ P
    for i in range(n):
        for j in range(i):
            if not F.is_zero(B[i, j]):
                raise InputError("chain does not triangularize A")
    return [B[i, i] for i in range(n)]


# -- hyperinvariant subspaces and absolute irreducibility --

def hyperinvariant_check(A: Matrix, seed: int = 0) -> Verdict:
    """Does A have no nontrivial hyperinvariant subspace?

    Decided twice: jointly on A with its commutant, and by irreducibility
    of the minimal polynomial.  The two must agree.
    """
    F = A.field
    if not F.commutative:
        raise DomainMismatch("hyperinvariant_check needs a field domain")
    if not A.is_square():
        raise DimensionMismatch("square matrix expected")
    C = commutant([A])
    joint = is_irreducible([A] + list(C.basis), F, A.rows, seed=seed)
    m = min_poly(A)
    mv = poly_irreducible(m) if m.degree >= 1 else Verdict(False)
    if mv.unknown:
        raise InconclusiveError(mv.info.get("reason", "minimal polynomial undecided"))
    if joint.holds != mv.holds:
        raise AssertionError("joint irreducibility disagrees with the minimal polynomial")
    info = {"min_poly": m, "commutant_dim": C.dim, "joint": joint}
    if mv.holds:
        return Verdict(True, info=info)
    best = None
    for f, _ in factor(m):
        K = kernel_basis(f.eval_matrix(A))
        if K.is_proper_nonzero() and (best is None or K.pivots < best.pivots):
            best = K
    return Verdict(False, witness=best, info=info)


def is_absolutely_irreducible(G, field=None, n=None, seed: int = 0) -> Verdict:
    gens, F, n = _common_shape(_as_generators(G), field, n)
    if not F.commutative:
        raise DomainMismatch("absolute irreducibility is checked over fields")
    if all(g.is_zero() for g in gens):
        return Verdict(False, info={"dimension": 0})
    A = close(gens, unital=True)
    holds = A.dim == n * n
    irr = is_irreducible(gens, F, n, seed=seed)
    cdim = commutant(gens, F, n).dim
    if holds != (irr.holds and cdim == 1):
        raise AssertionError("closure dimension disagrees with irreducibility plus scalar commutant")
    return Verdict(holds, info={"dimension": A.dim, "commutant_dim": cdim})


# -- compression --

def compress(T: Matrix, S, with_basis=False):
    """The family T*S restricted to range(T), in a reduced basis of the range."""
    if T.is_zero():
        raise InputError("compression by the zero matrix")
    F = T.field
    R = Subspace(F, T.rows, T.columns())
    B = R.basis_matrix()
    piv = list(R.pivots)
    out = []
    seen = set()
    for s in S:
        X = (T @ s @ B).submatrix(piv, range(R.dim))
        if X not in seen:
            seen.add(X)
            out.append(X)
    return (out, R) if with_basis else out
