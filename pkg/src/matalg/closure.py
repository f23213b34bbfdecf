"""Spans of matrices, generated algebras, semigroups and semigroup ideals."""

from __future__ import annotations

from collections import deque

from .errors import CapExceeded, DimensionMismatch, DomainMismatch, InputError
from .linalg import Echelon, Matrix, is_nilpotent
from .verdict import Verdict

DEFAULT_SEMIGROUP_CAP = 10_000


def _common_shape(mats, field=None, n=None):
    mats = list(mats)
    for M in mats:
        if not M.is_square():
            raise DimensionMismatch(f"expected square matrices, got {M.shape}")
        if field is None:
            field = M.field
        elif M.field != field:
            raise DomainMismatch(f"matrix over {M.field} among matrices over {field}")
        if n is None:
            n = M.rows
        elif M.rows != n:
            raise DimensionMismatch(f"matrix of size {M.rows} among size {n}")
    if field is None or n is None:
        raise InputError("field and size are needed when no matrices are given")
    return mats, field, n


class MatrixSpan:
    """Linear span of n x n matrices over the center field.

    Matrices are flattened to center coordinates (n^2 over a field, 4n^2
    over the quaternions) and kept in reduced echelon form.
    """

    def __init__(self, field, n, mats=()):
        self.field = field
        self.n = n
        self._ech = Echelon(field.center, n * n * field.center_degree)
        self._basis = None
        for M in mats:
            self.add(M)

    def add(self, M) -> bool:
        if M.field != self.field or M.shape != (self.n, self.n):
            raise DimensionMismatch("matrix does not live in this span's ambient space")
        grew = self._ech.add(M.center_vector())
        if grew:
            self._basis = None
        return grew

    @property
    def dim(self) -> int:
        return self._ech.dim

    def __len__(self):
        return self._ech.dim

    @property
    def basis(self):
        if self._basis is None:
            self._basis = [Matrix.from_center_vector(self.field, self.n, v) for v in self._ech.basis()]
        return self._basis

    def contains(self, M) -> bool:
        return self._ech.contains(M.center_vector())

    def random_element(self, rng):
        C = self.field.center
        acc = Matrix.zeros(self.field, self.n)
        for B in self.basis:
            c = C.random(rng)
            if not C.is_zero(c):
                acc = acc + B.scale(self.field.embed(c))
        return acc

    def is_closed(self) -> bool:
        bs = self.basis
        return all(self.contains(x @ y) for x in bs for y in bs)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, dim={self.dim}, field={self.field})"


class AlgebraBasis(MatrixSpan):
    """Span closed under multiplication; ``unital`` records whether I was adjoined."""

    def __init__(self, field, n, mats=(), unital=False):
        super().__init__(field, n, mats)
        self.unital = unital
        self.generators = ()


def close(generators, unital=False, field=None, n=None, verify=True) -> AlgebraBasis:
    """The algebra generated by the matrices (with I when ``unital``).

    Worklist closure: every new element is multiplied on both sides by
    every element inserted so far, in FIFO order.
    """
    gens, field, n = _common_shape(generators, field, n)
    A = AlgebraBasis(field, n, unital=unital)
    A.generators = tuple(gens)
    elems = []
    queue = deque()
    seeds = ([Matrix.identity(field, n)] if unital else []) + gens
    for g in seeds:
        if A.add(g):
            queue.append(g)
    while queue:
        x = queue.popleft()
        elems.append(x)
        for y in list(elems):
            for prod in ((x @ y, y @ x) if y is not x else (x @ x,)):
                if A.add(prod):
                    queue.append(prod)
    if verify and not A.is_closed():
        raise AssertionError("closure is not closed under multiplication")
    return A


def contains(A: MatrixSpan, M: Matrix) -> bool:
    return A.contains(M)


def product_space(X: MatrixSpan, Y: MatrixSpan) -> MatrixSpan:
    """span{x y : x in X, y in Y}."""
    if X.n != Y.n or X.field != Y.field:
        raise DimensionMismatch("product of spans in different ambient spaces")
    out = MatrixSpan(X.field, X.n)
    for x in X.basis:
        for y in Y.basis:
            out.add(x @ y)
    return out


def power_chain(A: MatrixSpan) -> list[int]:
    """Dimensions of A, A^2, A^3, ... until 0 or stabilization."""
    dims = [A.dim]
    X = A
    while dims[-1] > 0:
        X = product_space(X, A)
        dims.append(X.dim)
        if dims[-1] == dims[-2]:
            break
    return dims


def is_nilpotent_algebra(A: MatrixSpan) -> Verdict:
    dims = power_chain(A)
    if dims[-1] != 0:
        return Verdict(False, info={"chain": dims, "index": None})
    index = len(dims)
    if index > A.dim + 1 or (A.n > 0 and index > max(A.n, 1)):
        raise AssertionError(f"nilpotency index {index} exceeds the bounds for dim {A.dim}, size {A.n}")
    return Verdict(True, info={"chain": dims, "index": index})


def nilpotent_span(C, field=None, n=None):
    """(span of the nilpotent members of C, those members)."""
    mats, field, n = _common_shape(C, field, n)
    witnesses = [M for M in mats if is_nilpotent(M).holds]
    return MatrixSpan(field, n, witnesses), witnesses


class SemigroupSet:
    """Finite set of matrices, in discovery order."""

    def __init__(self, field, n, elements):
        self.field = field
        self.n = n
        self.elements = tuple(elements)
        self._set = frozenset(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, M):
        return M in self._set

    def is_closed(self) -> bool:
        return all(x @ y in self._set for x in self.elements for y in self.elements)

    def __repr__(self):
        return f"SemigroupSet(n={self.n}, size={len(self)}, field={self.field})"


def semigroup_close(generators, cap: int = DEFAULT_SEMIGROUP_CAP, field=None, n=None) -> SemigroupSet:
    """All finite products of the generators; CapExceeded beyond ``cap`` elements."""
    if cap < 1:
        raise InputError("cap must be >= 1")
    gens, field, n = _common_shape(generators, field, n)
    seen = {}
    queue = deque()
    for g in gens:
        if g not in seen:
            seen[g] = None
            queue.append(g)
    if len(seen) > cap:
        raise CapExceeded(cap)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x @ g
            if y not in seen:
                seen[y] = None
                if len(seen) > cap:
                    raise CapExceeded(cap)
                queue.append(y)
    return SemigroupSet(field, n, seen)


def ideal_close(S, J_gens) -> SemigroupSet:
    """Smallest J containing J_gens with S J and J S inside J."""
    J_gens = list(J_gens)
    S = list(S)
    field = S[0].field if S else (J_gens[0].field if J_gens else None)
    n = S[0].rows if S else (J_gens[0].rows if J_gens else 0)
    seen = {}
    queue = deque()
    for g in J_gens:
        if g not in seen:
            seen[g] = None
            queue.append(g)
    while queue:
        x = queue.popleft()
        for s in S:
            for y in (s @ x, x @ s):
                if y not in seen:
                    seen[y] = None
                    queue.append(y)
    return SemigroupSet(field, n, seen)
