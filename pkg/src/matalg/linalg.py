"""Dense exact matrices and elimination over a scalar domain.

Matrices act on the left of column vectors.  Over the quaternions column
vectors form a right vector space, so column spaces are echelonized with
right scalars and row reduction uses left row operations.
"""

from __future__ import annotations

from .errors import DimensionMismatch, DomainMismatch, InputError, SingularMatrix
from .scalars.fields import QQ
from .scalars.ops import poly_irreducible, poly_splits
from .scalars.poly import Poly
from .verdict import Verdict


class Matrix:
    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field, data, rows=None, cols=None):
        self.field = field
        self.data = tuple(tuple(r) for r in data)
        self.rows = len(self.data) if rows is None else rows
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        self.cols = cols
        if len(self.data) != self.rows or any(len(r) != cols for r in self.data):
            raise DimensionMismatch("ragged matrix data")
        self._hash = None

    # -- constructors --
    @classmethod
    def from_rows(cls, field, rows):
        rows = [[field.parse(c) if isinstance(c, (int, str, dict, list)) else c for c in r] for r in rows]
        return cls(field, rows)

    @classmethod
    def from_ints(cls, field, rows):
        return cls(field, [[field.from_int(c) for c in r] for r in rows])

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(field, [[field.zero] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def unit(cls, field, n, i, j, m=None):
        """E_ij (0-based) of size n x m."""
        m = n if m is None else m
        data = [[field.zero] * m for _ in range(n)]
        data[i][j] = field.one
        return cls(field, data, n, m)

    @classmethod
    def diag(cls, field, values):
        n = len(values)
        data = [[field.zero] * n for _ in range(n)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls(field, data, n, n)

    @classmethod
    def from_columns(cls, field, columns, n=None):
        columns = [list(c) for c in columns]
        if not columns:
            return cls(field, [[] for _ in range(n or 0)], n or 0, 0)
        return cls(field, list(zip(*columns)))

    @classmethod
    def from_center_vector(cls, field, n, vec, m=None):
        m = n if m is None else m
        deg = field.center_degree
        it = iter(range(0, n * m * deg, deg))
        rows = []
        for _ in range(n):
            row = []
            for _ in range(m):
                k = next(it)
                row.append(field.from_center_coords(vec[k:k + deg]))
            rows.append(row)
        return cls(field, rows, n, m)

    # -- basic protocol --
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def _check(self, other):
        if self.field != other.field:
            raise DomainMismatch(f"matrices over {self.field} and {other.field}")

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.field.matmul(self.data, other.data), self.rows, other.cols)

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        add = self.field.add
        return Matrix(self.field, [[add(x, y) for x, y in zip(r, s)] for r, s in zip(self.data, other.data)],
                      self.rows, self.cols)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        sub = self.field.sub
        return Matrix(self.field, [[sub(x, y) for x, y in zip(r, s)] for r, s in zip(self.data, other.data)],
                      self.rows, self.cols)

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(x) for x in r] for r in self.data], self.rows, self.cols)

    def scale(self, c, side="left"):
        """c*A (left) or A*c (right)."""
        return Matrix(self.field, [self.field.scale(r, c, side) for r in self.data], self.rows, self.cols)

    def transpose(self):
        return Matrix(self.field, list(zip(*self.data)) if self.rows else [], self.cols, self.rows)

    def conj_transpose(self):
        conj = self.field.conj
        return Matrix(self.field, [[conj(x) for x in col] for col in zip(*self.data)] if self.rows else [],
                      self.cols, self.rows)

    def apply(self, v):
        dot = self.field.dot
        return [dot(r, v) for r in self.data]

    def apply_right(self, w):
        """Row vector times matrix."""
        dot = self.field.dot
        return [dot(w, col) for col in zip(*self.data)]

    def column(self, j):
        return [r[j] for r in self.data]

    def columns(self):
        return [list(c) for c in zip(*self.data)]

    def flatten(self):
        return [x for r in self.data for x in r]

    def center_vector(self):
        """Coordinates over the center field, entry by entry."""
        F = self.field
        if F.center_degree == 1:
            return [x for r in self.data for x in r]
        cc = F.center_coords
        return [c for r in self.data for x in r for c in cc(x)]

    def is_zero(self):
        z = self.field.is_zero
        return all(z(x) for r in self.data for x in r)

    def is_identity(self):
        F = self.field
        return self.is_square() and all(
            (F.is_one(x) if i == j else F.is_zero(x)) for i, r in enumerate(self.data) for j, x in enumerate(r))

    def trace(self):
        F = self.field
        acc = F.zero
        for i in range(min(self.rows, self.cols)):
            acc = F.add(acc, self.data[i][i])
        return acc

    def power(self, e: int):
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        if e < 0:
            return inverse(self).power(-e)
        result = Matrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def submatrix(self, rows, cols):
        return Matrix(self.field, [[self.data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_strings()})"

    def to_strings(self):
        fmt = self.field.format
        return [[fmt(x) if isinstance(fmt(x), str) else str(x) for x in r] for r in self.data]

    def __str__(self):
        cells = [[str(x) if not isinstance(x, tuple) else str(list(x)) for x in r] for r in self.data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _row_scale_one(F, row, p, side):
    piv = row[p]
    if F.is_one(piv):
        return list(row)
    return F.scale(row, F.inv(piv), side)


class Echelon:
    """Incremental reduced echelon basis of a space of vectors.

    ``side`` fixes which side scalars multiply on: ``"right"`` for column
    vectors (subspaces of D^n) and ``"left"`` for row vectors.  Over a
    commutative field both agree.  With ``track=True`` each basis row
    remembers its expression in the vectors handed to :meth:`add`.
    """

    def __init__(self, field, length, side="right", track=False):
        self.field = field
        self.length = length
        self.side = side
        self.track = track
        self.rows = {}  # pivot -> row
        self.combos = {}  # pivot -> {input index: coefficient}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [tuple(self.rows[p]) for p in sorted(self.rows)]

    def reduce(self, v):
        """Residual of v after subtracting its component in the span.

        With tracking also returns {pivot: coefficient} of the subtracted part.
        """
        F = self.field
        v = list(v)
        coefs = {}
        is_zero = F.is_zero
        for p in sorted(self.rows):
            c = v[p]
            if not is_zero(c):
                v = F.axpy(v, c, self.rows[p], "left" if self.side == "left" else "right")
                coefs[p] = c
        return (v, coefs) if self.track else v

    def _lead(self, v):
        is_zero = self.field.is_zero
        for i, x in enumerate(v):
            if not is_zero(x):
                return i
        return None

    def contains(self, v):
        r = self.reduce(v)
        if self.track:
            r = r[0]
        return self._lead(r) is None

    def add(self, v):
        """Insert v; return True if the span grew."""
        F = self.field
        idx = self.count
        self.count += 1
        if self.track:
            r, coefs = self.reduce(v)
        else:
            r = self.reduce(v)
        p = self._lead(r)
        if p is None:
            return False
        piv = r[p]
        r = _row_scale_one(F, r, p, self.side)
        if self.track:
            combo = {idx: F.one}
            for q, c in coefs.items():
                for k, a in self.combos[q].items():
                    combo[k] = F.sub(combo.get(k, F.zero), F.mul(c, a))
            inv = F.inv(piv)
            combo = {k: F.mul(inv, a) for k, a in combo.items() if not F.is_zero(a)}
        side = "left" if self.side == "left" else "right"
        for q, row in self.rows.items():
            c = row[p]
            if not F.is_zero(c):
                self.rows[q] = F.axpy(row, c, r, side)
                if self.track:
                    cq = dict(self.combos[q])
                    for k, a in combo.items():
                        cq[k] = F.sub(cq.get(k, F.zero), F.mul(c, a))
                    self.combos[q] = {k: a for k, a in cq.items() if not F.is_zero(a)}
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        return True

    def express(self, v):
        """Coefficients (by input index) writing v in the span, or None."""
        if not self.track:
            raise ValueError("express needs a tracking echelon")
        F = self.field
        r, coefs = self.reduce(v)
        if self._lead(r) is not None:
            return None
        out = {}
        for q, c in coefs.items():
            for k, a in self.combos[q].items():
                out[k] = F.add(out.get(k, F.zero), F.mul(c, a))
        return {k: a for k, a in out.items() if not F.is_zero(a)}

    def copy(self):
        e = Echelon(self.field, self.length, self.side, self.track)
        e.rows = {p: list(r) for p, r in self.rows.items()}
        e.combos = {p: dict(c) for p, c in self.combos.items()}
        e.count = self.count
        return e


class Subspace:
    """Subspace of D^n given by a reduced echelon basis of column vectors."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, vectors=()):
        ech = Echelon(field, ambient, side="right")
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in D^{ambient}")
            ech.add(v)
        self.field = field
        self.ambient = ambient
        self.basis = tuple(ech.basis())
        self.pivots = tuple(ech.pivots())

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Matrix.identity(field, n).columns())

    @classmethod
    def span(cls, field, n, indices):
        """span of standard basis vectors e_i (0-based)."""
        vecs = []
        for i in indices:
            v = [field.zero] * n
            v[i] = field.one
            vecs.append(v)
        return cls(field, n, vecs)

    @property
    def dim(self):
        return len(self.basis)

    def _echelon(self):
        ech = Echelon(self.field, self.ambient, side="right")
        for p, v in zip(self.pivots, self.basis):
            ech.rows[p] = list(v)
        return ech

    def contains(self, v):
        return self._echelon().contains(v)

    def contains_subspace(self, other):
        ech = self._echelon()
        return all(ech.contains(v) for v in other.basis)

    def is_proper_nonzero(self):
        return 0 < self.dim < self.ambient

    def basis_matrix(self):
        return Matrix.from_columns(self.field, self.basis, self.ambient)

    def is_invariant(self, A):
        ech = self._echelon()
        return all(ech.contains(A.apply(v)) for v in self.basis)

    def __add__(self, other):
        return Subspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, pivots={list(self.pivots)})"


# -- elimination --

def rref(M: Matrix):
    """Reduced row-echelon form by left row operations.

    Returns ``(R, rank, W)`` with ``W @ M == R``.  Pivots are normalized by
    left-multiplying the pivot row by the inverse of the pivot.
    """
    F = M.field
    m, n = M.rows, M.cols
    rows = [list(r) + [F.one if i == j else F.zero for j in range(m)] for i, r in enumerate(M.data)]
    r = 0
    is_zero = F.is_zero
    for c in range(n):
        piv = None
        for i in range(r, m):
            if not is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = _row_scale_one(F, rows[r], c, "left")
        prow = rows[r]
        for i in range(m):
            if i != r:
                a = rows[i][c]
                if not is_zero(a):
                    rows[i] = F.axpy(rows[i], a, prow, "left")
        r += 1
        if r == m:
            break
    R = Matrix(F, [row[:n] for row in rows], m, n)
    W = Matrix(F, [row[n:] for row in rows], m, m)
    return R, r, W


def rank(M: Matrix) -> int:
    ech = Echelon(M.field, M.cols, side="left")
    for row in M.data:
        ech.add(row)
    return ech.dim


def kernel_basis(M: Matrix) -> Subspace:
    """{x : Mx = 0} as a right subspace of D^cols."""
    F = M.field
    R, r, _ = rref(M)
    pivots = []
    for i in range(r):
        for j, x in enumerate(R.data[i]):
            if not F.is_zero(x):
                pivots.append(j)
                break
    free = [j for j in range(M.cols) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [F.zero] * M.cols
        v[f] = F.one
        for i, p in enumerate(pivots):
            v[p] = F.neg(R.data[i][f])
        vecs.append(v)
    return Subspace(F, M.cols, vecs)


def left_kernel_basis(M: Matrix):
    """Row vectors y with y M = 0, via (yM)* = M* y*."""
    F = M.field
    K = kernel_basis(M.conj_transpose())
    return [[F.conj(x) for x in v] for v in K.basis]


def image(M: Matrix) -> Subspace:
    return Subspace(M.field, M.rows, M.columns())


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    _, r, W = rref(M)
    if r < M.rows:
        raise SingularMatrix(f"matrix has rank {r} < {M.rows}")
    return W


def is_invertible(M: Matrix) -> bool:
    return M.is_square() and rank(M) == M.rows


def solve_right(M: Matrix, b):
    """Some x with Mx = b, or None."""
    F = M.field
    R, r, W = rref(M)
    c = W.apply(b)
    if any(not F.is_zero(x) for x in c[r:]):
        return None
    x = [F.zero] * M.cols
    for i in range(r):
        for j, a in enumerate(R.data[i]):
            if not F.is_zero(a):
                x[j] = c[i]
                break
    return x


# -- polynomials of a matrix --

def _require_square(A):
    if not A.is_square():
        raise DimensionMismatch(f"expected a square matrix, got {A.shape}")


def min_poly(A: Matrix, F=None) -> Poly:
    """Monic minimal polynomial of A over the center field.

    The first linear dependence among I, A, A^2, ... in center coordinates.
    """
    _require_square(A)
    D = A.field
    C = D.center
    if F is not None and F != C:
        raise DomainMismatch(f"minimal polynomial over {F} requested for matrices over {D}")
    n = A.rows
    ech = Echelon(C, n * n * D.center_degree, track=True)
    P = Matrix.identity(D, n)
    k = 0
    while True:
        coeffs = ech.express(P.center_vector())
        if coeffs is not None:
            out = [C.neg(coeffs.get(i, C.zero)) for i in range(k)] + [C.one]
            return Poly(C, out)
        ech.add(P.center_vector())
        P = P @ A
        k += 1


def char_poly(A: Matrix) -> Poly:
    """Characteristic polynomial det(xI - A) by Berkowitz's algorithm."""
    _require_square(A)
    F = A.field
    if not F.commutative:
        raise DomainMismatch("characteristic polynomial needs a commutative field; use min_poly")
    n = A.rows
    if n == 0:
        return Poly(F, [F.one])
    a = A.data
    # descending coefficients of the char poly of the trailing submatrix
    vec = [F.one, F.neg(a[n - 1][n - 1])]
    for r in range(n - 2, -1, -1):
        m = n - r - 1  # size of the trailing block A'
        R = list(a[r][r + 1:])
        Ccol = [a[i][r] for i in range(r + 1, n)]
        col = [F.one, F.neg(a[r][r])]
        # R A'^k C for k = 0..m-1
        w = Ccol
        for _ in range(m):
            col.append(F.neg(F.dot(R, w)))
            w = [F.dot(a[i][r + 1:], w) for i in range(r + 1, n)]
        # Toeplitz (m+2) x (m+1) lower triangular times vec
        new = []
        for i in range(m + 2):
            acc = F.zero
            for j in range(min(i, m) + 1):
                acc = F.add(acc, F.mul(col[i - j], vec[j]))
            new.append(acc)
        vec = new
    return Poly(F, list(reversed(vec)))


def companion(f: Poly) -> Matrix:
    if f.degree < 1:
        raise InputError("companion matrix needs degree >= 1")
    if not f.is_monic():
        raise InputError("companion matrix needs a monic polynomial")
    F = f.field
    n = f.degree
    data = [[F.zero] * n for _ in range(n)]
    for i in range(1, n):
        data[i][i - 1] = F.one
    for i in range(n):
        data[i][n - 1] = F.neg(f.coeffs[i])
    return Matrix(F, data, n, n)


def direct_sum(blocks, field=None) -> Matrix:
    blocks = list(blocks)
    if not blocks:
        return Matrix(field or QQ, [], 0, 0)
    F = blocks[0].field
    for B in blocks:
        if B.field != F:
            raise DomainMismatch("direct sum of matrices over different domains")
    rows = sum(B.rows for B in blocks)
    cols = sum(B.cols for B in blocks)
    data = [[F.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for B in blocks:
        for i, row in enumerate(B.data):
            data[r0 + i][c0:c0 + B.cols] = row
        r0 += B.rows
        c0 += B.cols
    return Matrix(F, data, rows, cols)


def conjugate(P: Matrix, A: Matrix) -> Matrix:
    """P^-1 A P."""
    return inverse(P) @ A @ P


def spin(gens, v, field=None) -> Subspace:
    """Smallest subspace containing v and invariant under every generator."""
    gens = list(gens)
    F = field or gens[0].field
    n = len(v)
    ech = Echelon(F, n, side="right")
    queue = []
    if ech.add(v):
        queue.append(list(v))
    while queue:
        w = queue.pop()
        for g in gens:
            u = g.apply(w)
            if ech.add(u):
                queue.append(u)
    sub = Subspace.__new__(Subspace)
    sub.field, sub.ambient = F, n
    sub.basis, sub.pivots = tuple(ech.basis()), tuple(ech.pivots())
    return sub


# -- single-matrix tests --

def _kernel_witness(A: Matrix, factors):
    """Proper invariant subspace ker f(A), least by pivots."""
    best = None
    for f in factors:
        K = kernel_basis(f.eval_matrix(A))
        if K.is_proper_nonzero() and (best is None or K.pivots < best.pivots):
            best = K
    return best


def matrix_is_irreducible(A: Matrix) -> Verdict:
    """Is the single matrix A irreducible on F^n?

    Decided by irreducibility of the characteristic polynomial; a
    reducible verdict carries a proper invariant subspace.
    """
    _require_square(A)
    F = A.field
    if not F.commutative:
        raise DomainMismatch("matrix_is_irreducible needs a field domain")
    n = A.rows
    if n == 1:
        if A.is_zero():
            return Verdict(False, info={"method": "zero", "reason": "zero action"})
        return Verdict(True, info={"method": "dimension-one"})
    chi = char_poly(A)
    v = poly_irreducible(chi)
    if v.holds:
        return Verdict(True, info={"method": "char-poly", "char_poly": chi})
    if v.holds is False:
        from .scalars.factor import factor

        fs = factor(chi)
        witness = _kernel_witness(A, [g for g, _ in fs])
        if witness is None:
            # min poly is irreducible and smaller than chi: a cyclic subspace is proper
            witness = spin([A], Matrix.identity(F, n).column(0))
        return Verdict(False, witness=witness, info={"method": "char-poly", "char_poly": chi})
    from .module_structure import is_irreducible

    res = is_irreducible([A])
    return Verdict(res.holds, witness=res.witness, info={"method": "meataxe", "char_poly": chi})


def is_nilpotent(A: Matrix) -> Verdict:
    _require_square(A)
    n = A.rows
    P = A
    for k in range(1, n + 1):
        if P.is_zero():
            return Verdict(True, info={"index": k})
        P = P @ A
    if n == 0:
        return Verdict(True, info={"index": 1})
    return Verdict(False, witness=A.power(n), info={"index": None})


def f_triangularizable_single(A: Matrix, F=None) -> Verdict:
    """Does the minimal polynomial over the center split?

    ``info["eigenvalues"]`` maps each root of the minimal polynomial to its
    multiplicity there.
    """
    f = min_poly(A, F)
    if f.degree == 0:
        return Verdict(True, info={"eigenvalues": {}, "min_poly": f})
    v = poly_splits(f)
    return Verdict(v.holds, witness=v.witness, info={"eigenvalues": v.info["roots"], "min_poly": f})
