"""JSON wire formats for fields, scalars, matrices, subspaces and polynomials."""

from __future__ import annotations

import re

from .errors import InputError
from .linalg import Matrix, Subspace
from .quaternion import HQ, QuaternionRing
from .scalars.fields import QQ, ExtensionField, PrimeField, RationalField
from .scalars.poly import Poly


def parse_field(desc):
    """Domain from a descriptor object or a short string such as "Q", "H", "GF(7)"."""
    if isinstance(desc, str):
        s = desc.strip().upper().replace(" ", "")
        if s in ("Q", "QQ"):
            return QQ
        if s in ("H", "HQ", "QUATERNIONS"):
            return HQ
        m = re.fullmatch(r"GF[(:]?(\d+)\)?", s)
        if m:
            return PrimeField(int(m.group(1)))
        raise InputError(f"unknown field {desc!r}")
    if not isinstance(desc, dict) or "field" not in desc:
        raise InputError(f"field descriptor must be an object with a 'field' key, got {desc!r}")
    kind = desc["field"]
    if kind == "Q":
        return QQ
    if kind == "H":
        return HQ
    if kind == "GF":
        return PrimeField(desc.get("p"))
    if kind == "GFext":
        p = desc.get("p")
        modulus = desc.get("modulus")
        if not isinstance(modulus, list):
            raise InputError("GFext descriptor needs a 'modulus' coefficient list")
        PrimeField(p)
        return ExtensionField(p, modulus)
    raise InputError(f"unknown field kind {kind!r}")


def field_descriptor(F):
    return F.descriptor()


def scalar_to_json(F, x):
    return F.format(x)


def scalar_from_json(F, obj, where="scalar"):
    try:
        return F.parse(obj)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def matrix_to_json(M: Matrix):
    fmt = M.field.format
    return {"rows": M.rows, "cols": M.cols, "entries": [[fmt(x) for x in r] for r in M.data]}


def matrix_from_json(F, obj, n=None, where="matrix"):
    if isinstance(obj, list):
        obj = {"entries": obj}
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError(f"{where}: expected an object with 'entries'")
    entries = obj["entries"]
    if not isinstance(entries, list) or any(not isinstance(r, list) for r in entries):
        raise InputError(f"{where}.entries: expected a list of rows")
    rows = obj.get("rows", len(entries))
    cols = obj.get("cols", len(entries[0]) if entries else 0)
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise InputError(f"{where}: entries do not match rows={rows}, cols={cols}")
    if n is not None and (rows != n or cols != n):
        raise InputError(f"{where}: expected a {n}x{n} matrix, got {rows}x{cols}")
    data = [[scalar_from_json(F, x, f"{where}.entries[{i}][{j}]") for j, x in enumerate(r)]
            for i, r in enumerate(entries)]
    return Matrix(F, data, rows, cols)


def subspace_to_json(S: Subspace | None):
    if S is None:
        return None
    fmt = S.field.format
    return {"ambient": S.ambient, "dim": S.dim, "basis": [[fmt(x) for x in v] for v in S.basis]}


def subspace_from_json(F, obj):
    vecs = [[F.parse(x) for x in v] for v in obj["basis"]]
    return Subspace(F, obj["ambient"], vecs)


def vector_to_json(F, v):
    return [F.format(x) for x in v]


def poly_to_json(f: Poly | None):
    if f is None:
        return None
    fmt = f.field.format
    return {"coefficients": [fmt(c) for c in f.coeffs], "display": str(f)}


def is_quaternion_field(F):
    return isinstance(F, QuaternionRing)


def is_rational_field(F):
    return isinstance(F, RationalField)
