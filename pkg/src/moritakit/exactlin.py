"""Exact linear algebra over the rationals and prime fields.

Matrices are sparse (one ``{column: value}`` dict per row).  Rational entries
are ``gmpy2.mpq``; prime-field entries are ints in ``[0, p)``.  Nothing here
ever compares against a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

from . import _core
from .errors import DimensionMismatch, ParseError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldDesc:
    kind: str = "rationals"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == "prime_field":
            if not _is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, x):
        """Coerce ``x`` (int, str, Fraction, mpq) into the field."""
        if isinstance(x, str):
            x = parse_rational(x)
        if self.characteristic == 0:
            return mpq(x)
        p = self.characteristic
        if isinstance(x, int):
            return x % p
        q = mpq(x)
        den = int(q.denominator) % p
        if den == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return int(q.numerator) * pow(den, -1, p) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(int(x), -1, self.characteristic)
        return mpq(1) / x

    def neg(self, x):
        return (-x) % self.characteristic if self.characteristic else -x

    def fmt(self, x) -> str:
        if self.characteristic:
            return str(int(x))
        q = mpq(x)
        if q.denominator == 1:
            return str(int(q.numerator))
        return f"{int(q.numerator)}/{int(q.denominator)}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "characteristic": self.characteristic}

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldDesc()


def GF(p: int) -> FieldDesc:
    return FieldDesc("prime_field", p)


def parse_rational(text: str) -> mpq:
    """Parse ``"p/q"`` or an integer string exactly."""
    s = text.strip()
    if not s:
        raise ParseError(f"empty coefficient {text!r}")
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"malformed coefficient {text!r}") from None
    if d == 0:
        raise ParseError(f"zero denominator in coefficient {text!r}")
    return mpq(n, d)


# ---------------------------------------------------------------------------
# sparse vectors


def vec_add(u: dict, v: dict, field: FieldDesc, scale=1) -> dict:
    out = dict(u)
    p = field.characteristic
    for j, x in v.items():
        y = out.get(j, 0) + scale * x
        if p:
            y %= p
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return out


def vec_scale(v: dict, c, field: FieldDesc) -> dict:
    if not c:
        return {}
    p = field.characteristic
    if p:
        return {j: x * c % p for j, x in v.items() if x * c % p}
    return {j: x * c for j, x in v.items()}


def _clean(acc: dict, p: int) -> dict:
    if p:
        return {j: v % p for j, v in acc.items() if v % p}
    return {j: v for j, v in acc.items() if v}


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Sparse exact matrix.  Treat instances as immutable."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows: int, ncols: int, field: FieldDesc = QQ, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.rows = rows if rows is not None else [{} for _ in range(nrows)]

    # constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldDesc = QQ) -> Matrix:
        return cls(nrows, ncols, field)

    @classmethod
    def identity(cls, n: int, field: FieldDesc = QQ) -> Matrix:
        one = field.one
        return cls(n, n, field, [{i: one} for i in range(n)])

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence], field: FieldDesc = QQ, ncols: int | None = None) -> Matrix:
        rows = []
        for r in entries:
            d = {}
            for j, x in enumerate(r):
                y = field(x)
                if y:
                    d[j] = y
            rows.append(d)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        return cls(len(rows), ncols, field, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[dict], nrows: int, field: FieldDesc = QQ) -> Matrix:
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, x in col.items():
                rows[i][j] = x
        return cls(nrows, len(cols), field, rows)

    @classmethod
    def from_rows(cls, rows: Sequence[dict], ncols: int, field: FieldDesc = QQ) -> Matrix:
        return cls(len(rows), ncols, field, [dict(r) for r in rows])

    # basic protocol -----------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over {self.field}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self) -> list[list]:
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def is_zero(self) -> bool:
        return not any(self.rows)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(len(r) == 1 and r.get(i) == 1 for i, r in enumerate(self.rows))

    # arithmetic ---------------------------------------------------------
    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        p = self.field.characteristic
        orows = other.rows
        out = []
        for row in self.rows:
            if not row:
                out.append({})
                continue
            acc: dict = {}
            get = acc.get
            for k, a in row.items():
                for j, b in orows[k].items():
                    acc[j] = get(j, 0) + a * b
            out.append(_clean(acc, p))
        return Matrix(self.nrows, other.ncols, self.field, out)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        f = self.field
        return Matrix(self.nrows, self.ncols, f, [vec_add(a, b, f) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        f = self.field
        return Matrix(self.nrows, self.ncols, f, [vec_add(a, b, f, -1) for a, b in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c) -> Matrix:
        f = self.field
        c = f(c) if not isinstance(c, type(f.one)) else c
        return Matrix(self.nrows, self.ncols, f, [vec_scale(r, c, f) for r in self.rows])

    def apply(self, v: dict) -> dict:
        """Matrix times a sparse column vector."""
        p = self.field.characteristic
        out = {}
        for i, row in enumerate(self.rows):
            if not row:
                continue
            s = 0
            for j, x in v.items():
                y = row.get(j)
                if y:
                    s += x * y
            if p:
                s %= p
            if s:
                out[i] = s
        return out

    def transpose(self) -> Matrix:
        rows: list[dict] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                rows[j][i] = x
        return Matrix(self.ncols, self.nrows, self.field, rows)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def columns(self) -> list[dict]:
        return self.transpose().rows

    def trace(self):
        s = 0
        for i, r in enumerate(self.rows):
            s += r.get(i, 0)
        p = self.field.characteristic
        return s % p if p else self.field(s)

    def trace_of_product(self, other: Matrix):
        """``trace(self @ other)`` without forming the product."""
        s = 0
        orows = other.rows
        for i, r in enumerate(self.rows):
            for k, x in r.items():
                y = orows[k].get(i)
                if y:
                    s += x * y
        p = self.field.characteristic
        return s % p if p else self.field(s)

    def flatten(self) -> dict:
        n = self.ncols
        out = {}
        for i, r in enumerate(self.rows):
            base = i * n
            for j, x in r.items():
                out[base + j] = x
        return out

    @classmethod
    def unflatten(cls, v: dict, nrows: int, ncols: int, field: FieldDesc = QQ) -> Matrix:
        rows: list[dict] = [{} for _ in range(nrows)]
        for k, x in v.items():
            i, j = divmod(k, ncols)
            rows[i][j] = x
        return cls(nrows, ncols, field, rows)

    def select_rows(self, idx: Sequence[int]) -> Matrix:
        return Matrix(len(idx), self.ncols, self.field, [dict(self.rows[i]) for i in idx])

    def select_cols(self, idx: Sequence[int]) -> Matrix:
        pos = {c: k for k, c in enumerate(idx)}
        rows = [{pos[j]: x for j, x in r.items() if j in pos} for r in self.rows]
        return Matrix(self.nrows, len(idx), self.field, rows)

    def power(self, k: int) -> Matrix:
        out = Matrix.identity(self.nrows, self.field)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out


def hstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("nothing to stack")
    n = mats[0].nrows
    rows: list[dict] = [{} for _ in range(n)]
    off = 0
    for m in mats:
        if m.nrows != n:
            raise DimensionMismatch("row counts differ")
        for i, r in enumerate(m.rows):
            for j, x in r.items():
                rows[i][off + j] = x
        off += m.ncols
    return Matrix(n, off, mats[0].field, rows)


def vstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("nothing to stack")
    n = mats[0].ncols
    rows = []
    for m in mats:
        if m.ncols != n:
            raise DimensionMismatch("column counts differ")
        rows.extend(dict(r) for r in m.rows)
    return Matrix(len(rows), n, mats[0].field, rows)


def block_diag(mats: Sequence[Matrix], field: FieldDesc = QQ) -> Matrix:
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append({off + j: x for j, x in r.items()})
        off += m.ncols
    return Matrix(len(rows), off, mats[0].field if mats else field, rows)


# ---------------------------------------------------------------------------
# elimination


def rref_rows(rows: Iterable[dict], ncols: int, field: FieldDesc) -> tuple[list[dict], list[int]]:
    return _core.rref_rows(list(rows), ncols, field.characteristic)


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    rows, piv = rref_rows(m.rows, m.ncols, m.field)
    rank = len(rows)
    rows = rows + [{} for _ in range(m.nrows - rank)]
    return Matrix(m.nrows, m.ncols, m.field, rows), rank, piv


def rank(m: Matrix) -> int:
    return len(rref_rows(m.rows, m.ncols, m.field)[0])


def rank_of_vectors(vectors: Iterable[dict], ncols: int, field: FieldDesc) -> int:
    return len(rref_rows(vectors, ncols, field)[0])


def _null_vectors(rows: list[dict], piv: list[int], ncols: int, field: FieldDesc) -> list[dict]:
    pivset = set(piv)
    one = field.one
    p = field.characteristic
    # column -> [(pivot, coefficient)] for the free columns
    free_hits: dict[int, list] = {}
    for r, pc in zip(rows, piv):
        for j, x in r.items():
            if j != pc:
                free_hits.setdefault(j, []).append((pc, x))
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {}
        for pc, x in free_hits.get(f, ()):
            v[pc] = (-x) % p if p else -x
        v[f] = one
        out.append(v)
    return out


def null_vectors(rows: Iterable[dict], ncols: int, field: FieldDesc) -> list[dict]:
    """Basis of ``{x : r.x = 0 for every row r}``; one vector per free column."""
    red, piv = rref_rows(rows, ncols, field)
    return _null_vectors(red, piv, ncols, field)


def kernel(m: Matrix) -> Subspace:
    return Subspace.from_vectors(null_vectors(m.rows, m.ncols, m.field), m.ncols, m.field)


def solve(m: Matrix, rhs: Matrix) -> Matrix | None:
    """One solution ``x`` of ``m @ x == rhs`` or ``None`` when inconsistent."""
    if m.nrows != rhs.nrows:
        raise DimensionMismatch(f"{m.shape} and right-hand side {rhs.shape}")
    n, k = m.ncols, rhs.ncols
    aug = []
    for r, b in zip(m.rows, rhs.rows):
        row = dict(r)
        for j, x in b.items():
            row[n + j] = x
        aug.append(row)
    red, piv = rref_rows(aug, n + k, m.field)
    if piv and piv[-1] >= n:
        return None
    cols: list[dict] = [{} for _ in range(k)]
    for row, pc in zip(red, piv):
        for j, x in row.items():
            if j >= n:
                cols[j - n][pc] = x
    return Matrix.from_columns(cols, n, m.field)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch("inverse of a non-square matrix")
    x = solve(m, Matrix.identity(m.nrows, m.field))
    if x is None or rank(m) != m.nrows:
        raise ZeroDivisionError("matrix is singular")
    return x


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Row space with its reduced echelon basis as canonical representative."""

    __slots__ = ("ambient_dim", "field", "rows", "pivots", "_pivpos")

    def __init__(self, ambient_dim: int, field: FieldDesc, rows: list[dict], pivots: list[int]):
        self.ambient_dim = ambient_dim
        self.field = field
        self.rows = rows
        self.pivots = pivots
        self._pivpos = None

    @classmethod
    def from_vectors(cls, vectors: Iterable[dict], ambient_dim: int, field: FieldDesc = QQ) -> Subspace:
        rows, piv = rref_rows(vectors, ambient_dim, field)
        return cls(ambient_dim, field, rows, piv)

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldDesc = QQ) -> Subspace:
        return cls(ambient_dim, field, [], [])

    @classmethod
    def full(cls, ambient_dim: int, field: FieldDesc = QQ) -> Subspace:
        one = field.one
        return cls(ambient_dim, field, [{i: one} for i in range(ambient_dim)], list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> Matrix:
        return Matrix(len(self.rows), self.ambient_dim, self.field, [dict(r) for r in self.rows])

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.pivots == other.pivots and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def coords(self, v: dict) -> list:
        """Coordinates of ``v`` (assumed in the subspace) in the echelon basis."""
        z = self.field.zero
        return [v.get(c, z) for c in self.pivots]

    def reduce(self, v: dict) -> dict:
        """Remainder of ``v`` modulo the subspace; zero on every pivot column."""
        out = dict(v)
        p = self.field.characteristic
        for row, c in zip(self.rows, self.pivots):
            f = out.get(c)
            if not f:
                continue
            for j, x in row.items():
                y = out.get(j, 0) - f * x
                if p:
                    y %= p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def contains_vector(self, v: dict) -> bool:
        return not self.reduce(v)

    def contains(self, other: Subspace) -> bool:
        self._check(other)
        return all(self.contains_vector(r) for r in other.rows)

    def free_columns(self) -> list[int]:
        ps = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in ps]

    def _check(self, other: Subspace) -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.from_vectors(self.rows + other.rows, self.ambient_dim, self.field)

    def intersection(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.ambient_dim, self.field)
        # x.A = y.B  <=>  [x, y] lies in the left kernel of [[A], [-B]]
        a, b = self.rows, other.rows
        na = len(a)
        stacked = Matrix(na + len(b), self.ambient_dim, self.field,
                         [dict(r) for r in a] + [vec_scale(r, self.field(-1), self.field) for r in b])
        left = null_vectors(stacked.transpose().rows, na + len(b), self.field)
        out = []
        for xy in left:
            v: dict = {}
            for i, c in xy.items():
                if i < na:
                    v = vec_add(v, a[i], self.field, c)
            out.append(v)
        return Subspace.from_vectors(out, self.ambient_dim, self.field)

    __and__ = intersection


def subspace_ops(a: Subspace, b: Subspace) -> dict:
    """Sum, intersection, containment (``b`` inside ``a``) and equality."""
    a._check(b)
    return {
        "sum": a + b,
        "intersection": a.intersection(b),
        "containment": a.contains(b),
        "equality": a == b,
    }


def row_space(m: Matrix) -> Subspace:
    return Subspace.from_vectors(m.rows, m.ncols, m.field)


def column_space(m: Matrix) -> Subspace:
    return Subspace.from_vectors(m.transpose().rows, m.nrows, m.field)


def to_fraction(x) -> Fraction:
    q = mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


class Echelon:
    """Incrementally grown echelon basis, kept fully reduced.

    Used by closure loops that add vectors one at a time and need membership
    tests in between.
    """

    __slots__ = ("ambient_dim", "field", "_rows")

    def __init__(self, ambient_dim: int, field: FieldDesc = QQ):
        self.ambient_dim = ambient_dim
        self.field = field
        self._rows: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: dict) -> dict:
        rows = self._rows
        p = self.field.characteristic
        out = dict(v)
        for c in [c for c in out if c in rows]:
            f = out.get(c)
            if not f:
                continue
            for j, x in rows[c].items():
                y = out.get(j, 0) - f * x
                if p:
                    y %= p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def insert(self, v: dict) -> bool:
        """Add ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        f = self.field
        piv = min(r)
        r = vec_scale(r, f.inv(r[piv]), f)
        for other in self._rows.values():
            c = other.get(piv)
            if c:
                new = vec_add(other, r, f, -c)
                other.clear()
                other.update(new)
        self._rows[piv] = r
        return True

    def subspace(self) -> Subspace:
        piv = sorted(self._rows)
        return Subspace(self.ambient_dim, self.field, [dict(self._rows[c]) for c in piv], piv)
