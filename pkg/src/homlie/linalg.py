"""Dense exact linear algebra: matrices, echelon subspaces and presented quotients.

Conventions: vectors are tuples of field elements; a matrix ``A`` with shape
``(m, n)`` represents the map ``K^n -> K^m``, ``x -> A x``.  Subspaces are
stored through their reduced row-echelon basis, which makes equality of
subspaces plain tuple equality.
"""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, FieldMismatch, ShapeError
from .fields import Field

Vector = tuple


def zero_vector(field: Field, n: int) -> Vector:
    z = field.zero
    return (z,) * n


def unit_vector(field: Field, n: int, i: int) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Iterable) -> bool:
    return not any(v)


def lincomb(field: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    """``sum_k coeffs[k] * vectors[k]`` in ``K^n``."""
    acc = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    acc[i] = acc[i] + c * x
    return tuple(acc)


def outer(u: Sequence, v: Sequence) -> Vector:
    """Coordinates of ``u (x) v`` in the lexicographic basis ``e_i (x) f_j``."""
    return tuple(a * b for a in u for b in v)


# ---------------------------------------------------------------------------
# row reduction kernel


def _rref_rows(field: Field, rows: Sequence[Sequence], ncols: int):
    """Gauss-Jordan elimination; returns (rows in rref, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.one / m[r][c]
        row = [x * inv if x else x for x in m[r]]
        m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    mi = m[i]
                    for j in range(c, ncols):
                        if row[j]:
                            mi[j] = mi[j] - f * row[j]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in m], pivots


class _Echelon:
    """Incrementally maintained reduced row-echelon basis."""

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence) -> list:
        v = list(v)
        for piv, row in zip(self.pivots, self.rows):
            c = v[piv]
            if c:
                for j in range(piv, self.n):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return v

    def add(self, v: Sequence) -> bool:
        v = self.reduce(v)
        j = next((k for k, x in enumerate(v) if x), None)
        if j is None:
            return False
        inv = self.field.one / v[j]
        v = [x * inv if x else x for x in v]
        for row in self.rows:
            c = row[j]
            if c:
                for k in range(j, self.n):
                    if v[k]:
                        row[k] = row[k] - c * v[k]
        pos = next((i for i, p in enumerate(self.pivots) if p > j), len(self.pivots))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, j)
        return True

    @property
    def full(self) -> bool:
        return len(self.rows) == self.n


class Matrix:
    """Immutable dense matrix over a single field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows, ncols: int | None = None, *, trusted: bool = False):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("matrix rows have unequal length")
        if not trusted:
            rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    # constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], n, trusted=True)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [unit_vector(field, n, i) for i in range(n)], n, trusted=True)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        columns = [tuple(field(x) for x in c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise ShapeError("column of wrong length")
        rows = [tuple(c[i] for c in columns) for i in range(nrows)]
        return cls(field, rows, len(columns), trusted=True)

    @classmethod
    def from_function(cls, field: Field, n_in: int, n_out: int, f: Callable[[Vector], Sequence]) -> "Matrix":
        """Matrix of a linear map given by its action on the standard basis."""
        cols = [f(unit_vector(field, n_in, j)) for j in range(n_in)]
        return cls.from_columns(field, cols, n_out)

    # basic access -------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self) -> tuple:
        return tuple(self.column(j) for j in range(self.ncols))

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.columns, self.nrows, trusted=True)

    def _same_field(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} matrix combined with {other.field!r} matrix")

    # arithmetic ---------------------------------------------------------
    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ShapeError(f"vector of length {len(v)} applied to {self.shape} matrix")
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        self._same_field(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [self.apply(c) for c in other.columns]
        rows = [tuple(c[i] for c in cols) for i in range(self.nrows)]
        return Matrix(self.field, rows, other.ncols, trusted=True)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, [vadd(a, b) for a, b in zip(self.rows, other.rows)], self.ncols, trusted=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix(self.field, [vsub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols, trusted=True)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, [vscale(c, r) for r in self.rows], self.ncols, trusted=True)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix<{self.field!r} {self.nrows}x{self.ncols}>[{body}]"

    # linear algebra -----------------------------------------------------
    def rref(self):
        rows, pivots = _rref_rows(self.field, self.rows, self.ncols)
        return Matrix(self.field, rows, self.ncols, trusted=True), pivots

    def rank(self) -> int:
        return len(_rref_rows(self.field, self.rows, self.ncols)[1])

    def kernel(self) -> "Subspace":
        rows, pivots = _rref_rows(self.field, self.rows, self.ncols)
        return _kernel_from_rref(self.field, rows, pivots, self.ncols)

    def image(self) -> "Subspace":
        return Subspace.span(self.field, self.nrows, self.columns)

    def is_injective(self) -> bool:
        return self.rank() == self.ncols

    def is_surjective(self) -> bool:
        return self.rank() == self.nrows

    def restrict_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [self.rows[i] for i in idx], self.ncols, trusted=True)


def hstack(field: Field, nrows: int, *blocks: Matrix) -> Matrix:
    cols = []
    for b in blocks:
        if b.nrows != nrows:
            raise ShapeError("hstack blocks need equal row counts")
        cols.extend(b.columns)
    return Matrix.from_columns(field, cols, nrows)


def vstack(field: Field, ncols: int, *blocks: Matrix) -> Matrix:
    rows = []
    for b in blocks:
        if b.ncols != ncols:
            raise ShapeError("vstack blocks need equal column counts")
        rows.extend(b.rows)
    return Matrix(field, rows, ncols, trusted=True)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, matching the lexicographic tensor basis."""
    a._same_field(b)
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Matrix(a.field, rows, a.ncols * b.ncols, trusted=True)


def _kernel_from_rref(field: Field, rows, pivots, ncols: int) -> "Subspace":
    pivset = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        vecs.append(v)
    return Subspace.span(field, ncols, vecs)


class RowReduction(NamedTuple):
    rref: Matrix
    rank: int
    kernel: "Subspace"
    image: "Subspace"


def row_reduce(m: Matrix) -> RowReduction:
    """Reduced row-echelon form, rank, kernel and column space of ``m``."""
    rows, pivots = _rref_rows(m.field, m.rows, m.ncols)
    rref = Matrix(m.field, rows, m.ncols, trusted=True)
    return RowReduction(rref, len(pivots), _kernel_from_rref(m.field, rows, pivots, m.ncols), m.image())


def solve_linear(a: Matrix, b: Sequence):
    """One solution of ``a x = b`` or ``None`` when the system is inconsistent.

    The solution is the one with every free variable set to zero after
    row reduction, so it is reproducible.
    """
    if len(b) != a.nrows:
        raise ShapeError(f"right-hand side of length {len(b)} for {a.shape} system")
    field = a.field
    aug = [tuple(r) + (field(x),) for r, x in zip(a.rows, b)]
    rows, pivots = _rref_rows(field, aug, a.ncols + 1)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [field.zero] * a.ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][a.ncols]
    return tuple(x)


def solve_columns(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve ``a X = b`` column by column (free variables zero)."""
    cols = []
    for col in b.columns:
        x = solve_linear(a, col)
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_columns(a.field, cols, a.ncols)


# ---------------------------------------------------------------------------
# subspaces and quotients


class Subspace:
    """A subspace of ``K^n`` held by its reduced row-echelon basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(b) for b in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        ech = _Echelon(field, ambient)
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in K^{ambient}")
            ech.add(v)
            if ech.full:
                break
        return cls(field, ambient, ech.rows, ech.pivots)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [unit_vector(field, ambient, i) for i in range(ambient)], range(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient - len(self.basis)

    def _check(self, other: "Subspace"):
        if other.field != self.field:
            raise FieldMismatch("subspaces over different fields")
        if other.ambient != self.ambient:
            raise DimensionMismatch(f"ambient K^{self.ambient} vs K^{other.ambient}")

    def residual(self, v: Sequence) -> Vector:
        """``v`` minus its component along the basis (zero iff ``v`` is in here)."""
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(v)} tested in K^{self.ambient}")
        v = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = v[p]
            if c:
                for j in range(p, self.ambient):
                    if b[j]:
                        v[j] = v[j] - c * b[j]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.residual(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the echelon basis; ValueError if ``v`` is outside."""
        if not self.contains(v):
            raise ValueError("vector does not lie in the subspace")
        return tuple(self.field(v[p]) for p in self.pivots)

    def vector(self, coords: Sequence) -> Vector:
        return lincomb(self.field, coords, self.basis, self.ambient)

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    __le__ = issubset

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient, self.basis + other.basis)

    __add__ = sum

    def annihilator(self) -> "Subspace":
        """Vectors ``y`` with ``b . y = 0`` for every basis vector ``b``."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient)
        return _kernel_from_rref(self.field, self.basis, self.pivots, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        eqs = self.annihilator().basis + other.annihilator().basis
        if not eqs:
            return Subspace.full(self.field, self.ambient)
        return Matrix(self.field, eqs, self.ambient, trusted=True).kernel()

    __and__ = intersect

    def basis_matrix(self) -> Matrix:
        """``ambient x dim`` matrix whose columns are the basis vectors."""
        return Matrix.from_columns(self.field, self.basis, self.ambient)

    def coordinate_matrix(self) -> Matrix:
        """``dim x ambient`` matrix reading off coordinates of vectors in the subspace."""
        z, o = self.field.zero, self.field.one
        rows = [tuple(o if j == p else z for j in range(self.ambient)) for p in self.pivots]
        return Matrix(self.field, rows, self.ambient, trusted=True)

    def image_under(self, a: Matrix) -> "Subspace":
        if a.ncols != self.ambient:
            raise DimensionMismatch("map does not start at this ambient space")
        return Subspace.span(self.field, a.nrows, [a.apply(b) for b in self.basis])

    def preimage_under(self, a: Matrix) -> "Subspace":
        """``{x : a x in self}``."""
        if a.nrows != self.ambient:
            raise DimensionMismatch("map does not land in this ambient space")
        ann = self.annihilator()
        if not ann.basis:
            return Subspace.full(self.field, a.ncols)
        return (Matrix(self.field, ann.basis, self.ambient, trusted=True) @ a).kernel()

    def restrict(self, sub: "Subspace") -> "Subspace":
        """``sub`` (contained in self) expressed in this subspace's coordinates."""
        self._check(sub)
        return Subspace.span(self.field, self.dim, [self.coordinates(b) for b in sub.basis])

    def quotient(self, sub: "Subspace" | None = None) -> "PresentedQuotient":
        """Quotient ``self / sub``.

        When ``self`` is the whole ambient space the quotient is presented on
        ambient coordinates; otherwise on the coordinates of ``self``.
        """
        if sub is None:
            return PresentedQuotient(self)
        self._check(sub)
        if not sub.issubset(self):
            raise DimensionMismatch("quotient by a subspace that is not contained")
        if self.dim == self.ambient:
            return PresentedQuotient(sub)
        return PresentedQuotient(self.restrict(sub))


class PresentedQuotient:
    """``K^n / R`` with an explicit projection ``P`` and section ``S``.

    The quotient basis is given by the standard vectors at the non-pivot
    columns of ``R``; ``P S = id`` and ``ker P = R``.
    """

    __slots__ = ("field", "ambient", "relations", "projection", "section", "free")

    def __init__(self, relations: Subspace):
        field, n = relations.field, relations.ambient
        self.field = field
        self.ambient = n
        self.relations = relations
        pivset = set(relations.pivots)
        free = [j for j in range(n) if j not in pivset]
        self.free = tuple(free)
        z, o = field.zero, field.one
        where = {f: t for t, f in enumerate(free)}
        prows = [[z] * n for _ in free]
        for f, t in where.items():
            prows[t][f] = o
        for p, b in zip(relations.pivots, relations.basis):
            for f, t in where.items():
                if b[f]:
                    prows[t][p] = -b[f]
        self.projection = Matrix(field, prows, n, trusted=True)
        self.section = Matrix.from_columns(field, [unit_vector(field, n, f) for f in free], n)

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, v: Sequence) -> Vector:
        return self.projection.apply(v)

    def lift(self, c: Sequence) -> Vector:
        return self.section.apply(c)

    def __repr__(self):
        return f"PresentedQuotient(ambient={self.ambient}, dim={self.dim})"


def subspace_ops(kind: str, a: Subspace, b: Subspace):
    """Dispatch for sum / intersect / contains / quotient on two subspaces."""
    if kind == "sum":
        return a.sum(b)
    if kind == "intersect":
        return a.intersect(b)
    if kind == "contains":
        return b.issubset(a)
    if kind == "quotient":
        return a.quotient(b)
    raise ValueError(f"unknown subspace operation {kind!r}")


def span_of_columns(m: Matrix) -> Subspace:
    return m.image()
