"""Hom-Lie algebras given by structure constants, their morphisms, and the
ideal / center / quotient calculus.

Conventions used throughout the package:

* ``table[i][j]`` is the coordinate vector of ``[e_i, e_j]``;
* ``alpha`` is a square :class:`Matrix` whose column ``i`` is ``alpha(e_i)``.

Constructing a :class:`HomLieAlgebra` only checks shapes.  Whether the data
satisfy skew-symmetry, Hom-Jacobi and multiplicativity is the business of
:func:`validate_hom_lie`; this keeps broken candidates representable so they
can be reported on.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    NotAlphaInvariant,
    NotAnIdeal,
    PreconditionViolated,
    ShapeError,
)
from .fields import Field
from .linalg import (
    Matrix,
    PresentedQuotient,
    Subspace,
    is_zero_vector,
    unit_vector,
    vadd,
    vsub,
    zero_vector,
)


def format_vector(field: Field, v: Sequence, symbol: str = "e") -> str:
    """Render a coordinate vector as a combination of basis symbols, e.g. ``e1 - 2*e3``."""
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        s = field.format(c)
        neg = s.startswith("-") and not any(ch in s[1:] for ch in "+-")
        if neg:
            s = s[1:]
        if any(ch in s for ch in "+-"):
            s = f"({s})"
        term = f"{symbol}{i + 1}" if s == "1" else f"{s}*{symbol}{i + 1}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append((" - " if neg else " + ") + term)
    return "".join(parts) if parts else "0"


class HomLieAlgebra:
    """Finite-dimensional algebra with a bracket table and a twisting map."""

    __slots__ = ("field", "dim", "table", "alpha", "_sparse", "name")

    def __init__(self, field: Field, table, alpha: Matrix, name: str = ""):
        n = alpha.nrows
        if alpha.ncols != n:
            raise ShapeError(f"alpha must be square, got {alpha.shape}")
        if alpha.field != field:
            raise ShapeError("alpha lives over another field")
        table = tuple(tuple(tuple(field(x) for x in v) for v in row) for row in table)
        if len(table) != n or any(len(row) != n for row in table) or any(len(v) != n for row in table for v in row):
            raise ShapeError(f"bracket table must be {n}x{n}x{n}")
        self.field = field
        self.dim = n
        self.table = table
        self.alpha = alpha
        self.name = name
        self._sparse = [[[(k, x) for k, x in enumerate(v) if x] for v in row] for row in table]

    # construction helpers ------------------------------------------------
    @classmethod
    def from_brackets(cls, field: Field, dim: int, brackets: dict, alpha, name: str = "") -> "HomLieAlgebra":
        """Build from ``{(i, j): vector}`` on pairs with ``i < j`` (0-based), mirroring the rest."""
        z = zero_vector(field, dim)
        table = [[z] * dim for _ in range(dim)]
        for (i, j), v in brackets.items():
            v = tuple(field(x) for x in v)
            table[i][j] = v
            table[j][i] = tuple(-x for x in v)
        if not isinstance(alpha, Matrix):
            alpha = Matrix(field, alpha, dim) if dim else Matrix.zeros(field, 0, 0)
        return cls(field, table, alpha, name)

    @classmethod
    def abelian(cls, field: Field, dim: int, alpha: Matrix | None = None, name: str = "") -> "HomLieAlgebra":
        if alpha is None:
            alpha = Matrix.identity(field, dim)
        return cls.from_brackets(field, dim, {}, alpha, name)

    # arithmetic ------------------------------------------------------------
    def basis(self, i: int):
        return unit_vector(self.field, self.dim, i)

    def bracket(self, u: Sequence, v: Sequence):
        acc = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, x in row[j]:
                    acc[k] = acc[k] + c * x
        return tuple(acc)

    def apply_alpha(self, v: Sequence):
        return self.alpha.apply(v)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> [x, y]``."""
        cols = [self.bracket(x, self.basis(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def bracket_matrix(self) -> Matrix:
        """``dim x dim^2`` matrix sending ``e_i (x) e_j`` to ``[e_i, e_j]``."""
        cols = [self.table[i][j] for i in range(self.dim) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def is_abelian(self) -> bool:
        return all(not any(row) for row in self._sparse)

    def brackets(self) -> dict:
        """Nonzero brackets on pairs ``i < j``."""
        out = {}
        for i, j in combinations(range(self.dim), 2):
            if any(self.table[i][j]):
                out[(i, j)] = self.table[i][j]
        return out

    def __eq__(self, other):
        return (
            isinstance(other, HomLieAlgebra)
            and self.field == other.field
            and self.table == other.table
            and self.alpha == other.alpha
        )

    def __hash__(self):
        return hash((self.field, self.table, self.alpha))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"HomLieAlgebra<{self.field!r} dim={self.dim}{label}>"


@dataclass(frozen=True)
class Violation:
    """One failing instance of an axiom: which axiom, on which basis indices, by how much."""

    axiom: str
    indices: tuple
    residual: tuple

    def describe(self, field: Field) -> str:
        idx = ",".join(str(i + 1) for i in self.indices)
        return f"{self.axiom} fails at ({idx}): residual {format_vector(field, self.residual)}"


@dataclass
class Validation:
    """Outcome of a validator: the checked value and the list of violations found."""

    value: object
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def hom_lie_violations(L: HomLieAlgebra, stop_after: int | None = None) -> list:
    """Every failing basis instance of skew-symmetry, Hom-Jacobi and multiplicativity."""
    n = L.dim
    out = []

    def full():
        return stop_after is not None and len(out) >= stop_after

    for i in range(n):
        if any(L.table[i][i]):
            out.append(Violation("skew-symmetry", (i, i), L.table[i][i]))
        for j in range(i + 1, n):
            r = vadd(L.table[i][j], L.table[j][i])
            if not is_zero_vector(r):
                out.append(Violation("skew-symmetry", (i, j), r))
    if full():
        return out[:stop_after]
    skew_ok = not out
    a = [L.alpha.column(i) for i in range(n)]
    triples = combinations(range(n), 3) if skew_ok else ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    for i, j, k in triples:
        r = L.bracket(a[i], L.table[j][k])
        r = vadd(r, L.bracket(a[k], L.table[i][j]))
        r = vadd(r, L.bracket(a[j], L.table[k][i]))
        if not is_zero_vector(r):
            out.append(Violation("hom-jacobi", (i, j, k), r))
            if full():
                return out
    pairs = combinations(range(n), 2) if skew_ok else ((i, j) for i in range(n) for j in range(n))
    for i, j in pairs:
        r = vsub(L.apply_alpha(L.table[i][j]), L.bracket(a[i], a[j]))
        if not is_zero_vector(r):
            out.append(Violation("multiplicativity", (i, j), r))
            if full():
                return out
    return out


def validate_hom_lie(L: HomLieAlgebra) -> Validation:
    """Check the three axioms on basis instances (all are multilinear)."""
    return Validation(L, hom_lie_violations(L))


def is_hom_lie(L: HomLieAlgebra) -> bool:
    return not hom_lie_violations(L, stop_after=1)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class HomMorphism:
    source: HomLieAlgebra
    target: HomLieAlgebra
    matrix: Matrix

    def __call__(self, v):
        return self.matrix.apply(v)

    def compose(self, other: "HomMorphism") -> "HomMorphism":
        """``self o other``."""
        return HomMorphism(other.source, self.target, self.matrix @ other.matrix)

    def kernel(self) -> Subspace:
        return self.matrix.kernel()

    def image(self) -> Subspace:
        return self.matrix.image()

    def is_surjective(self) -> bool:
        return self.matrix.is_surjective()

    def is_injective(self) -> bool:
        return self.matrix.is_injective()


def morphism_violations(F: Matrix, src: HomLieAlgebra, tgt: HomLieAlgebra) -> list:
    if F.shape != (tgt.dim, src.dim):
        raise ShapeError(f"map of shape {F.shape} between dims {src.dim} -> {tgt.dim}")
    out = []
    cols = [F.column(i) for i in range(src.dim)]
    for i, j in combinations(range(src.dim), 2):
        r = vsub(F.apply(src.table[i][j]), tgt.bracket(cols[i], cols[j]))
        if not is_zero_vector(r):
            out.append(Violation("bracket-preservation", (i, j), r))
    for i in range(src.dim):
        r = vsub(F.apply(src.alpha.column(i)), tgt.apply_alpha(cols[i]))
        if not is_zero_vector(r):
            out.append(Violation("alpha-commutation", (i,), r))
    return out


def check_morphism(F: Matrix, src: HomLieAlgebra, tgt: HomLieAlgebra) -> Validation:
    """Is ``F`` a Hom-Lie morphism ``src -> tgt``?  Value is the HomMorphism."""
    return Validation(HomMorphism(src, tgt, F), morphism_violations(F, src, tgt))


def identity_morphism(L: HomLieAlgebra) -> HomMorphism:
    return HomMorphism(L, L, Matrix.identity(L.field, L.dim))


# ---------------------------------------------------------------------------
# substructures


def _check_ambient(L: HomLieAlgebra, *subs: Subspace):
    for S in subs:
        if S.ambient != L.dim:
            raise DimensionMismatch(f"subspace of K^{S.ambient} inside a {L.dim}-dimensional algebra")


def full_space(L: HomLieAlgebra) -> Subspace:
    return Subspace.full(L.field, L.dim)


def commutator(L: HomLieAlgebra, H: Subspace, K: Subspace) -> Subspace:
    """``[H, K]``: span of brackets of basis vectors."""
    _check_ambient(L, H, K)
    return Subspace.span(L.field, L.dim, (L.bracket(h, k) for h in H.basis for k in K.basis))


def derived(L: HomLieAlgebra) -> Subspace:
    """``[L, L]``."""
    return Subspace.span(L.field, L.dim, (L.table[i][j] for i, j in combinations(range(L.dim), 2)))


def center(L: HomLieAlgebra) -> Subspace:
    """``{x : [x, y] = 0 for all y}``, computed as a subspace whether or not it is an ideal."""
    rows = []
    for j in range(L.dim):
        # coefficient of e_k in [x, e_j] is sum_i x_i table[i][j][k]
        for k in range(L.dim):
            rows.append(tuple(L.table[i][j][k] for i in range(L.dim)))
    if not rows:
        return Subspace.zero(L.field, 0)
    return Matrix(L.field, rows, L.dim, trusted=True).kernel()


def alpha_image(L: HomLieAlgebra) -> Subspace:
    return L.alpha.image()


def is_alpha_invariant(L: HomLieAlgebra, H: Subspace) -> bool:
    return all(H.contains(L.apply_alpha(h)) for h in H.basis)


def is_bracket_closed(L: HomLieAlgebra, H: Subspace) -> bool:
    return commutator(L, H, H).issubset(H)


def absorbs_brackets(L: HomLieAlgebra, H: Subspace) -> bool:
    """``[H, L] inside H``."""
    return commutator(L, H, full_space(L)).issubset(H)


def is_subalgebra(L: HomLieAlgebra, H: Subspace) -> bool:
    return is_bracket_closed(L, H) and is_alpha_invariant(L, H)


def is_ideal(L: HomLieAlgebra, H: Subspace) -> bool:
    return absorbs_brackets(L, H) and is_alpha_invariant(L, H)


@dataclass
class Substructures:
    is_subalgebra: bool
    is_ideal: bool
    alpha_invariant: bool
    bracket_closed: bool
    absorbs: bool
    commutator: Subspace
    center: Subspace


def substructures(L: HomLieAlgebra, H: Subspace, K: Subspace) -> Substructures:
    """Flags for ``H`` together with ``[H, K]`` and the center of ``L``."""
    _check_ambient(L, H, K)
    inv = is_alpha_invariant(L, H)
    closed = is_bracket_closed(L, H)
    absorbs = absorbs_brackets(L, H)
    return Substructures(
        is_subalgebra=closed and inv,
        is_ideal=absorbs and inv,
        alpha_invariant=inv,
        bracket_closed=closed,
        absorbs=absorbs,
        commutator=commutator(L, H, K),
        center=center(L),
    )


def _first_escape(L, H, vectors):
    for label, v in vectors:
        if not H.contains(v):
            return label, v
    return None


def quotient_algebra(L: HomLieAlgebra, H: Subspace, name: str = ""):
    """``L / H`` and the projection morphism, presented on the non-pivot coordinates of ``H``."""
    _check_ambient(L, H)
    bad = _first_escape(L, H, (((i, j), L.bracket(h, L.basis(j))) for i, h in enumerate(H.basis) for j in range(L.dim)))
    if bad:
        raise NotAnIdeal("subspace does not absorb brackets", witness=bad)
    bad = _first_escape(L, H, ((i, L.apply_alpha(h)) for i, h in enumerate(H.basis)))
    if bad:
        raise NotAlphaInvariant("subspace is not alpha-invariant", witness=bad)
    pq = PresentedQuotient(H)
    S, P = pq.section, pq.projection
    q = pq.dim
    reps = [S.column(a) for a in range(q)]
    table = [[P.apply(L.bracket(reps[a], reps[b])) for b in range(q)] for a in range(q)]
    alpha = P @ L.alpha @ S
    Lq = HomLieAlgebra(L.field, table, alpha, name)
    return Lq, HomMorphism(L, Lq, P), pq


def subalgebra(L: HomLieAlgebra, H: Subspace, name: str = ""):
    """``H`` as a Hom-Lie algebra in its echelon coordinates, with the inclusion."""
    _check_ambient(L, H)
    if not is_subalgebra(L, H):
        raise PreconditionViolated("subspace is not a subalgebra")
    basis = H.basis
    table = [[H.coordinates(L.bracket(a, b)) for b in basis] for a in basis]
    alpha = Matrix.from_columns(L.field, [H.coordinates(L.apply_alpha(b)) for b in basis], H.dim)
    Hs = HomLieAlgebra(L.field, table, alpha, name)
    return Hs, HomMorphism(Hs, L, H.basis_matrix())


@dataclass
class Perfectness:
    perfect: bool
    alpha_perfect: bool
    alpha_surjective: bool
    alpha_image: Subspace
    derived: Subspace
    alpha_derived: Subspace


def perfectness_flags(L: HomLieAlgebra) -> Perfectness:
    """``L = [L,L]``, ``L = [alpha L, alpha L]`` and surjectivity of alpha."""
    A = alpha_image(L)
    D = derived(L)
    AD = commutator(L, A, A)
    perfect = D.dim == L.dim
    ap = AD.dim == L.dim
    surj = A.dim == L.dim
    if ap and not (perfect and surj):
        raise InternalInconsistency("alpha-perfect algebra that is not perfect or not alpha-surjective")
    return Perfectness(perfect, ap, surj, A, D, AD)


def twisted_lie(L: HomLieAlgebra, alpha: Matrix, name: str = "") -> HomLieAlgebra:
    """Twist a Lie algebra by an endomorphism: ``[x, y]_alpha = alpha[x, y]``."""
    table = [[alpha.apply(v) for v in row] for row in L.table]
    return HomLieAlgebra(L.field, table, alpha, name)


def direct_sum(L1: HomLieAlgebra, L2: HomLieAlgebra, name: str = "") -> HomLieAlgebra:
    F = L1.field
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    z = zero_vector(F, n)
    table = [[z] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            table[i][j] = tuple(L1.table[i][j]) + zero_vector(F, n2)
    for i in range(n2):
        for j in range(n2):
            table[n1 + i][n1 + j] = zero_vector(F, n1) + tuple(L2.table[i][j])
    rows = [tuple(r) + zero_vector(F, n2) for r in L1.alpha.rows] + [zero_vector(F, n1) + tuple(r) for r in L2.alpha.rows]
    return HomLieAlgebra(F, table, Matrix(F, rows, n, trusted=True), name)


def change_basis(L: HomLieAlgebra, T: Matrix, name: str = "") -> HomLieAlgebra:
    """Transport structure along an invertible ``T``; new basis vector ``i`` is column ``i`` of ``T``."""
    from .linalg import solve_columns

    Tinv = solve_columns(T, Matrix.identity(L.field, L.dim))
    if Tinv is None or T.rank() != L.dim:
        raise ShapeError("change of basis needs an invertible matrix")
    cols = T.columns
    table = [[Tinv.apply(L.bracket(a, b)) for b in cols] for a in cols]
    return HomLieAlgebra(L.field, table, Tinv @ L.alpha @ T, name)
