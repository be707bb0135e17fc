"""Hom-associative algebras, their first cyclic homology and the Hom-Lie
algebra ``L^alpha(A)``.

For a Hom-associative algebra ``(A, mu, alpha)`` over a field of
characteristic zero:

* ``J`` is spanned by ``a(x)b + b(x)a`` and ``ab(x)alpha(c) - alpha(a)(x)bc + ca(x)alpha(b)``;
* ``psi: A(x)A / J -> [A, A]`` sends ``a(x)b`` to ``ab - ba``;
* ``HC_1(A) = Ker psi`` and ``L^alpha(A) = A(x)A / J`` with bracket
  ``[a(x)b, a'(x)b'] = [a, b](x)[a', b']``;
* the Milnor variant adds ``alpha(a)(x)bc - alpha(a)(x)cb`` to ``J``.

Indices in the tensor square follow ``e_i (x) e_j -> i * dim A + j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .actions import HomAction, check_compatibility, validate_action
from .algebra import HomLieAlgebra, HomMorphism, Validation, Violation, check_morphism, subalgebra
from .diagrams import LinearDiagram, snake_sequence
from .errors import InternalInconsistency, PreconditionViolated, ShapeError, UnsupportedField
from .fields import Field
from .linalg import (
    Matrix,
    PresentedQuotient,
    Subspace,
    is_zero_vector,
    kron,
    outer,
    vadd,
    vsub,
    zero_vector,
)
from .tensor import ExactnessReport, functorial_tensor, psi_n_matrix, tensor_product


class HomAssocAlgebra:
    """Structure constants ``prod[i][j] = e_i e_j`` and a linear map ``alpha``."""

    def __init__(self, field: Field, table, alpha: Matrix, name: str = ""):
        if field.char != 0:
            raise UnsupportedField("cyclic homology is only handled in characteristic zero")
        n = len(table)
        if alpha.shape != (n, n) or any(len(row) != n for row in table):
            raise ShapeError("product table and alpha disagree on the dimension")
        self.field = field
        self.dim = n
        self.table = [[tuple(field(c) for c in v) for v in row] for row in table]
        for row in self.table:
            for v in row:
                if len(v) != n:
                    raise ShapeError("product vector of the wrong length")
        self.alpha = alpha
        self.name = name

    @classmethod
    def from_products(cls, field: Field, dim: int, prods: dict, alpha, name: str = "") -> "HomAssocAlgebra":
        z = zero_vector(field, dim)
        table = [[z] * dim for _ in range(dim)]
        for (i, j), v in prods.items():
            table[i][j] = tuple(field(c) for c in v)
        if not isinstance(alpha, Matrix):
            alpha = Matrix(field, alpha, dim)
        return cls(field, table, alpha, name)

    def basis(self, i: int):
        return tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))

    def mul(self, u, v):
        acc = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, x in enumerate(self.table[i][j]):
                    if x:
                        acc[k] = acc[k] + c * x
        return tuple(acc)

    def commutator(self, u, v):
        return vsub(self.mul(u, v), self.mul(v, u))

    def apply_alpha(self, v):
        return self.alpha.apply(v)

    def __eq__(self, other):
        return (
            isinstance(other, HomAssocAlgebra)
            and self.field == other.field
            and self.table == other.table
            and self.alpha == other.alpha
        )

    def __hash__(self):
        return hash((self.field, self.dim))

    def __repr__(self):
        return f"HomAssocAlgebra({self.name or 'A'}, dim={self.dim}, {self.field})"


def assoc_violations(A: HomAssocAlgebra) -> list:
    """Failures of ``alpha(a)(bc) = (ab)alpha(c)`` and of ``alpha(ab) = alpha(a)alpha(b)``."""
    n = A.dim
    a = [A.alpha.column(i) for i in range(n)]
    out = []
    for i, j, k in product(range(n), repeat=3):
        r = vsub(A.mul(a[i], A.table[j][k]), A.mul(A.table[i][j], a[k]))
        if not is_zero_vector(r):
            out.append(Violation("hom-associativity", (i, j, k), r))
    for i, j in product(range(n), repeat=2):
        r = vsub(A.apply_alpha(A.table[i][j]), A.mul(a[i], a[j]))
        if not is_zero_vector(r):
            out.append(Violation("multiplicativity", (i, j), r))
    return out


def validate_assoc(A: HomAssocAlgebra) -> Validation:
    return Validation(A, assoc_violations(A))


def yau_twist(A: HomAssocAlgebra, alpha: Matrix, name: str = "") -> HomAssocAlgebra:
    """``(A, alpha o mu, alpha)`` from an associative ``A`` and an algebra endomorphism ``alpha``."""
    table = [[alpha.apply(v) for v in row] for row in A.table]
    return HomAssocAlgebra(A.field, table, alpha, name)


def lie_of_assoc(A: HomAssocAlgebra) -> HomLieAlgebra:
    """The commutator Hom-Lie algebra ``[a, b] = ab - ba``."""
    table = [[vsub(A.table[i][j], A.table[j][i]) for j in range(A.dim)] for i in range(A.dim)]
    return HomLieAlgebra(A.field, table, A.alpha, f"Lie({A.name})" if A.name else "")


def commutator_space(A: HomAssocAlgebra) -> Subspace:
    return Subspace.span(A.field, A.dim, (A.commutator(A.basis(i), A.basis(j)) for i in range(A.dim) for j in range(A.dim)))


# ---------------------------------------------------------------------------
# the presentation A(x)A / J


def j_generators(A: HomAssocAlgebra):
    """Yield ``(family, indices, vector)`` for the two generating families of ``J``."""
    n = A.dim
    e = [A.basis(i) for i in range(n)]
    a = [A.alpha.column(i) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            yield "symmetric", (i, j), vadd(outer(e[i], e[j]), outer(e[j], e[i]))
    for i, j, k in product(range(n), repeat=3):
        v = outer(A.table[i][j], a[k])
        v = vsub(v, outer(a[i], A.table[j][k]))
        v = vadd(v, outer(A.table[k][i], a[j]))
        yield "cyclic", (i, j, k), v


def milnor_generators(A: HomAssocAlgebra):
    n = A.dim
    a = [A.alpha.column(i) for i in range(n)]
    for i, j, k in product(range(n), repeat=3):
        yield "milnor", (i, j, k), outer(a[i], vsub(A.table[j][k], A.table[k][j]))


def _psi_ambient(A: HomAssocAlgebra) -> Matrix:
    return Matrix.from_columns(A.field, [A.commutator(A.basis(i), A.basis(j)) for i in range(A.dim) for j in range(A.dim)], A.dim)


@dataclass
class CyclicPresentation:
    A: HomAssocAlgebra
    J: Subspace
    quotient: PresentedQuotient
    psi: Matrix
    hc1: Subspace
    commutators: Subspace
    lie: HomLieAlgebra
    certificates: dict = dc_field(default_factory=dict)

    @property
    def hc1_dim(self) -> int:
        return self.hc1.dim


def _require_hom_assoc(A: HomAssocAlgebra):
    bad = [v for v in assoc_violations(A) if v.axiom == "hom-associativity"]
    if bad:
        raise PreconditionViolated("algebra is not Hom-associative", witness=bad[:1])


def cyclic_presentation(A: HomAssocAlgebra) -> CyclicPresentation:
    """``A(x)A/J``, the map ``psi`` onto ``[A, A]``, ``HC_1`` and ``L^alpha(A)``."""
    _require_hom_assoc(A)
    F = A.field
    n = A.dim
    N = n * n
    J = Subspace.span(F, N, (v for _, _, v in j_generators(A)))
    psi_amb = _psi_ambient(A)
    certs = {"psi_kills_J": all(not any(psi_amb.apply(d)) for d in J.basis)}
    lie_A = lie_of_assoc(A)
    br = [lie_A.table[i][j] for i in range(n) for j in range(n)]
    table = [[outer(br[p], br[q]) for q in range(N)] for p in range(N)]

    def amb_br(x, y):
        acc = [F.zero] * N
        for p, c in enumerate(x):
            if c:
                for q, d in enumerate(y):
                    if d:
                        cd = c * d
                        for k, z in enumerate(table[p][q]):
                            if z:
                                acc[k] = acc[k] + cd * z
        return tuple(acc)

    units = [tuple(F.one if k == p else F.zero for k in range(N)) for p in range(N)]
    a_amb = kron(A.alpha, A.alpha)
    certs["bracket_absorbs_J"] = all(J.contains(amb_br(d, e)) and J.contains(amb_br(e, d)) for d in J.basis for e in units)
    certs["alpha_preserves_J"] = all(J.contains(a_amb.apply(d)) for d in J.basis)
    if not all(certs.values()):
        raise InternalInconsistency(f"cyclic presentation certificate failed: {[k for k, v in certs.items() if not v]}")
    pq = PresentedQuotient(J)
    S, P = pq.section, pq.projection
    reps = [S.column(c) for c in range(pq.dim)]
    qtable = [[P.apply(amb_br(x, y)) for y in reps] for x in reps]
    lie = HomLieAlgebra(F, qtable, P @ a_amb @ S, "L^alpha")
    psi = psi_amb @ S
    comm = commutator_space(A)
    certs["psi_onto_commutators"] = psi.image() == comm
    return CyclicPresentation(A, J, pq, psi, psi.kernel(), comm, lie, certs)


def hc1_dim(A: HomAssocAlgebra) -> int:
    return cyclic_presentation(A).hc1_dim


def milnor_hc1(A: HomAssocAlgebra) -> PresentedQuotient:
    """``A(x)A`` modulo ``J`` and ``alpha(a)(x)(bc - cb)``."""
    _require_hom_assoc(A)
    gens = [v for _, _, v in j_generators(A)] + [v for _, _, v in milnor_generators(A)]
    return PresentedQuotient(Subspace.span(A.field, A.dim * A.dim, gens))


def alpha_identity_witness(A: HomAssocAlgebra):
    """First ``(i, j, residual)`` with ``[e_i, e_j] != [alpha e_i, e_j]``, or None."""
    for i, j in product(range(A.dim), repeat=2):
        r = vsub(A.commutator(A.basis(i), A.basis(j)), A.commutator(A.apply_alpha(A.basis(i)), A.basis(j)))
        if not is_zero_vector(r):
            return (i, j, r)
    return None


# ---------------------------------------------------------------------------
# the snake diagram relating HC_1, its Milnor variant and [A,A]/[A,[A,A]]


@dataclass
class CyclicActions:
    lie_A: HomLieAlgebra
    presentation: CyclicPresentation
    on_lie: HomAction
    lie_on_A: HomAction


def cyclic_actions(A: HomAssocAlgebra, cp: CyclicPresentation | None = None) -> CyclicActions:
    """``^{a'}(a(x)b) = [a',a](x)alpha(b) + alpha(a)(x)[a',b]`` and ``^{(a(x)b)}a' = [[a,b],a']``."""
    cp = cp or cyclic_presentation(A)
    F = A.field
    n = A.dim
    LA = lie_of_assoc(A)
    P, S = cp.quotient.projection, cp.quotient.section
    value = []
    for t in range(n):
        x = A.basis(t)
        cols = []
        for i in range(n):
            for j in range(n):
                ei, ej = A.basis(i), A.basis(j)
                v = vadd(outer(LA.bracket(x, ei), A.apply_alpha(ej)), outer(A.apply_alpha(ei), LA.bracket(x, ej)))
                cols.append(v)
        amb = Matrix.from_columns(F, cols, n * n)
        if not all(cp.J.contains(amb.apply(d)) for d in cp.J.basis):
            raise InternalInconsistency("action of A does not preserve J")
        op = P @ amb @ S
        value.append([op.column(b) for b in range(cp.lie.dim)])
    on_lie = HomAction(LA, cp.lie, value)
    back = []
    for b in range(cp.lie.dim):
        c = cp.psi.column(b)
        back.append([LA.bracket(c, A.basis(k)) for k in range(n)])
    lie_on_A = HomAction(cp.lie, LA, back)
    return CyclicActions(LA, cp, on_lie, lie_on_A)


def _restricted(act: HomAction, actor: HomLieAlgebra, actee: HomLieAlgebra, X: Matrix, Y: Subspace) -> HomAction:
    """Restrict an action along ``X`` (actor inclusion columns) to an invariant subspace ``Y`` of the actee."""
    value = []
    for c in range(actor.dim):
        x = X.column(c)
        row = []
        for y in Y.basis:
            out = act.act(x, y)
            if not Y.contains(out):
                raise PreconditionViolated("subspace is not invariant under the action", witness=(c, y, out))
            row.append(Y.coordinates(out))
        value.append(row)
    return HomAction(actor, actee, value)


def cyclic_exact_sequence(A: HomAssocAlgebra) -> ExactnessReport:
    """Snake lemma on ``A*HC_1 -> A*L^alpha -> A*[A,A] -> 0`` over ``0 -> HC_1 -> L^alpha -> [A,A] -> 0``.

    Reads off ``Ker psi_1 = A*HC_1``, ``Coker psi_1 = HC_1``, ``Coker psi_2 = HC_1^M``
    and ``Coker psi_3 = [A,A]/[A,[A,A]]``, and checks exactness of
    ``A*HC_1 -> Ker psi_2 -> Ker psi_3 -> HC_1 -> HC_1^M -> [A,A]/[A,[A,A]] -> 0``.
    """
    w = alpha_identity_witness(A)
    if w is not None:
        raise PreconditionViolated("alpha-identity [a,b] = [alpha a, b] fails", witness=w)
    cp = cyclic_presentation(A)
    F = A.field
    ca = cyclic_actions(A, cp)
    LA, Lal = ca.lie_A, cp.lie
    n = A.dim
    for act in (ca.on_lie, ca.lie_on_A):
        v = validate_action(act)
        if not v.ok:
            raise PreconditionViolated("induced action is not a Hom-action", witness=v.violations[:1])
    comp = check_compatibility(ca.on_lie, ca.lie_on_A)
    if not comp.ok:
        raise PreconditionViolated("induced actions are not compatible", witness=comp.witness)
    # HC_1 inside L^alpha, [A,A] inside Lie(A)
    HC, inc = subalgebra(Lal, cp.hc1)
    C, incC = subalgebra(LA, cp.commutators)
    full_A = Matrix.identity(F, n)
    act_A_HC = _restricted(ca.on_lie, LA, HC, full_A, cp.hc1)
    act_HC_A = _restricted(ca.lie_on_A, HC, LA, inc.matrix, Subspace.full(F, n))
    act_A_C = _restricted(HomAction.adjoint(LA), LA, C, full_A, cp.commutators)
    act_C_A = _restricted(HomAction.adjoint(LA), C, LA, incC.matrix, Subspace.full(F, n))
    T1 = tensor_product(LA, HC, act_A_HC, act_HC_A)
    T2 = tensor_product(LA, Lal, ca.on_lie, ca.lie_on_A)
    T3 = tensor_product(LA, C, act_A_C, act_C_A)
    psi_bar = Matrix.from_columns(F, [cp.commutators.coordinates(cp.psi.column(b)) for b in range(Lal.dim)], C.dim)
    chk = check_morphism(psi_bar, Lal, C)
    if not chk.ok:
        raise InternalInconsistency(f"psi is not a morphism onto [A,A]: {chk.violations[0]}")
    idA = HomMorphism(LA, LA, full_A)
    f1 = functorial_tensor(idA, inc, T1, T2)
    f2 = functorial_tensor(idA, chk.value, T2, T3)
    psi1, psi2, psi3 = psi_n_matrix(T1), psi_n_matrix(T2), psi_n_matrix(T3)
    d = LinearDiagram.snake(F, f1.matrix, f2.matrix, inc.matrix, psi_bar, psi1, psi2, psi3)
    sn = snake_sequence(d)
    # identifications of the end terms
    im2 = Subspace.span(F, n * n, (cp.quotient.lift(v) for v in psi2.image().basis))
    milnor_rel = milnor_hc1(A).relations
    AC = Subspace.span(F, n, (LA.bracket(A.basis(i), c) for i in range(n) for c in cp.commutators.basis))
    im3 = psi3.image().image_under(incC.matrix)
    checks = {
        "ker_psi1_is_A*HC1": sn.kernels[0].dim == T1.dim,
        "coker_psi1_is_HC1": sn.cokernels[0].dim == cp.hc1_dim,
        "coker_psi2_is_HC1_Milnor": (im2 + cp.J) == milnor_rel,
        "coker_psi3_is_[A,A]/[A,[A,A]]": im3 == AC,
        "exact_at_Ker_psi2": sn.exact["ker2"],
        "exact_at_Ker_psi3": sn.exact["ker3"],
        "exact_at_HC1": sn.exact["coker1"],
        "exact_at_HC1_Milnor": sn.exact["coker2"],
        "onto_[A,A]/[A,[A,A]]": sn.right_onto,
    }
    dims = {
        "A*HC1": T1.dim,
        "Ker psi2": sn.kernels[1].dim,
        "Ker psi3": sn.kernels[2].dim,
        "HC1": cp.hc1_dim,
        "HC1_Milnor": sn.cokernels[1].dim,
        "[A,A]/[A,[A,A]]": sn.cokernels[2].dim,
        "[A,A]": cp.commutators.dim,
    }
    return ExactnessReport("cyclic_exact_sequence", checks, dims)


def is_degenerate(report: ExactnessReport) -> bool:
    """A commutative algebra makes every term of the sequence but ``A*HC_1`` and ``HC_1`` vanish."""
    return report.dims.get("[A,A]", 1) == 0
