"""Hom-actions of one Hom-Lie algebra on another, semi-direct products,
derivations into Hom-modules, and the exact sequence of derivation spaces
attached to a short exact sequence.

An action of ``L`` on ``M`` is stored as ``value[i][j]``, the coordinate
vector of ``^{x_i} m_j`` in ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .algebra import (
    HomLieAlgebra,
    HomMorphism,
    Validation,
    Violation,
    check_morphism,
    commutator,
    full_space,
    morphism_violations,
)
from .errors import InternalInconsistency, PreconditionViolated, ShapeError
from .linalg import (
    Matrix,
    PresentedQuotient,
    Subspace,
    is_zero_vector,
    solve_linear,
    unit_vector,
    vadd,
    vsub,
    zero_vector,
)


class HomAction:
    """Bilinear map ``L x M -> M``, ``(x, m) -> ^x m``, on chosen bases."""

    __slots__ = ("actor", "actee", "value", "_sparse")

    def __init__(self, actor: HomLieAlgebra, actee: HomLieAlgebra, value):
        F = actor.field
        if actee.field != F:
            raise ShapeError("actor and actee over different fields")
        value = tuple(tuple(tuple(F(c) for c in v) for v in row) for row in value)
        if len(value) != actor.dim or any(len(r) != actee.dim for r in value) or any(
            len(v) != actee.dim for r in value for v in r
        ):
            raise ShapeError(f"action tensor must be {actor.dim}x{actee.dim}x{actee.dim}")
        self.actor = actor
        self.actee = actee
        self.value = value
        self._sparse = [[[(k, c) for k, c in enumerate(v) if c] for v in row] for row in value]

    @property
    def field(self):
        return self.actor.field

    @classmethod
    def from_function(cls, actor, actee, f: Callable[[tuple, tuple], Sequence]) -> "HomAction":
        value = [[f(actor.basis(i), actee.basis(j)) for j in range(actee.dim)] for i in range(actor.dim)]
        return cls(actor, actee, value)

    @classmethod
    def trivial(cls, actor, actee) -> "HomAction":
        z = zero_vector(actor.field, actee.dim)
        return cls(actor, actee, [[z] * actee.dim for _ in range(actor.dim)])

    @classmethod
    def adjoint(cls, L: HomLieAlgebra) -> "HomAction":
        """``L`` acting on itself by its bracket."""
        return cls(L, L, L.table)

    def act(self, x: Sequence, m: Sequence):
        acc = [self.field.zero] * self.actee.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in enumerate(m):
                if not b:
                    continue
                c = a * b
                for k, v in row[j]:
                    acc[k] = acc[k] + c * v
        return tuple(acc)

    __call__ = act

    def operator(self, x: Sequence) -> Matrix:
        """Matrix of ``m -> ^x m``."""
        cols = [self.act(x, self.actee.basis(j)) for j in range(self.actee.dim)]
        return Matrix.from_columns(self.field, cols, self.actee.dim)

    def is_trivial(self) -> bool:
        return all(not any(v) for row in self.value for v in row)

    def span_of_values(self) -> Subspace:
        """``^L M``, the span of all ``^x m``."""
        return Subspace.span(self.field, self.actee.dim, (v for row in self.value for v in row))

    def __eq__(self, other):
        return (
            isinstance(other, HomAction)
            and self.actor == other.actor
            and self.actee == other.actee
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.actor, self.actee, self.value))


def bracket_action(K: HomLieAlgebra, X: Subspace, Y: Subspace, actor: HomLieAlgebra, actee: HomLieAlgebra) -> HomAction:
    """Action of ``X`` on ``Y`` by the bracket of ``K``.

    ``actor`` and ``actee`` are ``X`` and ``Y`` as algebras in their echelon
    coordinates (as returned by :func:`homlie.algebra.subalgebra`).
    """
    value = [[Y.coordinates(K.bracket(x, y)) for y in Y.basis] for x in X.basis]
    return HomAction(actor, actee, value)


def action_violations(act: HomAction) -> list:
    """Failing basis instances of the three Hom-action axioms."""
    L, M = act.actor, act.actee
    aL = [L.alpha.column(i) for i in range(L.dim)]
    aM = [M.alpha.column(k) for k in range(M.dim)]
    V = act.value
    out = []
    # a) ^{[x,y]} alpha(m) = ^{alpha x}(^y m) - ^{alpha y}(^x m)
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(M.dim):
                lhs = act.act(L.table[i][j], aM[k])
                rhs = vsub(act.act(aL[i], V[j][k]), act.act(aL[j], V[i][k]))
                r = vsub(lhs, rhs)
                if not is_zero_vector(r):
                    out.append(Violation("action-a", (i, j, k), r))
    # b) ^{alpha x}[m,m'] = [^x m, alpha m'] + [alpha m, ^x m']
    for i in range(L.dim):
        for k in range(M.dim):
            for l in range(k, M.dim):
                lhs = act.act(aL[i], M.table[k][l])
                rhs = vadd(M.bracket(V[i][k], aM[l]), M.bracket(aM[k], V[i][l]))
                r = vsub(lhs, rhs)
                if not is_zero_vector(r):
                    out.append(Violation("action-b", (i, k, l), r))
    # c) alpha(^x m) = ^{alpha x} alpha(m)
    for i in range(L.dim):
        for k in range(M.dim):
            r = vsub(M.apply_alpha(V[i][k]), act.act(aL[i], aM[k]))
            if not is_zero_vector(r):
                out.append(Violation("action-c", (i, k), r))
    return out


def validate_action(act: HomAction) -> Validation:
    return Validation(act, action_violations(act))


@dataclass
class Compatibility:
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def check_compatibility(act_mn: HomAction, act_nm: HomAction) -> Compatibility:
    """Compatibility of ``M`` acting on ``N`` (``act_mn``) and ``N`` acting on ``M`` (``act_nm``).

    Checks ``^{(^m n)} m' = [m', ^n m]`` and ``^{(^n m)} n' = [n', ^m n]`` on
    basis triples; the first failure in lexicographic order is the witness
    ``(identity, (m, n, primed), residual)``.
    """
    M, N = act_mn.actor, act_mn.actee
    if act_nm.actor != N or act_nm.actee != M:
        raise ShapeError("actions do not mirror each other")
    for m, n, mp in product(range(M.dim), range(N.dim), range(M.dim)):
        lhs = act_nm.act(act_mn.value[m][n], M.basis(mp))
        rhs = M.bracket(M.basis(mp), act_nm.value[n][m])
        r = vsub(lhs, rhs)
        if not is_zero_vector(r):
            return Compatibility(False, ("^(^m n) m' = [m', ^n m]", (m, n, mp), r))
    for m, n, np_ in product(range(M.dim), range(N.dim), range(N.dim)):
        lhs = act_mn.act(act_nm.value[n][m], N.basis(np_))
        rhs = N.bracket(N.basis(np_), act_mn.value[m][n])
        r = vsub(lhs, rhs)
        if not is_zero_vector(r):
            return Compatibility(False, ("^(^n m) n' = [n', ^m n]", (m, n, np_), r))
    return Compatibility(True)


def pullback_action(act: HomAction, f: HomMorphism) -> HomAction:
    """``K`` acting on ``M`` through ``f: K -> L``: ``^k m = ^{f(k)} m``."""
    return HomAction.from_function(f.source, act.actee, lambda k, m: act.act(f(k), m))


def restrict_to_alpha_image_check(act: HomAction):
    """First basis pair where ``^{alpha x} m != ^x m``, or ``None``."""
    L = act.actor
    for i in range(L.dim):
        ax = L.alpha.column(i)
        for j in range(act.actee.dim):
            r = vsub(act.act(ax, act.actee.basis(j)), act.value[i][j])
            if not is_zero_vector(r):
                return (i, j, r)
    return None


# ---------------------------------------------------------------------------
# semi-direct products


@dataclass
class SemiDirect:
    """``M x| L`` on coordinates ``(m, x)`` with its split exact sequence."""

    algebra: HomLieAlgebra
    action: HomAction
    i: HomMorphism
    pi: HomMorphism
    s: HomMorphism
    theta: Matrix

    def pair(self, m, x):
        return tuple(m) + tuple(x)


def semidirect(act: HomAction, name: str = "") -> SemiDirect:
    viol = action_violations(act)
    if viol:
        raise PreconditionViolated("not a Hom-action", witness=viol)
    L, M = act.actor, act.actee
    F = L.field
    m, l = M.dim, L.dim
    n = m + l
    zL, zM = zero_vector(F, l), zero_vector(F, m)

    def br(u, v):
        m1, x1 = u[:m], u[m:]
        m2, x2 = v[:m], v[m:]
        top = vadd(M.bracket(m1, m2), vsub(act.act(L.apply_alpha(x1), m2), act.act(L.apply_alpha(x2), m1)))
        return top + L.bracket(x1, x2)

    basis = [unit_vector(F, n, k) for k in range(n)]
    table = [[br(u, v) for v in basis] for u in basis]
    rows = [tuple(r) + zL for r in M.alpha.rows] + [zM + tuple(r) for r in L.alpha.rows]
    alpha = Matrix(F, rows, n, trusted=True)
    S = HomLieAlgebra(F, table, alpha, name)
    I = Matrix.from_columns(F, [unit_vector(F, n, k) for k in range(m)], n)
    P = Matrix(F, [unit_vector(F, n, m + k) for k in range(l)], n, trusted=True)
    Sm = Matrix.from_columns(F, [unit_vector(F, n, m + k) for k in range(l)], n)
    theta = Matrix(F, [unit_vector(F, n, k) for k in range(m)], n, trusted=True)
    return SemiDirect(S, act, HomMorphism(M, S, I), HomMorphism(S, L, P), HomMorphism(L, S, Sm), theta)


def recovered_action(sd: SemiDirect) -> HomAction:
    """Action read off the split sequence: ``^l m = i^{-1}[s(l), i(m)]``."""
    S = sd.algebra
    m = sd.action.actee.dim

    def f(x, mm):
        v = S.bracket(sd.s(x), sd.i(mm))
        if any(v[m:]):
            raise InternalInconsistency("bracket of s(l) and i(m) left the image of i")
        return v[:m]

    return HomAction.from_function(sd.action.actor, sd.action.actee, f)


# ---------------------------------------------------------------------------
# derivations


def _vec(d: Matrix) -> tuple:
    return tuple(x for r in d.rows for x in r)


def _unvec(F, v, nrows, ncols) -> Matrix:
    return Matrix(F, [v[r * ncols:(r + 1) * ncols] for r in range(nrows)], ncols, trusted=True)


def derivation_residual(d: Matrix, act: HomAction) -> tuple:
    """Concatenated residuals of both derivation conditions (zero iff ``d`` is a derivation)."""
    L, M = act.actor, act.actee
    out = []
    aL = [L.alpha.column(i) for i in range(L.dim)]
    cols = [d.column(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = d.apply(L.table[i][j])
            rhs = vsub(act.act(aL[i], cols[j]), act.act(aL[j], cols[i]))
            out.extend(vsub(lhs, rhs))
    out.extend(x for r in (M.alpha @ d - d @ L.alpha).rows for x in r)
    return tuple(out)


def is_derivation(d: Matrix, act: HomAction) -> bool:
    return is_zero_vector(derivation_residual(d, act))


def _require_module(act: HomAction):
    if not act.actee.is_abelian():
        raise PreconditionViolated("the actee must be abelian (a Hom-module)")


def derivation_space(act: HomAction) -> list:
    """Echelon basis of the derivations ``L -> M`` as matrices (``dim M x dim L``)."""
    _require_module(act)
    F = act.field
    m, l = act.actee.dim, act.actor.dim
    if m * l == 0:
        return []
    A = Matrix.from_function(F, m * l, len(derivation_residual(Matrix.zeros(F, m, l), act)),
                             lambda v: derivation_residual(_unvec(F, v, m, l), act))
    return [_unvec(F, b, m, l) for b in A.kernel().basis]


def derivation_subspace(act: HomAction) -> Subspace:
    F = act.field
    m, l = act.actee.dim, act.actor.dim
    return Subspace.span(F, m * l, (_vec(d) for d in derivation_space(act)))


def correpresent(f: HomMorphism, d: Matrix, act: HomAction, sd: SemiDirect | None = None) -> HomMorphism:
    """The morphism ``h = (d, f): K -> M x| L`` determined by ``f`` and a derivation ``d``."""
    _require_module(act)
    pulled = pullback_action(act, f)
    r = derivation_residual(d, pulled)
    if not is_zero_vector(r):
        raise PreconditionViolated("d is not a derivation for the pulled-back action", witness=r)
    if sd is None:
        sd = semidirect(act)
    F = act.field
    H = Matrix(F, d.rows + f.matrix.rows, f.source.dim, trusted=True)
    chk = check_morphism(H, f.source, sd.algebra)
    if not chk.ok:
        raise InternalInconsistency(f"(d, f) is not a morphism: {chk.violations[0]}")
    if sd.pi.matrix @ H != f.matrix or sd.theta @ H != d:
        raise InternalInconsistency("components of (d, f) do not project back")
    return chk.value


def decompose(h: HomMorphism, sd: SemiDirect):
    """Split ``h: K -> M x| L`` into ``(theta o h, pi o h)``."""
    return sd.theta @ h.matrix, sd.pi.compose(h)


# ---------------------------------------------------------------------------
# the derivation exact sequence of a short exact sequence


@dataclass
class DerivationSequence:
    delta_injective: bool
    image_equals_kernel: bool
    rho_lands_in_hom: bool
    dims: dict
    delta: Matrix
    rho: Matrix

    @property
    def exact(self) -> bool:
        return self.delta_injective and self.image_equals_kernel and self.rho_lands_in_hom


def short_exact_failures(i: HomMorphism, pi: HomMorphism) -> list:
    bad = []
    if not i.is_injective():
        bad.append("i not injective")
    if not pi.is_surjective():
        bad.append("pi not surjective")
    if i.image() != pi.kernel():
        bad.append("Im i != Ker pi")
    if morphism_violations(i.matrix, i.source, i.target):
        bad.append("i not a morphism")
    if morphism_violations(pi.matrix, pi.source, pi.target):
        bad.append("pi not a morphism")
    return bad


def abelianization(N: HomLieAlgebra) -> PresentedQuotient:
    return PresentedQuotient(commutator(N, full_space(N), full_space(N)))


def hom_module_maps(i: HomMorphism, pi: HomMorphism, act: HomAction):
    """``Hom_L(N^ab, M)`` as a subspace of vectorised ``dim M x dim N^ab`` matrices.

    The action of ``l`` on ``N^ab`` uses the section ``x_l`` of ``pi`` given
    by :func:`solve_linear`.  Returns the subspace, the quotient and the
    action operators on ``N^ab`` (one per basis vector of ``L``).
    """
    N, K, L, M = i.source, i.target, pi.target, act.actee
    F = N.field
    Q = abelianization(N)
    q, m = Q.dim, M.dim
    reps = [Q.section.column(a) for a in range(q)]
    ops = []
    for l in range(L.dim):
        xl = solve_linear(pi.matrix, L.basis(l))
        cols = []
        for r in reps:
            v = K.bracket(xl, i(r))
            pre = solve_linear(i.matrix, v)
            if pre is None:
                raise InternalInconsistency("bracket with i(N) left i(N)")
            cols.append(Q.project(pre))
        ops.append(Matrix.from_columns(F, cols, q))
    abar = Q.projection @ N.alpha @ Q.section

    def residual(v):
        f = _unvec(F, v, m, q)
        out = [x for r in (M.alpha @ f - f @ abar).rows for x in r]
        for l in range(L.dim):
            out.extend(x for r in (f @ ops[l] - act.operator(L.basis(l)) @ f).rows for x in r)
        return tuple(out)

    if m * q == 0:
        return Subspace.zero(F, 0), Q, ops
    nres = len(residual(zero_vector(F, m * q)))
    A = Matrix.from_function(F, m * q, nres, residual)
    return A.kernel(), Q, ops


def derivation_exact_sequence(i: HomMorphism, pi: HomMorphism, act: HomAction) -> DerivationSequence:
    """Exactness of ``0 -> Der(L, M) -> Der(K, M) -> Hom_L(N^ab, M)``.

    ``i: N -> K`` and ``pi: K -> L`` must form a short exact sequence and the
    module ``M`` over ``L`` must satisfy ``^{alpha(l)} m = ^l m``.
    """
    bad = short_exact_failures(i, pi)
    if bad:
        raise PreconditionViolated("not a short exact sequence", witness=bad)
    _require_module(act)
    w = restrict_to_alpha_image_check(act)
    if w is not None:
        raise PreconditionViolated("action does not satisfy ^{alpha(l)} m = ^l m", witness=w)
    N, K, M = i.source, i.target, act.actee
    F = N.field
    m = M.dim
    actK = pullback_action(act, pi)
    derL = derivation_space(act)
    derK_sub = derivation_subspace(actK)
    # Delta(d) = d o pi, in coordinates of Der(K, M)
    dcols = [derK_sub.coordinates(_vec(d @ pi.matrix)) for d in derL]
    delta = Matrix.from_columns(F, dcols, derK_sub.dim)
    hom_sub, Q, _ = hom_module_maps(i, pi, act)
    comm = commutator(N, full_space(N), full_space(N))
    rho_cols = []
    lands = True
    for b in derK_sub.basis:
        dK = _unvec(F, b, m, K.dim)
        di = dK @ i.matrix
        if any(any(di.apply(c)) for c in comm.basis):
            raise InternalInconsistency("derivation composed with i does not vanish on [N, N]")
        f = di @ Q.section
        fv = _vec(f)
        if not hom_sub.contains(fv):
            lands = False
            rho_cols.append(None)
            continue
        rho_cols.append(hom_sub.coordinates(fv))
    if lands:
        rho = Matrix.from_columns(F, rho_cols, hom_sub.dim)
        kernel_ok = delta.image() == rho.kernel()
    else:
        rho = Matrix.zeros(F, 0, derK_sub.dim)
        kernel_ok = False
    dims = {"der_L": len(derL), "der_K": derK_sub.dim, "hom_L": hom_sub.dim, "N_ab": Q.dim}
    return DerivationSequence(delta.is_injective(), kernel_ok, lands, dims, delta, rho)
