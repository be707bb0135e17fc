"""Concrete instances of the exact-sequence statements, assembled from ideals
and modules of a single algebra.  These are what the command line verifies.
"""

from __future__ import annotations

from .actions import HomAction, bracket_action, restrict_to_alpha_image_check, semidirect, derivation_exact_sequence
from .algebra import HomLieAlgebra, HomMorphism, is_ideal, quotient_algebra, subalgebra
from .errors import PreconditionViolated
from .linalg import Matrix, Subspace, is_zero_vector
from .tensor import ExactnessReport, tensor_right_exactness


def ideal_witness(L: HomLieAlgebra, H: Subspace):
    """Why ``H`` fails to be an alpha-invariant ideal, in basis terms; None if it is one."""
    for i, h in enumerate(H.basis):
        for j in range(L.dim):
            b = L.bracket(h, L.basis(j))
            if not H.contains(b):
                return {"kind": "bracket", "h": h, "j": j, "value": b}
        a = L.apply_alpha(h)
        if not H.contains(a):
            return {"kind": "alpha", "h": h, "value": a}
    return None


def require_ideal(L: HomLieAlgebra, H: Subspace, name: str):
    if not is_ideal(L, H):
        raise PreconditionViolated(f"{name} is not an alpha-invariant ideal", witness=ideal_witness(L, H))


def right_exactness_from_ideals(L: HomLieAlgebra, M1: Subspace, M2: Subspace, N: Subspace) -> ExactnessReport:
    """``M1 -> M2 -> M2/M1`` tensored with ``N``, all actions by the bracket of ``L``.

    The quotient acts on ``N`` through representatives, which needs ``[M1, N] = 0``.
    """
    for name, H in (("M1", M1), ("M2", M2), ("N", N)):
        require_ideal(L, H, name)
    if not M1.issubset(M2):
        raise PreconditionViolated("M1 is not contained in M2", witness=next(b for b in M1.basis if not M2.contains(b)))
    for a in M1.basis:
        for b in N.basis:
            v = L.bracket(a, b)
            if not is_zero_vector(v):
                raise PreconditionViolated("[M1, N] != 0, so M2/M1 cannot act on N", witness={"m1": a, "n": b, "value": v})
    F = L.field
    A1, inc1 = subalgebra(L, M1)
    A2, inc2 = subalgebra(L, M2)
    An, incn = subalgebra(L, N)
    M1in2 = M2.restrict(M1)
    A3, proj, pq = quotient_algebra(A2, M1in2)
    f = HomMorphism(A1, A2, Matrix.from_columns(F, [M2.coordinates(b) for b in M1.basis], A2.dim))
    acts = {
        1: (bracket_action(L, M1, N, A1, An), bracket_action(L, N, M1, An, A1)),
        2: (bracket_action(L, M2, N, A2, An), bracket_action(L, N, M2, An, A2)),
    }
    reps = [M2.vector(pq.lift(c)) for c in _units(F, A3.dim)]
    on_n = [[N.coordinates(L.bracket(r, b)) for b in N.basis] for r in reps]
    back = [[proj(M2.coordinates(L.bracket(b, r))) for r in reps] for b in N.basis]
    acts[3] = (HomAction(A3, An, on_n), HomAction(An, A3, back))
    return tensor_right_exactness(f, proj, An, acts)


def _units(F, n):
    for a in range(n):
        yield tuple(F.one if k == a else F.zero for k in range(n))


def module_from_ideal(L: HomLieAlgebra, M: Subspace) -> HomAction:
    """An abelian ideal as an ``L``-module through the bracket."""
    require_ideal(L, M, "M")
    Ma, _ = subalgebra(L, M)
    if not Ma.is_abelian():
        raise PreconditionViolated("ideal is not abelian, so it is not a module")
    full = Subspace.full(L.field, L.dim)
    return bracket_action(L, full, M, L, Ma)


def derivation_sequence_of_semidirect(act: HomAction):
    """``0 -> M -> M x| L -> L -> 0`` with the test module ``M`` itself."""
    w = restrict_to_alpha_image_check(act)
    if w is not None:
        raise PreconditionViolated("action does not satisfy ^{alpha(l)} m = ^l m", witness=w)
    sd = semidirect(act)
    return derivation_exact_sequence(sd.i, sd.pi, act)
