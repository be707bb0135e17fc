"""Homology of a Hom-Lie algebra with coefficients in a Hom-module.

The chain spaces are ``C_n = M (x) Lambda^n L`` with basis ``m_a (x) e_S``
for strictly increasing index tuples ``S`` (lexicographic), coordinate index
``a * binom(dim L, n) + position(S)``.  The boundary is

    d(m (x) x_1 ^ ... ^ x_n)
      = sum_i (-1)^i  ^{x_i} m (x) a(x_1) ^ .. omit i .. ^ a(x_n)
      + sum_{i<j} (-1)^{i+j} a_M(m) (x) [x_i, x_j] ^ a(x_1) ^ .. omit i, j .. ^ a(x_n)

with ``i, j`` counted from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .actions import HomAction
from .algebra import HomLieAlgebra, derived, perfectness_flags
from .errors import DegreeError, InternalInconsistency, PreconditionViolated
from .linalg import Matrix, Subspace


def trivial_module(L: HomLieAlgebra) -> HomAction:
    """The ground field as a trivial Hom-module, with ``alpha = id``."""
    K = HomLieAlgebra.abelian(L.field, 1)
    return HomAction.trivial(L, K)


def wedge_expand(field, vectors) -> dict:
    """``v_1 ^ ... ^ v_k`` as ``{sorted index tuple: coefficient}``."""
    terms = {(): field.one}
    for v in vectors:
        new = {}
        for S, c in terms.items():
            for t, x in enumerate(v):
                if not x or t in S:
                    continue
                above = sum(1 for s in S if s > t)
                key = tuple(sorted(S + (t,)))
                val = c * x if above % 2 == 0 else -(c * x)
                new[key] = new.get(key, field.zero) + val
        terms = {S: c for S, c in new.items() if c}
        if not terms:
            break
    return terms


@dataclass
class ChainComplex:
    L: HomLieAlgebra
    module: HomAction
    max_degree: int
    wedges: list
    boundaries: dict

    def dim(self, n: int) -> int:
        return self.module.actee.dim * len(self.wedges[n])

    def boundary(self, n: int) -> Matrix:
        if n == 0:
            return Matrix.zeros(self.L.field, 0, self.dim(0))
        return self.boundaries[n]


def chain_complex(L: HomLieAlgebra, module: HomAction, max_degree: int) -> ChainComplex:
    """Assemble ``C_0 .. C_N`` and the boundaries; ``d o d = 0`` is checked.

    Only the linear structure of the actee is used (its bracket is ignored),
    so the adjoint action serves as the adjoint module.
    """
    if max_degree < 0:
        raise DegreeError("degree must be non-negative")
    if module.actor != L:
        raise PreconditionViolated("module is not over this algebra")
    F = L.field
    M = module.actee
    dm, dl = M.dim, L.dim
    wedges = [list(combinations(range(dl), n)) for n in range(max_degree + 1)]
    pos = [{S: k for k, S in enumerate(w)} for w in wedges]
    aL = [L.alpha.column(i) for i in range(dl)]
    bounds = {}
    for n in range(1, max_degree + 1):
        rows_out = dm * len(wedges[n - 1])
        width = len(wedges[n - 1])
        cols = []
        for a in range(dm):
            m = M.basis(a)
            am = M.apply_alpha(m)
            for S in wedges[n]:
                out = [F.zero] * rows_out
                for i in range(n):
                    sign = F.one if (i + 1) % 2 == 0 else -F.one
                    acted = module.act(L.basis(S[i]), m)
                    rest = [aL[S[k]] for k in range(n) if k != i]
                    for T, c in wedge_expand(F, rest).items():
                        t = pos[n - 1][T]
                        for b, x in enumerate(acted):
                            if x:
                                out[b * width + t] = out[b * width + t] + sign * c * x
                for i in range(n):
                    for j in range(i + 1, n):
                        sign = F.one if (i + j + 2) % 2 == 0 else -F.one
                        rest = [L.table[S[i]][S[j]]] + [aL[S[k]] for k in range(n) if k != i and k != j]
                        for T, c in wedge_expand(F, rest).items():
                            t = pos[n - 1][T]
                            for b, x in enumerate(am):
                                if x:
                                    out[b * width + t] = out[b * width + t] + sign * c * x
                cols.append(tuple(out))
        bounds[n] = Matrix.from_columns(F, cols, rows_out)
    for n in range(2, max_degree + 1):
        if not (bounds[n - 1] @ bounds[n]).is_zero():
            raise InternalInconsistency(f"d_{n - 1} o d_{n} != 0")
    return ChainComplex(L, module, max_degree, wedges, bounds)


@dataclass
class HomologyGroup:
    degree: int
    dim: int
    representatives: Subspace
    cycles: Subspace
    boundaries: Subspace


def homology(cc: ChainComplex, n: int) -> HomologyGroup:
    """``H_n = Ker d_n / Im d_{n+1}`` with a subspace of representative cycles."""
    if n < 0 or n + 1 > cc.max_degree:
        raise DegreeError(f"H_{n} needs the complex up to degree {n + 1}, have {cc.max_degree}")
    Z = cc.boundary(n).kernel()
    B = cc.boundary(n + 1).image()
    if not B.issubset(Z):
        raise InternalInconsistency("boundaries are not cycles")
    pq = Z.quotient(B)
    reps = Subspace.span(cc.L.field, cc.dim(n), (Z.vector(pq.lift(c)) for c in _units(cc.L.field, pq.dim)))
    return HomologyGroup(n, Z.dim - B.dim, reps, Z, B)


def _units(field, q):
    for a in range(q):
        yield tuple(field.one if k == a else field.zero for k in range(q))


def homology_dim(cc: ChainComplex, n: int) -> int:
    return homology(cc, n).dim


def homology_dims(L: HomLieAlgebra, module: HomAction | None = None, max_n: int = 2) -> list:
    """``[dim H_0, ..., dim H_max_n]`` (the complex is built one degree higher)."""
    module = module or trivial_module(L)
    cc = chain_complex(L, module, max_n + 1)
    return [homology_dim(cc, n) for n in range(max_n + 1)]


def h0_closed_form(module: HomAction) -> int:
    """``dim M / ^L M``."""
    return module.actee.dim - module.span_of_values().dim


def h1_trivial_closed_form(L: HomLieAlgebra, module: HomAction) -> int:
    """``dim (M (x) L) / (alpha_M(M) (x) [L, L])`` for a trivial module."""
    if not module.is_trivial():
        raise PreconditionViolated("the closed form for H_1 needs a trivial module")
    M = module.actee
    return M.dim * L.dim - M.alpha.rank() * derived(L).dim


@dataclass
class SecondHomology:
    complex_dim: int
    tensor_dim: int | None

    @property
    def agree(self) -> bool:
        return self.tensor_dim is None or self.tensor_dim == self.complex_dim


def h2_alpha(L: HomLieAlgebra) -> SecondHomology:
    """``dim H_2(L)`` from the complex, and from ``Ker(L*L -> L)`` when ``L`` is perfect."""
    from .tensor import psi_n_matrix, self_tensor

    cd = homology_dim(chain_complex(L, trivial_module(L), 3), 2)
    td = None
    if perfectness_flags(L).perfect:
        td = psi_n_matrix(self_tensor(L)).kernel().dim
    return SecondHomology(cd, td)
