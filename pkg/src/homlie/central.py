"""Central extensions, universal central extensions and the five-term sequence.

Two constructions of a universal central extension are provided:

* for a perfect ``L``, ``L * L -> L``, ``l*l' -> [l, l']``;
* for an alpha-perfect ``L``, ``uce_alpha(L) = Lambda^2 alpha(L) / I_L`` with
  ``I_L`` spanned by ``-[x1,x2]^a(x3) + [x1,x3]^a(x2) - [x2,x3]^a(x1)``,
  bracket ``[u^v, u'^v'] = [u,v]^[u',v']`` and map ``u^v -> [u, v]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .algebra import (
    HomLieAlgebra,
    HomMorphism,
    alpha_image,
    check_morphism,
    commutator,
    full_space,
    is_ideal,
    morphism_violations,
    perfectness_flags,
    quotient_algebra,
)
from .diagrams import LinearDiagram, snake_sequence
from .errors import InternalInconsistency, PreconditionViolated
from .homology import h2_alpha, homology_dim, chain_complex, trivial_module
from .linalg import Matrix, PresentedQuotient, Subspace, hstack, solve_linear, vadd, zero_vector
from .tensor import (
    ExactnessReport,
    functorial_tensor,
    ideal_tensor,
    psi_m_matrix,
    psi_n_matrix,
    self_tensor,
)


# ---------------------------------------------------------------------------
# extensions


@dataclass
class ExtensionData:
    """A surjection ``pi: K -> L`` of Hom-Lie algebras with kernel ``M``."""

    K: HomLieAlgebra
    L: HomLieAlgebra
    pi: Matrix

    def __post_init__(self):
        chk = check_morphism(self.pi, self.K, self.L)
        if not chk.ok:
            raise PreconditionViolated("extension map is not a morphism", witness=chk.violations[:1])
        if self.pi.rank() != self.L.dim:
            raise PreconditionViolated("extension map is not onto", witness=self.pi.image().annihilator().basis[:1])

    @property
    def kernel(self) -> Subspace:
        return self.pi.kernel()


@dataclass
class ExtensionClass:
    central: bool
    alpha_central: bool
    kernel_dim: int


def classify_extension(E: ExtensionData) -> ExtensionClass:
    """Central means ``[M, K] = 0``; alpha-central means ``[alpha(M), K] = 0``."""
    K = E.K
    M = E.kernel
    full = full_space(K)
    central = commutator(K, M, full).dim == 0
    aM = M.image_under(K.alpha)
    acentral = commutator(K, aM, full).dim == 0
    if central and not acentral:
        raise InternalInconsistency("central extension that is not alpha-central")
    return ExtensionClass(central, acentral, M.dim)


def section_lift(E: ExtensionData, x, shift=None):
    """A preimage of ``x`` under ``pi``, optionally moved by a kernel vector."""
    k = solve_linear(E.pi, x)
    if k is None:
        raise InternalInconsistency("surjection has no preimage")
    if shift is not None:
        k = vadd(k, shift)
    return k


def _require_perfect(L: HomLieAlgebra):
    pf = perfectness_flags(L)
    if not pf.perfect:
        missing = pf.derived.annihilator()
        raise PreconditionViolated("algebra is not perfect: [L, L] is a proper subspace",
                                   witness={"derived_dim": pf.derived.dim, "dim": L.dim,
                                            "functional_killing_[L,L]": missing.basis[0]})
    return pf


def _require_alpha_perfect(L: HomLieAlgebra):
    pf = perfectness_flags(L)
    if not pf.alpha_perfect:
        raise PreconditionViolated("algebra is not alpha-perfect: [alpha L, alpha L] is a proper subspace",
                                   witness={"alpha_derived_dim": pf.alpha_derived.dim, "dim": L.dim})
    return pf


# ---------------------------------------------------------------------------
# universal central extension through the tensor square


@dataclass
class UceTensor:
    tensor: object
    extension: ExtensionData
    kernel: Subspace
    checks: dict

    @property
    def algebra(self) -> HomLieAlgebra:
        return self.tensor.algebra

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def uce_via_tensor(L: HomLieAlgebra) -> UceTensor:
    """``L * L -> L`` for a perfect ``L`` together with the defining properties."""
    _require_perfect(L)
    T = self_tensor(L)
    psi = psi_n_matrix(T)
    E = ExtensionData(T.algebra, L, psi)
    cls = classify_extension(E)
    h2 = homology_dim(chain_complex(L, trivial_module(L), 3), 2)
    checks = {
        "central": cls.central,
        "cover_perfect": perfectness_flags(T.algebra).perfect,
        "kernel_matches_h2": E.kernel.dim == h2,
        "h1_cover_zero": homology_dim(chain_complex(T.algebra, trivial_module(T.algebra), 2), 1) == 0,
    }
    return UceTensor(T, E, E.kernel, checks)


def tensor_universal_map(U: UceTensor, E: ExtensionData, shift=None) -> Matrix:
    """``l*l' -> [c(l), c(l')]`` into a central extension ``E`` of the same ``L``."""
    L = U.extension.L
    T = U.tensor
    lifts = [section_lift(E, L.basis(i), None if shift is None else shift[i]) for i in range(L.dim)]
    amb = Matrix.from_columns(L.field, [E.K.bracket(lifts[i], lifts[j]) for i in range(L.dim) for j in range(L.dim)], E.K.dim)
    if any(any(amb.apply(d)) for d in T.D.basis):
        raise InternalInconsistency("lifted bracket does not vanish on D")
    return amb @ T.quotient.section


# ---------------------------------------------------------------------------
# the exterior construction


@dataclass
class UceAlpha:
    """``Lambda^2 A / I_L`` for ``A = alpha(L)``; ambient basis ``a_s ^ a_t`` with ``s < t``."""

    base: HomLieAlgebra
    A: Subspace
    pairs: list
    I: Subspace
    quotient: PresentedQuotient
    algebra: HomLieAlgebra
    u: Matrix
    certificates: dict = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def wedge(self, x, y):
        """Ambient coordinates of ``x ^ y`` for ``x, y`` in ``alpha(L)``."""
        return _wedge(self.base.field, self.A, self.pairs, x, y)

    def brace(self, x, y):
        """The class ``{x, y}`` in the quotient."""
        return self.quotient.project(self.wedge(x, y))


def _wedge(F, A: Subspace, pairs, x, y):
    cx, cy = A.coordinates(x), A.coordinates(y)
    return tuple(cx[s] * cy[t] - cx[t] * cy[s] for s, t in pairs)


def uce_alpha(L: HomLieAlgebra) -> UceAlpha:
    """Build ``uce_alpha(L)`` with its bracket, twist and map ``u_alpha`` onto ``L``."""
    _require_alpha_perfect(L)
    F = L.field
    A = alpha_image(L)
    r = A.dim
    pairs = list(combinations(range(r), 2))
    n = len(pairs)
    a = [L.apply_alpha(L.basis(i)) for i in range(L.dim)]
    rel = []
    for i, j, k in combinations(range(L.dim), 3):
        x1, x2, x3 = L.basis(i), L.basis(j), L.basis(k)
        v = _wedge(F, A, pairs, L.bracket(x1, x2), a[k])
        v = tuple(-c for c in v)
        v = vadd(v, _wedge(F, A, pairs, L.bracket(x1, x3), a[j]))
        v = vadd(v, tuple(-c for c in _wedge(F, A, pairs, L.bracket(x2, x3), a[i])))
        rel.append(v)
    I = Subspace.span(F, n, rel)
    basisA = A.basis
    # ambient bracket: [a_s^a_t, a_u^a_v] = [a_s,a_t] ^ [a_u,a_v]
    brs = [L.bracket(basisA[s], basisA[t]) for s, t in pairs]
    table = [[_wedge(F, A, pairs, brs[p], brs[q]) for q in range(n)] for p in range(n)]
    alpha_amb = Matrix.from_columns(
        F, [_wedge(F, A, pairs, L.apply_alpha(basisA[s]), L.apply_alpha(basisA[t])) for s, t in pairs], n
    )
    u_amb = Matrix.from_columns(F, brs, L.dim) if n else Matrix.zeros(F, L.dim, 0)

    def amb_br(x, y):
        acc = zero_vector(F, n)
        for p, c in enumerate(x):
            if c:
                for q, d in enumerate(y):
                    if d:
                        acc = vadd(acc, tuple(c * d * z for z in table[p][q]))
        return acc

    units = [tuple(F.one if k == p else F.zero for k in range(n)) for p in range(n)]
    certs = {
        "bracket_absorbs_I": all(I.contains(amb_br(d, e)) and I.contains(amb_br(e, d)) for d in I.basis for e in units),
        "alpha_preserves_I": all(I.contains(alpha_amb.apply(d)) for d in I.basis),
        "u_kills_I": all(not any(u_amb.apply(d)) for d in I.basis),
        "brackets_land_in_alpha_image": all(A.contains(b) for b in brs),
    }
    if not all(certs.values()):
        raise InternalInconsistency(f"uce_alpha certificate failed: {[k for k, v in certs.items() if not v]}")
    pq = PresentedQuotient(I)
    S, P = pq.section, pq.projection
    reps = [S.column(c) for c in range(pq.dim)]
    qtable = [[P.apply(amb_br(x, y)) for y in reps] for x in reps]
    alg = HomLieAlgebra(F, qtable, P @ alpha_amb @ S, "uce_alpha")
    u = u_amb @ S
    chk = check_morphism(u, alg, L)
    certs["u_morphism"] = chk.ok
    if not chk.ok:
        raise InternalInconsistency(f"u_alpha is not a morphism: {chk.violations[0]}")
    return UceAlpha(L, A, pairs, I, pq, alg, u, certs)


def uce_alpha_properties(U: UceAlpha) -> dict:
    """Surjectivity, alpha-centrality of the kernel and alpha-perfectness of the cover."""
    E = ExtensionData(U.algebra, U.base, U.u)
    cls = classify_extension(E)
    return {
        "u_surjective": U.u.rank() == U.base.dim,
        "alpha_central": cls.alpha_central,
        "cover_alpha_perfect": perfectness_flags(U.algebra).alpha_perfect,
        "kernel_dim": E.kernel.dim,
    }


def universal_map(U: UceAlpha, E: ExtensionData, shift=None) -> Matrix:
    """``{alpha x1, alpha x2} -> [alpha_K k1, alpha_K k2]`` with ``pi(k_i) = x_i``.

    ``shift[i]`` (a kernel vector of ``E``) moves the chosen lift of the
    preimage of ``a_i``; the result must not depend on it.
    """
    L, K = U.base, E.K
    F = L.field
    xs = []
    for s, b in enumerate(U.A.basis):
        x = solve_linear(L.alpha, b)
        if x is None:
            raise InternalInconsistency("alpha(L) basis vector without preimage")
        xs.append(section_lift(E, x, None if shift is None else shift[s]))
    ak = [K.apply_alpha(k) for k in xs]
    amb = Matrix.from_columns(F, [K.bracket(ak[s], ak[t]) for s, t in U.pairs], K.dim) if U.pairs else Matrix.zeros(F, K.dim, 0)
    if any(any(amb.apply(d)) for d in U.I.basis):
        raise InternalInconsistency("universal map does not vanish on I_L")
    return amb @ U.quotient.section


def universal_map_report(U: UceAlpha, E: ExtensionData, shift=None) -> dict:
    cls = classify_extension(E)
    if not cls.alpha_central:
        raise PreconditionViolated("target extension is not alpha-central")
    phi = universal_map(U, E)
    out = {
        "morphism": not morphism_violations(phi, U.algebra, E.K),
        "commutes": E.pi @ phi == U.u,
    }
    if shift is not None:
        out["section_independent"] = universal_map(U, E, shift) == phi
    return out


def uce_alpha_vs_tensor(L: HomLieAlgebra) -> dict:
    """Compare ``alpha(L) * alpha(L)`` with ``uce_alpha(L)`` via ``a*b -> {a, b}``."""
    U = uce_alpha(L)
    F = L.field
    A = U.A
    T, ip = ideal_tensor(L, A, A)
    r = A.dim
    pos = {p: k for k, p in enumerate(U.pairs)}
    cols = []
    for s in range(r):
        for t in range(r):
            v = [F.zero] * len(U.pairs)
            if s < t:
                v[pos[(s, t)]] = F.one
            elif s > t:
                v[pos[(t, s)]] = -F.one
            cols.append(tuple(v))
    amb = Matrix.from_columns(F, cols, len(U.pairs))
    sends = all(U.I.contains(amb.apply(d)) for d in T.D.basis)
    if not sends:
        raise InternalInconsistency("a*b -> {a, b} does not send D into I_L")
    phi = U.quotient.projection @ amb @ T.quotient.section
    morph = not morphism_violations(phi, T.algebra, U.algebra)
    return {
        "tensor_dim": T.dim,
        "uce_alpha_dim": U.dim,
        "morphism": morph,
        "isomorphism": morph and T.dim == U.dim and phi.rank() == U.dim,
        "matrix": phi,
    }


# ---------------------------------------------------------------------------
# the five-term sequence for a perfect algebra


def five_term_diagram(L: HomLieAlgebra, M: Subspace) -> LinearDiagram:
    """The snake diagram with top row ``(M*L + L*M) -> L*L -> (L/M)*(L/M) -> 0``."""
    if not is_ideal(L, M):
        raise PreconditionViolated("M is not an alpha-invariant ideal",
                                   witness=_ideal_witness(L, M))
    F = L.field
    Lfull = full_space(L)
    ML, ipML = ideal_tensor(L, M, Lfull)
    LM, ipLM = ideal_tensor(L, Lfull, M)
    LL = self_tensor(L)
    Lq, proj, _ = quotient_algebra(L, M)
    QQ = self_tensor(Lq)
    s1 = functorial_tensor(HomMorphism(ML.M, L, ipML.inc_h.matrix), HomMorphism(ML.N, L, ipML.inc_k.matrix), ML, LL)
    s2 = functorial_tensor(HomMorphism(LM.M, L, ipLM.inc_h.matrix), HomMorphism(LM.N, L, ipLM.inc_k.matrix), LM, LL)
    tau = functorial_tensor(proj, proj, LL, QQ)
    sigma = hstack(F, LL.dim, s1.matrix, s2.matrix @ LM.algebra.alpha)
    Ma = ipML.H  # M in its echelon coordinates
    psi1 = hstack(F, Ma.dim, psi_m_matrix(ML), Ma.alpha @ psi_n_matrix(LM))
    psi2 = psi_n_matrix(LL)
    psi3 = psi_n_matrix(QQ)
    g1 = ipML.inc_h.matrix
    g2 = proj.matrix
    d = LinearDiagram.snake(F, sigma, tau.matrix, g1, g2, psi1, psi2, psi3)
    d.extra = {"ML": ML, "LM": LM, "LL": LL, "QQ": QQ, "s1": s1.matrix, "Lq": Lq}
    return d


def _ideal_witness(L, M):
    for i, m in enumerate(M.basis):
        for j in range(L.dim):
            b = L.bracket(m, L.basis(j))
            if not M.contains(b):
                return {"kind": "bracket", "basis_of_M": i, "e": j, "value": b}
        am = L.apply_alpha(m)
        if not M.contains(am):
            return {"kind": "alpha", "basis_of_M": i, "value": am}
    return None


def five_term_sequence(L: HomLieAlgebra, M: Subspace) -> ExactnessReport:
    """``Ker(M*L -> M) -> H2(L) -> H2(L/M) -> M/[L,M] -> 0`` via the snake lemma.

    ``H2(L)`` and ``H2(L/M)`` are the kernels of the bracket maps on the
    tensor squares; both identifications are cross-checked against the
    chain complex.
    """
    _require_perfect(L)
    d = five_term_diagram(L, M)
    sn = snake_sequence(d)
    F = L.field
    ML, LL, Lq = d.extra["ML"], d.extra["LL"], d.extra["Lq"]
    s1 = d.extra["s1"]
    ker_psiM = psi_m_matrix(ML).kernel()
    ker2 = sn.kernels[1]
    # image of Ker(psi_M) in Ker(psi_L), against the kernel of Ker(psi_L) -> Ker(psi_3)
    img = Subspace.span(F, LL.dim, (s1.apply(v) for v in ker_psiM.basis))
    kmap = Subspace.span(F, LL.dim, (ker2.vector(c) for c in sn.k23.kernel().basis))
    h2_L = h2_alpha(L)
    h2_Q = homology_dim(chain_complex(Lq, trivial_module(Lq), 3), 2)
    LMcomm = commutator(L, M, full_space(L))
    checks = {
        "exact_at_H2(L)": img == kmap,
        "exact_at_H2(L/M)": sn.exact["ker3"],
        "exact_at_M/[L,M]": sn.exact["coker1"],
        "onto_M/[L,M]": sn.connecting.is_surjective(),
        "coker_psi2_zero": sn.cokernels[1].dim == 0,
        "h2_L_matches_complex": h2_L.complex_dim == ker2.dim,
        "h2_quotient_matches_complex": h2_Q == sn.kernels[2].dim,
        "coker_psi1_is_M/[L,M]": sn.cokernels[0].dim == M.dim - LMcomm.dim,
    }
    dims = {
        "Ker(M*L->M)": ker_psiM.dim,
        "H2(L)": ker2.dim,
        "H2(L/M)": sn.kernels[2].dim,
        "M/[L,M]": sn.cokernels[0].dim,
    }
    return ExactnessReport("five_term_sequence", checks, dims)


__all__ = [
    "ExtensionData",
    "ExtensionClass",
    "classify_extension",
    "section_lift",
    "UceTensor",
    "uce_via_tensor",
    "tensor_universal_map",
    "UceAlpha",
    "uce_alpha",
    "uce_alpha_properties",
    "universal_map",
    "universal_map_report",
    "uce_alpha_vs_tensor",
    "five_term_diagram",
    "five_term_sequence",
]
