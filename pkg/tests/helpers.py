"""Random structures and independent oracles shared by the test modules.

The oracles deliberately avoid the package's linear algebra: scalars are
converted to sympy domain elements and ranks come from ``DomainMatrix``.
Wedges are handled through Pluecker coordinates (minors) rather than the
sorting-with-signs bookkeeping used by the package.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import sympy
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from homlie.actions import HomAction
from homlie.algebra import HomLieAlgebra, change_basis, direct_sum, twisted_lie, hom_lie_violations
from homlie.fields import Mod, PrimeField, Q, QuadNumber
from homlie.linalg import Matrix

F5 = PrimeField(5)


# ---------------------------------------------------------------------------
# building algebras


def lie(F, dim, brackets=None, alpha=None, name=""):
    """Hom-Lie algebra from 1-based ``{(i, j): coords}`` and alpha columns (identity by default)."""
    br = {(i - 1, j - 1): tuple(F(x) for x in v) for (i, j), v in (brackets or {}).items()}
    if alpha is None:
        A = Matrix.identity(F, dim)
    else:
        A = Matrix.from_columns(F, [tuple(F(x) for x in c) for c in alpha], dim)
    return HomLieAlgebra.from_brackets(F, dim, br, A, name)


def so3(F, alpha=None):
    return lie(F, 3, {(1, 2): (0, 0, 1), (2, 3): (1, 0, 0), (1, 3): (0, -1, 0)}, alpha, "so3")


def r2(F, alpha=None):
    """Two-dimensional non-abelian: ``[e1, e2] = e2``."""
    return lie(F, 2, {(1, 2): (0, 1)}, alpha, "r2")


def heisenberg(F, alpha=None):
    return lie(F, 3, {(1, 2): (0, 0, 1)}, alpha, "heis")


def sl2(F, alpha=None):
    """Basis h, e, f."""
    return lie(F, 3, {(1, 2): (0, 2, 0), (1, 3): (0, 0, -2), (2, 3): (1, 0, 0)}, alpha, "sl2")


def _nonzero(rng, F):
    while True:
        c = F(rng.randint(-3, 3)) if F.char == 0 else F.random(rng)
        if c:
            return c


def _scalar(rng, F):
    return F(rng.randint(-2, 2)) if F.char == 0 else F.random(rng)


def random_invertible(rng, F, n):
    while True:
        M = Matrix(F, [[_scalar(rng, F) for _ in range(n)] for _ in range(n)], n)
        if M.rank() == n:
            return M


def _random_lie_with_endomorphism(rng, F):
    """A Lie algebra (alpha = id) together with a Lie endomorphism of it."""
    kind = rng.choice(["abelian", "r2", "heis", "so3", "sl2", "lie_sum"])
    if kind == "abelian":
        n = rng.randint(1, 4)
        L = HomLieAlgebra.abelian(F, n)
        E = Matrix(F, [[_scalar(rng, F) for _ in range(n)] for _ in range(n)], n)
        return L, E
    if kind == "r2":
        t, c = _scalar(rng, F), _scalar(rng, F)
        if rng.random() < 0.5:
            cols = [(F.one, t), (F.zero, c)]
        else:
            cols = [(F.zero, t), (F.zero, F.zero)]
        return r2(F), Matrix.from_columns(F, cols, 2)
    if kind == "heis":
        a, b, c, d, x, y = (_scalar(rng, F) for _ in range(6))
        cols = [(a, c, x), (b, d, y), (F.zero, F.zero, a * d - b * c)]
        return heisenberg(F), Matrix.from_columns(F, cols, 3)
    if kind == "so3":
        choices = [
            [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
            [(0, 1, 0), (0, 0, 1), (1, 0, 0)],
            [(1, 0, 0), (0, -1, 0), (0, 0, -1)],
            [(0, 0, 0), (0, 0, 0), (0, 0, 0)],
        ]
        cols = rng.choice(choices)
        return so3(F), Matrix.from_columns(F, [tuple(F(x) for x in c) for c in cols], 3)
    if kind == "sl2":
        c = _nonzero(rng, F)
        if rng.random() < 0.7:
            cols = [(F.one, F.zero, F.zero), (F.zero, c, F.zero), (F.zero, F.zero, F.one / c)]
        else:
            cols = [(F.zero,) * 3] * 3
        return sl2(F), Matrix.from_columns(F, cols, 3)
    # direct sum of two small pieces, dims adding up to at most 4
    L1, E1 = r2(F), Matrix.from_columns(F, [(F.one, _scalar(rng, F)), (F.zero, _scalar(rng, F))], 2)
    if rng.random() < 0.5:
        L2, E2 = r2(F), Matrix.from_columns(F, [(F.one, F.zero), (F.zero, _scalar(rng, F))], 2)
    else:
        L2 = HomLieAlgebra.abelian(F, 1)
        E2 = Matrix(F, [[_scalar(rng, F)]], 1)
    S = direct_sum(L1, L2)
    Es = direct_sum(HomLieAlgebra.abelian(F, L1.dim, E1), HomLieAlgebra.abelian(F, L2.dim, E2)).alpha
    return S, Es


def random_hom_lie(rng: random.Random, F=Q) -> HomLieAlgebra:
    """A random valid Hom-Lie algebra of dimension at most 4.

    Three sources: Yau twists ``[x,y]_a = a[x,y]`` of Lie algebras by Lie
    endomorphisms, arbitrary skew brackets with ``alpha = 0``, and Lie
    algebras with ``alpha = id``; all followed by a random change of basis.
    """
    kind = rng.random()
    if kind < 0.55:
        L, E = _random_lie_with_endomorphism(rng, F)
        H = twisted_lie(L, E)
    elif kind < 0.75:
        n = rng.randint(1, 4)
        br = {(i, j): tuple(_scalar(rng, F) for _ in range(n)) for i, j in combinations(range(n), 2) if rng.random() < 0.6}
        H = HomLieAlgebra.from_brackets(F, n, br, Matrix.zeros(F, n, n))
    else:
        H, _ = _random_lie_with_endomorphism(rng, F)
    T = random_invertible(rng, F, H.dim)
    H = change_basis(H, T, "random")
    assert not hom_lie_violations(H)
    return H


def random_module(rng, L: HomLieAlgebra):
    """Coefficients for the chain complex: the adjoint action or a trivial module with random alpha."""
    F = L.field
    if rng.random() < 0.3:
        return HomAction.adjoint(L)
    m = rng.randint(1, 3)
    alpha = Matrix(F, [[_scalar(rng, F) for _ in range(m)] for _ in range(m)], m)
    return HomAction.trivial(L, HomLieAlgebra.abelian(F, m, alpha))


# ---------------------------------------------------------------------------
# sympy side


def domain(F):
    if F == Q:
        return QQ
    if F.char:
        return GF(F.char)
    return QQ.algebraic_field(sympy.sqrt(F.d))


def to_dom(K, x):
    if isinstance(x, Fraction):
        return K(x.numerator) / K(x.denominator)
    if isinstance(x, Mod):
        return K(x.value)
    if isinstance(x, QuadNumber):
        return K.from_sympy(to_sympy(x))
    if isinstance(x, int):
        return K(x)
    raise TypeError(x)


def to_sympy(x):
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    if isinstance(x, QuadNumber):
        return sympy.Rational(x.a.numerator, x.a.denominator) + sympy.Rational(x.b.numerator, x.b.denominator) * sympy.sqrt(x.d)
    if isinstance(x, Mod):
        return sympy.Integer(x.value)
    return sympy.Integer(x)


def oracle_rank(F, rows, ncols):
    """Rank of a list of rows computed by sympy."""
    rows = [list(r) for r in rows]
    if not rows or ncols == 0:
        return 0
    K = domain(F)
    return DomainMatrix([[to_dom(K, x) for x in r] for r in rows], (len(rows), ncols), K).rank()


def _dom_rank(K, rows, ncols):
    if not rows or ncols == 0:
        return 0
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), K).rank()


def _det(K, M):
    n = len(M)
    if n == 0:
        return K.one
    return DomainMatrix([list(r) for r in M], (n, n), K).det()


class _DomAlgebra:
    """Plain-domain copy of a Hom-Lie algebra: bracket table and alpha columns."""

    def __init__(self, K, L):
        self.K = K
        self.n = L.dim
        self.table = [[[to_dom(K, x) for x in L.table[i][j]] for j in range(L.dim)] for i in range(L.dim)]
        self.alpha = [[to_dom(K, L.alpha[k, i]) for k in range(L.dim)] for i in range(L.dim)]

    def alpha_of(self, v):
        out = [self.K.zero] * self.n
        for i, c in enumerate(v):
            if c:
                for k in range(self.n):
                    out[k] += c * self.alpha[i][k]
        return out

    def bracket(self, u, v):
        out = [self.K.zero] * self.n
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        for k in range(self.n):
                            out[k] += a * b * self.table[i][j][k]
        return out

    def unit(self, i):
        return [self.K.one if k == i else self.K.zero for k in range(self.n)]


def _dom_action(K, act):
    return [[[to_dom(K, x) for x in act.value[i][j]] for j in range(act.actee.dim)] for i in range(act.actor.dim)]


def _act(K, val, x, m, dm):
    out = [K.zero] * dm
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(m):
                if b:
                    for k in range(dm):
                        out[k] += a * b * val[i][j][k]
    return out


def oracle_homology_dims(L: HomLieAlgebra, act: HomAction, max_n: int) -> list:
    """``dim H_n`` for ``n <= max_n`` from the boundary formula, wedges via minors."""
    K = domain(L.field)
    A = _DomAlgebra(K, L)
    n_l = L.dim
    dm = act.actee.dim
    val = _dom_action(K, act)
    am = [[to_dom(K, act.actee.alpha[k, i]) for k in range(dm)] for i in range(dm)]

    def plucker(vectors, q):
        """Coordinates of ``v1 ^ ... ^ vq`` in the basis of increasing tuples."""
        out = []
        for S in combinations(range(n_l), q):
            out.append(_det(K, [[v[s] for s in S] for v in vectors]) if q else K.one)
        return out

    def boundary_rows(q):
        rows = []
        tuples_low = list(combinations(range(n_l), q - 1))
        width = dm * len(tuples_low)
        for a in range(dm):
            m = [K.one if k == a else K.zero for k in range(dm)]
            for S in combinations(range(n_l), q):
                xs = [A.unit(s) for s in S]
                axs = [A.alpha_of(x) for x in xs]
                col = [K.zero] * width
                for i in range(q):
                    sign = K.one if (i + 1) % 2 == 0 else -K.one
                    xm = _act(K, val, xs[i], m, dm)
                    w = plucker([axs[k] for k in range(q) if k != i], q - 1)
                    for b in range(dm):
                        if xm[b]:
                            for t, c in enumerate(w):
                                col[b * len(tuples_low) + t] += sign * xm[b] * c
                am_m = am[a]
                for i in range(q):
                    for j in range(i + 1, q):
                        sign = K.one if (i + j + 2) % 2 == 0 else -K.one
                        w = plucker([A.bracket(xs[i], xs[j])] + [axs[k] for k in range(q) if k not in (i, j)], q - 1)
                        for b in range(dm):
                            if am_m[b]:
                                for t, c in enumerate(w):
                                    col[b * len(tuples_low) + t] += sign * am_m[b] * c
                rows.append(col)
        return rows, width

    from math import comb

    dims = [dm * comb(n_l, q) for q in range(max_n + 2)]
    ranks = [0]
    for q in range(1, max_n + 2):
        rows, width = boundary_rows(q)
        ranks.append(_dom_rank(K, rows, width))
    return [dims[q] - ranks[q] - ranks[q + 1] for q in range(max_n + 1)]


def oracle_tensor_relations(M, N, amn, anm, rng, samples=None):
    """Relation vectors of D(M, N) evaluated on random elements, in the ambient basis ``i*dimN + j``."""
    K = domain(M.field)
    A, B = _DomAlgebra(K, M), _DomAlgebra(K, N)
    vmn, vnm = _dom_action(K, amn), _dom_action(K, anm)
    dM, dN = M.dim, N.dim

    def tens(u, v):
        return [u[i] * v[j] for i in range(dM) for j in range(dN)]

    def add(*vs):
        out = [K.zero] * (dM * dN)
        for v in vs:
            for k, x in enumerate(v):
                out[k] += x
        return out

    def neg(v):
        return [-x for x in v]

    def rm():
        return [K(rng.randint(-3, 3)) for _ in range(dM)]

    def rn():
        return [K(rng.randint(-3, 3)) for _ in range(dN)]

    def on(m, n):  # ^m n
        return _act(K, vmn, m, n, dN)

    def om(n, m):  # ^n m
        return _act(K, vnm, n, m, dM)

    rels = []
    count = samples if samples is not None else 4 * dM * dN + 12
    for _ in range(count):
        m, m1, m2, n, n1, n2 = rm(), rm(), rm(), rn(), rn(), rn()
        rels.append(add(tens(A.bracket(m, m1), B.alpha_of(n)), neg(tens(A.alpha_of(m), on(m1, n))), tens(A.alpha_of(m1), on(m, n))))
        rels.append(add(tens(A.alpha_of(m), B.bracket(n, n1)), neg(tens(om(n1, m), B.alpha_of(n))), tens(om(n, m), B.alpha_of(n1))))
        rels.append(tens(om(n, m), on(m, n)))
        rels.append(add(tens(om(n, m), on(m1, n1)), tens(om(n1, m1), on(m, n))))
        rels.append(add(
            tens(A.bracket(om(n, m), om(n1, m1)), B.alpha_of(on(m2, n2))),
            tens(A.bracket(om(n1, m1), om(n2, m2)), B.alpha_of(on(m, n))),
            tens(A.bracket(om(n2, m2), om(n, m)), B.alpha_of(on(m1, n1))),
        ))
    return K, rels


def oracle_tensor_dim(M, N, amn, anm, seed=0):
    K, rels = oracle_tensor_relations(M, N, amn, anm, random.Random(seed))
    return M.dim * N.dim - _dom_rank(K, rels, M.dim * N.dim)


def kernel_dim_oracle(F, rows, ncols):
    return ncols - oracle_rank(F, rows, ncols)


def matrix_rows(M: Matrix):
    return [list(r) for r in M.rows]


def contains_oracle(F, basis_rows, v, ncols):
    """Is ``v`` in the span of ``basis_rows``? (sympy ranks)"""
    return oracle_rank(F, list(basis_rows) + [list(v)], ncols) == oracle_rank(F, basis_rows, ncols)


def oracle_dense_dims(F):
    return domain(F)


def from_dom(F, K, x):
    """Back from a sympy domain element to the package field."""
    if getattr(F, "d", None):
        e = sympy.expand(K.to_sympy(x))
        b = e.coeff(sympy.sqrt(F.d))
        a = sympy.expand(e - b * sympy.sqrt(F.d))
        return QuadNumber(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)), F.d)
    if F == Q:
        q = K.to_sympy(x)
        return Fraction(int(q.p), int(q.q))
    return F(int(K.to_sympy(x)) % F.char)


# ---------------------------------------------------------------------------
# random snake diagrams


def _rand(rng, F, m, n):
    return Matrix(F, [[_scalar(rng, F) for _ in range(n)] for _ in range(m)], n)


def _blocks(F, top, bottom, ncols):
    """Stack two matrices with the same number of columns."""
    return Matrix(F, list(top.rows) + list(bottom.rows), ncols)


def random_snake(rng, F=Q, max_dim=5):
    """Seven maps of a commuting diagram with exact rows, all spaces of dim <= max_dim.

    Rows are split up to a random change of basis ``P`` (top middle) and
    ``Q`` (bottom middle); in split coordinates ``psi2 = [[X, Y], [0, psi3]]``
    and ``psi1 = X E`` where ``f1 = P [E; 0]``, which is exactly what the two
    squares require.
    """
    from homlie.linalg import solve_columns

    while True:
        a1, a3, b1, b3 = (rng.randint(0, 3) for _ in range(4))
        r = rng.randint(0, a1)
        if r + a3 <= max_dim and b1 + b3 <= max_dim and max(a1, a3, b1, b3) <= max_dim:
            break
    a2, b2 = r + a3, b1 + b3
    E = _rand(rng, F, r, a1)
    while E.rank() != r:
        E = _rand(rng, F, r, a1)
    P = random_invertible(rng, F, a2) if a2 else Matrix.zeros(F, 0, 0)
    Qm = random_invertible(rng, F, b2) if b2 else Matrix.zeros(F, 0, 0)
    Pinv = solve_columns(P, Matrix.identity(F, a2)) if a2 else P
    Qinv = solve_columns(Qm, Matrix.identity(F, b2)) if b2 else Qm
    f1 = P @ _blocks(F, E, Matrix.zeros(F, a3, a1), a1)
    f2 = _blocks(F, Matrix.zeros(F, 0, a2), Matrix(F, [[F.zero] * r + [F.one if i == j else F.zero for j in range(a3)] for i in range(a3)], a2), a2) @ Pinv
    g1 = Qm @ _blocks(F, Matrix.identity(F, b1), Matrix.zeros(F, b3, b1), b1)
    g2 = Matrix(F, [[F.zero] * b1 + [F.one if i == j else F.zero for j in range(b3)] for i in range(b3)], b2) @ Qinv
    X, Y, psi3 = _rand(rng, F, b1, r), _rand(rng, F, b1, a3), _rand(rng, F, b3, a3)
    top = Matrix(F, [tuple(x) + tuple(y) for x, y in zip(X.rows, Y.rows)], a2)
    bot = Matrix(F, [tuple([F.zero] * r) + tuple(z) for z in psi3.rows], a2)
    psi2 = Qm @ _blocks(F, top, bot, a2) @ Pinv
    psi1 = X @ E
    return dict(f1=f1, f2=f2, g1=g1, g2=g2, psi1=psi1, psi2=psi2, psi3=psi3)


def brute_force_connecting(F, maps, z):
    """Lift ``z`` by f2, push by psi2, pull back by g1, with sympy solving each step."""
    K = domain(F)

    def solve(A, b):
        m, n = A.nrows, A.ncols
        aug = DomainMatrix([[to_dom(K, A[i, j]) for j in range(n)] + [to_dom(K, b[i])] for i in range(m)], (m, n + 1), K)
        rref, piv = aug.rref()
        assert n not in piv, "inconsistent system in the oracle"
        x = [K.zero] * n
        rows = rref.to_Matrix().tolist()
        for i, p in enumerate(piv):
            x[p] = K.convert(rows[i][n])
        return tuple(from_dom(F, K, c) for c in x)

    a2 = solve(maps["f2"], z)
    b2 = maps["psi2"].apply(a2)
    return solve(maps["g1"], b2)
