import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homlie.errors import DimensionMismatch, FieldMismatch
from homlie.fields import PrimeField, Q, QuadNumber, QuadraticField
from homlie.linalg import Matrix, PresentedQuotient, Subspace, row_reduce, solve_linear, subspace_ops

from helpers import oracle_rank

F5 = PrimeField(5)
K2 = QuadraticField(2)


def mat(rows, F=Q):
    return Matrix(F, [[F(x) for x in r] for r in rows])


def test_rank_one_symmetric_matrix():
    rr = row_reduce(mat([[1, 1], [1, 1]]))
    assert rr.rank == 1
    assert rr.kernel == Subspace.span(Q, 2, [(Fraction(1), Fraction(-1))])


def test_identity_has_trivial_kernel():
    rr = row_reduce(Matrix.identity(Q, 3))
    assert rr.rank == 3 and rr.kernel.dim == 0


def test_quadratic_rotation_like_matrix_has_full_rank():
    h = QuadNumber(0, Fraction(1, 2), 2)
    z, o = K2(0), K2(1)
    m = Matrix(K2, [[h, z, h], [z, -o, z], [h, z, -h]])
    assert row_reduce(m).rank == 3


def test_mixed_field_matrix_product_rejected():
    with pytest.raises(FieldMismatch):
        mat([[1]]) @ Matrix(F5, [[F5(1)]])


def test_subspace_sum_intersection_quotient_examples():
    e1 = Subspace.span(Q, 2, [(Q(1), Q(0))])
    e2 = Subspace.span(Q, 2, [(Q(0), Q(1))])
    diag = Subspace.span(Q, 2, [(Q(1), Q(1))])
    assert subspace_ops("sum", e1, e2) == Subspace.full(Q, 2)
    assert subspace_ops("intersect", diag, e1).dim == 0
    pq = subspace_ops("quotient", Subspace.full(Q, 2), e2)
    assert pq.dim == 1 and pq.projection == mat([[1, 0]])
    assert subspace_ops("contains", Subspace.full(Q, 2), diag)


def test_ambient_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        Subspace.zero(Q, 2).sum(Subspace.zero(Q, 3))


def test_solve_linear_free_variables_are_zero():
    assert solve_linear(Matrix.identity(Q, 2), (Q(3), Q(4))) == (3, 4)
    assert solve_linear(mat([[1, 1]]), (Q(2),)) == (2, 0)
    assert solve_linear(mat([[0]]), (Q(1),)) is None


def random_matrix(rng, F, m, n, density=0.7):
    return Matrix(F, [[F(rng.randint(-3, 3)) if rng.random() < density else F(0) for _ in range(n)] for _ in range(m)], n)


@given(st.integers(0, 10**6), st.sampled_from([Q, F5]), st.integers(0, 5), st.integers(0, 5))
def test_rank_nullity_and_rank_agree_with_sympy(seed, F, m, n):
    rng = random.Random(seed)
    A = random_matrix(rng, F, m, n)
    rr = row_reduce(A)
    assert rr.rank + rr.kernel.dim == n
    assert rr.rank == oracle_rank(F, A.rows, n)
    for v in rr.kernel.basis:
        assert not any(A.apply(v))


@given(st.integers(0, 10**6), st.sampled_from([Q, F5]), st.integers(1, 6), st.integers(0, 6))
def test_presented_quotient_section_and_kernel(seed, F, n, k):
    rng = random.Random(seed)
    R = Subspace.span(F, n, random_matrix(rng, F, k, n).rows)
    pq = PresentedQuotient(R)
    assert pq.projection @ pq.section == Matrix.identity(F, pq.dim)
    assert pq.projection.kernel() == R
    assert pq.dim == n - R.dim


@given(st.integers(0, 10**6), st.integers(1, 5))
def test_intersection_and_sum_dimensions(seed, n):
    rng = random.Random(seed)
    A = Subspace.span(Q, n, random_matrix(rng, Q, rng.randint(0, n), n).rows)
    B = Subspace.span(Q, n, random_matrix(rng, Q, rng.randint(0, n), n).rows)
    assert A.sum(B).dim + A.intersect(B).dim == A.dim + B.dim
    for v in A.intersect(B).basis:
        assert A.contains(v) and B.contains(v)


@given(st.integers(0, 10**6), st.integers(1, 5), st.integers(1, 5))
def test_solve_linear_returns_a_solution_when_consistent(seed, m, n):
    rng = random.Random(seed)
    A = random_matrix(rng, Q, m, n)
    x = tuple(Q(rng.randint(-2, 2)) for _ in range(n))
    b = A.apply(x)
    y = solve_linear(A, b)
    assert y is not None and A.apply(y) == b


def test_echelon_bases_make_equal_subspaces_equal():
    a = Subspace.span(Q, 3, [(Q(1), Q(1), Q(0)), (Q(0), Q(1), Q(1))])
    b = Subspace.span(Q, 3, [(Q(1), Q(2), Q(1)), (Q(1), Q(0), Q(-1))])
    assert a == b and a.basis == b.basis


def test_quotient_of_subspace_uses_its_coordinates():
    big = Subspace.span(Q, 3, [(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0))])
    small = Subspace.span(Q, 3, [(Q(0), Q(1), Q(0))])
    pq = big.quotient(small)
    assert pq.ambient == 2 and pq.dim == 1
