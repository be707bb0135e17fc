import random

import pytest
from hypothesis import given, settings, strategies as st

from homlie import corpus
from homlie.actions import HomAction
from homlie.algebra import HomMorphism, center, derived, full_space, hom_lie_violations
from homlie.errors import IncompatibleActions, PreconditionViolated
from homlie.fields import Q
from homlie.instances import right_exactness_from_ideals
from homlie.linalg import Matrix, Subspace
from homlie.tensor import (
    functorial_tensor,
    pairing_check_and_factor,
    psi_maps,
    psi_n_matrix,
    self_tensor,
    swap_map,
    tensor_product,
    tensor_square_sequence,
)

from helpers import F5, oracle_rank, oracle_tensor_dim, oracle_tensor_relations, random_hom_lie, from_dom

VALID_LIE = [n for n in corpus.names("lie") if n != "broken"]


def span(L, *idx):
    F = L.field
    return Subspace.span(F, L.dim, [tuple(F.one if k == t else F.zero for k in range(L.dim)) for t in idx])


def trivial_pair(M, N):
    return HomAction.trivial(M, N), HomAction.trivial(N, M)


def assert_matches_oracle(M, N, amn, anm, seed=0):
    T = tensor_product(M, N, amn, anm)
    K, rels = oracle_tensor_relations(M, N, amn, anm, random.Random(seed))
    # every sampled relation lies in D, and the samples span a space of the same rank
    for r in rels:
        assert T.D.contains(tuple(from_dom(M.field, K, x) for x in r))
    assert T.D.dim == oracle_rank(M.field, [list(d) for d in T.D.basis], T.ambient)
    assert T.dim == oracle_tensor_dim(M, N, amn, anm, seed)
    return T


@pytest.mark.parametrize("name", VALID_LIE)
def test_self_tensor_of_corpus_algebra_matches_relation_oracle(name):
    L = corpus.load(name)
    T = assert_matches_oracle(L, L, HomAction.adjoint(L), HomAction.adjoint(L))
    assert all(T.certificates.values())
    assert not hom_lie_violations(T.algebra)


def test_so3_tensor_square_is_three_dimensional():
    T = self_tensor(corpus.load("so3"))
    assert (T.ambient, T.D.dim, T.dim) == (9, 6, 3)


def test_two_dimensional_nonabelian_self_tensor():
    # the exact count is dim D = 2 and dim L*L = 2
    T = self_tensor(corpus.load("diag12_surjective"))
    assert (T.ambient, T.D.dim, T.dim) == (4, 2, 2)


def test_perfect_alpha_zero_self_tensor():
    T = self_tensor(corpus.load("perfect_alpha_zero"))
    assert T.dim == 3


def test_incompatible_actions_are_rejected_with_witness():
    L = corpus.load("diag12_surjective")
    with pytest.raises(IncompatibleActions) as err:
        tensor_product(L, L, HomAction.adjoint(L), HomAction.trivial(L, L))
    assert err.value.witness is not None


def test_invalid_algebra_is_rejected_before_construction():
    L = corpus.load("broken")
    with pytest.raises(PreconditionViolated):
        self_tensor(L)


@given(st.integers(0, 10**6), st.sampled_from([Q, F5]))
@settings(max_examples=25)
def test_random_tensor_products_match_oracle(seed, F):
    rng = random.Random(seed)
    M = random_hom_lie(rng, F)
    if rng.random() < 0.5:
        assert_matches_oracle(M, M, HomAction.adjoint(M), HomAction.adjoint(M), seed)
    else:
        N = random_hom_lie(rng, F)
        assert_matches_oracle(M, N, *trivial_pair(M, N), seed)


def ab_dim(L):
    return L.dim - derived(L).dim


def surjective_instances():
    out = [corpus.load(n) for n in VALID_LIE if corpus.load(n).alpha.rank() == corpus.load(n).dim]
    rng = random.Random(7)
    while len(out) < 14:
        L = random_hom_lie(rng, rng.choice([Q, F5]))
        if L.alpha.rank() == L.dim:
            out.append(L)
    return out


def test_trivial_actions_with_surjective_alpha_give_tensor_of_abelianizations():
    algs = surjective_instances()
    pairs = [(a, b) for a in algs for b in algs if a.field == b.field][:40]
    assert len(pairs) >= 10
    for M, N in pairs:
        T = tensor_product(M, N, *trivial_pair(M, N))
        assert T.dim == ab_dim(M) * ab_dim(N)
        assert T.algebra.is_abelian()


def test_trivial_actions_without_surjective_alpha_can_exceed_abelianizations():
    L = corpus.load("perfect_alpha_zero")
    T = tensor_product(L, L, *trivial_pair(L, L))
    assert ab_dim(L) == 0 and T.dim == 9


@pytest.mark.parametrize("name", VALID_LIE)
def test_psi_maps_have_central_kernels_and_identities(name):
    T = self_tensor(corpus.load(name))
    rep = psi_maps(T)
    assert rep.ok, rep.identities
    assert rep.kernel_M.issubset(center(T.algebra))


def test_psi_images_of_ideal_tensor_lie_in_commutator():
    L = corpus.load("sl2_plane")
    T = self_tensor(L)
    rep = psi_maps(T)
    assert rep.image_N == derived(L)


@pytest.mark.parametrize("name", VALID_LIE)
def test_swap_is_an_involutive_isomorphism(name):
    T = self_tensor(corpus.load(name))
    s = swap_map(T, T)
    assert s.isomorphism and s.involutive
    assert s.plain_swap_is_morphism == T.algebra.is_abelian()


def test_swap_between_different_factors():
    M, N = corpus.load("r2"), corpus.load("shear2")
    T, T2 = tensor_product(M, N, *trivial_pair(M, N)), tensor_product(N, M, *trivial_pair(N, M))
    s = swap_map(T, T2)
    assert s.isomorphism and s.involutive


def test_bracket_is_a_pairing_inducing_psi_n():
    L = corpus.load("so3")
    T = self_tensor(L)
    h = [[L.table[i][j] for j in range(L.dim)] for i in range(L.dim)]
    rep = pairing_check_and_factor(h, L, T)
    assert rep.is_pairing and rep.factors
    assert rep.induced.matrix == psi_n_matrix(T)


def test_universal_pairing_induces_identity():
    L = corpus.load("diag12_surjective")
    T = self_tensor(L)
    h = [[T.star_basis(i, j) for j in range(L.dim)] for i in range(L.dim)]
    rep = pairing_check_and_factor(h, T.algebra, T)
    assert rep.is_pairing and rep.induced.matrix == Matrix.identity(Q, T.dim)


def test_constant_map_is_not_a_pairing():
    L = corpus.load("so3")
    T = self_tensor(L)
    h = [[(Q(1), Q(0), Q(0))] * 3 for _ in range(3)]
    rep = pairing_check_and_factor(h, L, T)
    assert not rep.is_pairing and rep.violations and rep.induced is None


@pytest.mark.parametrize("name", ["so3", "diag12_surjective", "sl2_plane", "shear2"])
def test_alpha_tensor_alpha_is_the_twist_of_the_tensor(name):
    L = corpus.load(name)
    T = self_tensor(L)
    a = HomMorphism(L, L, L.alpha)
    assert functorial_tensor(a, a, T, T).matrix == T.algebra.alpha
    a2 = HomMorphism(L, L, L.alpha @ L.alpha)
    assert functorial_tensor(a2, a2, T, T).matrix == T.algebra.alpha @ T.algebra.alpha


def test_functorial_tensor_rejects_maps_not_preserving_actions():
    L = corpus.load("so3")
    T = self_tensor(L)
    z = HomMorphism(L, L, Matrix.zeros(Q, 3, 3))
    one = HomMorphism(L, L, Matrix.identity(Q, 3))
    with pytest.raises(PreconditionViolated):
        functorial_tensor(one, z, T, T)


def test_right_exactness_on_ideal_sequence():
    L = corpus.load("diag12_surjective")
    rep = right_exactness_from_ideals(L, span(L, 1), full_space(L), span(L, 1))
    assert rep.ok, rep.checks


def test_right_exactness_refuses_quotient_that_cannot_act():
    L = corpus.load("diag12_surjective")
    with pytest.raises(PreconditionViolated):
        right_exactness_from_ideals(L, span(L, 1), full_space(L), full_space(L))


def test_right_exactness_refuses_non_ideal():
    L = corpus.load("diag12_surjective")
    with pytest.raises(PreconditionViolated):
        right_exactness_from_ideals(L, span(L, 0), full_space(L), span(L, 1))


@pytest.mark.parametrize("name,idx", [("diag12_surjective", (1,)), ("sl2_plane", (3, 4)), ("so3", ()), ("shear2", (0,))])
def test_tensor_square_sequence_is_exact(name, idx):
    L = corpus.load(name)
    rep = tensor_square_sequence(L, span(L, *idx))
    assert rep.ok, rep.checks
