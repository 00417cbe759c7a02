import random

from hypothesis import given, settings, strategies as st

from tautilt.homology import module_label
from tautilt.linalg import Matrix
from tautilt.oracles import hom_dim_bruteforce
from tautilt.rep import (Morphism, Rep, annihilator, cokernel, decompose, direct_sum, dual,
                         end_algebra, hom_dim, hom_module, hom_space, image, injective,
                         is_indecomposable, is_isomorphic, kernel, projective, regular_module,
                         simple, socle_dims, split, top_dims)


def scramble(M: Rep, rng: random.Random) -> Rep:
    """Same module in a random basis at every vertex."""
    S = []
    for d in M.dims:
        while True:
            A = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]) if d else Matrix(0, 0)
            if d == 0 or A.is_invertible():
                break
        S.append(A)
    alg = M.algebra
    mats = tuple(S[alg.targets[g]] @ m @ S[alg.sources[g]].inverse()
                 for g, m in zip(alg.generators, M.mats))
    return Rep(alg, M.dims, mats)


def test_projectives_injectives_simples(lam):
    assert [module_label(projective(lam, i)) for i in range(3)] == ["1/2", "2/3", "3"]
    assert [projective(lam, i).dims for i in range(3)] == [(1, 1, 0), (0, 1, 1), (0, 0, 1)]
    assert [module_label(injective(lam, i)) for i in range(3)] == ["1", "1/2", "2/3"]
    assert [module_label(simple(lam, i)) for i in range(3)] == ["1", "2", "3"]


def test_top_and_socle_are_simple(lam, extra_algebras):
    for alg in [lam] + extra_algebras:
        for i in range(alg.n_vertices):
            unit = tuple(int(v == i) for v in range(alg.n_vertices))
            assert top_dims(projective(alg, i)) == unit
            assert socle_dims(injective(alg, i)) == unit
            projective(alg, i).check()
            injective(alg, i).check()


def test_hom_between_projectives(lam):
    P1, P2 = projective(lam, 0), projective(lam, 1)
    assert hom_dim(P1, P2) == 0
    assert hom_dim(P2, P1) == 1
    for f in hom_space(P2, P1).basis:
        f.check()


def test_hom_matches_bruteforce_on_all_pairs(pool, a3_pool, extra_pools):
    for P in [pool, a3_pool] + extra_pools:
        for X in P.members:
            for Y in P.members:
                assert hom_dim(X, Y) == hom_dim_bruteforce(X, Y)


def test_kernel_image_cokernel_exact(pool):
    for X in pool.members:
        for Y in pool.members:
            for f in hom_space(X, Y).basis:
                K, i = kernel(f)
                Im, j, c = image(f)
                C, p = cokernel(f)
                assert (f @ i).is_zero() and i.is_mono()
                assert (p @ f).is_zero() and p.is_epi()
                assert K.total_dim + Im.total_dim == X.total_dim
                assert Im.total_dim + C.total_dim == Y.total_dim
                assert ((j @ c) - f).is_zero()


def test_split_and_decompose_of_regular_module(lam):
    R = regular_module(lam).rep
    d = split(R)
    assert sum(U.total_dim for U in d.summands) == R.total_dim
    assert sorted(module_label(U) for U, _ in decompose(R)) == ["1/2", "2/3", "3"]
    assert all(is_indecomposable(U) for U in d.summands)


def test_decompose_multiplicities(lam):
    P1, P2 = projective(lam, 0), projective(lam, 1)
    S = direct_sum([P1, P2, P1]).rep
    got = [(module_label(U), m) for U, m in decompose(S)]
    assert got == [("2/3", 1), ("1/2", 2)]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.integers(0, 10**6))
def test_decompose_roundtrip_scrambled(pool, picks, seed):
    rng = random.Random(seed)
    S = scramble(direct_sum([pool.members[k] for k in picks]).rep, rng)
    S.check()
    got = sorted((pool.locate(U), m) for U, m in decompose(S))
    assert got == sorted((k, picks.count(k)) for k in set(picks))


def test_isomorphism(pool):
    rng = random.Random(7)
    for k, X in enumerate(pool.members):
        assert is_isomorphic(X, scramble(X, rng))
        for j, Y in enumerate(pool.members):
            if j != k:
                assert not is_isomorphic(X, Y)


def test_dual_is_involutive(pool):
    for X in pool.members:
        DDX = dual(dual(X))
        assert DDX.algebra is X.algebra
        assert is_isomorphic(DDX, X)


def test_annihilator(lam):
    # the simple 1 is killed by everything except e1: 4-dimensional annihilator
    S1 = simple(lam, 0)
    assert annihilator(S1).ncols == 4
    # a faithful module has zero annihilator
    assert annihilator(regular_module(lam).rep).ncols == 0


def test_end_algebra(lam):
    R = regular_module(lam).rep
    E = end_algebra(R)
    assert E.algebra.dimension == 5 and E.basic
    E.algebra.check()
    H = hom_module(E, projective(lam, 0))
    H.check()


def test_morphism_arithmetic(pool):
    X = pool.members[3]
    i = Morphism.identity(X)
    assert (i @ i - i).is_zero()
    assert (i + i).scale(0).is_zero()
    assert i.is_iso() and i.inverse().is_iso()
