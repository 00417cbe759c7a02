import pytest

from tautilt.algebra import algebra_from_text
from tautilt.homology import (CapExceeded, IncompletePool, enumerate_indecomposables, ext1,
                              ext_dim, minimal_presentation, module_label, projective_cover,
                              syzygy, tau, tau_inverse)
from tautilt.oracles import ext_dim_bruteforce
from tautilt.rep import direct_sum, is_isomorphic, projective, simple


def label(M):
    return module_label(M)


def test_pool_of_example(pool):
    assert pool.labels == ("3", "2", "1", "2/3", "1/2")
    assert pool.complete and not pool.qualified


def test_a3_pool(a3_pool):
    assert sorted(a3_pool.labels) == sorted(["1", "2", "3", "1/2", "2/3", "1/2/3"])


def test_semisimple_pool():
    alg = algebra_from_text("vertices: 4\n")
    assert enumerate_indecomposables(alg).labels == ("4", "3", "2", "1")


def test_tau_values(lam):
    S1, S2, S3 = (simple(lam, i) for i in range(3))
    assert is_isomorphic(tau(S2), S3)
    assert is_isomorphic(tau(S1), S2)
    assert is_isomorphic(tau_inverse(S3), S2)
    assert is_isomorphic(tau_inverse(S2), S1)
    for i in range(3):
        assert tau(projective(lam, i)).total_dim == 0


def test_tau_inverse_tau_on_all_pools(pool, a3_pool, extra_pools):
    for P in [pool, a3_pool] + extra_pools:
        proj = set(P.projective_indices())
        for k, X in enumerate(P.members):
            if k in proj:
                assert tau(X).total_dim == 0
            else:
                assert is_isomorphic(tau_inverse(tau(X)), X)


def test_ext_table_of_example(pool):
    nonzero = {(pool.labels[i], pool.labels[j]) for i in range(5) for j in range(5)
               if ext_dim(pool.members[i], pool.members[j])}
    assert nonzero == {("2", "3"), ("1", "2")}


def test_ext_matches_cocycle_oracle(pool, a3_pool, extra_pools):
    for P in [pool, a3_pool] + extra_pools:
        for Z in P.members:
            for X in P.members:
                assert ext_dim(Z, X) == ext_dim_bruteforce(Z, X)


def test_nonsplit_extension_realized(pool):
    S1, S2 = pool.members[pool.index("1")], pool.members[pool.index("2")]
    space = ext1(S1, S2)
    assert space.dimension == 1
    seq = space.basis_classes[0].sequence
    assert seq.is_exact() and not seq.splits()
    assert label(seq.middle) == "1/2"


def test_split_classes_counted(pool):
    # zero cocycle gives the split sequence
    S2, S3 = pool.members[pool.index("2")], pool.members[pool.index("3")]
    seq = ext1(S2, S3).combination([0])
    assert seq.is_exact() and seq.splits()


def test_presentations(lam):
    S1 = simple(lam, 0)
    cov = projective_cover(S1)
    assert cov.epi.is_epi() and label(cov.projectives.rep) == "1/2"
    Om, inc = syzygy(S1)
    assert label(Om) == "2"
    pres = minimal_presentation(S1)
    assert (pres.epi @ pres.d).is_zero()
    assert label(pres.P1.rep) == "2/3"


def test_cap_exceeded_carries_partial_pool(lam):
    with pytest.raises(CapExceeded) as info:
        enumerate_indecomposables(lam, max_steps=2)
    assert len(info.value.pool) == 2 and not info.value.pool.complete


def test_dimension_cap_marks_incomplete():
    alg = algebra_from_text("vertices: 3\narrow: a 1 2\narrow: b 2 3\n")
    P = enumerate_indecomposables(alg, max_dim=2)
    assert not P.complete and "1/2/3" not in P.labels


def test_components_raise_for_missing_summand(lam):
    alg = algebra_from_text("vertices: 3\narrow: a 1 2\narrow: b 2 3\n")
    P = enumerate_indecomposables(alg, max_dim=2)
    with pytest.raises(IncompletePool):
        P.components(projective(alg, 0))


def test_pool_lookup(pool):
    M = direct_sum([pool.members[0], pool.members[0], pool.members[4]]).rep
    assert pool.components(M) == [(0, 2), (4, 1)]
    assert pool.name([0, 4]) == "3+1/2" and pool.name([]) == "0"
