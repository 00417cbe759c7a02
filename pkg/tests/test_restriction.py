import pytest

from tautilt.rep import hom_dim
from tautilt.restriction import (HypothesisFailed, annihilated_by, closure_flags, ideal_of,
                                 restrict, restricted_category, restricted_context,
                                 restricted_projectives, rho_equivalence_check,
                                 rigid_pair_inequality, successive_reduction_check,
                                 counting_theorem, verify_tilting)
from tautilt.subcat import ext_projectives, whole
from tautilt.tau_tilt import enumerate_stau_tilt, enumerate_tau_rigid_pairs


def test_ideal_vanishes_for_tilting(mod, spec):
    for T in ("2+2/3+1/2", "3+2/3+1/2"):
        I = ideal_of(spec(T), mod)
        assert I.is_zero() and len(I.bases) == 9


def test_ideal_of_zero_is_everything(pool, mod, spec):
    I = ideal_of(spec("0"), mod)
    for (q, q2) in I.bases:
        assert I.dim(q, q2) == pool.hom_dim(q, q2)
    assert len(restricted_category(spec("0"), mod)) == 0


def test_ideal_is_two_sided(pool, mod, spec):
    # composites of ideal elements with arbitrary maps between projectives stay in the ideal
    from tautilt.rep import hom_space
    I = ideal_of(spec("1"), mod)
    for (a, b), basis in I.bases.items():
        for f in basis:
            for c in mod.projectives.indices:
                for g in hom_space(pool.members[b], pool.members[c]).basis:
                    h = g @ f
                    span = I.bases[(a, c)]
                    assert h.is_zero() or _in_span(h, span)


def _in_span(h, span):
    from tautilt.linalg import Matrix
    if not span:
        return False
    n = len(h.vector())
    A = Matrix.from_columns([s.vector() for s in span], n)
    B = Matrix.from_columns([s.vector() for s in span] + [h.vector()], n)
    return A.rank() == B.rank()


def test_restricted_category_examples(pool, mod, spec):
    assert restricted_category(spec("2+2/3+1/2"), mod).is_whole()
    E1 = restricted_category(spec("1"), mod)
    assert pool.index("1") in E1
    assert pool.index("2/3") not in E1
    assert E1 == annihilated_by(spec("1"), pool)


def test_annihilator_agrees_on_mod(mod):
    for v in enumerate_stau_tilt(mod).vertices:
        r = restrict(v.T, mod)
        assert r.annihilator_agrees and r.ext_projective
        assert r.closures.factors and r.closures.subobjects


def test_extension_closure_flag(pool, mod, spec):
    # E_T of 3+1+1/2 is 3+2+1+1/2, which misses the non-split extension 2/3 of 2 by 3
    r = restrict(spec("3+1+1/2"), mod)
    assert r.E_T.name == "3+2+1+1/2"
    assert not r.closures.extensions


def test_restricted_projectives(pool, mod, E, spec):
    # I = 0 here, so P_T is all of add Λ; P(3) = 3 embeds into 2/3
    P_T, table = restricted_projectives(spec("2+2/3+1/2"), mod)
    assert P_T.name == "3+2/3+1/2"
    assert pool.labels[table[pool.index("3")].index] == "3"
    assert pool.labels[table[pool.index("1/2")].index] == "1/2"
    assert pool.labels[table[pool.index("2/3")].index] == "2/3"
    P_T, table = restricted_projectives(spec("3+2/3+1/2"), mod)
    assert all(e.index == q for q, e in table.items())
    P_T, _ = restricted_projectives(spec("1+2/3"), E)
    assert P_T.name == "1+2/3"


def test_rho(mod, E, spec):
    for ctx in (mod, E):
        for v in enumerate_stau_tilt(ctx).vertices:
            assert rho_equivalence_check(v.T, ctx)


def test_rho_dimension_bookkeeping(pool, mod):
    for v in enumerate_stau_tilt(mod).vertices:
        I = ideal_of(v.T, mod)
        _, table = restricted_projectives(v.T, mod)
        lhs = sum(hom_dim(e.K, e.K) for e in table.values())
        rhs = sum(pool.hom_dim(q, q) - I.dim(q, q) for q in table)
        assert lhs == rhs


def test_tilting_in_restriction(mod, E, spec):
    for ctx in (mod, E):
        for v in enumerate_stau_tilt(ctx).vertices:
            assert verify_tilting(v.T, restricted_context(v.T, ctx))
    assert verify_tilting(spec("3+2/3+1/2"), mod)


def test_not_tilting_in_ambient(E, spec):
    # 1+2/3 is support tau-tilting in E but not tilting there
    assert not verify_tilting(spec("1+2/3"), E)
    assert verify_tilting(spec("1+2/3"), restricted_context(spec("1+2/3"), E))


def test_counting(mod, E, spec):
    assert counting_theorem(spec("2+2/3+1/2"), mod) == (3, 3)
    assert counting_theorem(spec("0"), mod) == (0, 0)
    assert counting_theorem(spec("1+2/3"), E) == (2, 2)


def test_rigid_pair_inequality(E, spec):
    assert rigid_pair_inequality(spec("2/3+1/2"), E) == (2, 3, False)
    assert rigid_pair_inequality(spec("1+2/3"), E) == (3, 3, True)
    assert rigid_pair_inequality(spec("0"), E) == (3, 3, True)
    for p in enumerate_tau_rigid_pairs(E):
        lhs, total, _ = rigid_pair_inequality(p.T, E)
        assert lhs <= total


def test_successive_reduction(spec):
    r = successive_reduction_check(spec("2+2/3+1/2"), spec("2+2/3"))
    assert (r.T_prime, r.T_tilde, r.T) == (2, 1, 3) and r.holds
    r = successive_reduction_check(spec("2+2/3+1/2"), spec("2+2/3+1/2"))
    assert r.T_tilde == 0 and r.holds
    with pytest.raises(HypothesisFailed):
        successive_reduction_check(spec("2+2/3+1/2"), spec("1+2/3+1/2"))


def test_report_lines(mod, spec):
    lines = restrict(spec("2+2/3+1/2"), mod).lines()
    assert lines[0] == "T: 2+2/3+1/2"
    assert "tilting in E_T: YES" in "\n".join(lines)
