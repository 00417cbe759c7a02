import pytest

from tautilt.regression import (COMPLETION, CONDITION_A_WITNESS, EXPECTED_EDGES, EXPECTED_PAIRS,
                                NOT_STT)
from tautilt.subcat import fac_members
from tautilt.tau_tilt import (InvalidContext, PreconditionFailed, acf_triple,
                              complete_to_support_tau_tilting, enumerate_stau_tilt,
                              enumerate_tau_cotorsion_pairs, enumerate_tau_rigid_pairs,
                              is_support_tau_tilting, is_support_tau_tilting_via_closure,
                              is_tau_rigid, make_context, module_context)
from tautilt.homology import enumerate_indecomposables
from tautilt.regression import bundled_algebra


def test_context_of_E(E):
    assert E.extension_closed
    assert E.projectives.name == "2+2/3+1/2"
    assert E.ambient.name == "2+1+2/3+1/2"


def test_non_closed_ambient_needs_projectives(pool, spec):
    with pytest.raises(InvalidContext):
        make_context(pool, spec("3+2+1"))


def test_tau_rigidity(E, mod, spec):
    assert is_tau_rigid(spec("2+2/3+1/2"), E)
    assert not is_tau_rigid(spec("2+1"), mod)
    assert not is_tau_rigid(spec("3+2"), mod)


def test_rigid_pairs_of_E(E):
    pairs = enumerate_tau_rigid_pairs(E)
    assert {p.label() for p in pairs} == EXPECTED_PAIRS
    failing = [p.label() for p in pairs if not is_support_tau_tilting(p.T, E)]
    assert failing == [NOT_STT]


def test_closure_characterisation_agrees(E, mod):
    for ctx in (E, mod):
        for p in enumerate_tau_rigid_pairs(ctx):
            assert bool(is_support_tau_tilting(p.T, ctx)) == is_support_tau_tilting_via_closure(p.T, ctx)


def test_completion(E, mod, spec):
    assert complete_to_support_tau_tilting(spec("2/3+1/2"), E).name == COMPLETION
    assert complete_to_support_tau_tilting(spec("0"), mod).name == "0"
    with pytest.raises(PreconditionFailed, match="not tau-rigid"):
        complete_to_support_tau_tilting(spec("2+1"), mod)
    with pytest.raises(PreconditionFailed, match="kernel 3 not in ambient"):
        complete_to_support_tau_tilting(spec("1/2+1"), E)


def test_condition_A_witness(E, pool, spec):
    v = is_support_tau_tilting(spec("1/2+1"), E)
    assert not v and v.tau_rigid
    assert v.witness(pool) == CONDITION_A_WITNESS


def test_hasse_of_E(E):
    g = enumerate_stau_tilt(E)
    names = [v.T.name for v in g.vertices]
    assert len(names) == 7 and names[0] == "2+2/3+1/2" and names[-1] == "0"
    assert {(names[i], names[j]) for i, j in g.edges} == EXPECTED_EDGES
    for v, fac in zip(g.vertices, g.facs):
        assert fac == E.fac(v.T)


def test_hasse_sizes(mod, a3_pool):
    g = enumerate_stau_tilt(mod)
    assert (len(g.vertices), len(g.edges)) == (12, 18)
    g3 = enumerate_stau_tilt(module_context(a3_pool))
    # linearly oriented A3: Catalan number 14, regular exchange graph of degree 3
    assert (len(g3.vertices), len(g3.edges)) == (14, 21)


def test_boolean_lattice():
    pool = enumerate_indecomposables(bundled_algebra("semisimple4"))
    g = enumerate_stau_tilt(module_context(pool))
    assert (len(g.vertices), len(g.edges)) == (16, 32)


def test_dot_is_deterministic(E):
    assert enumerate_stau_tilt(E).to_dot() == enumerate_stau_tilt(E).to_dot()


def test_cotorsion_bijection(E):
    r = enumerate_tau_cotorsion_pairs(E)
    assert len(r.pairs) == 7 and r.bijection and r.forward_ok and r.backward_ok
    assert r.tilting_match
    assert {p.core.name for p in r.pairs} == {v.T.name for v in r.stt.vertices}
    full = {p.core.name for p in r.pairs if p.full}
    assert full == {"2+2/3+1/2", "1+2/3+1/2"}


def test_cotorsion_in_mod(mod):
    r = enumerate_tau_cotorsion_pairs(mod)
    assert r.bijection and len(r.pairs) == 12


def test_acf_triple(E, spec):
    t = acf_triple(spec("2+2/3+1/2"), E)
    assert t.torsion_pair and t.acf
    assert t.D == fac_members(spec("2+2/3+1/2")) and len(t.F) == 0
