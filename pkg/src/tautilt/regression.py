"""The full regression over the bundled three-vertex example algebra
(``1 -> 2 -> 3`` with the length-two path killed), run by ``tautilt check-all``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources

from .algebra import Algebra, algebra_from_text
from .brenner_butler import default_projectives, verify_equivalence, verify_triangle
from .homology import Pool, enumerate_indecomposables, ext_dim, tau, tau_inverse
from .oracles import ext_dim_bruteforce, hom_dim_bruteforce
from .rep import decompose, direct_sum, hom_dim, is_isomorphic
from .restriction import (counting_theorem, restricted_context, rigid_pair_inequality,
                          verify_tilting)
from .subcat import parse_spec
from .tau_tilt import (complete_to_support_tau_tilting, enumerate_stau_tilt,
                       enumerate_tau_cotorsion_pairs, enumerate_tau_rigid_pairs, fac_context,
                       is_support_tau_tilting, module_context)

EXAMPLE_T = "2+2/3+1/2"

EXPECTED_POOL = {"3", "2/3", "2", "1/2", "1"}

EXPECTED_PAIRS = {
    "0 | 2+2/3+1/2", "2/3 | 2+1/2", "1 | 2+2/3", "2+2/3 | 1/2",
    "2/3+1/2 | 0", "1+2/3 | 2", "2+2/3+1/2 | 0", "1+2/3+1/2 | 0",
}
NOT_STT = "2/3+1/2 | 0"
COMPLETION = "1+2/3+1/2"

# cover relations (larger, smaller) of the support τ-tilting poset inside Fac T
EXPECTED_EDGES = {
    ("2+2/3+1/2", "1+2/3+1/2"), ("1+2/3+1/2", "1+2/3"), ("1+2/3", "1"), ("1", "0"),
    ("2+2/3+1/2", "2+2/3"), ("2+2/3", "2/3"), ("2/3", "0"), ("1+2/3", "2/3"),
}

CONDITION_A_WITNESS = ("condition (A) fails at projective 2/3: approximation 2/3 -> 1/2 "
                       "(kernel 3 not in ambient)")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def bundled_algebra(name: str) -> Algebra:
    text = resources.files("tautilt.data").joinpath(f"{name}.alg").read_text()
    return algebra_from_text(text, name=name)


def example_pool() -> Pool:
    return enumerate_indecomposables(bundled_algebra("lambda6"))


def check_pool(pool: Pool) -> Check:
    ok = set(pool.labels) == EXPECTED_POOL and len(pool) == 5 and pool.complete
    return Check("indecomposables", ok, f"{', '.join(pool.labels)} complete={pool.complete}")


def check_pairs(pool: Pool) -> Check:
    E = fac_context(pool, parse_spec(pool, EXAMPLE_T))
    pairs = enumerate_tau_rigid_pairs(E)
    labels = {p.label() for p in pairs}
    failing = [p.label() for p in pairs if not is_support_tau_tilting(p.T, E)]
    done = complete_to_support_tau_tilting(parse_spec(pool, "2/3+1/2"), E)
    ok = labels == EXPECTED_PAIRS and len(pairs) == 8 and failing == [NOT_STT] and done.name == COMPLETION
    return Check("tau-rigid pairs in Fac T", ok, f"{len(pairs)} pairs, failing {failing}, completion {done.name}")


def check_hasse_E(pool: Pool) -> Check:
    E = fac_context(pool, parse_spec(pool, EXAMPLE_T))
    g = enumerate_stau_tilt(E)
    names = [v.T.name for v in g.vertices]
    edges = {(names[i], names[j]) for i, j in g.edges}
    ok = len(names) == 7 and edges == EXPECTED_EDGES
    return Check("Hasse quiver of Fac T", ok, f"{len(names)} vertices, {len(edges)} edges")


def check_hasse_mod(pool: Pool) -> Check:
    g = enumerate_stau_tilt(module_context(pool))
    return Check("Hasse quiver of mod", len(g.vertices) == 12, f"{len(g.vertices)} vertices")


def check_condition_A_witness(pool: Pool) -> Check:
    E = fac_context(pool, parse_spec(pool, EXAMPLE_T))
    v = is_support_tau_tilting(parse_spec(pool, "1/2+1"), E)
    w = v.witness(pool)
    return Check("condition (A) witness", (not v) and w == CONDITION_A_WITNESS, w)


def check_cotorsion(pool: Pool) -> Check:
    E = fac_context(pool, parse_spec(pool, EXAMPLE_T))
    r = enumerate_tau_cotorsion_pairs(E)
    ok = len(r.pairs) == 7 and len(r.stt.vertices) == 7 and r.forward_ok and r.backward_ok
    return Check("tau-cotorsion bijection", ok,
                 f"{len(r.pairs)} pairs, {len(r.stt.vertices)} support tau-tilting")


def check_counting(pool: Pool) -> Check:
    ok = True
    E = fac_context(pool, parse_spec(pool, EXAMPLE_T))
    for ctx in (module_context(pool), E):
        for v in enumerate_stau_tilt(ctx).vertices:
            a, b = counting_theorem(v.T, ctx)
            ok = ok and a == b
    strict = 0
    for p in enumerate_tau_rigid_pairs(E):
        lhs, total, eq = rigid_pair_inequality(p.T, E)
        ok = ok and lhs <= total and eq == bool(is_support_tau_tilting(p.T, E))
        strict += not eq
    ok = ok and strict == 1
    return Check("counting and rigid-pair inequality", ok, f"{strict} strict pair(s)")


def check_tilting(pool: Pool) -> Check:
    ok, n = True, 0
    E = fac_context(pool, parse_spec(pool, EXAMPLE_T))
    for ctx in (module_context(pool), E):
        for v in enumerate_stau_tilt(ctx).vertices:
            ok = ok and bool(verify_tilting(v.T, restricted_context(v.T, ctx)))
            n += 1
    return Check("tilting in the restricted category", ok, f"{n} subcategories")


def check_brenner_butler(pool: Pool) -> Check:
    T = parse_spec(pool, EXAMPLE_T)
    P = default_projectives(pool)
    eq = verify_equivalence(P, T)
    tri = verify_triangle(P, T)
    return Check("Brenner-Butler equivalence and triangle", bool(eq) and bool(tri),
                 f"{len(eq.objects)} objects, {len(eq.conflations)} conflations")


def check_properties(pool: Pool, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = []
    algs = [pool.algebra, bundled_algebra("a3")]
    pools = [pool] + [enumerate_indecomposables(a) for a in algs[1:]]
    bad = 0
    for _ in range(50):
        P = rng.choice(pools)
        X, Y = rng.choice(P.members), rng.choice(P.members)
        bad += hom_dim(X, Y) != hom_dim_bruteforce(X, Y)
    out.append(Check("hom matches brute force on 50 random pairs", bad == 0))
    ok = True
    for P in pools:
        proj = set(P.projective_indices())
        for k, X in enumerate(P.members):
            tX = tau(X)
            if k in proj:
                ok = ok and tX.total_dim == 0
            else:
                ok = ok and is_isomorphic(tau_inverse(tX), X)
    out.append(Check("tau of projectives vanishes and tau-inverse undoes tau", ok))
    bad = sum(ext_dim(X, Y) != ext_dim_bruteforce(X, Y)
              for P in pools for X in P.members for Y in P.members)
    out.append(Check("Ext^1 matches the cocycle count on all pool pairs", bad == 0))
    bad = 0
    for _ in range(50):
        P = rng.choice(pools)
        picks = [rng.randrange(len(P)) for _ in range(rng.randint(1, 4))]
        S = direct_sum([P.members[k] for k in picks]).rep
        got = sorted((P.locate(U), m) for U, m in decompose(S))
        want = sorted((k, picks.count(k)) for k in set(picks))
        bad += got != want
    out.append(Check("decompose inverts direct sums on 50 random sums", bad == 0))
    ss = enumerate_indecomposables(bundled_algebra("semisimple4"))
    g = enumerate_stau_tilt(module_context(ss))
    boolean = len(g.vertices) == 16 and len(g.edges) == 32 and all(
        set(g.vertices[j].T.indices) < set(g.vertices[i].T.indices)
        and len(g.vertices[i].T) == len(g.vertices[j].T) + 1 for i, j in g.edges)
    out.append(Check("semisimple algebra gives the Boolean lattice", boolean,
                     f"{len(g.vertices)} vertices, {len(g.edges)} edges"))
    return out


def run_all() -> list[Check]:
    pool = example_pool()
    checks = [check_pool(pool), check_pairs(pool), check_hasse_E(pool), check_hasse_mod(pool),
              check_condition_A_witness(pool), check_cotorsion(pool), check_counting(pool),
              check_tilting(pool), check_brenner_butler(pool)]
    return checks + check_properties(pool)
