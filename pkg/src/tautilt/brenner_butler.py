"""The bimodule M = Hom(P, T) between A = End(P) and B = End(T), the adjoint
pair Hom_A(M, -) and - ⊗_B M, Tor over B, and checks that they restrict to
inverse exact equivalences between Fac T and the Tor-perpendicular image.

Modules over A and B are ``Rep`` objects over the quiver-style algebras
built by ``end_algebra_of_summands``; vertex ``u`` of B is the summand T_u.
"""
from __future__ import annotations

from dataclasses import dataclass

from .homology import (Pool, ProjectiveSum, element_matrix, map_from_projectives,
                       minimal_presentation, projective_cover, syzygy)
from .linalg import Matrix, hstack, vstack
from .rep import (EndAlgebra, Morphism, Rep, cokernel, direct_sum, end_algebra_of_summands,
                  factor_through_epi, hom_dim, hom_module, hom_module_map, hom_space,
                  is_isomorphic, kernel, projective, simple)
from .subcat import Subcat
from .tau_tilt import ExactContext, describe, enough_projectives_certificate, module_context


@dataclass(frozen=True, eq=False)
class Bimodule:
    """``M = Hom(P, T)``: B acts on the left by post-composition, A on the right
    by pre-composition.  ``parts[u] = Hom(P, T_u)`` as a right A-module and
    ``left[k]`` is the action of B's basis element k, an A-linear map
    ``parts[target k] -> parts[source k]``."""
    A: EndAlgebra
    B: EndAlgebra
    parts: tuple[Rep, ...]
    left: tuple[Morphism, ...]

    @property
    def total_dim(self) -> int:
        return sum(p.total_dim for p in self.parts)

    def check(self) -> None:
        """Left action is A-linear (so the actions commute) and multiplicative."""
        alg = self.B.algebra
        for f in self.left:
            f.check()
        for i in range(alg.dimension):
            for j in range(alg.dimension):
                if alg.targets[i] != alg.sources[j]:
                    continue
                lhs = Morphism.zero(self.parts[alg.targets[j]], self.parts[alg.sources[i]])
                for k, c in alg.mult.get((i, j), ()):
                    lhs = lhs + self.left[k].scale(c)
                if not (lhs - self.left[i] @ self.left[j]).is_zero():
                    raise AssertionError("left action is not multiplicative")


def build_bimodule(P: Subcat, T: Subcat) -> Bimodule:
    A = end_algebra_of_summands(P.reps(), name=f"End({P.name})")
    B = end_algebra_of_summands(T.reps(), name=f"End({T.name})")
    parts = tuple(hom_module(A, U) for U in T.reps())
    left = []
    for k, x in enumerate(B.maps):
        s, t = B.algebra.sources[k], B.algebra.targets[k]
        left.append(hom_module_map(A, x, parts[t], parts[s]))
    return Bimodule(A, B, parts, tuple(left))


def base_change(M: Bimodule, X: Rep) -> Rep:
    """``Hom(P, X)`` as a right A-module."""
    return hom_module(M.A, X)


# ---------------------------------------------------------------------------
# Hom_A(M, -)

def hom_functor(M: Bimodule, Y: Rep) -> Rep:
    """``Hom_A(M, Y)`` as a right B-module; vertex u carries ``Hom_A(M_u, Y)``."""
    if Y.algebra is not M.A.algebra:
        Y = base_change(M, Y)
    alg = M.B.algebra
    spaces = [hom_space(p, Y) for p in M.parts]
    mats = []
    for g in alg.generators:
        s, t = alg.sources[g], alg.targets[g]
        cols = [spaces[t].coordinates(phi @ M.left[g]) for phi in spaces[s].basis]
        mats.append(Matrix.from_columns(cols, spaces[t].dim))
    return Rep(alg, tuple(h.dim for h in spaces), tuple(mats))


def hom_functor_map(M: Bimodule, g: Morphism, FY: Rep, FY2: Rep) -> Morphism:
    """``Hom_A(M, g)`` for an A-linear ``g: Y -> Y'``."""
    blocks = []
    for u, p in enumerate(M.parts):
        S, S2 = hom_space(p, g.source), hom_space(p, g.target)
        blocks.append(Matrix.from_columns([S2.coordinates(g @ phi) for phi in S.basis], S2.dim))
    return Morphism(FY, FY2, tuple(blocks))


# ---------------------------------------------------------------------------
# - ⊗_B M

def _free_part(M: Bimodule, ps: ProjectiveSum) -> Rep:
    """``P ⊗_B M = ⊕ M_{u_k}`` for ``P = ⊕ P_B(u_k)``."""
    return direct_sum([M.parts[u] for u in ps.vertices], M.A.algebra).rep


def _left_element(M: Bimodule, coords, u: int, v: int) -> Morphism:
    """Left multiplication ``M_u -> M_v`` by an element of ``e_v B e_u``."""
    out = Morphism.zero(M.parts[u], M.parts[v])
    for b, c in enumerate(coords):
        if c:
            out = out + M.left[b].scale(c)
    return out


def tensor_free_map(M: Bimodule, f: Morphism, src: ProjectiveSum, tgt: ProjectiveSum,
                    S: Rep | None = None, T: Rep | None = None) -> Morphism:
    """``f ⊗ M`` for a B-linear map between sums of indecomposable projectives."""
    S = S or _free_part(M, src)
    T = T or _free_part(M, tgt)
    X = element_matrix(f, src, tgt)
    comps = [[_left_element(M, X[l][k], u, v) for k, u in enumerate(src.vertices)]
             for l, v in enumerate(tgt.vertices)]
    blocks = []
    for j in range(M.A.algebra.n_vertices):
        rows = [hstack([c.blocks[j] for c in row], nrows=M.parts[v].dims[j])
                for row, v in zip(comps, tgt.vertices)]
        blocks.append(vstack(rows, ncols=S.dims[j]))
    return Morphism(S, T, tuple(blocks))


@dataclass(frozen=True, eq=False)
class Tensor:
    """``N ⊗_B M = coker(P1 ⊗ M -> P0 ⊗ M)`` with the quotient map."""
    N: Rep
    module: Rep
    P0: ProjectiveSum
    P1: ProjectiveSum
    epi: Morphism            # P0 -> N
    free: Rep                # P0 ⊗ M
    quotient: Morphism       # P0 ⊗ M -> N ⊗ M
    relations: Morphism      # P1 ⊗ M -> P0 ⊗ M


def tensor_functor(M: Bimodule, N: Rep) -> Tensor:
    pres = minimal_presentation(N)
    S = _free_part(M, pres.P1)
    F = _free_part(M, pres.P0)
    rel = tensor_free_map(M, pres.d, pres.P1, pres.P0, S, F)
    Z, q = cokernel(rel)
    return Tensor(N, Z, pres.P0, pres.P1, pres.epi, F, q, rel)


def _lift_to_cover(epi2: Morphism, ps2: ProjectiveSum, g: Morphism, ps: ProjectiveSum,
                   epi: Morphism) -> Morphism:
    """``h: P0 -> P0'`` with ``epi' ∘ h = g ∘ epi``."""
    vectors = []
    for k, u in enumerate(ps.vertices):
        want = (g @ epi).blocks[u].submatrix(range(g.target.dims[u]), [ps.generator_column(k)])
        x = epi2.blocks[u].solve(want)
        if x is None:
            raise AssertionError("cover is not surjective")
        vectors.append(x.col(0))
    return map_from_projectives(ps, ps2.rep, vectors)


def tensor_map(M: Bimodule, g: Morphism, tN: Tensor, tN2: Tensor) -> Morphism:
    """``g ⊗ M: N ⊗ M -> N' ⊗ M``."""
    h = _lift_to_cover(tN2.epi, tN2.P0, g, tN.P0, tN.epi)
    hm = tensor_free_map(M, h, tN.P0, tN2.P0, tN.free, tN2.free)
    out = factor_through_epi(tN.quotient, tN2.quotient @ hm)
    if out is None:
        raise AssertionError("tensored map does not descend to the cokernel")
    return out


# ---------------------------------------------------------------------------
# Tor

def free_resolution(N: Rep, length: int) -> tuple[list[ProjectiveSum], list[Morphism]]:
    """Minimal ``P_length -> ... -> P_0``; ``maps[k-1]: P_k -> P_{k-1}``."""
    covers = [projective_cover(N).projectives]
    maps = []
    Om, inc = syzygy(N)
    for _ in range(length):
        c = projective_cover(Om)
        covers.append(c.projectives)
        maps.append(inc @ c.epi)
        Om, inc = syzygy(Om)
    return covers, maps


def tor_dims(N: Rep, M: Bimodule, degrees: int = 2) -> list[int]:
    """``[dim Tor_1, ..., dim Tor_degrees]`` of N against M over B."""
    covers, maps = free_resolution(N, degrees + 1)
    free = [_free_part(M, ps) for ps in covers]
    d = [tensor_free_map(M, maps[k], covers[k + 1], covers[k], free[k + 1], free[k])
         for k in range(len(maps))]
    out = []
    for k in range(1, degrees + 1):
        # homology at P_k ⊗ M: ker(d_k) / im(d_{k+1})
        out.append(free[k].total_dim - d[k - 1].rank() - d[k].rank())
    return out


def tor(N: Rep, M: Bimodule, k: int) -> int:
    if k < 1:
        raise ValueError("Tor is computed in positive degrees")
    return tor_dims(N, M, k)[k - 1]


# ---------------------------------------------------------------------------
# unit and counit

def counit(M: Bimodule, Y: Rep, FY: Rep | None = None, t: Tensor | None = None) -> Morphism:
    """``Hom_A(M, Y) ⊗_B M -> Y``, ``φ ⊗ m ↦ φ(m)``."""
    FY = FY or hom_functor(M, Y)
    t = t or tensor_functor(M, FY)
    spaces = [hom_space(p, Y) for p in M.parts]
    comps = []
    for k, u in enumerate(t.P0.vertices):
        coords = t.epi.blocks[u].col(t.P0.generator_column(k))
        comps.append(spaces[u].combine(coords))
    blocks = [hstack([c.blocks[j] for c in comps], nrows=Y.dims[j])
              for j in range(M.A.algebra.n_vertices)]
    full = Morphism(t.free, Y, tuple(blocks))
    if not (full @ t.relations).is_zero():
        raise AssertionError("evaluation does not vanish on the relations")
    out = factor_through_epi(t.quotient, full)
    if out is None:
        raise AssertionError("evaluation does not descend to the tensor product")
    return out


def unit(M: Bimodule, N: Rep, t: Tensor | None = None, FZ: Rep | None = None) -> Morphism:
    """``N -> Hom_A(M, N ⊗_B M)``, ``n ↦ (m ↦ n ⊗ m)``."""
    t = t or tensor_functor(M, N)
    Z = t.module
    FZ = FZ or hom_functor(M, Z)
    alg = M.B.algebra
    blocks = []
    for u in range(alg.n_vertices):
        H = hom_space(M.parts[u], Z)
        cols = []
        for r in range(N.dims[u]):
            e = Matrix.column([int(i == r) for i in range(N.dims[u])])
            p = t.epi.blocks[u].solve(e)
            if p is None:
                raise AssertionError("cover is not surjective")
            pieces = []
            for k, w in enumerate(t.P0.vertices):
                idx = alg.basis_between(w, u)
                coords = [0] * alg.dimension
                for s, b in enumerate(idx):
                    coords[b] = p[t.P0.offsets[k][u] + s, 0]
                pieces.append(_left_element(M, coords, u, w))
            blocks_m = [vstack([c.blocks[j] for c in pieces], ncols=M.parts[u].dims[j])
                        for j in range(M.A.algebra.n_vertices)]
            into_free = Morphism(M.parts[u], t.free, tuple(blocks_m))
            cols.append(H.coordinates(t.quotient @ into_free))
        blocks.append(Matrix.from_columns(cols, H.dim))
    return Morphism(N, FZ, tuple(blocks))


# ---------------------------------------------------------------------------
# verification

def _exact(f: Morphism, g: Morphism) -> bool:
    return ((g @ f).is_zero() and f.is_mono() and g.is_epi()
            and g.source.total_dim == f.source.total_dim + g.target.total_dim)


@dataclass(frozen=True)
class ObjectCheck:
    label: str
    counit_iso: bool
    tor: tuple[int, ...]
    unit_iso: bool

    @property
    def ok(self) -> bool:
        return self.counit_iso and self.unit_iso and not any(self.tor)


@dataclass(frozen=True, eq=False)
class EquivalenceReport:
    objects: tuple[ObjectCheck, ...]
    conflations: tuple[tuple[str, bool, bool], ...]     # (label, Hom exact, ⊗ exact)
    adjunction: bool
    witness: str = ""

    @property
    def value(self) -> bool:
        return (all(o.ok for o in self.objects) and self.adjunction
                and all(h and t for _, h, t in self.conflations))

    def __bool__(self) -> bool:
        return self.value

    def lines(self) -> list[str]:
        out = []
        for o in self.objects:
            out.append(f"{o.label}: counit iso {o.counit_iso}, unit iso {o.unit_iso}, "
                       f"Tor_1..2 = {list(o.tor)}")
        for lab, h, t in self.conflations:
            out.append(f"conflation {lab}: Hom exact {h}, tensor exact {t}")
        out.append(f"adjunction dimensions agree: {self.adjunction}")
        out.append(f"equivalence: {'YES' if self else 'NO ' + self.witness}")
        return out


def default_projectives(pool: Pool) -> Subcat:
    return Subcat(pool, tuple(pool.projective_indices()))


def _fac_members(T: Subcat, ctx: ExactContext | None) -> Subcat:
    ctx = ctx or module_context(T.pool)
    return ctx.fac(T)


def verify_equivalence(P: Subcat, T: Subcat, ctx: ExactContext | None = None,
                       M: Bimodule | None = None) -> EquivalenceReport:
    pool = T.pool
    M = M or build_bimodule(P, T)
    M.check()
    fac = _fac_members(T, ctx)
    objects = []
    images = []
    witness = ""
    for x in fac.indices:
        X = pool.members[x]
        Y = base_change(M, X)
        N = hom_functor(M, Y)
        t = tensor_functor(M, N)
        eps = counit(M, Y, N, t)
        eta = unit(M, N, t)
        eta.check()
        tors = tuple(tor_dims(N, M, 2))
        rec = ObjectCheck(pool.labels[x], eps.is_iso() and is_isomorphic(t.module, Y),
                          tors, eta.is_iso())
        if not rec.ok:
            witness = witness or f"object {pool.labels[x]}"
        objects.append(rec)
        images.append(N)
    confl = []
    for x, ap in enough_projectives_certificate(T, ctx or module_context(pool)):
        K, inc = kernel(ap.map)
        seq = [inc.source, inc.target, ap.map.target]
        A_seq = [base_change(M, U) for U in seq]
        a_f = hom_module_map(M.A, inc, A_seq[0], A_seq[1])
        a_g = hom_module_map(M.A, ap.map, A_seq[1], A_seq[2])
        B_seq = [hom_functor(M, Y) for Y in A_seq]
        b_f = hom_functor_map(M, a_f, B_seq[0], B_seq[1])
        b_g = hom_functor_map(M, a_g, B_seq[1], B_seq[2])
        hom_ok = _exact(b_f, b_g)
        ts = [tensor_functor(M, N) for N in B_seq]
        t_f = tensor_map(M, b_f, ts[0], ts[1])
        t_g = tensor_map(M, b_g, ts[1], ts[2])
        ten_ok = _exact(t_f, t_g)
        label = f"0 -> {describe(pool, K)} -> {pool.name(ap.components)} -> {pool.labels[x]} -> 0"
        if not (hom_ok and ten_ok):
            witness = witness or label
        confl.append((label, hom_ok, ten_ok))
    adj = adjunction_check(M, pool, images)
    if not adj:
        witness = witness or "adjunction dimensions"
    return EquivalenceReport(tuple(objects), tuple(confl), adj, witness)


def adjunction_check(M: Bimodule, pool: Pool, extra: list[Rep] = ()) -> bool:
    """``dim Hom_A(N ⊗ M, Y) = dim Hom_B(N, Hom_A(M, Y))`` over test pairs."""
    Balg = M.B.algebra
    tests = [projective(Balg, u) for u in range(Balg.n_vertices)]
    tests += [simple(Balg, u) for u in range(Balg.n_vertices)]
    tests += list(extra)
    targets = [base_change(M, X) for X in pool.members]
    homs = [hom_functor(M, Y) for Y in targets]
    for N in tests:
        Z = tensor_functor(M, N).module
        for Y, FY in zip(targets, homs):
            if hom_dim(Z, Y) != hom_dim(N, FY):
                return False
    return True


@dataclass(frozen=True, eq=False)
class TriangleReport:
    objects: tuple[tuple[str, bool], ...]
    naturality: bool
    witness: str = ""

    @property
    def value(self) -> bool:
        return self.naturality and all(ok for _, ok in self.objects)

    def __bool__(self) -> bool:
        return self.value

    def lines(self) -> list[str]:
        out = [f"{lab}: Hom_A(M, Hom(P,-)) = Hom(T,-) {ok}" for lab, ok in self.objects]
        out.append(f"naturality: {self.naturality}")
        out.append(f"triangle: {'YES' if self else 'NO ' + self.witness}")
        return out


def comparison(M: Bimodule, X: Rep, HT: Rep, FY: Rep, Y: Rep) -> Morphism:
    """``Hom(T, X) -> Hom_A(M, Hom(P, X))``, ``ψ ↦ Hom(P, ψ)``."""
    blocks = []
    for u, U in enumerate(M.B.summands):
        H = hom_space(U, X)
        target = hom_space(M.parts[u], Y)
        cols = [target.coordinates(hom_module_map(M.A, psi, M.parts[u], Y)) for psi in H.basis]
        blocks.append(Matrix.from_columns(cols, target.dim))
    return Morphism(HT, FY, tuple(blocks))


def verify_triangle(P: Subcat, T: Subcat, ctx: ExactContext | None = None,
                    M: Bimodule | None = None) -> TriangleReport:
    pool = T.pool
    M = M or build_bimodule(P, T)
    fac = _fac_members(T, ctx)
    data = {}
    objects = []
    witness = ""
    for x in fac.indices:
        X = pool.members[x]
        Y = base_change(M, X)
        FY = hom_functor(M, Y)
        HT = hom_module(M.B, X)
        theta = comparison(M, X, HT, FY, Y)
        theta.check()
        ok = theta.is_iso()
        if not ok:
            witness = witness or f"object {pool.labels[x]}"
        objects.append((pool.labels[x], ok))
        data[x] = (X, Y, FY, HT, theta)
    natural = True
    for x in fac.indices:
        for z in fac.indices:
            X, Y, FY, HT, th = data[x]
            X2, Y2, FY2, HT2, th2 = data[z]
            for g in hom_space(X, X2).basis:
                lhs = th2 @ hom_module_map(M.B, g, HT, HT2)
                rhs = hom_functor_map(M, hom_module_map(M.A, g, Y, Y2), FY, FY2) @ th
                if not (lhs - rhs).is_zero():
                    natural = False
                    witness = witness or f"naturality at {pool.labels[x]} -> {pool.labels[z]}"
    return TriangleReport(tuple(objects), natural, witness)
