"""The restricted exact category E_T in which a support τ-tilting T becomes
tilting, the functor ρ from projectives onto its projectives, and the
counting results for support τ-tilting subcategories."""
from __future__ import annotations

from dataclasses import dataclass

from .homology import Pool
from .linalg import Matrix
from .rep import (Morphism, MorphismSpace, Rep, annihilator, cokernel, direct_sum,
                  factor_through_epi, hom_space, image, kernel, projective, quotient)
from .subcat import (Subcat, fac_members, in_fac, in_subcat, is_extension_closed,
                     left_approximation, sub_members)
from .tau_tilt import (ExactContext, InvalidContext, PreconditionFailed, check_condition_A,
                       describe, is_support_tau_tilting, is_tau_rigid, make_context,
                       fac_context, max_orthogonal_projectives, module_context)


class HypothesisFailed(ValueError):
    """The hypotheses of the successive-reduction count do not hold."""


# ---------------------------------------------------------------------------
# the ideal I and E_T

@dataclass(frozen=True, eq=False)
class MorphismIdeal:
    """``I(Q, Q') = {f : h∘f = 0 for every h: Q' -> t, t in T}``."""
    T: Subcat
    projectives: tuple[int, ...]
    spaces: dict            # (q, q') -> MorphismSpace of Hom(Q, Q')
    bases: dict             # (q, q') -> list of Morphism spanning I(Q, Q')

    def dim(self, q: int, q2: int) -> int:
        return len(self.bases[(q, q2)])

    def is_zero(self) -> bool:
        return all(not b for b in self.bases.values())


def _killed_by(space: MorphismSpace, T: Subcat) -> list[Morphism]:
    """Elements f of the space with h∘f = 0 for all maps h from its target into T."""
    if not space.basis:
        return []
    cols = [[] for _ in space.basis]
    for U in T.reps():
        for h in hom_space(space.target, U).basis:
            for k, f in enumerate(space.basis):
                cols[k].extend((h @ f).vector())
    if not cols[0]:
        return list(space.basis)
    A = Matrix.from_columns(cols, len(cols[0]))
    return [space.combine(c) for c in A.nullspace().columns()]


def ideal_of(T: Subcat, ctx: ExactContext) -> MorphismIdeal:
    pool = ctx.pool
    spaces, bases = {}, {}
    for q in ctx.projectives.indices:
        for q2 in ctx.projectives.indices:
            H = hom_space(pool.members[q], pool.members[q2])
            spaces[(q, q2)] = H
            bases[(q, q2)] = _killed_by(H, T)
    return MorphismIdeal(T, ctx.projectives.indices, spaces, bases)


def _annihilated_by_ideal(X: Rep, ideal: MorphismIdeal, pool: Pool) -> bool:
    for (q, q2), fs in ideal.bases.items():
        if not fs:
            continue
        for g in hom_space(pool.members[q2], X).basis:
            if any(not (g @ f).is_zero() for f in fs):
                return False
    return True


def restricted_category(T: Subcat, ctx: ExactContext, ideal: MorphismIdeal | None = None) -> Subcat:
    """Ambient members X with Hom(I, X) = 0."""
    ideal = ideal or ideal_of(T, ctx)
    pool = ctx.pool
    return Subcat(pool, tuple(x for x in ctx.ambient.indices
                              if _annihilated_by_ideal(pool.members[x], ideal, pool)))


def annihilated_by(T: Subcat, pool: Pool) -> Subcat:
    """Pool members X with X·ann(T) = 0 (module-category cross-check)."""
    alg = pool.algebra
    if not T.indices:
        return Subcat(pool, ())
    S = direct_sum(T.reps(), alg).rep
    ann = annihilator(S)
    out = []
    for x, X in enumerate(pool.members):
        ok = True
        for col in ann.columns():
            for v in range(alg.n_vertices):
                for w in range(alg.n_vertices):
                    acc = Matrix.zeros(X.dims[w], X.dims[v])
                    for k, c in enumerate(col):
                        if c and alg.sources[k] == v and alg.targets[k] == w:
                            acc = acc + X.act(k).scale(c)
                    if not acc.is_zero():
                        ok = False
        if ok:
            out.append(x)
    return Subcat(pool, tuple(out))


def annihilator_quotient_projectives(T: Subcat, pool: Pool) -> Subcat:
    """Pool members in add(Λ/ann T), computed as the summands e_iΛ/e_i(ann T)."""
    alg = pool.algebra
    ann = annihilator(direct_sum(T.reps(), alg).rep) if T.indices else None
    found = set()
    for i in range(alg.n_vertices):
        P = projective(alg, i)
        bases = []
        for v in range(alg.n_vertices):
            idx = alg.basis_between(i, v)
            if ann is None:
                bases.append(Matrix.identity(len(idx)))
                continue
            cols = [[c[k] for k in idx] for c in ann.columns()]
            B = Matrix.from_columns(cols, len(idx)) if cols else Matrix.zeros(len(idx), 0)
            bases.append(B.column_basis())
        Q, _, _ = quotient(P, bases)
        if Q.total_dim:
            found.update(k for k, _ in pool.components(Q))
    return Subcat(pool, tuple(found))


@dataclass(frozen=True)
class ClosureFlags:
    factors: bool
    subobjects: bool
    extensions: bool


def closure_flags(C: Subcat, ambient: Subcat | None = None) -> ClosureFlags:
    """Closure of C under admissible quotients and subobjects inside the ambient
    (mod Λ when omitted) and under extensions in mod Λ."""
    scope = None if ambient is None or ambient.is_whole() else ambient
    return ClosureFlags(fac_members(C, scope).issubset(C), sub_members(C, scope).issubset(C),
                        bool(is_extension_closed(C)))


# ---------------------------------------------------------------------------
# P_T and ρ

@dataclass(frozen=True, eq=False)
class RhoEntry:
    projective: int
    approximation: Morphism      # minimal left T-approximation f = i ∘ j
    K: Rep
    inclusion: Morphism          # i: K -> T0
    corestriction: Morphism      # j: Q -> K
    index: int | None            # pool index of K (None when K = 0)


def restricted_projectives(T: Subcat, ctx: ExactContext) -> tuple[Subcat, dict[int, RhoEntry]]:
    """``P_T = add{Im f}`` over minimal left T-approximations f of the projectives."""
    pool = ctx.pool
    report = check_condition_A(T, ctx)
    if not report.passed:
        bad = report.failure()
        raise PreconditionFailed(f"condition (A) fails at {bad.describe(pool)} ({bad.reason})", bad)
    table = {}
    found = []
    for q in ctx.projectives.indices:
        ap = left_approximation(pool.members[q], T)
        K, inc, cores = image(ap.map)
        idx = None
        if K.total_dim:
            comps = pool.components(K)
            if len(comps) != 1 or comps[0][1] != 1:
                raise AssertionError(f"image at {pool.labels[q]} is not indecomposable")
            idx = comps[0][0]
            found.append(idx)
        table[q] = RhoEntry(q, ap.map, K, inc, cores, idx)
    return Subcat(pool, tuple(found)), table


def restricted_context(T: Subcat, ctx: ExactContext) -> ExactContext:
    E_T = restricted_category(T, ctx)
    P_T, _ = restricted_projectives(T, ctx)
    return make_context(ctx.pool, E_T, P_T, name=f"E_T:{T.name}")


def _solve_post(f: Morphism, h: Morphism) -> tuple[Morphism | None, list[Morphism]]:
    """Some b with b∘f = h (b: target f -> target h) plus a basis of {n : n∘f = 0}."""
    H = hom_space(f.target, h.target)
    if not H.basis:
        return (Morphism.zero(f.target, h.target) if h.is_zero() else None), []
    A = Matrix.from_columns([(b @ f).vector() for b in H.basis], len(h.vector()))
    x = A.solve(Matrix.column(h.vector()))
    null = [H.combine(c) for c in A.nullspace().columns()]
    return (None if x is None else H.combine(x.col(0))), null


def rho(a: Morphism, src: RhoEntry, dst: RhoEntry) -> Morphism:
    """``ã: K -> K'`` with ``ã∘j = j'∘a``."""
    out = factor_through_epi(src.corestriction, dst.corestriction @ a)
    if out is None:
        raise AssertionError("ρ(a) does not exist")
    return out


@dataclass(frozen=True)
class RhoReport:
    value: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.value


def rho_equivalence_check(T: Subcat, ctx: ExactContext) -> RhoReport:
    pool = ctx.pool
    ideal = ideal_of(T, ctx)
    _, table = restricted_projectives(T, ctx)
    qs = ctx.projectives.indices
    for q in qs:
        for q2 in qs:
            src, dst = table[q], table[q2]
            H = ideal.spaces[(q, q2)]
            if H.dim - ideal.dim(q, q2) != hom_space(src.K, dst.K).dim:
                return RhoReport(False, f"dimension mismatch at ({pool.labels[q]},{pool.labels[q2]})")
            images = []
            for a in H.basis:
                at = rho(a, src, dst)
                b, null = _solve_post(src.approximation, dst.approximation @ a)
                if b is None:
                    return RhoReport(False, "approximation does not extend a")
                if not ((dst.inclusion @ at) - (b @ src.inclusion)).is_zero():
                    return RhoReport(False, "ã is not induced by b")
                if any(not (n @ src.inclusion).is_zero() for n in null):
                    return RhoReport(False, "ã depends on the choice of b")
                images.append(at.vector())
            rank = Matrix.from_columns(images, len(images[0])).rank() if images and images[0] else 0
            if H.dim - rank != ideal.dim(q, q2):
                return RhoReport(False, "kernel of ρ differs from I")
            for f in ideal.bases[(q, q2)]:
                if not rho(f, src, dst).is_zero():
                    return RhoReport(False, "ρ does not vanish on I")
    for q in qs:
        e = table[q]
        Q = pool.members[q]
        if not rho(Morphism.identity(Q), e, e).vector() == Morphism.identity(e.K).vector():
            return RhoReport(False, "ρ(id) is not the identity")
        for q2 in qs:
            for q3 in qs:
                for a in ideal.spaces[(q, q2)].basis:
                    for a2 in ideal.spaces[(q2, q3)].basis:
                        lhs = rho(a2 @ a, e, table[q3])
                        rhs = rho(a2, table[q2], table[q3]) @ rho(a, e, table[q2])
                        if not (lhs - rhs).is_zero():
                            return RhoReport(False, "ρ does not respect composition")
    return RhoReport(True)


# ---------------------------------------------------------------------------
# tilting

@dataclass(frozen=True)
class TiltingVerdict:
    self_orthogonal: bool
    pd_at_most_one: bool
    coresolution: bool
    witness: str = ""

    @property
    def value(self) -> bool:
        return self.self_orthogonal and self.pd_at_most_one and self.coresolution

    def __bool__(self) -> bool:
        return self.value


def verify_tilting(T: Subcat, ctx: ExactContext) -> TiltingVerdict:
    """T is tilting in the context: Ext¹(T, T) = 0, pd T ≤ 1 and every
    projective has a conflation P ↣ T⁰ ↠ T¹ with T⁰, T¹ in add T."""
    pool = ctx.pool
    witness = ""
    orth = True
    for t in T.indices:
        for t2 in T.indices:
            if ctx.ext_dim(pool.members[t], pool.members[t2]):
                orth = False
                witness = witness or f"Ext^1({pool.labels[t]},{pool.labels[t2]}) != 0"
    pd = True
    for t in T.indices:
        try:
            _, K, _ = ctx.projective_cover(pool.members[t])
        except InvalidContext as exc:
            pd, witness = False, witness or str(exc)
            continue
        if not in_subcat(pool, K, ctx.projectives):
            pd = False
            witness = witness or f"syzygy of {pool.labels[t]} is {describe(pool, K)}, not projective"
    cores = True
    for p in ctx.projectives.indices:
        ap = left_approximation(pool.members[p], T)
        C, _ = cokernel(ap.map)
        if not ap.map.is_mono() or not in_subcat(pool, C, T):
            cores = False
            witness = witness or f"{pool.labels[p]} has no coresolution by add T"
    return TiltingVerdict(orth, pd, cores, witness)


# ---------------------------------------------------------------------------
# counting

def counting_theorem(T: Subcat, ctx: ExactContext) -> tuple[int, int]:
    """``(|T|, #{Q indecomposable projective : Hom(Q, T) != 0})``."""
    pool = ctx.pool
    n = sum(1 for q in ctx.projectives.indices
            if any(pool.hom_dim(q, t) for t in T.indices))
    return len(T), n


def rigid_pair_inequality(T: Subcat, ctx: ExactContext) -> tuple[int, int, bool]:
    """``(|T| + |Q|, |P|, equality)`` for the maximal Hom-orthogonal Q."""
    Q = max_orthogonal_projectives(T, ctx)
    lhs = len(T) + len(Q)
    return lhs, len(ctx.projectives), lhs == len(ctx.projectives)


@dataclass(frozen=True)
class ReductionReport:
    T_prime: int
    T_tilde: int
    T: int

    @property
    def holds(self) -> bool:
        return self.T_prime + self.T_tilde == self.T


def successive_reduction_check(T: Subcat, T2: Subcat) -> ReductionReport:
    """``|T'| + |T~| = |T|`` for support τ-tilting T' ≤ T over the algebra."""
    pool = T.pool
    mod = module_context(pool)
    if not is_support_tau_tilting(T, mod):
        raise HypothesisFailed(f"{T.name} is not support tau-tilting")
    if not is_support_tau_tilting(T2, mod):
        raise HypothesisFailed(f"{T2.name} is not support tau-tilting")
    if not mod.fac(T2).issubset(mod.fac(T)):
        raise HypothesisFailed(f"{T2.name} is not below {T.name}")
    if T.indices:
        S = direct_sum(T.reps(), pool.algebra).rep
        ap = left_approximation(S, T2)
        K, _ = kernel(ap.map)
        if not in_fac(T, K):
            raise HypothesisFailed(
                f"kernel {describe(pool, K)} of the approximation of {T.name} is not in Fac {T.name}")
    E = fac_context(pool, T)
    if E.projectives != T:
        raise AssertionError("Fac T does not have projectives add T")
    if not is_support_tau_tilting(T2, E):
        raise AssertionError(f"{T2.name} is not support tau-tilting in Fac {T.name}")
    tilde = [t for t in T.indices if all(pool.hom_dim(t, s) == 0 for s in T2.indices)]
    return ReductionReport(len(T2), len(tilde), len(T))


# ---------------------------------------------------------------------------
# summary

@dataclass(frozen=True, eq=False)
class RestrictionReport:
    T: Subcat
    ideal: MorphismIdeal
    E_T: Subcat
    P_T: Subcat
    rho_table: dict
    tilting: TiltingVerdict
    counting: tuple[int, int]
    rho_ok: RhoReport
    annihilator_agrees: bool | None
    closures: ClosureFlags
    ext_projective: bool

    def lines(self) -> list[str]:
        pool = self.T.pool
        out = [f"T: {self.T.name}",
               f"E_T: {self.E_T.name}",
               f"P_T: {self.P_T.name}",
               "ideal dims: " + ", ".join(
                   f"I({pool.labels[a]},{pool.labels[b]})={self.ideal.dim(a, b)}"
                   for a, b in sorted(self.ideal.bases))]
        for q, e in sorted(self.rho_table.items()):
            k = pool.labels[e.index] if e.index is not None else "0"
            out.append(f"rho: {pool.labels[q]} -> {k}")
        out.append(f"rho equivalence: {'YES' if self.rho_ok else 'NO ' + self.rho_ok.witness}")
        t = self.tilting
        out.append(f"tilting in E_T: {'YES' if t else 'NO'} (self-orthogonal {t.self_orthogonal}, "
                   f"pd<=1 {t.pd_at_most_one}, coresolution {t.coresolution})"
                   + (f" witness: {t.witness}" if t.witness else ""))
        out.append(f"counting: |T| = {self.counting[0]}, projectives with Hom(Q,T) != 0: {self.counting[1]}")
        if self.annihilator_agrees is not None:
            out.append(f"E_T and P_T agree with mod Λ/ann T: {self.annihilator_agrees}")
        c = self.closures
        out.append(f"E_T closed under quotients {c.factors}, submodules {c.subobjects}, "
                   f"extensions {c.extensions}")
        out.append(f"P_T is Ext-projective in E_T: {self.ext_projective}")
        return out


def restrict(T: Subcat, ctx: ExactContext) -> RestrictionReport:
    if not is_tau_rigid(T, ctx):
        raise PreconditionFailed(f"{T.name} is not tau-rigid")
    ideal = ideal_of(T, ctx)
    E_T = restricted_category(T, ctx, ideal)
    P_T, table = restricted_projectives(T, ctx)
    pool = ctx.pool
    rctx = make_context(pool, E_T, P_T, name=f"E_T:{T.name}")
    ann = None
    if ctx.is_module_category:
        ann = (annihilated_by(T, pool) == E_T
               and annihilator_quotient_projectives(T, pool) == P_T)
    flags = closure_flags(E_T, ctx.ambient)
    if not (flags.factors and flags.subobjects):
        raise AssertionError(f"E_T for {T.name} is not closed under quotients and submodules")
    ext_proj = all(rctx.ext_dim(pool.members[k], X) == 0 for k in P_T.indices for X in E_T.reps())
    return RestrictionReport(T, ideal, E_T, P_T, table, verify_tilting(T, rctx),
                             counting_theorem(T, ctx), rho_equivalence_check(T, ctx), ann,
                             flags, ext_proj)
