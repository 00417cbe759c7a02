"""τ-rigidity, condition (A), support τ-tilting verdicts, the poset of support
τ-tilting subcategories and its mirror of τ-cotorsion pairs, all inside an
exact subcategory of a module category."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .homology import IncompletePool, Pool
from .linalg import Matrix
from .rep import Morphism, Rep, cokernel, hom_space, image, kernel
from .subcat import (ApproxResult, Subcat, ext_left_perp, ext_projectives, fac_members,
                     hom_orthogonal_right, in_subcat, is_extension_closed, is_torsion_class,
                     left_approximation, right_approximation, whole)
from .homology import ext_dim as ambient_ext_dim, module_label


class PreconditionFailed(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidContext(ValueError):
    """The proposed ambient lacks enough projectives."""


MAX_ENUMERATION = 20


@dataclass(frozen=True, eq=False)
class ExactContext:
    """An exact category realized inside ``mod Λ``.

    Conflations are the short exact sequences with all three terms in
    ``ambient``.  ``projectives`` must give every ambient member a deflation
    whose kernel stays in the ambient.  Ext¹ is the ambient Ext¹ when the
    ambient is extension-closed and is otherwise computed from projective
    covers inside the context.
    """
    pool: Pool
    ambient: Subcat
    projectives: Subcat
    extension_closed: bool
    name: str = "mod"
    _ext: dict = field(default_factory=dict, repr=False)

    @property
    def is_module_category(self) -> bool:
        return self.ambient.is_whole()

    @property
    def fac_scope(self) -> Subcat | None:
        return None if self.is_module_category else self.ambient

    def contains(self, M: Rep) -> bool:
        return in_subcat(self.pool, M, self.ambient)

    def fac(self, T: Subcat) -> Subcat:
        return fac_members(T, self.ambient if not self.is_module_category else None)

    def ext_dim(self, Z: Rep, X: Rep) -> int:
        if self.extension_closed:
            return ambient_ext_dim(Z, X)
        return self.relative_ext_dim(Z, X)

    def projective_cover(self, Z: Rep) -> tuple[ApproxResult, Rep, Morphism]:
        """Minimal right add(projectives)-approximation, its kernel and inclusion."""
        key = id(Z)
        hit = self._ext.get(("cover", key))
        if hit is not None and hit[0] is Z:
            return hit[1]
        ap = right_approximation(Z, self.projectives)
        if not ap.map.is_epi():
            raise InvalidContext(f"{module_label(Z)} is not covered by the context projectives")
        K, inc = kernel(ap.map)
        if not self.contains(K):
            raise InvalidContext(f"syzygy of {module_label(Z)} leaves the ambient")
        self._ext[("cover", key)] = (Z, (ap, K, inc))
        return ap, K, inc

    def relative_ext_dim(self, Z: Rep, X: Rep) -> int:
        """dim coker(Hom(P, X) -> Hom(Ω, X)) for the conflation Ω ↣ P ↠ Z."""
        ap, K, inc = self.projective_cover(Z)
        H = hom_space(K, X)
        if not H.basis:
            return 0
        images = [(h @ inc).vector() for h in hom_space(ap.sum, X).basis]
        rank = Matrix.from_columns(images, len(H.basis[0].vector())).rank() if images else 0
        return H.dim - rank

    def is_admissible(self, f: Morphism) -> tuple[bool, str]:
        """Kernel, image and cokernel of f all lie in the ambient."""
        K, _ = kernel(f)
        if not self.contains(K):
            return False, f"kernel {describe(self.pool, K)} not in ambient"
        Im, _, _ = image(f)
        if not self.contains(Im):
            return False, f"image {describe(self.pool, Im)} not in ambient"
        C, _ = cokernel(f)
        if not self.contains(C):
            return False, f"cokernel {describe(self.pool, C)} not in ambient"
        return True, ""


def describe(pool: Pool, M: Rep) -> str:
    """Pool-label name of M when all summands are pool members."""
    if M.total_dim == 0:
        return "0"
    try:
        comps = pool.components(M)
    except IncompletePool:
        return module_label(M)
    return "+".join("+".join([pool.labels[k]] * m) for k, m in comps)


def module_context(pool: Pool) -> ExactContext:
    return ExactContext(pool, whole(pool), Subcat(pool, tuple(pool.projective_indices())),
                        extension_closed=pool.complete, name="mod")


def make_context(pool: Pool, ambient: Subcat, projectives: Subcat | None = None,
                 name: str = "") -> ExactContext:
    """Context on an arbitrary ambient; the projectives default to the
    Ext-projectives and enough projectives is verified."""
    closed = bool(is_extension_closed(ambient))
    if projectives is None:
        if not closed:
            raise InvalidContext("projectives must be given for a non extension-closed ambient")
        projectives = ext_projectives(ambient)
    ctx = ExactContext(pool, ambient, projectives, closed, name or f"sub:{ambient.name}")
    for X in ambient.reps():
        ctx.projective_cover(X)
    return ctx


def fac_context(pool: Pool, T: Subcat) -> ExactContext:
    """``Fac T`` inside ``mod Λ`` with its Ext-projectives."""
    amb = fac_members(T)
    return make_context(pool, amb, name=f"fac:{T.name}")


# ---------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True, eq=False)
class TauTiltPair:
    T: Subcat
    Q: Subcat

    def label(self) -> str:
        return f"{self.T.name} | {self.Q.name}"


def max_orthogonal_projectives(T: Subcat, ctx: ExactContext) -> Subcat:
    pool = ctx.pool
    return Subcat(pool, tuple(q for q in ctx.projectives.indices
                              if all(pool.hom_dim(q, t) == 0 for t in T.indices)))


def is_tau_rigid(T: Subcat, ctx: ExactContext) -> bool:
    """Ext¹(T, Fac T) = 0 in the context."""
    fac = ctx.fac(T)
    return all(ctx.ext_dim(t, x) == 0 for t in T.reps() for x in fac.reps())


@dataclass(frozen=True, eq=False)
class ProjectiveCheck:
    projective: int
    approximation: ApproxResult
    admissible: bool
    reason: str
    cokernel_in_T: bool

    def describe(self, pool: Pool) -> str:
        P = pool.labels[self.projective]
        tgt = pool.name(self.approximation.components)
        return f"projective {P}: approximation {P} -> {tgt}"


@dataclass(frozen=True, eq=False)
class ConditionAReport:
    T: Subcat
    checks: tuple[ProjectiveCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.admissible for c in self.checks)

    def failure(self) -> ProjectiveCheck | None:
        return next((c for c in self.checks if not c.admissible), None)


def check_condition_A(T: Subcat, ctx: ExactContext) -> ConditionAReport:
    pool = ctx.pool
    checks = []
    for p in ctx.projectives.indices:
        ap = left_approximation(pool.members[p], T)
        ok, why = ctx.is_admissible(ap.map)
        C, _ = cokernel(ap.map)
        checks.append(ProjectiveCheck(p, ap, ok, why, in_subcat(pool, C, T)))
    return ConditionAReport(T, tuple(checks))


@dataclass(frozen=True, eq=False)
class STTVerdict:
    T: Subcat
    tau_rigid: bool
    condition_A: ConditionAReport

    @property
    def value(self) -> bool:
        return self.tau_rigid and all(c.admissible and c.cokernel_in_T
                                      for c in self.condition_A.checks)

    def __bool__(self) -> bool:
        return self.value

    def witness(self, pool: Pool) -> str:
        if not self.tau_rigid:
            return "not tau-rigid"
        for c in self.condition_A.checks:
            if not c.admissible:
                return f"condition (A) fails at {c.describe(pool)} ({c.reason})"
            if not c.cokernel_in_T:
                return f"cokernel at {c.describe(pool)} is not in add T"
        return ""


def is_support_tau_tilting(T: Subcat, ctx: ExactContext) -> STTVerdict:
    return STTVerdict(T, is_tau_rigid(T, ctx), check_condition_A(T, ctx))


def is_support_tau_tilting_via_closure(T: Subcat, ctx: ExactContext) -> bool:
    """τ-rigid, (A) and T = P(Fac T)."""
    if not is_tau_rigid(T, ctx) or not check_condition_A(T, ctx).passed:
        return False
    return ext_projectives(ctx.fac(T), ctx.ext_dim) == T


def complete_to_support_tau_tilting(T: Subcat, ctx: ExactContext) -> Subcat:
    """``P(Fac T)`` for a τ-rigid T satisfying (A)."""
    if not is_tau_rigid(T, ctx):
        raise PreconditionFailed(f"{T.name} is not tau-rigid")
    rep = check_condition_A(T, ctx)
    if not rep.passed:
        bad = rep.failure()
        raise PreconditionFailed(f"condition (A) fails at {bad.describe(ctx.pool)} ({bad.reason})",
                                 bad)
    T2 = ext_projectives(ctx.fac(T), ctx.ext_dim)
    if not T.issubset(T2) or not is_support_tau_tilting(T2, ctx):
        raise AssertionError("completion is not support tau-tilting")
    return T2


def enough_projectives_certificate(T: Subcat, ctx: ExactContext) -> list[tuple[int, ApproxResult]]:
    """For each X in Fac T, a deflation from add T whose kernel is in Fac T."""
    fac = ctx.fac(T)
    out = []
    for x in fac.indices:
        X = ctx.pool.members[x]
        ap = right_approximation(X, T)
        K, _ = kernel(ap.map)
        if not ap.map.is_epi() or not in_subcat(ctx.pool, K, fac):
            raise AssertionError(f"{ctx.pool.labels[x]} has no deflation from add T inside Fac T")
        out.append((x, ap))
    return out


# ---------------------------------------------------------------------------
# enumeration and the poset

def _subsets(indices):
    for r in range(len(indices) + 1):
        yield from combinations(indices, r)


def enumerate_tau_rigid_pairs(ctx: ExactContext) -> list[TauTiltPair]:
    """Basic τ-rigid subcategories satisfying (A), with their maximal Q."""
    amb = ctx.ambient.indices
    if len(amb) > MAX_ENUMERATION:
        raise ValueError(f"ambient has {len(amb)} members; enumeration is capped at {MAX_ENUMERATION}")
    out = []
    for sub in _subsets(amb):
        T = Subcat(ctx.pool, sub)
        if is_tau_rigid(T, ctx) and check_condition_A(T, ctx).passed:
            out.append(TauTiltPair(T, max_orthogonal_projectives(T, ctx)))
    return out


@dataclass(frozen=True, eq=False)
class HasseGraph:
    vertices: tuple[TauTiltPair, ...]
    facs: tuple[Subcat, ...]
    edges: tuple[tuple[int, int], ...]
    order: frozenset
    tainted: bool = False

    def index_of(self, name: str) -> int:
        for k, v in enumerate(self.vertices):
            if v.T.name == name:
                return k
        raise KeyError(name)

    def to_dot(self) -> str:
        lines = ["digraph stautilt {"]
        for k, v in enumerate(self.vertices):
            lines.append(f'  v{k} [label="{v.label()}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -> v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _transitive_reduction(n: int, less: set[tuple[int, int]]) -> list[tuple[int, int]]:
    """Cover pairs (i, j) meaning j < i with nothing strictly between."""
    edges = []
    for i in range(n):
        for j in range(n):
            if (j, i) in less and not any((j, k) in less and (k, i) in less for k in range(n)):
                edges.append((i, j))
    return sorted(edges)


def enumerate_stau_tilt(ctx: ExactContext) -> HasseGraph:
    pairs = [p for p in enumerate_tau_rigid_pairs(ctx) if is_support_tau_tilting(p.T, ctx)]
    facs = [ctx.fac(p.T) for p in pairs]
    order = sorted(range(len(pairs)), key=lambda k: (-len(facs[k]), pairs[k].T.indices))
    pairs = [pairs[k] for k in order]
    facs = [facs[k] for k in order]
    n = len(pairs)
    less = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            by_fac = facs[i].issubset(facs[j])
            by_gen = all(t in facs[j] for t in pairs[i].T.indices)
            if by_fac != by_gen:
                raise AssertionError("generator test disagrees with Fac inclusion")
            if by_fac:
                if facs[j].issubset(facs[i]):
                    raise AssertionError("two support tau-tilting subcategories share Fac")
                less.add((i, j))
    edges = _transitive_reduction(n, less)
    return HasseGraph(tuple(pairs), tuple(facs), tuple(edges), frozenset(less),
                      tainted=not ctx.pool.complete)


# ---------------------------------------------------------------------------
# τ-cotorsion pairs

@dataclass(frozen=True, eq=False)
class CotorsionPair:
    C: Subcat
    D: Subcat
    tau_cotorsion: bool
    torsion: bool
    witness: str = ""
    full: bool | None = None

    @property
    def core(self) -> Subcat:
        return Subcat(self.C.pool, tuple(k for k in self.C.indices if k in self.D))


def check_tau_cotorsion(C: Subcat, D: Subcat, ctx: ExactContext) -> tuple[bool, str]:
    """C = ⊥₁D and every projective has P -> D0 ↠ C0 with f a left D-approximation."""
    if ext_left_perp(D, ctx.ambient, ctx.ext_dim) != C:
        return False, "C differs from the Ext-perpendicular of D"
    pool = ctx.pool
    core = Subcat(pool, tuple(k for k in C.indices if k in D))
    for p in ctx.projectives.indices:
        ap = left_approximation(pool.members[p], D)
        ok, why = ctx.is_admissible(ap.map)
        if not ok:
            return False, f"approximation of {pool.labels[p]}: {why}"
        if not all(k in core for k in ap.components):
            return False, f"approximation of {pool.labels[p]} leaves C and D"
        Cok, _ = cokernel(ap.map)
        if not in_subcat(pool, Cok, C):
            return False, f"cokernel at {pool.labels[p]} not in C"
    return True, ""


def is_cotorsion_pair(C: Subcat, D: Subcat, ctx: ExactContext) -> tuple[bool, str]:
    """Complete cotorsion pair: Ext¹(C, D) = 0 and both approximation conflations."""
    pool = ctx.pool
    for c in C.reps():
        for d in D.reps():
            if ctx.ext_dim(c, d):
                return False, "Ext^1(C, D) is nonzero"
    for x in ctx.ambient.indices:
        X = pool.members[x]
        right = right_approximation(X, C).map
        if not right.is_epi() or not in_subcat(pool, kernel(right)[0], D):
            return False, f"{pool.labels[x]} has no conflation D ↣ C ↠ X"
        left = left_approximation(X, D).map
        if not left.is_mono() or not in_subcat(pool, cokernel(left)[0], C):
            return False, f"{pool.labels[x]} has no conflation X ↣ D ↠ C"
    return True, ""


def tau_cotorsion_pair_of(T: Subcat, ctx: ExactContext) -> CotorsionPair:
    D = ctx.fac(T)
    C = ext_left_perp(D, ctx.ambient, ctx.ext_dim)
    ok, why = check_tau_cotorsion(C, D, ctx)
    pair = CotorsionPair(C, D, ok, is_torsion_class(D, ctx.fac_scope), why)
    return pair


@dataclass(frozen=True, eq=False)
class CotorsionEnumeration:
    pairs: tuple[CotorsionPair, ...]
    stt: HasseGraph
    forward_ok: bool
    backward_ok: bool
    tilting_match: bool

    @property
    def bijection(self) -> bool:
        return self.forward_ok and self.backward_ok and len(self.pairs) == len(self.stt.vertices)


def enumerate_tau_cotorsion_pairs(ctx: ExactContext) -> CotorsionEnumeration:
    from .restriction import verify_tilting
    amb = ctx.ambient.indices
    if len(amb) > MAX_ENUMERATION:
        raise ValueError(f"ambient has {len(amb)} members; enumeration is capped at {MAX_ENUMERATION}")
    pairs = []
    for sub in _subsets(amb):
        D = Subcat(ctx.pool, sub)
        if not is_torsion_class(D, ctx.fac_scope):
            continue
        C = ext_left_perp(D, ctx.ambient, ctx.ext_dim)
        ok, why = check_tau_cotorsion(C, D, ctx)
        if ok:
            full, _ = is_cotorsion_pair(C, D, ctx)
            pairs.append(CotorsionPair(C, D, True, True, "", full))
    stt = enumerate_stau_tilt(ctx)
    stt_sets = {v.T.indices for v in stt.vertices}
    backward = all(p.core.indices in stt_sets for p in pairs)
    if backward:
        backward = all(tau_cotorsion_pair_of(p.core, ctx).C == p.C
                       and ctx.fac(p.core) == p.D for p in pairs)
    pair_keys = {(p.C.indices, p.D.indices) for p in pairs}
    forward = True
    for v in stt.vertices:
        cp = tau_cotorsion_pair_of(v.T, ctx)
        if (cp.C.indices, cp.D.indices) not in pair_keys or cp.core != v.T:
            forward = False
    tilting_match = all(bool(p.full) == bool(verify_tilting(p.core, ctx)) for p in pairs)
    pairs.sort(key=lambda p: (-len(p.D), p.D.indices))
    return CotorsionEnumeration(tuple(pairs), stt, forward, backward, tilting_match)


@dataclass(frozen=True, eq=False)
class ACFTriple:
    C: Subcat
    D: Subcat
    F: Subcat
    torsion_pair: bool
    acf: bool
    witness: str = ""


def acf_triple(T: Subcat, ctx: ExactContext) -> ACFTriple:
    """``(⊥₁Fac T, Fac T, T^⊥0)`` with the torsion-pair and a.c.f. checks."""
    pool = ctx.pool
    cp = tau_cotorsion_pair_of(T, ctx)
    F = hom_orthogonal_right(T, ctx.ambient)
    torsion, acf, witness = True, True, ""
    for d in cp.D.indices:
        for f in F.indices:
            if pool.hom_dim(d, f):
                torsion, witness = False, f"Hom({pool.labels[d]},{pool.labels[f]}) != 0"
    for x in ctx.ambient.indices:
        X = pool.members[x]
        ap = right_approximation(X, T)
        Im, inc, _ = image(ap.map)
        Q, _ = cokernel(inc)
        if torsion and not (in_subcat(pool, Im, cp.D) and in_subcat(pool, Q, F)):
            torsion = False
            witness = f"canonical sequence of {pool.labels[x]} leaves (D, F)"
        ok, why = ctx.is_admissible(ap.map)
        if acf and not ok:
            acf = False
            witness = witness or f"right approximation of {pool.labels[x]}: {why}"
    return ACFTriple(cp.C, cp.D, F, torsion, acf, witness)
