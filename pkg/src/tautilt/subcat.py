"""Additively closed subcategories of a pool: Fac/Sub, approximations,
Ext-projectives and closure tests.

A :class:`Subcat` is a set of pool indices standing for the additive closure
of those indecomposables.  Most predicates take an optional ``ambient``
subcategory.  When it is omitted (or is the whole pool) everything is
computed in the module category.  Otherwise Fac and Sub are taken relative
to the ambient exact structure: a deflation must be surjective *and* have
its kernel in the ambient, and dually for inflations.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from .homology import IncompletePool, Pool, ext1, ext_dim
from .linalg import Matrix
from .rep import (Morphism, Rep, cokernel, hom_space, kernel, submodule,
                  sum_of_maps_from, sum_of_maps_into)


@dataclass(frozen=True, eq=False)
class Subcat:
    pool: Pool
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if any(not 0 <= k < len(self.pool) for k in idx):
            raise IndexError("pool index out of range")
        object.__setattr__(self, "indices", idx)

    def __contains__(self, k: int) -> bool:
        return k in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subcat) and other.pool is self.pool and other.indices == self.indices

    def __hash__(self) -> int:
        return hash(self.indices)

    def reps(self) -> list[Rep]:
        return [self.pool.members[k] for k in self.indices]

    @property
    def name(self) -> str:
        return self.pool.name(self.indices)

    def issubset(self, other: "Subcat") -> bool:
        return set(self.indices) <= set(other.indices)

    def is_whole(self) -> bool:
        return len(self.indices) == len(self.pool)

    def __repr__(self) -> str:
        return f"Subcat({self.name})"


def add(pool: Pool, indices: Iterable[int]) -> Subcat:
    return Subcat(pool, tuple(indices))


def whole(pool: Pool) -> Subcat:
    return Subcat(pool, tuple(range(len(pool))))


class UnknownModule(KeyError):
    """A module-spec name does not match any pool label."""


def parse_spec(pool: Pool, spec: str) -> Subcat:
    """``2+2/3+1/2`` -> Subcat; ``0`` or the empty string is the zero subcategory."""
    spec = spec.strip()
    if spec in ("", "0"):
        return Subcat(pool, ())
    out = []
    for part in spec.split("+"):
        part = part.strip()
        if part not in pool.labels:
            raise UnknownModule(f"unknown module {part!r}; known: {', '.join(pool.labels)}")
        out.append(pool.labels.index(part))
    return Subcat(pool, tuple(out))


def _module_category(ambient: Subcat | None) -> bool:
    return ambient is None or ambient.is_whole()


def in_subcat(pool: Pool, M: Rep, C: Subcat) -> bool:
    """Whether every indecomposable summand of M lies in C."""
    if M.total_dim == 0:
        return True
    try:
        return all(k in C for k, _ in pool.components(M))
    except IncompletePool:
        return False


# ---------------------------------------------------------------------------
# trace and reject

def trace(T: Subcat, X: Rep) -> tuple[Rep, Morphism]:
    """Sum of the images of all maps from members of T into X."""
    cols = [[] for _ in X.dims]
    for U in T.reps():
        for f in hom_space(U, X).basis:
            for v, b in enumerate(f.blocks):
                cols[v].extend(b.columns())
    bases = [Matrix.from_columns(c, d).column_basis() if c else Matrix(d, 0)
             for c, d in zip(cols, X.dims)]
    return submodule(X, bases)


def reject(T: Subcat, X: Rep) -> tuple[Rep, Morphism]:
    """Intersection of the kernels of all maps from X into members of T."""
    rows = [[] for _ in X.dims]
    for U in T.reps():
        for f in hom_space(X, U).basis:
            for v, b in enumerate(f.blocks):
                rows[v].extend(b.rows)
    bases = [Matrix.from_rows(r, d).nullspace() if r else Matrix.identity(d)
             for r, d in zip(rows, X.dims)]
    return submodule(X, bases)


# ---------------------------------------------------------------------------
# approximations

@dataclass(frozen=True, eq=False)
class ApproxResult:
    """``map`` is X -> ⊕ T_i (left) or ⊕ T_i -> X (right); ``components``
    lists the pool index of each summand of the sum, in order."""
    map: Morphism
    components: tuple[int, ...]
    minimal: bool
    left: bool

    @property
    def sum(self) -> Rep:
        return self.map.target if self.left else self.map.source

    def kernel(self) -> tuple[Rep, Morphism]:
        return kernel(self.map)

    def cokernel(self) -> tuple[Rep, Morphism]:
        return cokernel(self.map)


def _is_left_approx(f: Morphism, T: Subcat) -> bool:
    for U in T.reps():
        target_dim = hom_space(f.source, U).dim
        if target_dim == 0:
            continue
        comps = [(g @ f).vector() for g in hom_space(f.target, U).basis]
        if not comps or Matrix.from_columns(comps, len(comps[0])).rank() < target_dim:
            return False
    return True


def _is_right_approx(f: Morphism, T: Subcat) -> bool:
    for U in T.reps():
        target_dim = hom_space(U, f.target).dim
        if target_dim == 0:
            continue
        comps = [(f @ g).vector() for g in hom_space(U, f.source).basis]
        if not comps or Matrix.from_columns(comps, len(comps[0])).rank() < target_dim:
            return False
    return True


def left_approximation(X: Rep, T: Subcat) -> ApproxResult:
    """Minimal left add(T)-approximation of X.

    Starts from the universal map into ⊕ T_i^{dim Hom(X, T_i)} and deletes
    summands last-to-first while the approximation property survives.  If a
    non-minimal approximation is left, some summand of the target is
    complementary to a direct summand containing the image, so one pass of
    deletions reaches a minimal one.
    """
    maps, comps = [], []
    for k, U in zip(T.indices, T.reps()):
        for f in hom_space(X, U).basis:
            maps.append(f)
            comps.append(k)
    keep = list(range(len(maps)))
    for pos in reversed(range(len(maps))):
        trial = [i for i in keep if i != pos]
        _, f = sum_of_maps_from(X, [maps[i] for i in trial])
        if _is_left_approx(f, T):
            keep = trial
    _, f = sum_of_maps_from(X, [maps[i] for i in keep])
    return ApproxResult(f, tuple(comps[i] for i in keep), True, True)


def right_approximation(X: Rep, T: Subcat) -> ApproxResult:
    """Minimal right add(T)-approximation of X (dual construction)."""
    maps, comps = [], []
    for k, U in zip(T.indices, T.reps()):
        for f in hom_space(U, X).basis:
            maps.append(f)
            comps.append(k)
    keep = list(range(len(maps)))
    for pos in reversed(range(len(maps))):
        trial = [i for i in keep if i != pos]
        _, f = sum_of_maps_into([maps[i] for i in trial], X)
        if _is_right_approx(f, T):
            keep = trial
    _, f = sum_of_maps_into([maps[i] for i in keep], X)
    return ApproxResult(f, tuple(comps[i] for i in keep), True, False)


# ---------------------------------------------------------------------------
# Fac and Sub

def in_fac(T: Subcat, X: Rep, ambient: Subcat | None = None) -> bool:
    if X.total_dim == 0:
        return True
    if _module_category(ambient):
        tr, _ = trace(T, X)
        return tr.total_dim == X.total_dim
    f = right_approximation(X, T).map
    if not f.is_epi():
        return False
    return in_subcat(T.pool, kernel(f)[0], ambient)


def in_sub(T: Subcat, X: Rep, ambient: Subcat | None = None) -> bool:
    if X.total_dim == 0:
        return True
    if _module_category(ambient):
        rj, _ = reject(T, X)
        return rj.total_dim == 0
    f = left_approximation(X, T).map
    if not f.is_mono():
        return False
    return in_subcat(T.pool, cokernel(f)[0], ambient)


def fac_members(T: Subcat, ambient: Subcat | None = None) -> Subcat:
    """Pool members (of the ambient) that are deflation quotients of add T."""
    pool = T.pool
    scope = range(len(pool)) if ambient is None else ambient.indices
    return Subcat(pool, tuple(k for k in scope if in_fac(T, pool.members[k], ambient)))


def sub_members(T: Subcat, ambient: Subcat | None = None) -> Subcat:
    pool = T.pool
    scope = range(len(pool)) if ambient is None else ambient.indices
    return Subcat(pool, tuple(k for k in scope if in_sub(T, pool.members[k], ambient)))


def surjection_from(T: Subcat, X: Rep) -> Morphism | None:
    """An explicit surjection from add T onto X built from hom bases, if one exists."""
    maps = [f for U in T.reps() for f in hom_space(U, X).basis]
    if not maps:
        return None if X.total_dim else Morphism.zero(X, X)
    _, f = sum_of_maps_into(maps, X)
    return f if f.is_epi() else None


# ---------------------------------------------------------------------------
# Ext-projectives and closure

ExtFn = Callable[[Rep, Rep], int]


def ext_projectives(C: Subcat, ext: ExtFn = ext_dim) -> Subcat:
    """Members X of C with Ext¹(X, C) = 0."""
    pool = C.pool
    reps = C.reps()
    return Subcat(pool, tuple(k for k, X in zip(C.indices, reps)
                              if all(ext(X, Y) == 0 for Y in reps)))


def ext_injectives(C: Subcat, ext: ExtFn = ext_dim) -> Subcat:
    pool = C.pool
    reps = C.reps()
    return Subcat(pool, tuple(k for k, X in zip(C.indices, reps)
                              if all(ext(Y, X) == 0 for Y in reps)))


@dataclass(frozen=True)
class ClosureVerdict:
    value: bool
    exact: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.value

    def __str__(self) -> str:
        if self.value:
            return "Exact(true)" if self.exact else "HeuristicTrue"
        return f"Exact(false): {self.witness}" if self.witness else "Exact(false)"


def _middle_in(C: Subcat, E: Rep) -> tuple[bool, str]:
    try:
        comps = C.pool.components(E)
    except IncompletePool as exc:
        return False, f"middle term has a summand outside the pool ({exc})"
    bad = [k for k, _ in comps if k not in C]
    if bad:
        return False, "middle term contains " + C.pool.name(bad)
    return True, ""


def is_extension_closed(C: Subcat) -> ClosureVerdict:
    """Extension closure in the module category.

    With dim Ext¹ ≤ 1 the only non-split middle term is checked and the
    verdict is exact.  Larger Ext groups are sampled on basis classes and
    all 0/±1 combinations; passing them yields HeuristicTrue.
    """
    pool = C.pool
    exact = True
    for z in reversed(C.indices):
        for x in C.indices:
            Z, X = pool.members[z], pool.members[x]
            es = ext1(Z, X)
            if es.dimension == 0:
                continue
            if es.dimension == 1:
                seqs = [c.sequence for c in es.basis_classes]
            else:
                exact = False
                seqs = [es.combination(co) for co in product((-1, 0, 1), repeat=es.dimension)
                        if any(co)]
            for seq in seqs:
                ok, why = _middle_in(C, seq.middle)
                if not ok:
                    return ClosureVerdict(
                        False, True,
                        f"Ext^1({pool.labels[z]},{pool.labels[x]}): {why}")
    return ClosureVerdict(True, exact)


def is_torsion_class(D: Subcat, ambient: Subcat | None = None) -> bool:
    """Factor-closed relative to the ambient and closed under extensions."""
    if ambient is not None and not D.issubset(ambient):
        return False
    if not set(fac_members(D, ambient).indices) <= set(D.indices):
        return False
    return bool(is_extension_closed(D))


def hom_orthogonal_right(T: Subcat, scope: Subcat) -> Subcat:
    """``T^⊥0`` within scope: members x with Hom(t, x) = 0 for all t in T."""
    pool = T.pool
    return Subcat(pool, tuple(x for x in scope.indices
                              if all(pool.hom_dim(t, x) == 0 for t in T.indices)))


def ext_left_perp(D: Subcat, scope: Subcat, ext: ExtFn = ext_dim) -> Subcat:
    """``⊥₁D`` within scope: members X with Ext¹(X, d) = 0 for all d in D."""
    pool = D.pool
    dreps = D.reps()
    return Subcat(pool, tuple(k for k in scope.indices
                              if all(ext(pool.members[k], Y) == 0 for Y in dreps)))


def components_in(pool: Pool, M: Rep) -> tuple[int, ...]:
    """Pool indices of summands of M with multiplicity, in canonical order."""
    out = []
    for k, m in pool.components(M):
        out.extend([k] * m)
    return tuple(out)


def name_of_sum(pool: Pool, indices: Sequence[int]) -> str:
    return pool.name(indices)
