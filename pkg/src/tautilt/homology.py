"""Projective covers, Ext¹ with explicit extensions, the AR translate and the
enumeration of indecomposable modules by knitting."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra
from .linalg import Matrix, complement_units
from .rep import (DirectSum, Morphism, Rep, _indec_iso, _same_algebra, canonical_key,
                  cokernel, decompose, direct_sum, dual, factor_through_epi, hom_space,
                  injective, kernel, loewy_layers, projective, radical, simple, socle, top)


class CapExceeded(RuntimeError):
    """Enumeration hit ``max_steps``; ``pool`` holds what was found."""

    def __init__(self, message: str, pool: "Pool"):
        super().__init__(message)
        self.pool = pool


class IncompletePool(LookupError):
    """A module has an indecomposable summand that is not a pool member."""

    def __init__(self, message: str, witness: Rep | None = None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# sums of indecomposable projectives

@dataclass(frozen=True, eq=False)
class ProjectiveSum:
    """``⊕_k P(vertices[k])`` with the position of each summand's basis.

    ``offsets[k][j]`` is where summand ``k`` starts inside the vertex-``j``
    space; its coordinates there are the basis elements
    ``algebra.basis_between(vertices[k], j)`` in order.
    """
    algebra: Algebra
    vertices: tuple[int, ...]
    sum: DirectSum
    offsets: tuple[tuple[int, ...], ...]

    @property
    def rep(self) -> Rep:
        return self.sum.rep

    def generator_column(self, k: int) -> int:
        u = self.vertices[k]
        return self.offsets[k][u] + self.algebra.basis_between(u, u).index(self.algebra.idempotents[u])


def projective_sum(alg: Algebra, vertices: Sequence[int]) -> ProjectiveSum:
    vertices = tuple(vertices)
    ds = direct_sum([projective(alg, u) for u in vertices], alg)
    offsets = []
    run = [0] * alg.n_vertices
    for u in vertices:
        offsets.append(tuple(run))
        for j in range(alg.n_vertices):
            run[j] += len(alg.basis_between(u, j))
    return ProjectiveSum(alg, vertices, ds, tuple(offsets))


def map_from_projectives(ps: ProjectiveSum, target: Rep, vectors: Sequence[Sequence]) -> Morphism:
    """Map sending the generator of summand ``k`` to ``vectors[k]`` (in target at vertex u_k)."""
    alg = ps.algebra
    blocks = []
    for j in range(alg.n_vertices):
        cols = []
        for k, u in enumerate(ps.vertices):
            v = Matrix.column(vectors[k])
            for b in alg.basis_between(u, j):
                cols.append(target.act(b) @ v)
        rows = [[c[i, 0] for c in cols] for i in range(target.dims[j])]
        blocks.append(Matrix(target.dims[j], len(cols), rows))
    return Morphism(ps.rep, target, tuple(blocks))


def element_matrix(f: Morphism, src: ProjectiveSum, tgt: ProjectiveSum) -> list[list[list[Fraction]]]:
    """``x[l][k]``: coordinates in Λ of the component ``P(u_k) -> P(v_l)``,
    an element of ``e_{v_l} Λ e_{u_k}`` acting by left multiplication."""
    alg = src.algebra
    out = [[[Fraction(0)] * alg.dimension for _ in src.vertices] for _ in tgt.vertices]
    for k, u in enumerate(src.vertices):
        col = f.blocks[u].col(src.generator_column(k))
        for l, v in enumerate(tgt.vertices):
            start = tgt.offsets[l][u]
            for r, b in enumerate(alg.basis_between(v, u)):
                out[l][k][b] = col[start + r]
    return out


def nakayama(f: Morphism, src: ProjectiveSum, tgt: ProjectiveSum) -> tuple[Rep, Rep, Morphism]:
    """``ν f: ⊕ I(u_k) -> ⊕ I(v_l)`` for ``f: ⊕ P(u_k) -> ⊕ P(v_l)``."""
    alg = src.algebra
    X = element_matrix(f, src, tgt)
    c = alg.mult
    IS = direct_sum([injective(alg, u) for u in src.vertices], alg).rep
    IT = direct_sum([injective(alg, v) for v in tgt.vertices], alg).rep
    blocks = []
    for j in range(alg.n_vertices):
        rows = []
        for l, v in enumerate(tgt.vertices):
            for y in alg.basis_between(j, v):
                row = []
                for k, u in enumerate(src.vertices):
                    zs = alg.basis_between(j, u)
                    entry = {z: Fraction(0) for z in zs}
                    for b, xb in enumerate(X[l][k]):
                        if not xb:
                            continue
                        for z, cz in c.get((y, b), ()):
                            if z in entry:
                                entry[z] += xb * cz
                    row.extend(entry[z] for z in zs)
                rows.append(row)
        blocks.append(Matrix(IT.dims[j], IS.dims[j], rows))
    return IS, IT, Morphism(IS, IT, tuple(blocks))


# ---------------------------------------------------------------------------
# covers, syzygies, presentations

@dataclass(frozen=True, eq=False)
class ProjectiveCover:
    projectives: ProjectiveSum
    epi: Morphism

    @property
    def P(self) -> Rep:
        return self.projectives.rep


def projective_cover(M: Rep) -> ProjectiveCover:
    key = ("cover",)
    if key in M._cache:
        return M._cache[key]
    alg = M.algebra
    from .rep import radical_bases
    rad = radical_bases(M)
    vertices, vectors = [], []
    for i in range(alg.n_vertices):
        for j in complement_units(rad[i]):
            vertices.append(i)
            vectors.append([Fraction(int(r == j)) for r in range(M.dims[i])])
    ps = projective_sum(alg, vertices)
    cov = ProjectiveCover(ps, map_from_projectives(ps, M, vectors))
    M._cache[key] = cov
    return cov


def syzygy(M: Rep) -> tuple[Rep, Morphism]:
    """Kernel of the projective cover, with its inclusion into the cover."""
    key = ("syzygy",)
    if key not in M._cache:
        M._cache[key] = kernel(projective_cover(M).epi)
    return M._cache[key]


@dataclass(frozen=True, eq=False)
class Presentation:
    """``P1 --d--> P0 --epi--> M -> 0``, minimal."""
    P1: ProjectiveSum
    P0: ProjectiveSum
    d: Morphism
    epi: Morphism


def minimal_presentation(M: Rep) -> Presentation:
    cov0 = projective_cover(M)
    Om, inc = syzygy(M)
    cov1 = projective_cover(Om)
    return Presentation(cov1.projectives, cov0.projectives, inc @ cov1.epi, cov0.epi)


# ---------------------------------------------------------------------------
# extensions

@dataclass(frozen=True, eq=False)
class SESequence:
    """``X --alpha--> E --beta--> Z``."""
    alpha: Morphism
    beta: Morphism

    @property
    def left(self) -> Rep:
        return self.alpha.source

    @property
    def middle(self) -> Rep:
        return self.alpha.target

    @property
    def right(self) -> Rep:
        return self.beta.target

    def is_exact(self) -> bool:
        if not (self.beta @ self.alpha).is_zero():
            return False
        if not (self.alpha.is_mono() and self.beta.is_epi()):
            return False
        return all(a.rank() == E - b.rank() for a, b, E in
                   zip(self.alpha.blocks, self.beta.blocks, self.middle.dims))

    def splits(self) -> bool:
        """Some section ``s`` of ``beta`` exists."""
        Z = self.right
        H = hom_space(Z, self.middle)
        ident = Morphism.identity(Z).vector()
        if not H.basis:
            return Z.total_dim == 0
        A = Matrix.from_columns([(self.beta @ s).vector() for s in H.basis], len(ident))
        return A.solve(Matrix.column(ident)) is not None


@dataclass(frozen=True, eq=False)
class ExtClass:
    cocycle: Morphism
    coordinates: tuple[Fraction, ...]
    sequence: SESequence


@dataclass(frozen=True, eq=False)
class ExtSpace:
    Z: Rep
    X: Rep
    dimension: int
    cocycles: tuple[Morphism, ...]
    _classes: list = field(default_factory=list, repr=False)

    @property
    def basis_classes(self) -> tuple[ExtClass, ...]:
        if not self._classes and self.cocycles:
            n = len(self.cocycles)
            for k, c in enumerate(self.cocycles):
                coords = tuple(Fraction(int(i == k)) for i in range(n))
                self._classes.append(ExtClass(c, coords, realize(self.Z, self.X, c)))
        return tuple(self._classes)

    def combination(self, coeffs: Sequence) -> SESequence:
        total = Morphism.zero(self.cocycles[0].source, self.X)
        for a, c in zip(coeffs, self.cocycles):
            if a:
                total = total + c.scale(a)
        return realize(self.Z, self.X, total)


def _ext_data(Z: Rep, X: Rep):
    _same_algebra(Z, X)
    cov = projective_cover(Z)
    Om, iota = syzygy(Z)
    H_OX = hom_space(Om, X)
    if not H_OX.basis:
        return Om, iota, H_OX, []
    length = len(H_OX.basis[0].vector())
    images = [(h @ iota).vector() for h in hom_space(cov.P, X).basis]
    cols = images + [g.vector() for g in H_OX.basis]
    _, piv = Matrix.from_columns(cols, length).rref()
    comp = [p - len(images) for p in piv if p >= len(images)]
    return Om, iota, H_OX, comp


def ext_dim(Z: Rep, X: Rep) -> int:
    key = ("extdim", id(X))
    hit = Z._cache.get(key)
    if hit is not None and hit[0] is X:
        return hit[1]
    d = len(_ext_data(Z, X)[3])
    Z._cache[key] = (X, d)
    return d


def ext1(Z: Rep, X: Rep) -> ExtSpace:
    """Ext¹(Z, X) as coker(Hom(P0, X) -> Hom(ΩZ, X))."""
    _, _, H, comp = _ext_data(Z, X)
    return ExtSpace(Z, X, len(comp), tuple(H.basis[k] for k in comp))


def realize(Z: Rep, X: Rep, cocycle: Morphism) -> SESequence:
    """Pushout of ``ΩZ -> P0 -> Z`` along ``cocycle: ΩZ -> X``."""
    cov = projective_cover(Z)
    Om, iota = syzygy(Z)
    ds = direct_sum([X, cov.P], Z.algebra)
    inj_x, inj_p = ds.injections
    u = inj_x @ cocycle - inj_p @ iota
    E, q = cokernel(u)
    alpha = q @ inj_x
    h = cov.epi @ ds.projections[1]
    beta = factor_through_epi(q, h)
    if beta is None:
        raise AssertionError("pushout map does not factor")
    return SESequence(alpha, beta)


# ---------------------------------------------------------------------------
# Auslander-Reiten translate

def tau(M: Rep) -> Rep:
    """τM = ker(ν P1 -> ν P0) over a minimal projective presentation."""
    key = ("tau",)
    if key not in M._cache:
        pres = minimal_presentation(M)
        _, _, nu = nakayama(pres.d, pres.P1, pres.P0)
        K, _ = kernel(nu)
        M._cache[key] = K
    return M._cache[key]


def tau_inverse(M: Rep) -> Rep:
    """τ⁻¹ = D τ D, with τ taken over the opposite algebra."""
    key = ("tauinv",)
    if key not in M._cache:
        M._cache[key] = dual(tau(dual(M)))
    return M._cache[key]


# ---------------------------------------------------------------------------
# labels and the pool

def module_label(M: Rep) -> str:
    """Loewy-layer name such as ``1/2`` when each layer is simple, else ``d(0,1,1)``."""
    if M.total_dim == 0:
        return "0"
    names = M.algebra.vertex_names
    parts = []
    for layer in loewy_layers(M):
        if sum(layer) != 1:
            return "d(" + ",".join(map(str, M.dims)) + ")"
        parts.append(names[layer.index(1)])
    return "/".join(parts)


@dataclass(eq=False)
class Pool:
    """Pairwise non-isomorphic indecomposables in canonical order."""
    algebra: Algebra
    members: tuple[Rep, ...]
    labels: tuple[str, ...]
    complete: bool = True
    qualified: bool = False
    _hom: dict = field(default_factory=dict, repr=False)
    _ext: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def locate(self, S: Rep) -> int | None:
        for k, T in enumerate(self.members):
            if T.dims == S.dims and _indec_iso(S, T):
                return k
        return None

    def components(self, M: Rep) -> list[tuple[int, int]]:
        """Pool indices and multiplicities of the indecomposable summands of M."""
        out = []
        for S, m in decompose(M):
            k = self.locate(S)
            if k is None:
                raise IncompletePool(f"summand {module_label(S)} is not in the pool", S)
            out.append((k, m))
        return sorted(out)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def hom_dim(self, i: int, j: int) -> int:
        if (i, j) not in self._hom:
            self._hom[(i, j)] = hom_space(self.members[i], self.members[j]).dim
        return self._hom[(i, j)]

    def ext_dim(self, i: int, j: int) -> int:
        if (i, j) not in self._ext:
            self._ext[(i, j)] = ext_dim(self.members[i], self.members[j])
        return self._ext[(i, j)]

    def projective_indices(self) -> list[int]:
        return sorted(self.locate(projective(self.algebra, v)) for v in range(self.algebra.n_vertices))

    def injective_indices(self) -> list[int]:
        return sorted(self.locate(injective(self.algebra, v)) for v in range(self.algebra.n_vertices))

    def name(self, indices) -> str:
        indices = list(indices)
        return "+".join(self.labels[k] for k in indices) if indices else "0"


def make_pool(alg: Algebra, members: Sequence[Rep], complete: bool = True,
              qualified: bool = False) -> Pool:
    members = sorted(members, key=canonical_key)
    labels = []
    for M in members:
        base = module_label(M)
        lab, n = base, 1
        while lab in labels:
            n += 1
            lab = f"{base}#{n}"
        labels.append(lab)
    named = tuple(Rep(M.algebra, M.dims, M.mats, name=lab) for M, lab in zip(members, labels))
    return Pool(alg, named, tuple(labels), complete, qualified)


def enumerate_indecomposables(alg: Algebra, max_dim: int = 30, max_steps: int = 1000) -> Pool:
    """Knit the indecomposables reachable from projectives, simples and injectives
    under τ, τ⁻¹, radical, top, socle and middle terms of basis extensions."""
    members: list[Rep] = []
    queue: deque[Rep] = deque()
    state = {"capped": False, "qualified": False, "steps": 0}

    def offer(M: Rep) -> None:
        if M.total_dim == 0:
            return
        for S, _ in decompose(M):
            if S.total_dim > max_dim:
                state["capped"] = True
                continue
            if any(T.dims == S.dims and _indec_iso(S, T) for T in members):
                continue
            state["steps"] += 1
            if state["steps"] > max_steps:
                raise CapExceeded(f"more than {max_steps} indecomposables",
                                  make_pool(alg, members, complete=False,
                                            qualified=state["qualified"]))
            members.append(S)
            queue.append(S)

    for v in range(alg.n_vertices):
        offer(projective(alg, v))
    for v in range(alg.n_vertices):
        offer(simple(alg, v))
        offer(injective(alg, v))
    while queue:
        X = queue.popleft()
        offer(tau_inverse(X))
        offer(tau(X))
        offer(radical(X)[0])
        offer(top(X)[0])
        offer(socle(X)[0])
        for Y in list(members):
            pairs = [(X, Y)] if Y is X else [(X, Y), (Y, X)]
            for Z, W in pairs:
                es = ext1(Z, W)
                if es.dimension >= 2:
                    state["qualified"] = True
                for cls in es.basis_classes:
                    offer(cls.sequence.middle)
    return make_pool(alg, members, complete=not state["capped"], qualified=state["qualified"])
