"""Modules over an :class:`~tautilt.algebra.Algebra` and their morphisms.

A module is stored by its dimension vector and one matrix per generator of
the algebra.  Column-vector convention: a generator ``g`` with source ``s``
and target ``t`` acts by a ``dims[t] x dims[s]`` matrix, so the action of a
product ``b_i b_j`` (``b_i`` first) is ``act(b_j) @ act(b_i)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from .algebra import Algebra
from .linalg import Matrix, complement_units, hstack, poly_at_matrix, vstack


class AlgebraMismatch(ValueError):
    """Operands live over different algebras."""


def _same_algebra(*objs) -> Algebra:
    alg = objs[0].algebra
    for o in objs[1:]:
        if o.algebra is not alg:
            raise AlgebraMismatch("modules over different algebras")
    return alg


@dataclass(frozen=True, eq=False)
class Rep:
    algebra: Algebra
    dims: tuple[int, ...]
    mats: tuple[Matrix, ...]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        alg = self.algebra
        if len(self.dims) != alg.n_vertices or any(d < 0 for d in self.dims):
            raise ValueError("bad dimension vector")
        if len(self.mats) != len(alg.generators):
            raise ValueError("need one matrix per generator")
        for g, m in zip(alg.generators, self.mats):
            want = (self.dims[alg.targets[g]], self.dims[alg.sources[g]])
            if m.shape != want:
                raise ValueError(f"generator {alg.labels[g]}: shape {m.shape}, expected {want}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def act(self, k: int) -> Matrix:
        """Matrix of basis element ``b_k``: vertex source(k) -> vertex target(k)."""
        key = ("act", k)
        if key not in self._cache:
            alg = self.algebra
            word = alg.words[k]
            if not word:
                m = Matrix.identity(self.dims[alg.sources[k]])
            else:
                m = self.mats[word[0]]
                for g in word[1:]:
                    m = self.mats[g] @ m
            self._cache[key] = m
        return self._cache[key]

    def check(self) -> None:
        """Assert that the action respects the structure constants exactly."""
        alg = self.algebra
        for i in range(alg.dimension):
            for j in range(alg.dimension):
                if alg.targets[i] != alg.sources[j]:
                    continue
                lhs = self.act(j) @ self.act(i)
                rhs = Matrix.zeros(*lhs.shape)
                for k, c in alg.mult.get((i, j), ()):
                    rhs = rhs + self.act(k).scale(c)
                if lhs != rhs:
                    raise AssertionError(
                        f"relation {alg.labels[i]}*{alg.labels[j]} fails in module {self.name}")

    def __repr__(self) -> str:
        return f"Rep({self.name or 'dims=' + str(self.dims)})"

    def dump(self) -> str:
        """Text block listing dims and row-major rational matrices."""
        alg = self.algebra
        lines = ["dims: " + " ".join(map(str, self.dims))]
        for g, m in zip(alg.generators, self.mats):
            rows = "; ".join(" ".join(str(x) for x in r) for r in m.rows)
            lines.append(f"{alg.labels[g]}: [{rows}]")
        return "\n".join(lines)


def zero_rep(alg: Algebra) -> Rep:
    return Rep(alg, (0,) * alg.n_vertices,
               tuple(Matrix(0, 0) for _ in alg.generators))


@dataclass(frozen=True, eq=False)
class Morphism:
    source: Rep
    target: Rep
    blocks: tuple[Matrix, ...]

    def __post_init__(self):
        _same_algebra(self.source, self.target)
        for v, b in enumerate(self.blocks):
            if b.shape != (self.target.dims[v], self.source.dims[v]):
                raise ValueError("morphism block has the wrong shape")

    @classmethod
    def zero(cls, M: Rep, N: Rep) -> "Morphism":
        return cls(M, N, tuple(Matrix.zeros(N.dims[v], M.dims[v]) for v in range(len(M.dims))))

    @classmethod
    def identity(cls, M: Rep) -> "Morphism":
        return cls(M, M, tuple(Matrix.identity(d) for d in M.dims))

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """``self @ other`` is the composite 'other, then self'."""
        if other.target is not self.source and other.target.dims != self.source.dims:
            raise ValueError("morphisms do not compose")
        return Morphism(other.source, self.target,
                        tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, tuple(-a for a in self.blocks))

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, tuple(a.scale(c) for a in self.blocks))

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(x for b in self.blocks for x in b.entries())

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def rank(self) -> int:
        return sum(b.rank() for b in self.blocks)

    def is_mono(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_epi(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_mono()

    def check(self) -> None:
        alg = self.source.algebra
        for pos, g in enumerate(alg.generators):
            s, t = alg.sources[g], alg.targets[g]
            if self.target.mats[pos] @ self.blocks[s] != self.blocks[t] @ self.source.mats[pos]:
                raise AssertionError(f"morphism does not commute with {alg.labels[g]}")

    def inverse(self) -> "Morphism":
        return Morphism(self.target, self.source, tuple(b.inverse() for b in self.blocks))


@dataclass(frozen=True, eq=False)
class MorphismSpace:
    source: Rep
    target: Rep
    basis: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence) -> Morphism:
        out = Morphism.zero(self.source, self.target)
        for c, f in zip(coeffs, self.basis):
            if c:
                out = out + f.scale(c)
        return out

    def coordinates(self, f: Morphism) -> list[Fraction] | None:
        """Coordinates of ``f`` in the basis, or None if ``f`` is not in the span."""
        if not self.basis:
            return [] if f.is_zero() else None
        A = Matrix.from_columns([b.vector() for b in self.basis], len(self.basis[0].vector()))
        x = A.solve(Matrix.column(f.vector()))
        return None if x is None else list(x.col(0))

    def matrix(self) -> Matrix:
        """Columns are the flattened basis morphisms."""
        n = sum(a * b for a, b in zip(self.source.dims, self.target.dims))
        return Matrix.from_columns([b.vector() for b in self.basis], n)


def _unflatten(vec: Sequence, M: Rep, N: Rep) -> tuple[Matrix, ...]:
    blocks = []
    pos = 0
    for dm, dn in zip(M.dims, N.dims):
        rows = [list(vec[pos + i * dm: pos + (i + 1) * dm]) for i in range(dn)]
        blocks.append(Matrix(dn, dm, rows))
        pos += dm * dn
    return tuple(blocks)


def intertwining_system(M: Rep, N: Rep) -> Matrix:
    """Linear system whose solutions are the flattened morphisms M -> N."""
    alg = _same_algebra(M, N)
    offsets = []
    pos = 0
    for dm, dn in zip(M.dims, N.dims):
        offsets.append(pos)
        pos += dm * dn
    n = pos
    rows = []
    for k, g in enumerate(alg.generators):
        s, t = alg.sources[g], alg.targets[g]
        Mg, Ng = M.mats[k], N.mats[k]
        # (N_g f_s - f_t M_g)[i, j]
        for i in range(N.dims[t]):
            for j in range(M.dims[s]):
                row = [Fraction(0)] * n
                for q in range(N.dims[s]):
                    c = Ng[i, q]
                    if c:
                        row[offsets[s] + q * M.dims[s] + j] += c
                for q in range(M.dims[t]):
                    c = Mg[q, j]
                    if c:
                        row[offsets[t] + i * M.dims[t] + q] -= c
                if any(row):
                    rows.append(row)
    return Matrix(len(rows), n, rows)


def hom_space(M: Rep, N: Rep) -> MorphismSpace:
    key = ("hom", id(N))
    cached = M._cache.get(key)
    if cached is not None and cached.target is N:
        return cached
    system = intertwining_system(M, N)
    null = system.nullspace()
    basis = tuple(Morphism(M, N, _unflatten(c, M, N)) for c in null.columns())
    space = MorphismSpace(M, N, basis)
    M._cache[key] = space
    return space


def hom_dim(M: Rep, N: Rep) -> int:
    return hom_space(M, N).dim


# ---------------------------------------------------------------------------
# direct sums, submodules, quotients

@dataclass(frozen=True, eq=False)
class DirectSum:
    rep: Rep
    summands: tuple[Rep, ...]
    injections: tuple[Morphism, ...]
    projections: tuple[Morphism, ...]


def direct_sum(reps: Sequence[Rep], alg: Algebra | None = None) -> DirectSum:
    reps = list(reps)
    if not reps:
        if alg is None:
            raise ValueError("empty direct sum needs an algebra")
        return DirectSum(zero_rep(alg), (), (), ())
    alg = _same_algebra(*reps)
    n = alg.n_vertices
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(n))
    mats = []
    for k, g in enumerate(alg.generators):
        from .linalg import block_diag
        mats.append(block_diag([r.mats[k] for r in reps]))
    S = Rep(alg, dims, tuple(mats), name="+".join(r.name or "?" for r in reps))
    injections, projections = [], []
    offs = [0] * n
    for r in reps:
        inj, proj = [], []
        for v in range(n):
            idx = list(range(offs[v], offs[v] + r.dims[v]))
            E = Matrix.unit_columns(dims[v], idx)
            inj.append(E)
            proj.append(E.T)
            offs[v] += r.dims[v]
        injections.append(Morphism(r, S, tuple(inj)))
        projections.append(Morphism(S, r, tuple(proj)))
    return DirectSum(S, tuple(reps), tuple(injections), tuple(projections))


def sum_of_maps_into(maps: Sequence[Morphism], target: Rep) -> tuple[DirectSum, Morphism]:
    """The map ``(f_1, ..., f_n): ⊕ source(f_i) -> target``."""
    ds = direct_sum([f.source for f in maps], target.algebra)
    blocks = []
    for v in range(target.algebra.n_vertices):
        blocks.append(hstack([f.blocks[v] for f in maps], nrows=target.dims[v]))
    return ds, Morphism(ds.rep, target, tuple(blocks))


def sum_of_maps_from(source: Rep, maps: Sequence[Morphism]) -> tuple[DirectSum, Morphism]:
    """The map ``(f_1, ..., f_n)^T: source -> ⊕ target(f_i)``."""
    ds = direct_sum([f.target for f in maps], source.algebra)
    blocks = []
    for v in range(source.algebra.n_vertices):
        blocks.append(vstack([f.blocks[v] for f in maps], ncols=source.dims[v]))
    return ds, Morphism(source, ds.rep, tuple(blocks))


def submodule(M: Rep, bases: Sequence[Matrix], name: str = "") -> tuple[Rep, Morphism]:
    """Submodule spanned by the columns of ``bases[v]`` (assumed independent and stable)."""
    alg = M.algebra
    mats = []
    for k, g in enumerate(alg.generators):
        s, t = alg.sources[g], alg.targets[g]
        img = M.mats[k] @ bases[s]
        X = bases[t].solve(img)
        if X is None:
            raise ValueError("subspace is not a submodule")
        mats.append(X)
    S = Rep(alg, tuple(b.ncols for b in bases), tuple(mats), name=name)
    return S, Morphism(S, M, tuple(bases))


def quotient(M: Rep, bases: Sequence[Matrix], name: str = "") -> tuple[Rep, Morphism, tuple[Matrix, ...]]:
    """Quotient by the submodule spanned by ``bases``.

    Returns the quotient, the projection and per-vertex sections (right
    inverses of the projection blocks).
    """
    alg = M.algebra
    proj, sect = [], []
    for v, B in enumerate(bases):
        extra = complement_units(B)
        S = hstack([B, Matrix.unit_columns(M.dims[v], extra)], nrows=M.dims[v])
        Sinv = S.inverse()
        q = Sinv.submatrix(range(B.ncols, M.dims[v]), range(M.dims[v]))
        proj.append(q)
        sect.append(Matrix.unit_columns(M.dims[v], extra))
    mats = []
    for k, g in enumerate(alg.generators):
        s, t = alg.sources[g], alg.targets[g]
        mats.append(proj[t] @ M.mats[k] @ sect[s])
    Q = Rep(alg, tuple(p.nrows for p in proj), tuple(mats), name=name)
    return Q, Morphism(M, Q, tuple(proj)), tuple(sect)


def kernel(f: Morphism) -> tuple[Rep, Morphism]:
    return submodule(f.source, [b.nullspace() for b in f.blocks])


def image(f: Morphism) -> tuple[Rep, Morphism, Morphism]:
    """Image with inclusion ``i`` and corestriction ``c`` so that ``f = i @ c``."""
    bases = [b.column_basis() for b in f.blocks]
    Im, inc = submodule(f.target, bases)
    cores = []
    for v, (b, B) in enumerate(zip(f.blocks, bases)):
        cores.append(B.solve(b))
    return Im, inc, Morphism(f.source, Im, tuple(cores))


def cokernel(f: Morphism) -> tuple[Rep, Morphism]:
    bases = [b.column_basis() for b in f.blocks]
    Q, p, _ = quotient(f.target, bases)
    return Q, p


def factor_through_epi(p: Morphism, h: Morphism) -> Morphism | None:
    """``u`` with ``u @ p = h`` for an epimorphism ``p`` (None if ker p ⊄ ker h)."""
    blocks = []
    for pv, hv in zip(p.blocks, h.blocks):
        X = pv.T.solve(hv.T)
        if X is None:
            return None
        blocks.append(X.T)
    return Morphism(p.target, h.target, tuple(blocks))


def lift_through_mono(i: Morphism, h: Morphism) -> Morphism | None:
    """``u`` with ``i @ u = h`` for a monomorphism ``i`` (None if im h ⊄ im i)."""
    blocks = []
    for iv, hv in zip(i.blocks, h.blocks):
        X = iv.solve(hv)
        if X is None:
            return None
        blocks.append(X)
    return Morphism(h.source, i.source, tuple(blocks))


def factor_through(f: Morphism, h: Morphism) -> Morphism | None:
    """Some ``u`` with ``f @ u = h`` (``h`` and ``f`` share the target), or None."""
    H = hom_space(h.source, f.source)
    if not H.basis:
        return Morphism.zero(h.source, f.source) if h.is_zero() else None
    A = Matrix.from_columns([(f @ b).vector() for b in H.basis], len(h.vector()))
    x = A.solve(Matrix.column(h.vector()))
    return None if x is None else H.combine(x.col(0))


# ---------------------------------------------------------------------------
# radical layers

def radical_bases(M: Rep) -> list[Matrix]:
    alg = M.algebra
    cols: list[list] = [[] for _ in range(alg.n_vertices)]
    for k, g in enumerate(alg.generators):
        cols[alg.targets[g]].extend(M.mats[k].columns())
    out = []
    for v in range(alg.n_vertices):
        if cols[v]:
            out.append(Matrix.from_columns(cols[v], M.dims[v]).column_basis())
        else:
            out.append(Matrix(M.dims[v], 0))
    return out


def socle_bases(M: Rep) -> list[Matrix]:
    alg = M.algebra
    out = []
    for v in range(alg.n_vertices):
        rows = [M.mats[k] for k, g in enumerate(alg.generators) if alg.sources[g] == v]
        A = vstack(rows, ncols=M.dims[v]) if rows else Matrix(0, M.dims[v])
        out.append(A.nullspace())
    return out


def radical(M: Rep) -> tuple[Rep, Morphism]:
    return submodule(M, radical_bases(M))


def top(M: Rep) -> tuple[Rep, Morphism]:
    Q, p, _ = quotient(M, radical_bases(M))
    return Q, p


def socle(M: Rep) -> tuple[Rep, Morphism]:
    return submodule(M, socle_bases(M))


def top_dims(M: Rep) -> tuple[int, ...]:
    return tuple(d - b.ncols for d, b in zip(M.dims, radical_bases(M)))


def socle_dims(M: Rep) -> tuple[int, ...]:
    return tuple(b.ncols for b in socle_bases(M))


def loewy_layers(M: Rep) -> list[tuple[int, ...]]:
    """Dimension vectors of ``rad^i M / rad^{i+1} M``."""
    layers = []
    cur = M
    while cur.total_dim:
        R, _ = radical(cur)
        layers.append(tuple(a - b for a, b in zip(cur.dims, R.dims)))
        if R.total_dim == cur.total_dim:
            raise ValueError("radical series does not terminate")
        cur = R
    return layers


def socle_layers(M: Rep) -> list[tuple[int, ...]]:
    layers = []
    cur = M
    while cur.total_dim:
        sd = socle_dims(cur)
        layers.append(sd)
        cur, _, _ = quotient(cur, socle_bases(cur))
    return layers


# ---------------------------------------------------------------------------
# endomorphisms, decomposition, isomorphism

def _total(f: Morphism) -> Matrix:
    from .linalg import block_diag
    return block_diag(list(f.blocks))


def radical_of_end(basis: Sequence[Morphism]) -> Matrix:
    """Kernel of the trace form on End(M): columns are coordinate vectors."""
    mats = [_total(f) for f in basis]
    n = len(mats)
    gram = Matrix(n, n, [[(a @ b).trace() for b in mats] for a in mats])
    return gram.nullspace()


def is_indecomposable(M: Rep) -> bool:
    if M.total_dim == 0:
        return False
    E = hom_space(M, M).basis
    return len(E) - radical_of_end(E).ncols == 1


def _factor_charpoly(A: Matrix) -> list[tuple[list[Fraction], int]]:
    x = sympy.Symbol("x")
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in A.charpoly()]
    _, factors = sympy.Poly(coeffs, x, domain="QQ").factor_list()
    out = []
    for poly, mult in factors:
        cs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in poly.all_coeffs()]
        out.append((cs, mult))
    return out


def _candidates(E: Sequence[Morphism]):
    n = len(E)
    for f in E:
        yield f
    for i in range(n):
        for j in range(i + 1, n):
            yield E[i] + E[j]
    rng = random.Random(0)
    for _ in range(200):
        coeffs = [rng.randint(-3, 3) for _ in range(n)]
        yield MorphismSpace(E[0].source, E[0].target, tuple(E)).combine(coeffs)


class DecompositionError(RuntimeError):
    """No splitting endomorphism found although End(M)/rad is not a field."""


def _split_bases(M: Rep) -> list[list[Matrix]]:
    """Per-vertex bases (in M's coordinates) of indecomposable summands."""
    if M.total_dim == 0:
        return []
    ident = [Matrix.identity(d) for d in M.dims]
    E = hom_space(M, M).basis
    if len(E) == 1 or len(E) - radical_of_end(E).ncols == 1:
        return [ident]
    for phi in _candidates(E):
        factors = _factor_charpoly(_total(phi))
        if len(factors) < 2:
            continue
        parts = []
        for coeffs, mult in factors:
            bases = []
            for v in range(len(M.dims)):
                pv = poly_at_matrix(coeffs, phi.blocks[v]).power(mult)
                bases.append(pv.nullspace())
            parts.append(bases)
        out = []
        for bases in parts:
            K, _ = submodule(M, bases)
            for sub in _split_bases(K):
                out.append([B @ S for B, S in zip(bases, sub)])
        return out
    raise DecompositionError("End ring has no split semisimple quotient over Q")


@dataclass(frozen=True, eq=False)
class Decomposition:
    """``M`` as an internal direct sum of indecomposables."""
    module: Rep
    summands: tuple[Rep, ...]
    inclusions: tuple[Morphism, ...]
    projections: tuple[Morphism, ...]


def split(M: Rep) -> Decomposition:
    key = ("split",)
    if key in M._cache:
        return M._cache[key]
    parts = _split_bases(M)
    reps, incs = [], []
    for bases in parts:
        S, i = submodule(M, bases)
        reps.append(S)
        incs.append(i)
    projs = []
    if parts:
        inv = [hstack([p[v] for p in parts], nrows=M.dims[v]).inverse() for v in range(len(M.dims))]
        offs = [0] * len(M.dims)
        for S in reps:
            blocks = []
            for v in range(len(M.dims)):
                blocks.append(inv[v].submatrix(range(offs[v], offs[v] + S.dims[v]), range(M.dims[v])))
                offs[v] += S.dims[v]
            projs.append(Morphism(M, S, tuple(blocks)))
    order = sorted(range(len(reps)), key=lambda k: canonical_key(reps[k]))
    dec = Decomposition(M, tuple(reps[k] for k in order), tuple(incs[k] for k in order),
                        tuple(projs[k] for k in order))
    M._cache[key] = dec
    return dec


def _pairing_iso(M: Rep, N: Rep) -> bool:
    """Indecomposables M, N are isomorphic iff some g∘f is not nilpotent."""
    F = hom_space(M, N).basis
    G = hom_space(N, M).basis
    for f in F:
        for g in G:
            if not _total(g @ f).is_nilpotent():
                return True
    return False


def _random_iso(M: Rep, N: Rep) -> bool:
    H = hom_space(M, N)
    if not H.basis:
        return False
    rng = random.Random(0)
    f = H.combine([rng.randint(-1000, 1000) for _ in H.basis])
    return all(b.is_invertible() for b in f.blocks)


def is_isomorphic(M: Rep, N: Rep) -> bool:
    _same_algebra(M, N)
    if M.dims != N.dims:
        return False
    if M.total_dim == 0:
        return True
    if _random_iso(M, N):
        return True
    if hom_dim(M, N) == 0:
        return False
    dm, dn = decompose(M), decompose(N)
    if len(dm) != len(dn):
        return False
    left = list(dn)
    for S, m in dm:
        for k, (U, n) in enumerate(left):
            if m == n and _indec_iso(S, U):
                del left[k]
                break
        else:
            return False
    return True


def _indec_iso(S: Rep, U: Rep) -> bool:
    if S.dims != U.dims:
        return False
    return _random_iso(S, U) or _pairing_iso(S, U)


def decompose(M: Rep) -> list[tuple[Rep, int]]:
    """Indecomposable summands up to isomorphism, with multiplicities."""
    groups: list[list] = []
    for S in split(M).summands:
        for grp in groups:
            if _indec_iso(grp[0], S):
                grp[1] += 1
                break
        else:
            groups.append([S, 1])
    return [(S, m) for S, m in groups]


def canonical_key(M: Rep) -> tuple:
    """Isomorphism invariant used to order pools and summand lists."""
    key = ("ckey",)
    if key not in M._cache:
        M._cache[key] = (M.total_dim, M.dims, tuple(loewy_layers(M)),
                         tuple(socle_layers(M)), hom_dim(M, M))
    return M._cache[key]


# ---------------------------------------------------------------------------
# standard modules

def _basis_at(alg: Algebra, src: int | None = None, tgt: int | None = None) -> list[list[int]]:
    """For each vertex v, basis indices with the given source (target) and other end v."""
    out = []
    for v in range(alg.n_vertices):
        if src is not None:
            out.append(alg.basis_between(src, v))
        else:
            out.append(alg.basis_between(v, tgt))
    return out


@lru_cache(maxsize=None)
def projective(alg: Algebra, i: int) -> Rep:
    """``e_i Λ``, the projective cover of the simple at ``i``."""
    if not 0 <= i < alg.n_vertices:
        raise IndexError("vertex out of range")
    basis = _basis_at(alg, src=i)
    pos = [{b: k for k, b in enumerate(bs)} for bs in basis]
    mats = []
    for g in alg.generators:
        s, t = alg.sources[g], alg.targets[g]
        rows = [[Fraction(0)] * len(basis[s]) for _ in basis[t]]
        for col, x in enumerate(basis[s]):
            for k, c in alg.mult.get((x, g), ()):
                rows[pos[t][k]][col] += c
        mats.append(Matrix(len(basis[t]), len(basis[s]), rows))
    return Rep(alg, tuple(len(b) for b in basis), tuple(mats), name=f"P({alg.vertex_names[i]})")


@lru_cache(maxsize=None)
def injective(alg: Algebra, i: int) -> Rep:
    """``D(Λ e_i)``, the injective envelope of the simple at ``i``."""
    if not 0 <= i < alg.n_vertices:
        raise IndexError("vertex out of range")
    basis = _basis_at(alg, tgt=i)
    pos = [{b: k for k, b in enumerate(bs)} for bs in basis]
    mats = []
    for g in alg.generators:
        s, t = alg.sources[g], alg.targets[g]
        rows = [[Fraction(0)] * len(basis[s]) for _ in basis[t]]
        for r, z in enumerate(basis[t]):
            for k, c in alg.mult.get((g, z), ()):
                rows[r][pos[s][k]] += c
        mats.append(Matrix(len(basis[t]), len(basis[s]), rows))
    return Rep(alg, tuple(len(b) for b in basis), tuple(mats), name=f"I({alg.vertex_names[i]})")


@lru_cache(maxsize=None)
def simple(alg: Algebra, i: int) -> Rep:
    if not 0 <= i < alg.n_vertices:
        raise IndexError("vertex out of range")
    dims = tuple(int(v == i) for v in range(alg.n_vertices))
    mats = tuple(Matrix.zeros(dims[alg.targets[g]], dims[alg.sources[g]]) for g in alg.generators)
    return Rep(alg, dims, mats, name=f"S({alg.vertex_names[i]})")


def regular_module(alg: Algebra) -> DirectSum:
    return direct_sum([projective(alg, i) for i in range(alg.n_vertices)], alg)


def dual(M: Rep) -> Rep:
    """``D M = Hom_Q(M, Q)`` as a module over the opposite algebra."""
    op = M.algebra.opposite()
    return Rep(op, M.dims, tuple(m.T for m in M.mats), name=f"D({M.name})" if M.name else "")


def dual_map(f: Morphism, DM: Rep, DN: Rep) -> Morphism:
    """``D f: D N -> D M``."""
    return Morphism(DN, DM, tuple(b.T for b in f.blocks))


def annihilator(M: Rep) -> Matrix:
    """Columns: coordinate vectors of algebra elements acting as zero on M."""
    alg = M.algebra
    cols = []
    for k in range(alg.dimension):
        full = []
        for v in range(alg.n_vertices):
            for w in range(alg.n_vertices):
                if alg.sources[k] == v and alg.targets[k] == w:
                    full.extend(M.act(k).entries())
                else:
                    full.extend([Fraction(0)] * (M.dims[v] * M.dims[w]))
        cols.append(full)
    length = sum(a * b for a in M.dims for b in M.dims)
    return Matrix.from_columns(cols, length).nullspace()


# ---------------------------------------------------------------------------
# endomorphism algebras

@dataclass(frozen=True, eq=False)
class EndAlgebra:
    """``End(U_1 ⊕ ... ⊕ U_n)`` with vertices the summands.

    A basis morphism ``U_a -> U_c`` carries source ``c`` and target ``a``,
    and ``b_i * b_j = b_i ∘ b_j``.  Right modules over it are therefore
    contravariant in the ``U_a``, e.g. ``Hom(U, X)``.
    """
    algebra: Algebra
    summands: tuple[Rep, ...]
    maps: tuple[Morphism, ...]       # basis element k as a map U_target -> U_source
    basic: bool


def end_algebra_of_summands(summands: Sequence[Rep], name: str = "") -> EndAlgebra:
    summands = list(summands)
    n = len(summands)
    labels, sources, targets, maps = [], [], [], []
    idem = []
    for a, U in enumerate(summands):
        idem.append(len(maps))
        maps.append(Morphism.identity(U))
        sources.append(a)
        targets.append(a)
        labels.append(f"id{a + 1}")
    for a, U in enumerate(summands):
        for c, V in enumerate(summands):
            H = hom_space(U, V).basis
            if a == c:
                rad = radical_of_end(H)
                H = [MorphismSpace(U, U, H).combine(col) for col in rad.columns()]
            for k, f in enumerate(H):
                maps.append(f)
                sources.append(c)
                targets.append(a)
                labels.append(f"f{a + 1}{c + 1}_{k + 1}")
    # coordinates of composites
    blocks: dict[tuple[int, int], tuple[list[int], Matrix]] = {}
    for a in range(n):
        for c in range(n):
            idx = [k for k in range(len(maps)) if targets[k] == a and sources[k] == c]
            if idx:
                length = len(maps[idx[0]].vector())
                blocks[(a, c)] = (idx, Matrix.from_columns([maps[k].vector() for k in idx], length))
    mult = {}
    for i, bi in enumerate(maps):
        for j, bj in enumerate(maps):
            if targets[i] != sources[j]:
                continue
            comp = bi @ bj   # U_{t_j} -> U_{s_i}
            if comp.is_zero():
                continue
            idx, A = blocks[(targets[j], sources[i])]
            x = A.solve(Matrix.column(comp.vector()))
            if x is None:
                raise AssertionError("composite not in the span of the basis")
            terms = tuple((idx[r], x[r, 0]) for r in range(len(idx)) if x[r, 0] != 0)
            if terms:
                mult[(i, j)] = terms
    gens = tuple(k for k in range(len(maps)) if k not in idem)
    gpos = {k: p for p, k in enumerate(gens)}
    words = tuple(() if k in idem else (gpos[k],) for k in range(len(maps)))
    basic = all(not _indec_iso(summands[a], summands[c])
                for a in range(n) for c in range(a + 1, n))
    alg = Algebra(
        n_vertices=n,
        labels=tuple(labels),
        sources=tuple(sources),
        targets=tuple(targets),
        mult=mult,
        idempotents=tuple(idem),
        generators=gens,
        words=words,
        vertex_names=tuple(U.name or str(a + 1) for a, U in enumerate(summands)),
        name=name or "End",
    )
    return EndAlgebra(alg, tuple(summands), tuple(maps), basic)


def end_algebra(M: Rep) -> EndAlgebra:
    """End(M) with vertex idempotents given by an indecomposable decomposition of M."""
    return end_algebra_of_summands(split(M).summands, name=f"End({M.name})" if M.name else "End")


def hom_module(E: EndAlgebra, X: Rep) -> Rep:
    """``Hom(⊕U_a, X)`` as a right module over ``End(⊕U_a)`` (precomposition)."""
    spaces = [hom_space(U, X) for U in E.summands]
    mats = []
    for g in E.algebra.generators:
        s, t = E.algebra.sources[g], E.algebra.targets[g]
        x = E.maps[g]     # U_t -> U_s
        cols = []
        for phi in spaces[s].basis:
            coords = spaces[t].coordinates(phi @ x)
            cols.append(coords)
        mats.append(Matrix.from_columns(cols, spaces[t].dim))
    return Rep(E.algebra, tuple(h.dim for h in spaces), tuple(mats),
               name=f"Hom(U,{X.name})" if X.name else "")


def hom_module_map(E: EndAlgebra, f: Morphism, HX: Rep, HY: Rep) -> Morphism:
    """``Hom(U, f): Hom(U, X) -> Hom(U, Y)``."""
    blocks = []
    for a, U in enumerate(E.summands):
        SX, SY = hom_space(U, f.source), hom_space(U, f.target)
        cols = [SY.coordinates(f @ phi) for phi in SX.basis]
        blocks.append(Matrix.from_columns(cols, SY.dim))
    return Morphism(HX, HY, tuple(blocks))
