"""Finite-dimensional algebras with a complete set of vertex idempotents.

Two kinds of algebra share one record:

* path algebras ``kQ/I`` of a quiver with an admissible ideal, built by
  exact Gaussian elimination on the path space filtered by length;
* abstract algebras given by structure constants, such as endomorphism
  rings (see :func:`tautilt.rep.end_algebra`).

Composition convention: a path ``p*q`` traverses ``p`` first and then
``q``.  Modules are right modules, which for a path algebra are the same
thing as covariant quiver representations.  Every basis element ``b`` is
homogeneous, ``b = e_s b e_t``, and we record ``(s, t)`` as its source and
target; on a right module it maps the vertex-``s`` space to the
vertex-``t`` space.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .linalg import Matrix


class ParseError(ValueError):
    """Malformed algebra file."""


class NonAdmissible(ValueError):
    """Relations are not admissible or the quotient is infinite-dimensional."""


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[str, int, int], ...]  # (label, source, target), 0-based vertices
    vertex_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        labels = [a[0] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("arrow labels must be pairwise distinct")
        for label, s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow {label} has an endpoint out of range")
        if not self.vertex_names:
            object.__setattr__(self, "vertex_names",
                               tuple(str(i + 1) for i in range(self.vertex_count)))

    def arrow_index(self, label: str) -> int:
        for k, a in enumerate(self.arrows):
            if a[0] == label:
                return k
        raise KeyError(label)


# A path is (start vertex, tuple of arrow indices); a relation is a list of
# (coefficient, path) terms.
Path = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class AlgebraPresentation:
    quiver: Quiver
    relations: tuple[tuple[tuple[Fraction, tuple[int, ...]], ...], ...] = ()

    def path_endpoints(self, arrows: tuple[int, ...]) -> tuple[int, int]:
        q = self.quiver
        for a, b in zip(arrows, arrows[1:]):
            if q.arrows[a][2] != q.arrows[b][1]:
                raise NonAdmissible(f"arrows {q.arrows[a][0]}, {q.arrows[b][0]} do not compose")
        return q.arrows[arrows[0]][1], q.arrows[arrows[-1]][2]


@dataclass(frozen=True, eq=False)
class Algebra:
    """Basis, structure constants and vertex idempotents.

    ``mult[(i, j)]`` lists ``(k, c)`` with ``b_i * b_j = sum c b_k``; missing
    keys mean zero.  ``generators`` are the basis elements whose action
    determines a module (arrows for path algebras, the whole radical basis
    for abstract algebras) and ``words[k]`` writes ``b_k`` as a product of
    generators, as positions in ``generators``.
    """

    n_vertices: int
    labels: tuple[str, ...]
    sources: tuple[int, ...]
    targets: tuple[int, ...]
    mult: dict
    idempotents: tuple[int, ...]
    generators: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    vertex_names: tuple[str, ...] = ()
    name: str = ""
    presentation: AlgebraPresentation | None = None
    _op: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self.vertex_names:
            object.__setattr__(self, "vertex_names",
                               tuple(str(i + 1) for i in range(self.n_vertices)))

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def basis_between(self, s: int, t: int) -> list[int]:
        return [k for k in range(self.dimension) if self.sources[k] == s and self.targets[k] == t]

    def product(self, i: int, j: int) -> dict[int, Fraction]:
        return dict(self.mult.get((i, j), ()))

    def multiply(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Product of two coordinate vectors."""
        out = [Fraction(0)] * self.dimension
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in self.mult.get((i, j), ()):
                    out[k] += a * b * c
        return out

    def unit(self) -> list[Fraction]:
        out = [Fraction(0)] * self.dimension
        for e in self.idempotents:
            out[e] = Fraction(1)
        return out

    def is_radical_element(self, k: int) -> bool:
        return k not in self.idempotents

    def check(self) -> None:
        """Assert associativity, unit and idempotent axioms exactly."""
        n = self.dimension
        basis = [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
        one = self.unit()
        for k in range(n):
            if self.multiply(one, basis[k]) != basis[k] or self.multiply(basis[k], one) != basis[k]:
                raise AssertionError(f"sum of idempotents is not a unit on {self.labels[k]}")
        for v, e in enumerate(self.idempotents):
            if self.sources[e] != v or self.targets[e] != v:
                raise AssertionError("idempotent tagged with the wrong vertex")
            for w, f in enumerate(self.idempotents):
                expect = basis[e] if v == w else [Fraction(0)] * n
                if self.multiply(basis[e], basis[f]) != expect:
                    raise AssertionError("vertex idempotents are not orthogonal")
        for i, j, k in product(range(n), repeat=3):
            left = self.multiply(self.multiply(basis[i], basis[j]), basis[k])
            right = self.multiply(basis[i], self.multiply(basis[j], basis[k]))
            if left != right:
                raise AssertionError(f"associativity fails on {i},{j},{k}")
        for (i, j), terms in self.mult.items():
            for k, _ in terms:
                if self.sources[k] != self.sources[i] or self.targets[k] != self.targets[j]:
                    raise AssertionError("product is not homogeneous")

    def opposite(self) -> "Algebra":
        if self._op:
            return self._op[0]
        mult = {(j, i): terms for (i, j), terms in self.mult.items()}
        op = Algebra(
            n_vertices=self.n_vertices,
            labels=self.labels,
            sources=self.targets,
            targets=self.sources,
            mult=mult,
            idempotents=self.idempotents,
            generators=self.generators,
            words=tuple(tuple(reversed(w)) for w in self.words),
            vertex_names=self.vertex_names,
            name=f"{self.name}^op" if self.name else "op",
        )
        self._op.append(op)
        op._op.append(self)
        return op

    def structure_tensor(self) -> list[list[list[Fraction]]]:
        """Dense ``c[i][j][k]``."""
        n = self.dimension
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in self.mult.items():
            for k, v in terms:
                c[i][j][k] = v
        return c


# ---------------------------------------------------------------------------
# path algebras

def _paths_by_length(q: Quiver, max_len: int) -> list[list[Path]]:
    layers: list[list[Path]] = [[(v, ()) for v in range(q.vertex_count)]]
    for _ in range(max_len):
        nxt = []
        for start, arr in layers[-1]:
            end = q.arrows[arr[-1]][2] if arr else start
            for k, (_, s, _t) in enumerate(q.arrows):
                if s == end:
                    nxt.append((start, arr + (k,)))
        layers.append(nxt)
        if not nxt:
            break
    return layers


def _path_target(q: Quiver, p: Path) -> int:
    return q.arrows[p[1][-1]][2] if p[1] else p[0]


def _path_label(q: Quiver, p: Path) -> str:
    if not p[1]:
        return f"e{q.vertex_names[p[0]]}"
    return "*".join(q.arrows[a][0] for a in p[1])


def _quotient_at(pres: AlgebraPresentation, N: int):
    """Reduce modulo I + J^N.  Returns (basis paths, normal-form table, layers)."""
    q = pres.quiver
    layers = _paths_by_length(q, N - 1)
    all_paths = [p for layer in layers for p in layer]
    blocks: dict[tuple[int, int], list[Path]] = {}
    for p in all_paths:
        blocks.setdefault((p[0], _path_target(q, p)), []).append(p)
    # long paths first so they become pivots and normal forms use short paths
    for key in blocks:
        blocks[key].sort(key=lambda p: (-len(p[1]), p[1]))
    position = {key: {p: i for i, p in enumerate(ps)} for key, ps in blocks.items()}

    ideal_rows: dict[tuple[int, int], list[list[Fraction]]] = {k: [] for k in blocks}
    for rel in pres.relations:
        s, t = pres.path_endpoints(rel[0][1])
        min_len = min(len(arr) for _, arr in rel)
        for u in all_paths:
            if _path_target(q, u) != s or len(u[1]) + min_len >= N:
                continue
            for v in all_paths:
                if v[0] != t or len(u[1]) + min_len + len(v[1]) >= N:
                    continue
                key = (u[0], _path_target(q, v))
                row = [Fraction(0)] * len(blocks[key])
                for c, arr in rel:
                    full = u[1] + arr + v[1]
                    if len(full) < N:
                        row[position[key][(u[0], full)]] += c
                if any(row):
                    ideal_rows[key].append(row)

    normal_form: dict[Path, list[tuple[Path, Fraction]]] = {}
    basis: list[Path] = []
    for key, ps in blocks.items():
        rows = ideal_rows[key]
        if rows:
            R, piv = Matrix.from_rows(rows, len(ps)).rref()
        else:
            R, piv = Matrix(0, len(ps)), ()
        pivset = set(piv)
        for i, p in enumerate(ps):
            if i not in pivset:
                basis.append(p)
                normal_form[p] = [(p, Fraction(1))]
        for r, pc in enumerate(piv):
            normal_form[ps[pc]] = [(ps[j], -R[r, j]) for j in range(len(ps))
                                   if j not in pivset and R[r, j] != 0]
    return basis, normal_form, layers


def build_algebra(pres: AlgebraPresentation, name: str = "") -> Algebra:
    """Path algebra ``kQ/I`` with basis given by residue classes of paths."""
    q = pres.quiver
    max_rel = 2
    for rel in pres.relations:
        if not rel:
            raise NonAdmissible("empty relation")
        ends = {pres.path_endpoints(arr) if arr else None for _, arr in rel}
        if any(len(arr) < 2 for _, arr in rel):
            raise NonAdmissible("relations must only involve paths of length >= 2")
        if len(ends) != 1:
            raise NonAdmissible("paths in a relation must be parallel")
        max_rel = max(max_rel, max(len(arr) for _, arr in rel))
    cutoff = q.vertex_count * max_rel * 4

    for N in range(2, cutoff + 2):
        basis, nf, layers = _quotient_at(pres, N)
        top = layers[N - 1] if len(layers) > N - 1 else []
        if all(not nf[p] for p in top):
            break
    else:
        raise NonAdmissible(
            f"arrow ideal not nilpotent modulo relations within length {cutoff}")

    basis.sort(key=lambda p: (len(p[1]), p[1] if p[1] else (), p[0]))
    index = {p: k for k, p in enumerate(basis)}
    vanishing = N - 1

    def reduce(p: Path) -> list[tuple[int, Fraction]]:
        if len(p[1]) >= vanishing:
            return []
        return [(index[b], c) for b, c in nf[p]]

    mult = {}
    for i, p in enumerate(basis):
        pt = _path_target(q, p)
        for j, r in enumerate(basis):
            if r[0] != pt:
                continue
            terms = reduce((p[0], p[1] + r[1]))
            if terms:
                mult[(i, j)] = tuple(terms)

    idempotents = tuple(index[(v, ())] for v in range(q.vertex_count))
    generators = tuple(index[(q.arrows[a][1], (a,))] for a in range(len(q.arrows)))
    return Algebra(
        n_vertices=q.vertex_count,
        labels=tuple(_path_label(q, p) for p in basis),
        sources=tuple(p[0] for p in basis),
        targets=tuple(_path_target(q, p) for p in basis),
        mult=mult,
        idempotents=idempotents,
        generators=generators,
        words=tuple(p[1] for p in basis),
        vertex_names=q.vertex_names,
        name=name,
        presentation=pres,
    )


# ---------------------------------------------------------------------------
# text format

_TERM = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][\w']*(?:\s*\*\s*[A-Za-z_][\w']*)*)\s*")


def _parse_relation(text: str, quiver: Quiver, lineno: int):
    terms = []
    pos = 0
    text = text.strip()
    if not text:
        raise ParseError(f"line {lineno}: empty relation")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"line {lineno}: cannot parse relation near {text[pos:]!r}")
        if terms and not m.group(1):
            raise ParseError(f"line {lineno}: missing sign between terms")
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        labels = [s.strip() for s in m.group(3).split("*")]
        try:
            arrows = tuple(quiver.arrow_index(lbl) for lbl in labels)
        except KeyError as exc:
            raise ParseError(f"line {lineno}: unknown arrow {exc.args[0]!r}") from None
        terms.append((coef, arrows))
        pos = m.end()
    merged: dict[tuple[int, ...], Fraction] = {}
    for c, arr in terms:
        merged[arr] = merged.get(arr, Fraction(0)) + c
    return tuple((c, arr) for arr, c in merged.items() if c != 0)


def parse_algebra(text: str) -> AlgebraPresentation:
    """Parse the line-oriented algebra format::

        vertices: 3
        arrow: a 1 2
        arrow: b 2 3
        relation: a*b

    Vertices are numbered from 1.  ``#`` starts a comment.
    """
    n = None
    arrows = []
    raw_relations = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'key: value'")
        key = key.strip().lower()
        rest = rest.strip()
        if key == "vertices":
            if n is not None:
                raise ParseError(f"line {lineno}: vertices given twice")
            try:
                n = int(rest)
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {rest!r}") from None
            if n < 1:
                raise ParseError(f"line {lineno}: need at least one vertex")
        elif key == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: arrow needs 'label source target'")
            try:
                s, t = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"line {lineno}: bad arrow endpoints") from None
            arrows.append((parts[0], s, t, lineno))
        elif key == "relation":
            raw_relations.append((rest, lineno))
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if n is None:
        raise ParseError("missing 'vertices:' line")
    for label, s, t, lineno in arrows:
        if not (0 <= s < n and 0 <= t < n):
            raise ParseError(f"line {lineno}: arrow {label} endpoint out of range")
    try:
        quiver = Quiver(n, tuple((a, s, t) for a, s, t, _ in arrows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    relations = tuple(r for r in (_parse_relation(text_, quiver, ln)
                                  for text_, ln in raw_relations) if r)
    return AlgebraPresentation(quiver, relations)


def load_algebra(path: str) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return build_algebra(parse_algebra(text), name=str(path))


def algebra_from_text(text: str, name: str = "") -> Algebra:
    return build_algebra(parse_algebra(text), name=name)
