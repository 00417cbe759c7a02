"""Brute-force reference computations built directly on sympy matrices,
sharing no code with the main engine.  Used by the regression checks and
the test-suite to cross-validate Hom, Ext and tensor dimensions."""
from __future__ import annotations

import sympy

from .rep import Rep


def _sym(m) -> sympy.Matrix:
    return sympy.Matrix(m.nrows, m.ncols, lambda i, j: sympy.Rational(m[i, j].numerator,
                                                                      m[i, j].denominator))


def _kron(A: sympy.Matrix, B: sympy.Matrix) -> sympy.Matrix:
    """Kronecker product that tolerates empty factors."""
    return sympy.Matrix(A.rows * B.rows, A.cols * B.cols,
                        lambda i, j: A[i // B.rows, j // B.cols] * B[i % B.rows, j % B.cols])


def _arrows(M: Rep):
    q = M.algebra.presentation.quiver
    return [(s, t) for _, s, t in q.arrows]


def hom_dim_bruteforce(M: Rep, N: Rep) -> int:
    """dim of {(F_v)} with N_a F_s = F_t M_a for every arrow a (Kronecker form)."""
    arrows = _arrows(M)
    n = len(M.dims)
    sizes = [N.dims[v] * M.dims[v] for v in range(n)]
    offs = [sum(sizes[:v]) for v in range(n)]
    total = sum(sizes)
    if total == 0:
        return 0
    rows = []
    for k, (s, t) in enumerate(arrows):
        Ma, Na = _sym(M.mats[k]), _sym(N.mats[k])
        block = sympy.zeros(N.dims[t] * M.dims[s], total)
        # vec(N_a F_s) = (I ⊗ N_a) vec F_s ; vec(F_t M_a) = (M_a^T ⊗ I) vec F_t
        if sizes[s]:
            block[:, offs[s]:offs[s] + sizes[s]] += _kron(sympy.eye(M.dims[s]), Na)
        if sizes[t]:
            block[:, offs[t]:offs[t] + sizes[t]] -= _kron(Ma.T, sympy.eye(N.dims[t]))
        rows.append(block)
    A = sympy.Matrix.vstack(*rows) if rows else sympy.zeros(0, total)
    return total - A.rank()


def _path_matrix(R: Rep, path, arrows) -> sympy.Matrix:
    s = arrows[path[0]][0]
    out = sympy.eye(R.dims[s])
    for a in path:
        out = _sym(R.mats[a]) * out
    return out


def ext_dim_bruteforce(Z: Rep, X: Rep) -> int:
    """dim of block-triangular deformations [[X, E], [0, Z]] satisfying the
    relations, modulo those coming from base changes."""
    alg = Z.algebra
    arrows = _arrows(Z)
    n = len(Z.dims)
    # unknowns: E_a of shape X_t x Z_s, column-major
    sizes = [X.dims[t] * Z.dims[s] for s, t in arrows]
    offs = [sum(sizes[:k]) for k in range(len(arrows))]
    total = sum(sizes)
    if total == 0:
        return 0
    eqs = []
    for rel in alg.presentation.relations:
        s = arrows[rel[0][1][0]][0]
        t = arrows[rel[0][1][-1]][1]
        block = sympy.zeros(X.dims[t] * Z.dims[s], total)
        for coef, path in rel:
            # off-diagonal block of the product: sum_i X(after) E_i Z(before)
            for i, a in enumerate(path):
                before = _path_matrix(Z, path[:i], arrows) if i else sympy.eye(Z.dims[s])
                after = (_path_matrix(X, path[i + 1:], arrows) if i + 1 < len(path)
                         else sympy.eye(X.dims[t]))
                if sizes[a]:
                    block[:, offs[a]:offs[a] + sizes[a]] += coef * _kron(before.T, after)
        eqs.append(block)
    cocycles = total - (sympy.Matrix.vstack(*eqs).rank() if eqs else 0)
    # coboundaries: E_a = X_a h_s - h_t Z_a for h_v: Z_v -> X_v
    hsz = [X.dims[v] * Z.dims[v] for v in range(n)]
    hoff = [sum(hsz[:v]) for v in range(n)]
    B = sympy.zeros(total, sum(hsz))
    for k, (s, t) in enumerate(arrows):
        if not sizes[k]:
            continue
        if hsz[s]:
            B[offs[k]:offs[k] + sizes[k], hoff[s]:hoff[s] + hsz[s]] += _kron(
                sympy.eye(Z.dims[s]), _sym(X.mats[k]))
        if hsz[t]:
            B[offs[k]:offs[k] + sizes[k], hoff[t]:hoff[t] + hsz[t]] -= _kron(
                _sym(Z.mats[k]).T, sympy.eye(X.dims[t]))
    return cocycles - (B.rank() if sum(hsz) else 0)


def tensor_dim_bruteforce(N: Rep, bim) -> int:
    """dim of ``(⊕_u N_u ⊗ M_u)`` modulo ``n·b ⊗ m - n ⊗ b·m`` over B's basis."""
    alg = bim.B.algebra
    n = alg.n_vertices
    mdims = [p.total_dim for p in bim.parts]
    sizes = [N.dims[u] * mdims[u] for u in range(n)]
    offs = [sum(sizes[:u]) for u in range(n)]
    total = sum(sizes)
    if total == 0:
        return 0
    gens = []
    for k in range(alg.dimension):
        s, t = alg.sources[k], alg.targets[k]
        if not N.dims[s] or not mdims[t]:
            continue
        Nb = _sym(N.act(k))                       # N_s -> N_t
        Lb = _left_total(bim, k)                  # M_t -> M_s
        for i in range(N.dims[s]):
            for j in range(mdims[t]):
                v = sympy.zeros(total, 1)
                # (n_i · b) ⊗ m_j  in N_t ⊗ M_t
                for r in range(N.dims[t]):
                    v[offs[t] + r * mdims[t] + j] += Nb[r, i]
                # - n_i ⊗ (b · m_j)  in N_s ⊗ M_s
                for r in range(mdims[s]):
                    v[offs[s] + i * mdims[s] + r] -= Lb[r, j]
                gens.append(v)
    rank = sympy.Matrix.hstack(*gens).rank() if gens else 0
    return total - rank


def _left_total(bim, k: int) -> sympy.Matrix:
    f = bim.left[k]
    rows = sum(b.nrows for b in f.blocks)
    cols = sum(b.ncols for b in f.blocks)
    out = sympy.zeros(rows, cols)
    r = c = 0
    for b in f.blocks:
        out[r:r + b.nrows, c:c + b.ncols] = _sym(b)
        r += b.nrows
        c += b.ncols
    return out
