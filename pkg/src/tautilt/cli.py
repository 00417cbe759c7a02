"""Command-line entry point.

Exit status: 0 on success or a true verdict, 1 on a false verdict (the
witness is printed), 2 on usage, parse or lookup errors.
"""
from __future__ import annotations

import argparse
import sys

from .algebra import NonAdmissible, ParseError, load_algebra
from .brenner_butler import default_projectives, verify_equivalence, verify_triangle
from .homology import CapExceeded, Pool, enumerate_indecomposables
from .regression import run_all
from .restriction import restrict
from .subcat import Subcat, UnknownModule, parse_spec
from .tau_tilt import (ExactContext, InvalidContext, PreconditionFailed,
                       complete_to_support_tau_tilting, enumerate_stau_tilt,
                       enumerate_tau_cotorsion_pairs, enumerate_tau_rigid_pairs, fac_context,
                       is_support_tau_tilting, make_context, module_context)

OK, FALSE, USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _pool(args) -> Pool:
    alg = load_algebra(args.algebra)
    return enumerate_indecomposables(alg, max_dim=args.max_dim)


def _context(pool: Pool, spec: str) -> ExactContext:
    if spec == "mod":
        return module_context(pool)
    kind, _, rest = spec.partition(":")
    if kind == "fac":
        return fac_context(pool, parse_spec(pool, rest))
    if kind == "sub":
        return make_context(pool, parse_spec(pool, rest))
    raise UsageError(f"ambient must be 'mod', 'fac:SPEC' or 'sub:SPEC', got {spec!r}")


def _spec_in(ctx: ExactContext, spec: str) -> Subcat:
    T = parse_spec(ctx.pool, spec)
    outside = [ctx.pool.labels[k] for k in T.indices if k not in ctx.ambient]
    if outside:
        raise UsageError(f"{', '.join(outside)} not in the ambient {ctx.ambient.name}")
    return T


def _dump(pool: Pool, out) -> None:
    for lab, M in zip(pool.labels, pool.members):
        print(f"== {lab}", file=out)
        print(M.dump(), file=out)


# ---------------------------------------------------------------------------
# verbs

def cmd_indec(args, out) -> int:
    pool = _pool(args)
    proj, inj = set(pool.projective_indices()), set(pool.injective_indices())
    print(f"indecomposables: {len(pool)}", file=out)
    for k, (lab, M) in enumerate(zip(pool.labels, pool.members)):
        tags = [t for t, s in (("projective", proj), ("injective", inj)) if k in s]
        dims = ",".join(map(str, M.dims))
        print(f"  {lab}  dim ({dims})" + (f"  {' '.join(tags)}" if tags else ""), file=out)
    print(f"complete: {str(pool.complete).lower()}", file=out)
    if pool.qualified:
        print("note: some extension spaces have dimension >= 2; only basis extensions were knitted",
              file=out)
    if args.dump:
        _dump(pool, out)
    return OK


def cmd_taurigid(args, out) -> int:
    pool = _pool(args)
    ctx = _context(pool, args.ambient)
    for p in enumerate_tau_rigid_pairs(ctx):
        mark = "support tau-tilting" if is_support_tau_tilting(p.T, ctx) else "not support tau-tilting"
        print(f"({p.label()})  {mark}", file=out)
    return OK


def cmd_stautilt(args, out) -> int:
    pool = _pool(args)
    ctx = _context(pool, args.ambient)
    T = _spec_in(ctx, args.T)
    v = is_support_tau_tilting(T, ctx)
    if not v:
        print(f"support τ-tilting: NO: {v.witness(pool)}", file=out)
        return FALSE
    print("support τ-tilting: YES", file=out)
    for c in v.condition_A.checks:
        ap = c.approximation
        cok = pool.name(k for k, m in _cokernel_components(pool, ap) for _ in range(m))
        print(f"  {c.describe(pool)}, cokernel {cok}", file=out)
    return OK


def _cokernel_components(pool: Pool, ap):
    C, _ = ap.cokernel()
    return pool.components(C) if C.total_dim else []


def cmd_complete(args, out) -> int:
    pool = _pool(args)
    ctx = _context(pool, args.ambient)
    T = _spec_in(ctx, args.T)
    try:
        done = complete_to_support_tau_tilting(T, ctx)
    except PreconditionFailed as exc:
        print(f"cannot complete: {exc}", file=out)
        return FALSE
    print(f"completion: {done.name}", file=out)
    return OK


def cmd_hasse(args, out) -> int:
    pool = _pool(args)
    ctx = _context(pool, args.ambient)
    g = enumerate_stau_tilt(ctx)
    dot = g.to_dot()
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
        print(f"vertices: {len(g.vertices)}, edges: {len(g.edges)}", file=out)
        for k, v in enumerate(g.vertices):
            print(f"  v{k}: {v.label()}", file=out)
    else:
        out.write(dot)
    if g.tainted:
        print("warning: the pool is incomplete; the poset may be missing vertices", file=sys.stderr)
    return OK


def cmd_cotorsion(args, out) -> int:
    pool = _pool(args)
    ctx = _context(pool, args.ambient)
    r = enumerate_tau_cotorsion_pairs(ctx)
    for p in r.pairs:
        full = "complete cotorsion pair" if p.full else "not a complete cotorsion pair"
        print(f"C = {p.C.name}; D = {p.D.name}; core {p.core.name}; {full}", file=out)
    print(f"tau-cotorsion pairs: {len(r.pairs)}, support tau-tilting: {len(r.stt.vertices)}", file=out)
    print(f"bijection: {'YES' if r.bijection else 'NO'}", file=out)
    return OK if r.bijection else FALSE


def cmd_restrict(args, out) -> int:
    pool = _pool(args)
    ctx = _context(pool, args.ambient)
    T = _spec_in(ctx, args.T)
    try:
        rep = restrict(T, ctx)
    except PreconditionFailed as exc:
        print(f"restriction undefined: {exc}", file=out)
        return FALSE
    for line in rep.lines():
        print(line, file=out)
    return OK if rep.tilting and rep.rho_ok else FALSE


def cmd_bb(args, out) -> int:
    pool = _pool(args)
    T = parse_spec(pool, args.T)
    P = parse_spec(pool, args.p) if args.p else default_projectives(pool)
    eq = verify_equivalence(P, T)
    tri = verify_triangle(P, T)
    for line in eq.lines() + tri.lines():
        print(line, file=out)
    return OK if eq and tri else FALSE


def cmd_check_all(args, out) -> int:
    checks = run_all()
    for c in checks:
        print(c.line(), file=out)
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return OK if not failed else FALSE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tautilt",
                                     description="Support tau-tilting computations over quiver algebras.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_, spec=False, ambient=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("algebra", help="algebra file")
        if spec:
            p.add_argument("T", help="module spec such as 2+2/3+1/2 (0 for the zero subcategory)")
        if ambient:
            p.add_argument("--ambient", default="mod", help="mod (default), fac:SPEC or sub:SPEC")
        p.add_argument("--max-dim", type=int, default=30, help="dimension cap while knitting")
        p.add_argument("--dump", action="store_true", help="print the matrices of every pool member")
        p.set_defaults(fn=fn)
        return p

    verb("indec", cmd_indec, "list the indecomposable modules", ambient=False)
    verb("taurigid", cmd_taurigid, "enumerate tau-rigid pairs satisfying (A)")
    verb("stautilt", cmd_stautilt, "decide whether T is support tau-tilting", spec=True)
    verb("complete", cmd_complete, "complete a tau-rigid T to a support tau-tilting one", spec=True)
    h = verb("hasse", cmd_hasse, "Hasse quiver of support tau-tilting subcategories")
    h.add_argument("--dot", metavar="FILE", help="write the DOT graph to FILE")
    verb("cotorsion", cmd_cotorsion, "enumerate tau-cotorsion pairs")
    verb("restrict", cmd_restrict, "restricted category of a support tau-tilting T", spec=True)
    b = verb("bb", cmd_bb, "verify the tilting equivalence for T", spec=True, ambient=False)
    b.add_argument("--p", metavar="P_SPEC", help="projective generator (default: the regular module)")
    c = sub.add_parser("check-all", help="run the built-in regression")
    c.set_defaults(fn=cmd_check_all, dump=False)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = args.fn(args, out)
        if args.dump and args.verb != "indec":
            _dump(_pool(args), out)
        return status
    except (ParseError, NonAdmissible, UnknownModule, UsageError, InvalidContext, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
