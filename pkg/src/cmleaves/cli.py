"""Command-line interface: ``cm <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fixed_points as fp
from .leaves import (
    enumerate_leaves, hasse_diagram, hasse_dot, normalization_of_closure,
)
from .params import (
    CyclicK, DirectBC, TypeB, format_rational, from_leaf_bc, parse_rational,
    parse_vector, to_bc,
)
from .partitions import (
    decompose_residue, ell_core, j_core, make_partition, residues,
)
from .roots import InvalidInput, InvariantViolation, build_mckay_graph, level
from .slices import (
    break_at_vertex, embed_finite_slice, ext_graph, piece_descriptor,
    strip_loops, transverse_slice,
)
from .weyl import reduce_pair, reduce_to_standard

EXIT_INVALID = 2
EXIT_INTERNAL = 3


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(obj, as_json: bool, text: str):
    if as_json:
        sys.stdout.write(json.dumps(_jsonable(obj), indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _ints(text: str) -> tuple:
    vals = parse_vector(text)
    if any(v.denominator != 1 for v in vals):
        raise InvalidInput(f"expected integers, got {text!r}")
    return tuple(int(v) for v in vals)


def resolve_group(args):
    """Return (graph, bc, variant) from --group and the parameter flags."""
    group = args.group
    if group == "typeB":
        g = build_mckay_graph("CyclicA(2)")
        if args.bc is not None:
            return g, _check_len(g, parse_vector(args.bc)), "typeB"
        c1 = parse_rational(args.c1 if args.c1 is not None else "1")
        cg = parse_rational(args.cgamma if args.cgamma is not None else "0")
        return g, to_bc(TypeB(c1, cg)), "typeB"
    if group == "cyclic":
        if args.ell is None:
            raise InvalidInput("--group cyclic needs --ell")
        g = build_mckay_graph(f"CyclicA({args.ell})")
        if args.bc is not None:
            return g, _check_len(g, parse_vector(args.bc)), "cyclic"
        k = parse_vector(args.k) if args.k is not None else (Fraction(0),) * args.ell
        if len(k) != args.ell:
            raise InvalidInput("--k needs exactly l entries")
        a = parse_rational(args.a if args.a is not None else "1")
        return g, to_bc(CyclicK(a, k)), "cyclic"
    if group.startswith("mckay:"):
        g = build_mckay_graph(group[len("mckay:"):])
        if args.bc is None:
            raise InvalidInput("--group mckay:<kind> needs --bc")
        return g, to_bc(DirectBC(_check_len(g, parse_vector(args.bc)))), "direct"
    raise InvalidInput(f"unknown group {group!r}")


def _check_len(g, bc):
    if len(bc) != g.size:
        raise InvalidInput(f"parameter needs {g.size} entries, got {len(bc)}")
    return bc


def _leaves(args):
    g, bc, variant = resolve_group(args)
    if args.n is None:
        raise InvalidInput("--n is required")
    return g, bc, variant, enumerate_leaves(g, args.n, bc)


def cmd_leaves(args):
    g, bc, _, leaves = _leaves(args)
    recs = [dict(L.to_json(), name=L.name()) for L in leaves]
    text = "\n".join(f"{L.name()}  dim {L.dimension}" for L in leaves)
    _emit({"graph": g.kind, "bc": list(bc), "n": args.n, "leaves": recs}, args.json, text)


def cmd_hasse(args):
    _, _, _, leaves = _leaves(args)
    covers = hasse_diagram(leaves)
    if args.json and not args.dot:
        _emit({"nodes": [L.name() for L in leaves], "covers": [list(c) for c in covers]}, True, "")
    else:
        sys.stdout.write(hasse_dot(leaves, covers))


def cmd_closure(args):
    g, bc, variant, leaves = _leaves(args)
    recs, lines = [], []
    for L in leaves:
        rep = normalization_of_closure(g, bc, L)
        rec = {"leaf": L.name(), "normalization": rep.to_json()}
        if not L.zero_level and variant in ("typeB", "cyclic"):
            p = from_leaf_bc(rep.factors[0]["bc"], variant)
            rec["params"] = {k: _jsonable(v) for k, v in vars(p).items()}
        recs.append(rec)
        parts = "; ".join(f"{f['group']}_{f['rank']} bc=({', '.join(format_rational(x) for x in f['bc'])})"
                          for f in rep.factors)
        lines.append(f"{L.name()}: {parts}  normal={rep.is_normal}")
    _emit({"closures": recs}, args.json, "\n".join(lines))


def cmd_slice(args):
    g, bc, _, leaves = _leaves(args)
    recs, lines = [], []
    for L in leaves:
        if level(g, bc) != 0:
            s = transverse_slice(g, args.n, bc, L)
            rec = dict(s.to_json(), leaf=L.name())
            desc = f"O({s.orbit[0]},{s.orbit[1]})" if s.orbit else ("point" if not any(s.v) else "M0")
            lines.append(f"{L.name()}: {desc} x C^{s.flat}  w={list(s.w)} v={list(s.v)}")
        else:
            eg, _ = strip_loops(ext_graph(g, L.rep_type))
            pieces = break_at_vertex(eg, eg.framed_vertex) if eg.loops[eg.framed_vertex] == 0 else [eg]
            names = [piece_descriptor(p) for p in pieces]
            rec = {"leaf": L.name(), "flat": eg.flat, "pieces": names, "ext_graph": eg.to_json()}
            lines.append(f"{L.name()}: {' x '.join(names)} x C^{eg.flat}")
        recs.append(rec)
    _emit({"slices": recs}, args.json, "\n".join(lines))


def cmd_reduce(args):
    g, bc, _ = resolve_group(args)
    if args.alpha is not None:
        word, m, bc2 = reduce_pair(g, _ints(args.alpha), bc)
        out = {"word": word.to_json(), "m": m, "bc": list(bc2)}
        text = f"word {list(word.letters)}  m={m}  bc'=({', '.join(map(format_rational, bc2))})"
    else:
        word, bc2, J = reduce_to_standard(g, bc)
        out = {"word": word.to_json(), "bc": list(bc2), "J": list(J)}
        text = f"word {list(word.letters)}  bc'=({', '.join(map(format_rational, bc2))})  J={list(J)}"
    _emit(out, args.json, text)


def _default_standard_bc(ell: int, J) -> tuple:
    """A J-standard parameter at level -1: zero on J, equal negative entries elsewhere."""
    rest = [i for i in range(ell) if i not in J]
    if not rest:
        raise InvalidInput("J must be a proper subset of the vertices")
    return tuple(Fraction(0) if i in J else Fraction(-1, len(rest)) for i in range(ell))


def cmd_fixed_points(args):
    if args.ell is None or args.n is None:
        raise InvalidInput("fixed-points needs --ell and --n")
    ell = args.ell
    J = tuple(sorted({j % ell for j in _ints(args.J or "")}))
    nu = make_partition(_ints(args.nu or ""))
    bc = parse_vector(args.bc) if args.bc is not None else _default_standard_bc(ell, J)
    if len(bc) != ell:
        raise InvalidInput("--bc needs exactly l entries")
    std = fp.check_j_standard(bc, ell)
    if tuple(J) != tuple(std):
        raise InvalidInput(f"parameter vanishes on {list(std)}, not on J = {list(J)}")
    alpha = tuple(x + args.n for x in residues(nu, ell))
    pts = fp.fixed_points(alpha, bc, J, ell)
    recs, lines = [], []
    for core, mu, rep in pts:
        rec = {"j_core": list(core), "mu": list(mu), "dims": list(rep.dims),
               "dim_reg": list(fp.dim_reg(mu, bc, J, ell))}
        if args.json:
            rec["rep"] = rep.to_json()
        recs.append(rec)
        lines.append(f"core {list(core)}  from mu={list(mu)}  dims={list(rep.dims)}")
    _emit({"alpha": list(alpha), "bc": list(bc), "J": list(J), "fixed_points": recs},
          args.json, f"{len(pts)} fixed points\n" + "\n".join(lines))


def cmd_core(args):
    if args.ell is None:
        raise InvalidInput("core needs --ell")
    lam = make_partition(_ints(args.nu or ""))
    out = {"partition": list(lam), "core": list(ell_core(lam, args.ell))}
    text = f"{args.ell}-core {list(out['core'])}"
    if args.J is not None:
        jc = j_core(lam, _ints(args.J), args.ell)
        out["j_core"] = list(jc)
        text += f"\nJ-core {list(jc)}"
    _emit(out, args.json, text)


def cmd_residue(args):
    if args.ell is None:
        raise InvalidInput("residue needs --ell")
    if args.alpha is not None:
        nu, n = decompose_residue(_ints(args.alpha), args.ell)
        _emit({"core": list(nu), "n": n}, args.json, f"core {list(nu)}  n={n}")
        return
    lam = make_partition(_ints(args.nu or ""))
    res = residues(lam, args.ell)
    _emit({"partition": list(lam), "residues": list(res)}, args.json, f"residues {list(res)}")


def cmd_embed_slice(args):
    if args.kind is None or args.w is None or args.v is None:
        raise InvalidInput("embed-slice needs --kind, --w and --v")
    w, v = _ints(args.w), _ints(args.v)
    kind, n, bc, leaf, vp = embed_finite_slice(args.kind, w, v)
    g = build_mckay_graph(kind)
    s = transverse_slice(g, n, bc, leaf)
    out = {"graph": kind, "n": n, "bc": list(bc), "leaf": leaf.to_json(), "v_reduced": list(vp),
           "slice": s.to_json()}
    text = (f"{kind}  n={n}  bc=({', '.join(map(format_rational, bc))})  leaf {leaf.name()}\n"
            f"slice w={list(s.w)} v={list(s.v)}")
    _emit(out, args.json, text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cm", description="Symplectic leaves of Calogero-Moser spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--group", default="typeB", help="typeB, cyclic or mckay:<kind>")
        p.add_argument("--n", type=int)
        p.add_argument("--c1")
        p.add_argument("--cgamma")
        p.add_argument("--a")
        p.add_argument("--k", help="comma separated k_0,...,k_{l-1}")
        p.add_argument("--bc", help="comma separated quiver parameter")
        p.add_argument("--ell", type=int)
        p.add_argument("--J")
        p.add_argument("--nu", help="partition as comma separated parts")
        p.add_argument("--alpha", help="dimension vector")
        p.add_argument("--kind", help="finite Dynkin type for embed-slice, e.g. A2")
        p.add_argument("--w")
        p.add_argument("--v")
        p.add_argument("--json", action="store_true")
        p.add_argument("--dot", action="store_true")
        return p

    add("leaves", cmd_leaves, "list symplectic leaves")
    add("hasse", cmd_hasse, "closure order as a Hasse diagram")
    add("closure", cmd_closure, "normalization of each leaf closure")
    add("slice", cmd_slice, "transverse slice to each leaf")
    add("reduce", cmd_reduce, "reduce a parameter (and optional vector) to standard form")
    add("fixed-points", cmd_fixed_points, "torus fixed points for the cyclic quiver")
    add("core", cmd_core, "l-core and J-core of a partition")
    add("residue", cmd_residue, "residues of a partition, or decompose a residue vector")
    add("embed-slice", cmd_embed_slice, "realize a finite quiver variety as a slice")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
