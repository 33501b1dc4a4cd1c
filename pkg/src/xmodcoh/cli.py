"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .abelian import EnumerationError
from .cmcohom import CmComplex, PreconditionError, em_groups
from .crossed import PostnikovInvariant, canonical_section_system, homotopy, postnikov
from .groups import AbelianPresentation, AxiomError
from .instances import InstanceError, coefficient_module, parse
from .simplicial import AnComplex, cosk1, homotopy01, moore, truncate0, truncate1, validate_tsg
from .stdext import DEFAULT_MAX_LENGTH, StandardExtension, axiom_sample_check, resolve_seed

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class Report:
    def __init__(self, command, args):
        self.command = command
        self.echo = args
        self.instance = None
        self.names = {}
        self.results = {}
        self.verdicts = {}
        self.timing = None

    def as_dict(self):
        d = {
            "command": self.command,
            "arguments": self.echo,
            "instance": self.instance,
            "names": self.names,
            "results": self.results,
            "verdicts": self.verdicts,
        }
        if self.timing is not None:
            d["timing"] = {"seconds": round(self.timing, 6)}
        return d

    def text(self):
        lines = [f"command: {self.command}", f"instance: {self.instance}"]
        for k, v in self.names.items():
            lines.append(f"{k}: {_fmt(v)}")
        for k, v in self.results.items():
            lines.append(f"{k} = {_fmt(v)}")
        for k, v in self.verdicts.items():
            lines.append(f"{k}: {_fmt(v)}")
        if self.timing is not None:
            lines.append(f"time: {self.timing:.3f} s")
        return "\n".join(lines)


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _pick(table, name, kind):
    if name is not None:
        if name not in table:
            raise InstanceError("dangling reference", f"--{kind}", f"unknown name {name!r}")
        return name, table[name]
    if len(table) != 1:
        raise InstanceError("ambiguous selection", f"--{kind}", f"instance has {len(table)} candidates; name one")
    return next(iter(table.items()))


def _group_summary(G):
    out = {"order": G.order, "abelian": G.is_abelian()}
    if G.is_abelian():
        out["invariants"] = str(AbelianPresentation(G, range(G.order)).group)
    return out


def _target(args, inst):
    """``("cm", name, V)`` or ``("tsg", name, G)`` according to the selectors."""
    if args.tsg is not None or (args.cm is None and not inst.crossed_modules and inst.tsg):
        name, G = _pick(inst.tsg, args.tsg, "tsg")
        return "tsg", name, G
    name, V = _pick(inst.crossed_modules, args.cm, "cm")
    return "cm", name, V


# ---------------------------------------------------------------------------
# Subcommands


def cmd_validate(args, inst, rep):
    counts = {k: len(getattr(inst, k)) for k in ("groups", "modules", "crossed_modules", "tsg", "cocycles3")}
    rep.results["entities"] = counts
    rep.verdicts["valid"] = True
    return EXIT_OK


def cmd_homotopy(args, inst, rep):
    kind, name, X = _target(args, inst)
    rep.names[kind] = name
    if kind == "cm":
        hd = homotopy(X)
        pi0, pi1, mod = hd.pi0, hd.pi1, hd.pi1_module
    else:
        h = homotopy01(X)
        pi0, pi1, mod = h.pi0, h.pi1, h.pi1_module
    rep.results["pi0"] = _group_summary(pi0)
    rep.results["pi1"] = str(pi1)
    rep.results["pi1 action"] = [[list(r) for r in m] for m in mod.action]
    return EXIT_OK


def cmd_cohomology(args, inst, rep):
    kind, name, X = _target(args, inst)
    rep.names[kind] = name
    rep.names["coeffs"] = args.coeffs
    n = args.dim
    if not 0 <= n <= 2:
        raise InstanceError("bad argument", "--dim", "dimension must be 0, 1 or 2")
    if kind == "cm":
        cx = CmComplex(X, coefficient_module(args.coeffs, homotopy(X).pi0, inst.modules))
    else:
        cx = AnComplex(X, coefficient_module(args.coeffs, homotopy01(X).pi0, inst.modules))
    coh = cx.cohomology(n)
    rep.results[f"H{n}"] = str(coh.H)
    rep.results[f"Z{n}"] = str(coh.Z)
    rep.results[f"B{n}"] = str(coh.B)
    return EXIT_OK


def _z3_values(z3c):
    return {",".join(map(str, args)): list(v) for args, v in z3c.nonzero_values()}


def cmd_postnikov(args, inst, rep):
    name, V = _pick(inst.crossed_modules, args.cm, "cm")
    rep.names["cm"] = name
    S = canonical_section_system(V)
    k = postnikov(V, S)
    rep.results["s0"] = list(S.s0)
    rep.results["s1"] = {str(g): m for g, m in sorted(S.s1.items())}
    rep.results["z3 nonzero values"] = _z3_values(k.representative)
    rep.verdicts["k3 trivial"] = k.is_trivial()
    return EXIT_OK


def cmd_em_h2(args, inst, rep):
    rep.names["coeffs"] = args.coeffs
    if args.z3:
        if len(args.z3) != 1:
            raise InstanceError("bad argument", "--z3", "em-h2 takes a single cocycle")
        zname = args.z3[0]
        z = _pick(inst.cocycles3, zname, "z3")[1]
        rep.names["z3"] = zname
        M = coefficient_module(args.coeffs, z.group, inst.modules)
        rep.results["H2_EM"] = str(em_groups(z.module, z, M).H)
        return EXIT_OK
    name, V = _pick(inst.crossed_modules, args.cm, "cm")
    rep.names["cm"] = name
    cx = CmComplex(V, coefficient_module(args.coeffs, homotopy(V).pi0, inst.modules))
    z = postnikov(V, canonical_section_system(V, cx.hd)).representative
    h2 = cx.cohomology(2).H
    hem = em_groups(cx.hd.pi1_module, z, cx.M).H
    rep.results["H2"] = str(h2)
    rep.results["H2_EM"] = str(hem)
    agree = h2.factors == hem.factors
    rep.verdicts["agree"] = agree
    return EXIT_OK if agree else EXIT_NEGATIVE


def cmd_compare_em(args, inst, rep):
    if not args.z3 or len(args.z3) != 2:
        raise InstanceError("bad argument", "--z3", "compare-em needs exactly two cocycles")
    a, b = (_pick(inst.cocycles3, n, "z3")[1] for n in args.z3)
    rep.names["z3"] = list(args.z3)
    rep.names["coeffs"] = args.coeffs
    if a.module.group.table != b.module.group.table or a.module.coeffs.factors != b.module.coeffs.factors:
        raise InstanceError("bad argument", "--z3", "the cocycles live over different homotopy data")
    M = coefficient_module(args.coeffs, a.group, inst.modules)
    ha, hb = em_groups(a.module, a, M).H, em_groups(b.module, b, M).H
    rep.results["H2_EM " + args.z3[0]] = str(ha)
    rep.results["H2_EM " + args.z3[1]] = str(hb)
    same = a.module.action == b.module.action and PostnikovInvariant(a, None).class_eq(b)
    rep.verdicts["cohomologous"] = same
    iso = ha.factors == hb.factors
    rep.verdicts["isomorphic"] = iso
    return EXIT_OK if iso else EXIT_NEGATIVE


def cmd_coskeleton(args, inst, rep):
    name, V = _pick(inst.crossed_modules, args.cm, "cm")
    rep.names["cm"] = name
    G = cosk1(V)
    validate_tsg(G)
    md = moore(G)
    rep.results["level orders"] = [g.order for g in G.levels]
    rep.results["moore orders"] = [md.N0.order, md.N1.order, md.N2.order]
    h = homotopy01(G, md)
    rep.results["pi0"] = _group_summary(h.pi0)
    rep.results["pi1"] = str(h.pi1)
    T = truncate1(G)
    recovers = T.group.table == V.group.table and T.module.table == V.module.table and T.mu == V.mu and T.action == V.action
    rep.verdicts["valid"] = True
    rep.verdicts["truncation recovers crossed module"] = recovers
    return EXIT_OK if recovers else EXIT_NEGATIVE


def cmd_truncate(args, inst, rep):
    name, G = _pick(inst.tsg, args.tsg, "tsg")
    rep.names["tsg"] = name
    T = truncate1(G)
    rep.results["truncate1 group order"] = T.group.order
    rep.results["truncate1 module order"] = T.module.order
    rep.results["truncate1 mu"] = list(T.mu)
    rep.results["truncate0"] = _group_summary(truncate0(G))
    rep.verdicts["truncate1 is a crossed module"] = True
    return EXIT_OK


def cmd_std_ext(args, inst, rep):
    if not args.z3 or len(args.z3) != 1:
        raise InstanceError("bad argument", "--z3", "std-ext takes a single cocycle")
    zname = args.z3[0]
    z = _pick(inst.cocycles3, zname, "z3")[1]
    rep.names["z3"] = zname
    E = StandardExtension(z)
    rec = E.recover_z3()
    seed = resolve_seed(args.seed)
    report = axiom_sample_check(E, seed, args.count, args.max_length)
    rep.results["recovered z3 nonzero values"] = _z3_values(rec.z3)
    rep.results["seed"] = seed
    rep.results["samples"] = report.checked
    rep.verdicts["recovered equals input"] = rec.equal
    rep.verdicts["axioms hold on samples"] = report.ok
    if report.failures:
        rep.results["first failure"] = repr(report.failures[0])
    return EXIT_OK if rec.equal and report.ok else EXIT_NEGATIVE


COMMANDS = {
    "validate": cmd_validate,
    "homotopy": cmd_homotopy,
    "cohomology": cmd_cohomology,
    "postnikov": cmd_postnikov,
    "em-h2": cmd_em_h2,
    "compare-em": cmd_compare_em,
    "coskeleton": cmd_coskeleton,
    "truncate": cmd_truncate,
    "std-ext": cmd_std_ext,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("instance", help="instance JSON file, or bundled:NAME.json")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    common.add_argument("--cm", help="crossed module name")
    common.add_argument("--tsg", help="truncated simplicial group name")
    p = argparse.ArgumentParser(prog="xmodcoh", description="Cohomology of crossed modules and simplicial groups.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="parse and check every axiom")
    sub.add_parser("homotopy", parents=[common], help="pi_0 and pi_1")
    c = sub.add_parser("cohomology", parents=[common], help="H^n for n <= 2")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--coeffs", required=True, help='module name, or "Z/n" / "Z" with trivial action')
    sub.add_parser("postnikov", parents=[common], help="3-cocycle of the extension and triviality of k3")
    e = sub.add_parser("em-h2", parents=[common], help="H^2 through pi_0, pi_1 and a 3-cocycle")
    e.add_argument("--coeffs", required=True)
    e.add_argument("--z3", action="append")
    ce = sub.add_parser("compare-em", parents=[common], help="H^2_EM for two 3-cocycles")
    ce.add_argument("--z3", action="append", required=True)
    ce.add_argument("--coeffs", required=True)
    sub.add_parser("coskeleton", parents=[common], help="build and check the coskeleton")
    sub.add_parser("truncate", parents=[common], help="1- and 0-truncation of a simplicial group")
    s = sub.add_parser("std-ext", parents=[common], help="standard extension of a 3-cocycle")
    s.add_argument("--z3", action="append", required=True)
    s.add_argument("--seed", type=int, default=None, help="sample seed (default: $H2_SEED or 0)")
    s.add_argument("--count", type=int, default=1000)
    s.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    return p


def _echo(args):
    skip = {"json", "timing", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    rep = Report(args.command, _echo(args))
    t0 = time.perf_counter()
    try:
        inst = parse(args.instance)
        rep.instance = args.instance
        code = COMMANDS[args.command](args, inst, rep)
    except (InstanceError, AxiomError, PreconditionError, EnumerationError, ValueError) as e:
        payload = {"command": args.command, "arguments": rep.echo, "error": {"kind": type(e).__name__, "message": str(e)}}
        if isinstance(e, AxiomError):
            payload["error"]["witness"] = repr(e.witness)
        if args.json:
            out.write(json.dumps(payload, sort_keys=True) + "\n")
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    if args.timing:
        rep.timing = time.perf_counter() - t0
    if args.json:
        out.write(json.dumps(rep.as_dict(), sort_keys=True) + "\n")
    else:
        out.write(rep.text() + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
