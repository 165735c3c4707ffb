"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 cap exceeded.
"""
import argparse
import sys

from . import io, suites
from .cohomology import cohomology_group
from .config import Caps, RunConfig
from .errors import CapExceeded, ValidationError
from .groups import Presentation, realize_presentation
from .modules import module_from_generators
from .monodromy import extensions, giraud_h2, h0_crossed, h1_nonabelian, h2_constant_abelian
from .spaces import abelianization, pi1_presentation
from .xmod import adjoint_crossed_module, ker_coker

CAP_FLAGS = {
    "aut": "aut_order", "homs": "hom_tuples", "cocycles": "cocycles",
    "monoidal": "monoidal", "table": "table_order", "extensions": "extensions",
    "dim": "cohomology_dim",
}


def _abelian_name(factors):
    if not factors:
        return "0"
    return " x ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


def _table(obj, caps):
    """GroupTable from a group file; presentations are realized if possible."""
    G = io.group_from_json(obj)
    if isinstance(G, Presentation):
        G, _ = realize_presentation(G, caps)
    return G


def _pi1(obj):
    """Presentation or table from a group file or a simplicial complex file."""
    if "vertices" in obj:
        return pi1_presentation(io.complex_from_json(obj), obj.get("basepoint", 0))
    return io.group_from_json(obj)


def _emit(cfg, data, text):
    if cfg.output == "json":
        print(io.dumps(data))
    else:
        print(text)


# ------------------------------------------------------------------ commands

def cmd_cohomology(args, cfg):
    P = _table(io.load(args.P), cfg.caps)
    A = module_from_generators(P, *_module_args(io.load(args.A)))
    H = cohomology_group(P, A, args.n, cfg.caps)
    data = {"kind": "cohomology", "degree": args.n, "order": H.order,
            "invariant_factors": list(H.invariant_factors)}
    _emit(cfg, data, f"H^{args.n} = {_abelian_name(H.invariant_factors)}")


def _module_args(obj):
    return obj.get("factors", []), {int(k): v for k, v in (obj.get("action") or {}).items()}


def _pointed_text(ps, noun="classes"):
    return f"{len(ps)} {noun}"


def cmd_classify(args, cfg):
    caps = cfg.caps
    kind = args.kind
    if kind == "h1":
        _need(args, "pi1", "G")
        ps = h1_nonabelian(_pi1(io.load(args.pi1)), _table(io.load(args.G), caps), caps)
        data = {"kind": "h1", "order": len(ps), "basepoint": ps.basepoint,
                "representatives": [list(e) for e in ps.elements]}
        _emit(cfg, data, _pointed_text(ps))
    elif kind == "h0-crossed":
        _need(args, "pi1")
        if args.xmod:
            x = io.crossed_module_from_json(io.load(args.xmod))
        elif args.G:
            x = adjoint_crossed_module(_table(io.load(args.G), caps), caps)
        else:
            raise ValidationError("h0-crossed needs --xmod or --G")
        res = h0_crossed(_pi1(io.load(args.pi1)), x, caps)
        kc = ker_coker(x)
        data = {"kind": "h0-crossed", "order": res.table.order,
                "ker_order": kc.ker.order, "coker_order": kc.coker.order,
                "elements": [[list(h), c] for h, c in res.elements]}
        _emit(cfg, data, f"group of order {res.table.order} "
                         f"(Hom(pi1, ker d) x| coker d, |ker d| = {kc.ker.order}, "
                         f"|coker d| = {kc.coker.order})")
    elif kind == "h2":
        _need(args, "twotype", "G")
        t = io.two_type_from_json(io.load(args.twotype))
        classes, report = h2_constant_abelian(t, _table(io.load(args.G), caps), caps)
        data = {"kind": "h2", "order": classes.order,
                "invariant_factors": list(classes.invariant_factors),
                "sequence": report.to_json()}
        _emit(cfg, data, f"H^2 = {_abelian_name(classes.invariant_factors)} "
                         f"(order {classes.order})\n" + _sequence_text(report))
    elif kind == "gerbes":
        _need(args, "twotype", "G")
        t = io.two_type_from_json(io.load(args.twotype))
        res = giraud_h2(t, _table(io.load(args.G), caps), caps)
        data = {"kind": "gerbes", "order": len(res.middle),
                "sequence": res.report.to_json()}
        _emit(cfg, data, f"{len(res.middle)} classes\n" + _sequence_text(res.report))
    elif kind == "extensions":
        _need(args, "P", "G")
        ext = extensions(_table(io.load(args.P), caps), _table(io.load(args.G), caps), caps)
        ps = ext.classes
        data = {"kind": "extensions", "order": len(ps),
                "classes": [{"outer_action": list(e.outer_action),
                             "h2_coordinate": list(e.h2_coordinate)} for e in ps.elements]}
        _emit(cfg, data, _pointed_text(ps))


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValidationError(f"{args.kind} needs " + ", ".join("--" + n for n in missing))


def _sequence_text(report):
    lines = []
    for i, (name, elems, _) in enumerate(report.terms):
        flag = ""
        if 0 < i < len(report.terms) - 1:
            flag = "  exact" if report.exact_at[i - 1] else \
                f"  NOT exact (witness {report.witnesses[i - 1]})"
        lines.append(f"  {name}: order {len(elems)}{flag}")
    return "\n".join(lines)


def cmd_pi1(args, cfg):
    X = io.complex_from_json(io.load(args.complex))
    P = pi1_presentation(X, args.basepoint)
    ab = abelianization(P)
    data = {"kind": "pi1", "generators": P.n_generators,
            "relators": [list(w) for w in P.relators], "abelianization": ab}
    _emit(cfg, data, f"generators: {P.n_generators}\nrelators: "
                     f"{[list(w) for w in P.relators]}\nabelianization: {_abelian_name(ab)}")


def cmd_check_crossed(args, cfg):
    x = io.crossed_module_from_json(io.load(args.xmod))
    kc = ker_coker(x)
    data = {"kind": "crossed-module", "valid": True, "ker_order": kc.ker.order,
            "coker_order": kc.coker.order}
    _emit(cfg, data, f"valid crossed module; |ker d| = {kc.ker.order}, "
                     f"|coker d| = {kc.coker.order}")


def cmd_verify(args, cfg):
    checks = suites.run(args.suite, cfg.caps, cfg.seed, fault=args.inject_fault)
    if cfg.output == "json":
        data = {"kind": "verify", "suite": args.suite,
                "checks": [{"suite": c.suite, "name": c.name, "expected": repr(c.expected),
                            "got": repr(c.got), "ok": c.ok} for c in checks],
                "failed": sum(1 for c in checks if not c.ok)}
        print(io.dumps(data))
    else:
        sys.stdout.write(suites.format_report(checks))
    return 0 if all(c.ok for c in checks) else 1


# ------------------------------------------------------------------- parsing

def build_parser():
    p = argparse.ArgumentParser(prog="locconst",
                                description="Classify locally constant data on finite 2-types.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0)
    for flag, field in CAP_FLAGS.items():
        p.add_argument(f"--cap-{flag}", type=int, default=None, dest=f"cap_{flag}",
                       help=f"override cap {field} (default {getattr(Caps(), field)})")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="H^n(P; A)")
    c.add_argument("-P", required=True, help="group file")
    c.add_argument("-A", required=True, help="module file")
    c.add_argument("-n", type=int, required=True, choices=range(0, 4))
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("classify", help="classification formulas")
    c.add_argument("kind", choices=["h1", "h0-crossed", "h2", "gerbes", "extensions"])
    c.add_argument("--pi1")
    c.add_argument("--G")
    c.add_argument("--P")
    c.add_argument("--xmod")
    c.add_argument("--twotype")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("pi1", help="edge-path presentation of a 2-complex")
    c.add_argument("complex")
    c.add_argument("--basepoint", type=int, default=0)
    c.set_defaults(func=cmd_pi1)

    c = sub.add_parser("check-crossed", help="validate a crossed module file")
    c.add_argument("xmod")
    c.set_defaults(func=cmd_check_crossed)

    c = sub.add_parser("verify", help="oracle-versus-pipeline grids")
    c.add_argument("suite", nargs="?", default="default",
                   choices=sorted(suites.SUITES) + sorted(suites.GROUPS_OF_SUITES))
    c.add_argument("--inject-fault", action="store_true",
                   help="corrupt one map in every exact sequence (tests the tester)")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {CAP_FLAGS[k]: getattr(args, f"cap_{k}") for k in CAP_FLAGS
                 if getattr(args, f"cap_{k}") is not None}
    try:
        cfg = RunConfig(output="json" if args.json else "table", seed=args.seed)
        cfg = cfg.with_caps(**overrides)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, cfg) or 0
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, OSError, KeyError, TypeError) as exc:
        detail = f" (witness {exc.witness})" if getattr(exc, "witness", None) is not None else ""
        print(f"error: {type(exc).__name__}: {exc}{detail}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
