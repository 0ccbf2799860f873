"""Command line entry point.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, weyl
from .errors import GroupError, SpecError
from .groupspec import build, parse_spec
from .jordan import jordan_constant
from .perms import ELEMENT_CAP, SUBGROUP_CAP, element_order
from .picard import config_for_degree, graph_automorphisms
from .verify import VerifyConfig, run_all

DEFAULTS = {
    "subgroup_cap": SUBGROUP_CAP,
    "element_cap": ELEMENT_CAP,
    "out": "report.json",
    "deterministic": False,
    "only": None,
}


class UsageError(Exception):
    pass


def _coerce(key, value: str):
    if key in ("subgroup_cap", "element_cap"):
        try:
            v = int(value)
        except ValueError:
            raise UsageError(f"{key} must be an integer, got {value!r}") from None
        if v < 1:
            raise UsageError(f"{key} must be positive")
        return v
    if key == "deterministic":
        low = value.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise UsageError(f"deterministic must be a boolean, got {value!r}")
    return value


def read_config_file(path: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
    out = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in DEFAULTS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _coerce(key, value)
    return out


def resolve_config(args) -> dict:
    """Flags override the config file, which overrides defaults."""
    conf = dict(DEFAULTS)
    if args.config:
        conf.update(read_config_file(args.config))
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None and val is not False:
            conf[key] = val
    return conf


def _emit(args, payload: dict, text_lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def cmd_verify(args) -> int:
    conf = resolve_config(args)
    out = conf["out"]
    parent = os.path.dirname(os.path.abspath(out))
    if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise UsageError(f"cannot write report to {out}")
    cfg = VerifyConfig(subgroup_cap=conf["subgroup_cap"], element_cap=conf["element_cap"], out=out,
                       deterministic=conf["deterministic"], only=conf["only"])
    try:
        report = run_all(cfg)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    try:
        with open(out, "w") as fh:
            fh.write(report.to_json())
    except OSError as exc:
        raise UsageError(f"cannot write report to {out}: {exc.strerror}") from None
    s = report.summary
    if args.json:
        print(report.to_json(), end="")
    else:
        for r in report.checks:
            print(f"{r.status.upper():4}  {r.check_id}")
        print(f"{s['pass_count']} passed, {s['fail_count']} failed, {s['skip_count']} skipped; report: {out}")
    return 0 if report.ok else 1


def cmd_jordan(args) -> int:
    conf = resolve_config(args)
    spec = parse_spec(args.spec)
    G = build(spec, element_cap=conf["element_cap"])
    res = jordan_constant(G, cap=conf["subgroup_cap"])
    witness = [str(g) for g in res.witness_subgroup.generators]
    payload = {"spec": str(spec), "order": res.group_order, "nu": res.nu, "jordan": res.jordan,
               "method": res.method, "witness_order": res.witness_subgroup.order,
               "witness_generators": witness}
    if not res.exact:
        payload["lower_bound"] = res.lower_bound
    J = res.jordan if res.exact else f">= {res.lower_bound} (lower-bound-only)"
    _emit(args, payload, [
        f"group    {spec}",
        f"|G|      {res.group_order}",
        f"nu       {res.nu}",
        f"J        {J}",
        f"method   {res.method}",
        f"witness  order {res.witness_subgroup.order}, generated by {', '.join(witness) or '()'}",
    ])
    return 0


def cmd_lines(args) -> int:
    d = args.degree
    if not 3 <= d <= 9:
        raise UsageError("degree must be between 3 and 9")
    cfg = config_for_degree(d)
    graph = cfg.graph()
    order = graph_automorphisms(graph).order if cfg.names else 1
    payload = {"degree": d, "line_count": len(cfg.names), "lines": list(cfg.names),
               "gram": [list(r) for r in cfg.gram], "edges": [list(e) for e in graph.edges()],
               "automorphism_order": order}
    text = [f"degree {d}: {len(cfg.names)} lines", "lines: " + " ".join(cfg.names)]
    if cfg.names:
        w = max(len(n) for n in cfg.names)
        text.append("gram:")
        for name, row in zip(cfg.names, cfg.gram):
            text.append(f"  {name:>{w}} " + " ".join(f"{x:2d}" for x in row))
    text.append("edges: " + " ".join(f"{a}-{b}" for a, b in graph.edges()))
    if graph.is_cycle():
        text.append(f"dual graph: {len(cfg.names)}-cycle" + (" (hexagon)" if len(cfg.names) == 6 else ""))
    text.append(f"automorphism group order: {order}")
    _emit(args, payload, text)
    return 0


def cmd_weyl(args) -> int:
    g = weyl.parse_element(args.element)
    p = weyl.line_action(g)
    fixed = sorted(weyl.fixed_lines(g), key=weyl.lines().names.index)
    payload = {"element": str(g), "rho": str(weyl.rho(g)), "order": element_order(p),
               "line_permutation": weyl.line_cycles(p), "fixed_lines": fixed}
    _emit(args, payload, [
        f"element         {g}",
        f"rho             {weyl.rho(g)}",
        f"order           {element_order(p)}",
        f"on lines        {weyl.line_cycles(p)}",
        f"fixed lines     {{{', '.join(fixed)}}}",
    ])
    return 0


def build_parser() -> argparse.ArgumentParser:
    def globals_parser(default):
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--config", default=default, help="key = value config file")
        g.add_argument("--json", action="store_true", default=default, help="machine-readable output")
        return g

    # the copies on each subcommand must not reset values given before it
    common = globals_parser(argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="dpjordan", parents=[globals_parser(None)],
                                description="Jordan constants and del Pezzo line configurations")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run the verification suite")
    v.add_argument("--only", help="run one check id (or an id prefix such as lemma-wd5)")
    v.add_argument("--out", help="report path (default report.json)")
    v.add_argument("--deterministic", action="store_true", help="zero all timings")
    v.add_argument("--subgroup-cap", dest="subgroup_cap", type=int)
    v.add_argument("--element-cap", dest="element_cap", type=int)
    v.set_defaults(func=cmd_verify)

    j = sub.add_parser("jordan", parents=[common], help="Jordan constant of a group spec")
    j.add_argument("spec")
    j.add_argument("--subgroup-cap", dest="subgroup_cap", type=int)
    j.add_argument("--element-cap", dest="element_cap", type=int)
    j.set_defaults(func=cmd_jordan)

    ln = sub.add_parser("lines", parents=[common], help="lines on a blow-up of the plane")
    ln.add_argument("--degree", type=int, required=True)
    ln.set_defaults(func=cmd_lines)

    w = sub.add_parser("weyl", parents=[common], help="act with an element of W(D5) on the 16 lines")
    w.add_argument("element")
    w.set_defaults(func=cmd_weyl)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, SpecError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
