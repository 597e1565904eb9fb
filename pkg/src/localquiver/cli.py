"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .exceptions import InconsistencyError, QuiverError
from .local import ext_between_simples, local_quiver, total_dimension
from .oracle import DEFAULT_PRIME, oracle_ext, oracle_is_simple
from .quiver import Quiver
from .semigroup import (
    PSL2Z_LABELS,
    AlgebraSetting,
    builtin_curve,
    builtin_hereditary_order,
    builtin_numerical_semigroup,
    builtin_path_algebra,
    builtin_psl2z,
    decompose,
    describe_B,
    is_simp,
    westbury_check,
)
from .serialize import (
    dumps,
    export_dot,
    local_to_dict,
    quiver_from_dict,
    setting_from_dict,
    setting_to_dict,
    type_from_data,
)
from .simple import check_simple, enumerate_simple_dimvecs

BUILTINS = ("curve", "path-algebra", "hereditary-order", "psl2z", "numerical-semigroup")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- input helpers -----------------------------------------------------------


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _partitions(text: str) -> list[tuple[int, ...]]:
    return [_ints(part) for part in text.split("/") if part.strip()]


def _load_quiver(path: str) -> Quiver:
    return quiver_from_dict(_load_json(path))


def _builtin(name: str, args) -> AlgebraSetting:
    if name == "curve":
        return builtin_curve()
    if name == "psl2z":
        return builtin_psl2z()
    if name == "path-algebra":
        if not getattr(args, "quiver", None):
            raise UsageError("path-algebra needs --quiver")
        return builtin_path_algebra(_load_quiver(args.quiver))
    if name == "hereditary-order":
        if not getattr(args, "partitions", None):
            raise UsageError("hereditary-order needs --partitions, e.g. 2,1/1,1,1")
        return builtin_hereditary_order(_partitions(args.partitions))
    if name == "numerical-semigroup":
        if not getattr(args, "generators", None):
            raise UsageError("numerical-semigroup needs --generators, e.g. 2,3")
        return builtin_numerical_semigroup(_ints(args.generators))
    raise UsageError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


def _load_setting(args) -> AlgebraSetting:
    source = args.setting
    if source in BUILTINS:
        return _builtin(source, args)
    return setting_from_dict(_load_json(source))


def _vertex_names(setting: AlgebraSetting | None):
    if setting is not None and setting.name == "psl2z":
        return PSL2Z_LABELS
    return None


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _table(rows: list[tuple], header: tuple) -> str:
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(args, payload, text: str) -> None:
    if args.json:
        sys.stdout.write(dumps(payload))
    else:
        print(text)


def _write_dot(path: str | None, dot: str) -> None:
    if path:
        Path(path).write_text(dot, encoding="utf-8")


# -- subcommands -------------------------------------------------------------


def cmd_simple(args) -> int:
    q = _load_quiver(args.quiver)
    e = _ints(args.dimvec)
    verdict = check_simple(q, e)
    _emit(
        args,
        {"dimvec": list(e), "simple": verdict.simple, "reason": verdict.reason},
        f"simple: {str(verdict.simple).lower()}\nreason: {verdict.reason}",
    )
    return 0


def cmd_enumerate(args) -> int:
    q = _load_quiver(args.quiver)
    vecs = enumerate_simple_dimvecs(q, args.bound)
    _emit(
        args,
        {"bound": args.bound, "simples": [list(v) for v in vecs]},
        _table([(_fmt_vec(v), sum(v)) for v in vecs], ("dimvec", "total")),
    )
    return 0


def cmd_local_quiver(args) -> int:
    setting = None
    if args.setting:
        setting = _load_setting(args)
        q = setting.quiver
    elif args.quiver:
        q = _load_quiver(args.quiver)
    else:
        raise UsageError("local-quiver needs --setting or --quiver")
    t = type_from_data(_load_json(args.type))
    loc = local_quiver(q, t)
    payload = local_to_dict(loc)
    if setting is not None:
        payload["total_dimension"] = total_dimension(setting, t)
    _write_dot(args.dot, export_dot(loc.quiver, loc.dimvec, graph_name="Q_xi"))
    rows = [
        (i + 1, _fmt_vec(eps), loc.dimvec[i], loc.quiver.arrows[i][i])
        for i, eps in enumerate(t.epsilons)
    ]
    text = _table(rows, ("vertex", "epsilon", "mult", "loops"))
    arrows = [
        (i + 1, j + 1, c)
        for i, row in enumerate(loc.quiver.arrows)
        for j, c in enumerate(row)
        if c and i != j
    ]
    if arrows:
        text += "\n\n" + _table(arrows, ("from", "to", "arrows"))
    if setting is not None:
        text += f"\n\ntotal dimension: {payload['total_dimension']}"
    _emit(args, payload, text)
    return 0


def cmd_ext(args) -> int:
    q = _load_quiver(args.quiver)
    e, f = _ints(args.e), _ints(args.f)
    value = ext_between_simples(q, e, f, args.same_simple)
    _emit(
        args,
        {"e": list(e), "f": list(f), "same_simple": args.same_simple, "ext": value},
        f"ext: {value}",
    )
    return 0


def cmd_decompose(args) -> int:
    setting = _load_setting(args)
    target = _ints(args.target)
    decs = decompose(setting, target)
    _emit(
        args,
        {"target": list(target), "decompositions": [list(d) for d in decs]},
        _table([(_fmt_vec(d),) for d in decs], ("coefficients",)) if decs else "no decomposition",
    )
    return 0


def cmd_is_simp(args) -> int:
    setting = _load_setting(args)
    target = _ints(args.target)
    ok, witness = is_simp(setting, target)
    text = f"simp: {str(ok).lower()}"
    if witness is not None:
        text += f"\nwitness: {_fmt_vec(witness)}"
    _emit(
        args,
        {"target": list(target), "simp": ok, "witness": list(witness) if witness else None},
        text,
    )
    return 0


def cmd_westbury(args) -> int:
    vec = _ints(args.vector)
    if len(vec) != 5:
        raise UsageError("westbury needs five entries a1,a2,b1,b2,b3")
    ok = westbury_check(*vec)
    _emit(args, {"vector": list(vec), "westbury": ok}, f"westbury: {str(ok).lower()}")
    return 0


def cmd_builtin(args) -> int:
    setting = _builtin(args.name, args)
    _write_dot(args.dot, export_dot(setting.quiver, setting.alpha, _vertex_names(setting), "Q_A"))
    if args.json:
        sys.stdout.write(dumps(setting_to_dict(setting)))
        return 0
    names = _vertex_names(setting) or [str(i + 1) for i in range(setting.quiver.k)]
    rows = [
        (names[i], setting.alpha[i], _fmt_vec(setting.generators[i]), setting.quiver.arrows[i][i])
        for i in range(setting.quiver.k)
    ]
    text = f"setting: {setting.name}\n\n" + _table(rows, ("vertex", "alpha", "generator", "loops"))
    arrows = [
        (names[i], names[j], c)
        for i, row in enumerate(setting.quiver.arrows)
        for j, c in enumerate(row)
        if c and i != j
    ]
    if arrows:
        text += "\n\n" + _table(arrows, ("from", "to", "arrows"))
    print(text)
    return 0


def cmd_describe_b(args) -> int:
    setting = _load_setting(args)
    blocks = describe_B(setting, args.max_path_len)
    payload = {
        "blocks": [
            {
                "from": i + 1,
                "to": j + 1,
                "rows": b.rows,
                "cols": b.cols,
                "reachable": b.reachable,
                "path_counts": list(b.path_counts),
            }
            for (i, j), b in sorted(blocks.items())
        ]
    }
    rows = [
        (f"B{i + 1},{j + 1}", f"{b.rows}x{b.cols}", str(b.reachable).lower(), _fmt_vec(b.path_counts))
        for (i, j), b in sorted(blocks.items())
    ]
    _emit(args, payload, _table(rows, ("block", "size", "reachable", "paths by length")))
    return 0


def cmd_oracle_is_simple(args) -> int:
    q = _load_quiver(args.quiver)
    e = _ints(args.dimvec)
    ok = oracle_is_simple(q, e, trials=args.trials, seed=args.seed, p=args.prime)
    note = "certain" if ok else f"probabilistic ({args.trials} trials)"
    _emit(
        args,
        {"dimvec": list(e), "simple": ok, "certain": ok, "trials": args.trials, "seed": args.seed, "prime": args.prime},
        f"simple: {str(ok).lower()} ({note})",
    )
    return 0


def cmd_oracle_ext(args) -> int:
    q = _load_quiver(args.quiver)
    e, f = _ints(args.e), _ints(args.f)
    res = oracle_ext(q, e, f, seed=args.seed, p=args.prime)
    _emit(
        args,
        {"e": list(e), "f": list(f), **res, "seed": args.seed, "prime": args.prime},
        f"hom: {res['hom']}\next: {res['ext']}",
    )
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="localquiver", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    builtin_params = _Parser(add_help=False)
    builtin_params.add_argument("--partitions", help="hereditary-order partitions, e.g. 2,1/1,1,1")
    builtin_params.add_argument("--generators", help="numerical-semigroup generators, e.g. 2,3")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("simple", parents=[common], help="classify a dimension vector")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dimvec", required=True)
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("enumerate-simples", parents=[common], help="list simple dimension vectors")
    p.add_argument("--quiver", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("local-quiver", parents=[common, builtin_params], help="local quiver setting of a semisimple type")
    p.add_argument("--setting", help="builtin name or setting file")
    p.add_argument("--quiver", help="quiver file (used for Q_A, or for path-algebra)")
    p.add_argument("--type", required=True, help="semisimple type file")
    p.add_argument("--dot", help="write DOT of the local quiver here")
    p.set_defaults(func=cmd_local_quiver)

    p = sub.add_parser("ext", parents=[common], help="Ext^1 between simples")
    p.add_argument("--quiver", required=True)
    p.add_argument("--e", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--same-simple", action="store_true")
    p.set_defaults(func=cmd_ext)

    for name, func, helptext in (
        ("decompose", cmd_decompose, "decompose a dimension vector into generators"),
        ("is-simp", cmd_is_simp, "decide membership in simp A"),
    ):
        p = sub.add_parser(name, parents=[common, builtin_params], help=helptext)
        p.add_argument("--setting", required=True, help="builtin name or setting file")
        p.add_argument("--quiver", help="quiver file for path-algebra")
        p.add_argument("--target", required=True, help="ambient coordinates")
        p.set_defaults(func=func)

    p = sub.add_parser("westbury", parents=[common], help="Westbury's PSL_2(Z) criterion")
    p.add_argument("--vector", required=True, help="a1,a2,b1,b2,b3")
    p.set_defaults(func=cmd_westbury)

    p = sub.add_parser("builtin", parents=[common, builtin_params], help="emit a built-in setting")
    p.add_argument("name", choices=BUILTINS)
    p.add_argument("--quiver", help="quiver file for path-algebra")
    p.add_argument("--dot", help="write DOT of Q_A here")
    p.set_defaults(func=cmd_builtin)

    p = sub.add_parser("describe-b", parents=[common, builtin_params], help="block shape of the algebra B")
    p.add_argument("--setting", required=True)
    p.add_argument("--quiver", help="quiver file for path-algebra")
    p.add_argument("--max-path-len", type=int, default=2)
    p.set_defaults(func=cmd_describe_b)

    p = sub.add_parser("oracle", help="finite-field oracle checks")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    oracle_common = _Parser(add_help=False)
    oracle_common.add_argument("--seed", type=int, default=0)
    oracle_common.add_argument("--prime", type=int, default=DEFAULT_PRIME)

    o = osub.add_parser("is-simple", parents=[common, oracle_common], help="random-representation simplicity test")
    o.add_argument("--quiver", required=True)
    o.add_argument("--dimvec", required=True)
    o.add_argument("--trials", type=int, default=3)
    o.set_defaults(func=cmd_oracle_is_simple)

    o = osub.add_parser("ext", parents=[common, oracle_common], help="Hom/Ext of random representations")
    o.add_argument("--quiver", required=True)
    o.add_argument("--e", required=True)
    o.add_argument("--f", required=True)
    o.set_defaults(func=cmd_oracle_ext)

    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except (QuiverError, OverflowError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
