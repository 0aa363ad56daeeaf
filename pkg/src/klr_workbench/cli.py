"""Command-line front end: ``klr-workbench <subcommand> --p <p> ...``.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass

from .cartan import Arith, Content, parse_signs
from .characters import (
    FormalCharacter,
    column_char,
    gg_coefficient,
    jacobi_trudi,
    shuffle_all,
)
from .crystal import crystal_graph
from .dims import block_graded_dim, branch_table, idempotent_graded_dim, socle_prediction, specht_graded_dim
from .errors import DomainError
from .garnir import garnir_data, garnir_element_symbolic, specht_presentation
from .golden import run_golden
from .klrmod import (
    canonical_base_word,
    character,
    check_relations,
    component_module,
    homogeneous_module,
    hook_module,
    word_graph_component,
)
from .mullineux import mullineux_crystal, mullineux_xu
from .partitions import content, parse_partition
from .roots import ConvexPreorder, root_partitions

SCHEMA = "klr-workbench/1"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    p: int
    signs: str = "default"
    fmt: str = "json"
    seed: int | None = None

    def __post_init__(self):
        if self.p < 2:
            raise DomainError(f"p must be an integer >= 2, got {self.p}")

    def arith(self) -> Arith:
        return Arith(self.p, parse_signs(self.p, self.signs))


def _word(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise DomainError(f"bad word {text!r}; expected comma-separated residues") from None


def _ints(text: str) -> tuple[int, ...]:
    return _word(text)


def _char_json(ch: FormalCharacter) -> list[dict]:
    return ch.to_json()


def cmd_crystal(cfg: Config, args) -> object:
    if args.n < 0:
        raise DomainError(f"--n must be >= 0, got {args.n}")
    graph = crystal_graph(cfg.p, args.n)
    if cfg.fmt == "dot":
        return graph.to_dot()
    if cfg.fmt == "csv":
        return [["source", "color", "target"]] + [
            [",".join(map(str, a)), i, ",".join(map(str, b))] for a, i, b in graph.edges
        ]
    return graph.to_json()


def cmd_mullineux(cfg: Config, args) -> object:
    mu = parse_partition(args.shape)
    rng = random.Random(cfg.seed) if cfg.seed is not None else None
    out: dict = {"shape": list(mu)}
    if args.algo in ("crystal", "both"):
        out["crystal"] = list(mullineux_crystal(cfg.p, mu, rng))
    if args.algo in ("xu", "both"):
        out["xu"] = list(mullineux_xu(cfg.p, mu))
    out["result"] = out.get("crystal", out.get("xu"))
    if args.algo == "both":
        out["agree"] = out["crystal"] == out["xu"]
        if not out["agree"]:
            raise DomainError(f"Mullineux algorithms disagree on {list(mu)}: {out['crystal']} vs {out['xu']}")
    return out


def cmd_dim(cfg: Config, args) -> object:
    if args.kind == "specht":
        mu = parse_partition(_require(args.shape, "--shape"))
        return {"shape": list(mu), "dim_q": specht_graded_dim(cfg.p, mu).to_json()}
    alpha = _alpha(cfg, args)
    if args.kind == "block":
        return {"alpha": alpha.to_json(), "dim_q": block_graded_dim(cfg.p, alpha).to_json()}
    i, j = _word(_require(args.i, "--i")), _word(_require(args.j, "--j"))
    return {"alpha": alpha.to_json(), "i": list(i), "j": list(j),
            "dim_q": idempotent_graded_dim(cfg.p, alpha, i, j).to_json()}


def _require(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required here")
    return value


def _alpha(cfg: Config, args) -> Content:
    if args.alpha is not None:
        return Content.parse(cfg.p, args.alpha)
    if args.shape is not None:
        return content(cfg.p, parse_partition(args.shape))
    raise UsageError("--alpha or --shape is required")


def cmd_branch(cfg: Config, args) -> object:
    mu = parse_partition(args.shape)
    table = branch_table(cfg.p, mu, args.i, args.dir)
    out = table.to_json()
    soc = socle_prediction(cfg.p, mu, args.i, args.dir)
    out["socle"] = soc.to_json() if soc else None
    if cfg.fmt == "csv":
        return [["target", "multiplicity", "provenance"]] + [
            [",".join(map(str, e.target)), str(e.multiplicity), e.provenance] for e in table.entries
        ]
    return out


def cmd_garnir(cfg: Config, args) -> object:
    mu = parse_partition(args.shape)
    if args.node is None:
        return specht_presentation(cfg.p, mu).to_json()
    node = _ints(args.node)
    if len(node) != 2:
        raise DomainError(f"--node must be r,s; got {args.node!r}")
    return {
        "data": garnir_data(cfg.p, mu, node).to_json(),
        "element": garnir_element_symbolic(cfg.p, mu, node).to_json(),
    }


def cmd_module(cfg: Config, args) -> object:
    a = cfg.arith()
    cyclotomic = True
    if args.kind == "hook":
        module = hook_module(a, _require(args.i, "--i"))
    elif args.kind == "homogeneous":
        module = homogeneous_module(a, parse_partition(_require(args.shape, "--shape")))
    else:
        cyclotomic = False
        module = component_module(a, word_graph_component(a, _word(_require(args.seed_word, "--word"))))
    out = module.to_json()
    out["character"] = FormalCharacter(cfg.p, character(module)).to_json()
    if args.check:
        out["relations"] = check_relations(module, cyclotomic=cyclotomic).to_json()
    return out


def cmd_char(cfg: Config, args) -> object:
    a = cfg.arith()
    if args.kind == "shuffle":
        chars = [FormalCharacter.word(cfg.p, _word(w)) for w in args.words]
        return {"character": _char_json(shuffle_all(cfg.p, chars))}
    if args.kind == "column":
        return {"character": _char_json(column_char(a, args.n, args.color))}
    if args.kind == "jacobi-trudi":
        mu = parse_partition(_require(args.shape, "--shape"))
        return {"character": _char_json(jacobi_trudi(a, mu, args.color))}
    composition = _ints(_require(args.composition, "--composition"))
    V = jacobi_trudi(a, parse_partition(args.shape), args.color) if args.shape else column_char(a, sum(composition), args.color)
    base = _word(args.base) if args.base else canonical_base_word(cfg.p, args.color)
    return {
        "base": list(base),
        "composition": list(composition),
        "coefficient": gg_coefficient(a, V, base, composition).to_json(),
    }


def cmd_rootpart(cfg: Config, args) -> object:
    alpha = Content.parse(cfg.p, args.alpha)
    H = max(alpha.height, 1)
    if args.weights:
        order = ConvexPreorder(_ints(args.weights), H)
        order.validate(cfg.p)
    else:
        order = ConvexPreorder.default(cfg.p, H)
    parts = root_partitions(cfg.p, alpha, order)
    if cfg.fmt == "csv":
        return [["index", "left", "imaginary", "right"]] + [
            [k, json.dumps(rp.to_json()["left"]), json.dumps(rp.to_json()["imaginary"]), json.dumps(rp.to_json()["right"])]
            for k, rp in enumerate(parts)
        ]
    return {"alpha": alpha.to_json(), "preorder": order.to_json(), "root_partitions": [rp.to_json() for rp in parts]}


def cmd_selftest(cfg: Config, args) -> object:
    results = run_golden()
    if cfg.fmt == "text":
        lines = [f"{'PASS' if ok else 'FAIL'}  {name}{'  ' + msg if msg else ''}" for name, ok, msg in results]
        return "\n".join(lines) + "\n"
    return {
        "passed": sum(ok for _, ok, _ in results),
        "failed": sum(not ok for _, ok, _ in results),
        "items": [{"name": n, "pass": ok, "message": m} for n, ok, m in results],
    }


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--p", type=int, required=True, help="quantum characteristic (>= 2)")
    parent.add_argument("--eps", default="default", help="sign convention: default or custom:01=1,10=-1,...")
    parent.add_argument("--format", default="json", choices=["json", "csv", "dot", "text"])
    parent.add_argument("--seed", type=int, default=None, help="seed for randomized choices")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="klr-workbench", description="Graded combinatorics of symmetric-group blocks.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("crystal", parents=[common], help="crystal graph on restricted partitions")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_crystal)

    s = sub.add_parser("mullineux", parents=[common], help="Mullineux involution")
    s.add_argument("--shape", required=True)
    s.add_argument("--algo", choices=["crystal", "xu", "both"], default="both")
    s.set_defaults(func=cmd_mullineux)

    s = sub.add_parser("dim", parents=[common], help="graded dimensions")
    s.add_argument("kind", choices=["specht", "block", "idem"])
    s.add_argument("--shape")
    s.add_argument("--alpha")
    s.add_argument("--i")
    s.add_argument("--j")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("branch", parents=[common], help="graded branching table")
    s.add_argument("--shape", required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--dir", choices=["e", "f"], default="e")
    s.set_defaults(func=cmd_branch)

    s = sub.add_parser("garnir", parents=[common], help="Garnir data / Specht presentation")
    s.add_argument("--shape", required=True)
    s.add_argument("--node")
    s.set_defaults(func=cmd_garnir)

    s = sub.add_parser("module", parents=[common], help="homogeneous KLR modules")
    s.add_argument("kind", choices=["hook", "homogeneous", "component"])
    s.add_argument("--i", type=int)
    s.add_argument("--shape")
    s.add_argument("--word", dest="seed_word")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_module)

    s = sub.add_parser("char", parents=[common], help="formal characters")
    s.add_argument("kind", choices=["shuffle", "column", "jacobi-trudi", "gg"])
    s.add_argument("--words", nargs="+", default=[], help="words to shuffle, e.g. --words 0,1 0,1")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--color", type=int, default=1)
    s.add_argument("--shape")
    s.add_argument("--base")
    s.add_argument("--composition")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("rootpart", parents=[common], help="root partitions")
    s.add_argument("--alpha", required=True, help="content as i:count,...")
    s.add_argument("--weights", help="slope weights on alpha_0..alpha_{p-1}")
    s.set_defaults(func=cmd_rootpart)

    s = sub.add_parser("selftest", parents=[common], help="run the embedded golden suite")
    s.set_defaults(func=cmd_selftest)
    return parser


def render(result: object, fmt: str) -> str:
    if isinstance(result, str):
        return result
    if fmt == "csv" and isinstance(result, list):
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(result)
        return buf.getvalue()
    if fmt not in ("json", "text"):
        raise UsageError(f"format {fmt!r} is not available for this subcommand")
    payload = {"schema": SCHEMA}
    payload.update(result)
    if fmt == "text":
        return "\n".join(f"{k}: {json.dumps(v)}" for k, v in payload.items()) + "\n"
    return json.dumps(payload, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags and 0 on --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = Config(args.p, args.eps, args.format, args.seed)
        cfg.arith()
        result = args.func(cfg, args)
        if args.command == "selftest" and isinstance(result, dict) and result["failed"]:
            sys.stdout.write(render(result, cfg.fmt))
            return 1
        if args.command == "selftest" and isinstance(result, str) and "FAIL" in result:
            sys.stdout.write(result)
            return 1
        sys.stdout.write(render(result, cfg.fmt))
        return 0
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"klr-workbench: error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
