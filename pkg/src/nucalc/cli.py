"""``nu``: batch front end emitting line-delimited JSON.

Exit codes: 0 equivalent / success, 1 distinguished, 2 unknown, 64 usage
error, 65 parse or type error, 70 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from . import abstract, concrete
from .equiv import Budgets, Equivalent, check_equivalence
from .equiv.parametric import ParamWitness
from .errors import NuError, NuSyntaxError, TypeCheckError
from .gen import gen_corpus
from .lang import parse_comp, parse_type, pretty, typecheck
from .worlds import World

EX_OK, EX_USAGE, EX_DATAERR, EX_SOFTWARE = 0, 64, 65, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class Check:
    path: str


@dataclass(frozen=True)
class Eval:
    path: str
    semantics: str
    world: World
    supply: int
    fuel: int


@dataclass(frozen=True)
class Equiv:
    path_a: str
    path_b: str
    type: object
    method: str
    budgets: Budgets
    emit_proof: str | None = None
    pretty: bool = False


@dataclass(frozen=True)
class Corpus:
    seed: int
    count: int
    depth: int


def parse_world(text: str) -> World:
    """``"{0,1}"``, ``"0,1"`` or ``"[0, 1]"``."""
    inner = text.strip().strip("{}[]").strip()
    if not inner:
        return World()
    if not re.fullmatch(r"\d+(\s*,\s*\d+)*", inner):
        raise UsageError(f"bad world {text!r}")
    return World(int(x) for x in inner.split(","))


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if n < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nu", description="Workbench for a call-by-value language with fresh names.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="parse and typecheck a term")
    c.add_argument("path", help="term file, or - for stdin")

    e = sub.add_parser("eval", help="run a term under either semantics")
    e.add_argument("path", help="term file, or - for stdin")
    e.add_argument("--semantics", choices=("concrete", "abstract"), default="concrete")
    e.add_argument("--world", default="{}", help='starting world for the abstract semantics, e.g. "{0,1}"')
    e.add_argument("--supply", type=_nonneg, default=0, help="starting name supply for the concrete semantics")
    e.add_argument("--fuel", type=_nonneg, default=1000)

    q = sub.add_parser("equiv", help="certify or refute equivalence of two terms")
    q.add_argument("path_a", help="left term file, or - for stdin")
    q.add_argument("path_b", help="right term file")
    q.add_argument("--type", required=True, dest="ty", help='type of both terms, e.g. "name -> bool"')
    q.add_argument("--method", choices=("direct", "parametric", "oracle"), default="direct",
                   help="co-span proof, span-indexed relation, or observation search (default: direct)")
    q.add_argument("--depth", type=_nonneg, default=4, help="maximum observation depth for the oracle")
    q.add_argument("--fuel", type=_nonneg, default=1000, help="function applications allowed per run")
    q.add_argument("--ext", type=_nonneg, default=1, help="fresh names added when probing functions")
    q.add_argument("--budget", type=_nonneg, default=256, help="fresh-name matchings tried by the parametric search")
    q.add_argument("--emit-proof", dest="emit_proof", metavar="OUT.json",
                   help="write the certificate here when the verdict is equivalent")
    q.add_argument("--pretty", action="store_true", help="also print a human-readable certificate to stderr")

    g = sub.add_parser("corpus", help="emit seeded random well-typed terms")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=_nonneg, default=10, help="number of terms")
    g.add_argument("--depth", type=_nonneg, default=4, help="maximum AST depth")
    return p


def to_command(argv: list[str]):
    a = build_parser().parse_args(argv)
    if a.cmd == "check":
        return Check(a.path)
    if a.cmd == "eval":
        return Eval(a.path, a.semantics, parse_world(a.world), a.supply, a.fuel)
    if a.cmd == "equiv":
        try:
            ty = parse_type(a.ty)
        except NuSyntaxError as exc:
            raise UsageError(f"bad type {a.ty!r}: {exc}")
        budgets = Budgets(fuel=a.fuel, ext=a.ext, budget=a.budget, depth=a.depth, oracle_fuel=a.fuel)
        return Equiv(a.path_a, a.path_b, ty, a.method, budgets, a.emit_proof, a.pretty)
    return Corpus(a.seed, a.count, a.depth)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    term = parse_comp(_read(path))
    return term, typecheck(term)


def _emit(out, obj) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


# human-readable certificates

def _paint(text: str, code: str) -> str:
    if os.environ.get("NU_COLOR", "").lower() in ("1", "always", "true", "yes"):
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _fmt_inj(inj) -> str:
    body = ", ".join(f"{a}↦{b}" for a, b in inj.items())
    return "[" + body + "]"


def render_certificate(cert) -> str:
    """Describe a certificate in terms of apex, low point and legs."""
    lines = []
    if isinstance(cert, abstract.TProof):
        lines.append(_paint("co-span proof", "1"))
        lines.append(f"  left world  {cert.x.dom!r}")
        lines.append(f"  right world {cert.x2.dom!r}")
        lines.append(f"  apex        {_paint(repr(cert.apex), '36')}")
        lines.append(f"  leg x       {_fmt_inj(cert.x)}")
        lines.append(f"  leg x'      {_fmt_inj(cert.x2)}")
        lines.append(f"  equal at {cert.p.type}: {cert.p.evidence}")
        return "\n".join(lines)
    if cert is abstract.BOT_PROOF:
        return _paint("both sides diverge", "1")
    indent = ""
    while isinstance(cert, ParamWitness):
        s = cert.span
        lines.append(indent + _paint(f"related at {cert.type}", "1"))
        lines.append(indent + f"  span {s.left!r} <- {_paint(repr(s.low), '36')} -> {s.right!r}")
        lines.append(indent + f"  low point {s.low!r}, legs u {_fmt_inj(s.u)}, u' {_fmt_inj(s.u_right)}")
        cert = cert.inner
        indent += "  "
    lines.append(indent + f"evidence {cert}")
    return "\n".join(lines)


def run(cmd, out=None, err=None) -> int:
    """Execute a parsed command, writing JSON lines to ``out``; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    if isinstance(cmd, Check):
        _, ty = _load(cmd.path)
        _emit(out, {"type": str(ty)})
        return EX_OK
    if isinstance(cmd, Eval):
        term, _ = _load(cmd.path)
        if cmd.semantics == "concrete":
            res = concrete.run(term, cmd.supply, cmd.fuel)
            if res is concrete.DIVERGE:
                _emit(out, {"status": "diverge"})
            else:
                _emit(out, {"status": "done", "supply": res.supply, "value": concrete.to_json(res.value)})
        else:
            res = abstract.eval_abstract(cmd.world, {}, term, cmd.fuel)
            _emit(out, abstract.tvalue_to_json(res))
        return EX_OK
    if isinstance(cmd, Equiv):
        a, ta = _load(cmd.path_a)
        b, tb = _load(cmd.path_b)
        for t, path in ((ta, cmd.path_a), (tb, cmd.path_b)):
            if t != cmd.type:
                raise TypeCheckError(f"{path} has type {t}, not {cmd.type}", None, cmd.type, t)
        verdict = check_equivalence(a, b, cmd.type, cmd.method, cmd.budgets)
        _emit(out, verdict.to_json())
        if isinstance(verdict, Equivalent):
            if cmd.emit_proof:
                with open(cmd.emit_proof, "w", encoding="utf-8") as fh:
                    json.dump(verdict.certificate.to_json(), fh, indent=2)
                    fh.write("\n")
            if cmd.pretty:
                err.write(render_certificate(verdict.certificate) + "\n")
        return verdict.exit_code
    if isinstance(cmd, Corpus):
        for term, ty in gen_corpus(cmd.seed, cmd.count, cmd.depth):
            _emit(out, {"type": str(ty), "term": pretty(term)})
        return EX_OK
    raise UsageError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(to_command(argv))
    except UsageError as exc:
        _emit(sys.stderr, {"error": "usage", "message": str(exc)})
        return EX_USAGE
    except (NuSyntaxError, TypeCheckError) as exc:
        _emit(sys.stderr, {"error": type(exc).__name__, "message": str(exc)})
        return EX_DATAERR
    except OSError as exc:
        _emit(sys.stderr, {"error": "io", "message": str(exc)})
        return EX_USAGE
    except (NuError, AssertionError) as exc:
        _emit(sys.stderr, {"error": "internal", "message": f"{type(exc).__name__}: {exc}"})
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
