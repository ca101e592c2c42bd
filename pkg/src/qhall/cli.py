"""Command-line front end.

Quiver documents are JSON objects ``{"vertices": n, "arrows": [[...], ...]}``
where ``arrows[i][j]`` counts arrows from ``i`` to ``j``.  Ideal documents add
``"blocks": [{"gamma": [...], "n": k, "generators": ["literal", ...]}, ...]``.
Operands use the literal syntax of :mod:`qhall.literal`, e.g. ``x@1``,
``x[0,1]+x[0,2]@2`` or ``z^-1@1``.

Exit statuses: 0 ok, 2 parse error, 3 precondition violated, 4 verification
failure, 5 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .coha import CohaElem, CohaSeriesElem, ResourceError, coha_mul, primitive_dims, star_mul, SymmetryError
from .kha import KhaElem, chern, kha_mul
from .literal import LiteralError, format_grade, parse_poly
from .modlf import (
    CyclicModule,
    GradeRangeError,
    IllDefinedActionError,
    InsufficientOrderError,
    LargeIdealPresentation,
)
from .quiver import DimensionError, PreconditionError, Quiver, SymmetryRequiredError
from .symfun import LaurentPoly, MultiPoly
from .twist import TwistContext, verification_suite

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY, EXIT_RESOURCE = 0, 2, 3, 4, 5

EPILOG = """exit statuses:
  0  success
  2  parse error (operand literal, quiver or ideal document, arguments)
  3  precondition violated (non-symmetric quiver, grade mismatch, non-symmetric operand, ...)
  4  verification failure (twist-verify found a FAIL)
  5  resource limit exceeded
"""


class ParseFailure(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    quiver: Quiver
    operands: List[str] = field(default_factory=list)
    order: int = 5
    vertex_order: Optional[Tuple[int, ...]] = None
    seed: int = 0
    grades: Optional[Tuple[int, ...]] = None
    fmt: str = "pretty"
    ideal_path: Optional[str] = None
    action: str = "coha"
    l_max: int = 6

    def __post_init__(self):
        if self.order < 1:
            raise PreconditionError("--order must be at least 1")


class Output:
    def __init__(self, fmt: str, command: str):
        self.fmt = fmt
        self.command = command
        self.lines: List[str] = []

    def result(self, pretty: str, **fields):
        if self.fmt == "records":
            items = [("command", self.command)] + list(fields.items())
            self.lines.append(" ".join(f"{k}={_rec(v)}" for k, v in items))
        else:
            self.lines.append(pretty)

    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _rec(v) -> str:
    s = str(v)
    return json.dumps(s) if (" " in s or not s) else s


def _load_quiver(args) -> Quiver:
    try:
        if args.quiver:
            with open(args.quiver) as fh:
                return Quiver.loads(fh.read())
        if args.arrows:
            rows = [[int(x) for x in r.split(",")] for r in args.arrows.split(";")]
            return Quiver(tuple(tuple(r) for r in rows))
        return Quiver.one_vertex(args.loops)
    except (json.JSONDecodeError, ValueError, KeyError, OSError) as exc:
        raise ParseFailure(f"cannot read quiver: {exc}") from None


def _grade(text: Optional[str], q: Quiver) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        g = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseFailure(f"bad grade {text!r}") from None
    return q.check_grade(g)


def _operand(text: str, q: Quiver, laurent: bool):
    poly, g = parse_poly(text, None, q.vertex_count)
    if laurent and isinstance(poly, MultiPoly):
        poly = LaurentPoly(poly.spec, poly.terms)
    if not laurent and isinstance(poly, LaurentPoly):
        raise PreconditionError(f"operand {text!r} uses z variables; this command expects x")
    if laurent:
        return KhaElem(q, g, poly)
    return CohaElem(q, g, poly)


def _fmt(p, g) -> str:
    return f"{p.to_str()} @{format_grade(g)}"


def _need(cfg: JobConfig, k: int):
    if len(cfg.operands) != k:
        raise ParseFailure(f"{cfg.command} takes {k} operand(s), got {len(cfg.operands)}")


def run(cfg: JobConfig) -> Tuple[int, str]:
    """Execute one job; returns ``(exit status, output text)``."""
    out = Output(cfg.fmt, cfg.command)
    q = cfg.quiver
    status = EXIT_OK
    if cfg.command in ("coha-mul", "coha-star"):
        _need(cfg, 2)
        a, b = (_operand(s, q, False) for s in cfg.operands)
        if cfg.command == "coha-mul":
            r = coha_mul(a, b)
        else:
            from .quiver import psi_standard_matrix

            r = star_mul(a, b, psi_standard_matrix(q, cfg.vertex_order))
        out.result(_fmt(r.poly, r.gamma), grade=format_grade(r.gamma), result=r.poly.to_str())
    elif cfg.command == "kha-mul":
        _need(cfg, 2)
        a, b = (_operand(s, q, True) for s in cfg.operands)
        r = kha_mul(a, b)
        out.result(_fmt(r.laurent, r.gamma), grade=format_grade(r.gamma), result=r.laurent.to_str())
    elif cfg.command == "chern":
        _need(cfg, 1)
        a = _operand(cfg.operands[0], q, True)
        r = chern(a, cfg.order)
        out.result(f"{_fmt(r.series, r.gamma)} + O({r.order})", grade=format_grade(r.gamma),
                   order=r.order, result=r.series.to_str())
    elif cfg.command == "twist-verify":
        ctx = TwistContext(q, cfg.order, cfg.vertex_order)
        gmax = cfg.grades or tuple([1] * q.vertex_count)
        rep = verification_suite(ctx, gmax, seed=cfg.seed)
        out.result(f"# seed={cfg.seed} order={cfg.order} grades<={format_grade(gmax)}",
                   seed=cfg.seed, order=cfg.order, grades=format_grade(gmax))
        for r in rep.results:
            out.result(r.line(), check=r.name, status="PASS" if r.ok else "FAIL", witness=r.witness)
        npass = sum(r.ok for r in rep.results)
        out.result(f"# {npass}/{rep.count} passed", passed=npass, total=rep.count)
        if not rep.ok:
            status = EXIT_VERIFY
    elif cfg.command == "module-act":
        _need(cfg, 2)
        if not cfg.ideal_path:
            raise ParseFailure("module-act needs --ideal PATH")
        try:
            with open(cfg.ideal_path) as fh:
                ideal = LargeIdealPresentation.loads(fh.read(), q)
        except (json.JSONDecodeError, KeyError, TypeError, OSError) as exc:
            raise ParseFailure(f"cannot read ideal: {exc}") from None
        mod = CyclicModule(ideal)
        m = mod.reduce(_operand(cfg.operands[1], q, False))
        if cfg.action == "kha":
            f = _operand(cfg.operands[0], q, True)
            r = mod.act_kha(TwistContext(q, cfg.order, cfg.vertex_order), f, m)
        else:
            f = _operand(cfg.operands[0], q, False)
            if cfg.action == "coha":
                r = mod.act_coha(f, m)
            else:
                ctx = TwistContext(q, cfg.order, cfg.vertex_order)
                r = mod.act_circ(ctx, f.truncate(cfg.order), m)
        lift = mod.lift(r).poly
        out.result(_fmt(lift, r.gamma), grade=format_grade(r.gamma), result=lift.to_str())
    elif cfg.command == "prim-dims":
        gmax = cfg.grades or tuple([2] * q.vertex_count)
        table = primitive_dims(q, gmax, cfg.l_max)
        for (g, l), v in sorted(table.items()):
            out.result(f"gamma={format_grade(g)} l={l} dim={v}", gamma=format_grade(g), l=l, dim=v)
    else:
        raise ParseFailure(f"unknown command {cfg.command}")
    return status, out.text()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--quiver", metavar="PATH", help="quiver JSON document")
    src.add_argument("--arrows", metavar="ROWS", help="arrow matrix inline, rows separated by ';' (e.g. '0,1;1,0')")
    src.add_argument("--loops", type=int, default=0, help="one-vertex quiver with this many loops (default 0)")
    common.add_argument("--order", type=int, default=5, metavar="N", help="truncation order (default 5)")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="sampling seed (default 0)")
    common.add_argument("--grades", metavar="RANGE", help="maximal grade vector, e.g. '2' or '1,1'")
    common.add_argument("--vertex-order", metavar="PERM", help="vertex order, e.g. '1,0'")
    common.add_argument("--format", choices=("pretty", "records"), default="pretty")

    p = argparse.ArgumentParser(prog="qhall", description="Hall algebras of quivers as shuffle algebras.",
                                epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)
    for name, n, helptext in (
        ("coha-mul", 2, "shuffle product in the CoHA"),
        ("coha-star", 2, "sign-twisted star product (symmetric quivers)"),
        ("kha-mul", 2, "product in the K-theoretic Hall algebra"),
        ("chern", 1, "Chern character z -> e^x, truncated at --order"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext, epilog=EPILOG,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("operands", nargs=n, metavar="OPERAND")
    sub.add_parser("twist-verify", parents=[common], help="twist identities and twisted Chern homomorphisms",
                   epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sp = sub.add_parser("module-act", parents=[common], help="act on a cyclic locally finite module",
                        epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("--ideal", metavar="PATH", required=True, help="ideal presentation JSON")
    sp.add_argument("--action", choices=("coha", "circ", "kha"), default="coha")
    sp.add_argument("operands", nargs=2, metavar="OPERAND",
                    help="F then M: F acts on the class of M (x literals; z literals for --action kha)")
    sp = sub.add_parser("prim-dims", parents=[common], help="dimensions of indecomposables",
                        epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("--lmax", type=int, default=6, metavar="L")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        q = _load_quiver(args)
        vo = tuple(int(x) for x in args.vertex_order.split(",")) if args.vertex_order else None
        cfg = JobConfig(
            command=args.command,
            quiver=q,
            operands=list(getattr(args, "operands", []) or []),
            order=args.order,
            vertex_order=vo,
            seed=args.seed,
            grades=_grade(args.grades, q),
            fmt=args.format,
            ideal_path=getattr(args, "ideal", None),
            action=getattr(args, "action", "coha"),
            l_max=getattr(args, "lmax", 6),
        )
        status, text = run(cfg)
    except (ParseFailure, LiteralError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SymmetryRequiredError as exc:
        i, j = exc.pair
        print(f"precondition: quiver is not symmetric at ({i},{j}): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (PreconditionError, DimensionError, SymmetryError, GradeRangeError, IllDefinedActionError,
            InsufficientOrderError, ValueError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
