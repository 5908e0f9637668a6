"""Command-line entry point: ``convexcodes <subcommand> ...``.

Exit status: 0 on success, 1 when the tool ran but the property checked is
false (verification mismatch, no 1-D realization, conjecture inequality
under ``--strict``), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .bounds import embedding_dimension_bounds
from .code import NeuralCode, canonicalize, code_to_json, format_code, generate_Cn, parse_code
from .construction import construct, verify_construction
from .errors import CodeError
from .intervals import Realization1D, conjecture1_batch, conjecture1_check, openify, realized_code_1d
from .render import render_svg_1d, render_svg_2d
from .search1d import assignment_to_realization, search_dim1


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_code(path: str, strict: bool = False) -> NeuralCode:
    return parse_code(_read(path), strict=strict)


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _load_realization(path: str) -> Realization1D:
    return Realization1D.from_json(_load_json(path))


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit_code(code: NeuralCode, fmt: str) -> str:
    if fmt == "json":
        return _dump(code_to_json(canonicalize(code)))
    return format_code(code)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


# -- subcommands -------------------------------------------------------------------


def cmd_parse(args: argparse.Namespace) -> int:
    code = _load_code(args.file, strict=args.strict)
    print(_emit_code(code, args.format))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    code = _load_code(args.file)
    r = construct(code, preserve_order=args.preserve_order)
    print(_dump(r.to_json()))
    if args.svg:
        _write(args.svg, render_svg_2d(r))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_construction(_load_code(args.file), samples=args.samples, seed=args.seed)
    print(_dump(report.to_json()))
    return 0 if report.passed else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    bounds = embedding_dimension_bounds(_load_code(args.file), refine_with_search=args.refine)
    print(_dump(bounds.to_json()))
    return 0


def cmd_search1d(args: argparse.Namespace) -> int:
    found = search_dim1(_load_code(args.file), max_points=args.max_points)
    if found is None:
        print(_dump({"found": False}))
        return 1
    out = assignment_to_realization(found).to_json()
    out["assignment"] = found.to_json()
    print(_dump(out))
    return 0


def cmd_realize1d(args: argparse.Namespace) -> int:
    print(_emit_code(realized_code_1d(_load_realization(args.file)), args.format))
    return 0


def cmd_openify(args: argparse.Namespace) -> int:
    eps, opened = openify(_load_realization(args.file), strict=args.strict_epsilon)
    print(_dump({"epsilon": str(eps), "realization": opened.to_json()}))
    return 0


def cmd_conjecture1(args: argparse.Namespace) -> int:
    if args.random is not None:
        if args.file:
            raise InputError("give either a realization file or --random, not both")
        reports = conjecture1_batch(args.random, args.neurons, args.seed)
    elif args.file:
        reports = [conjecture1_check(_load_realization(args.file))]
    else:
        raise InputError("conjecture1 needs a realization file or --random N")

    unequal = [(i, rep) for i, rep in enumerate(reports) if not rep.equal]
    if unequal and args.results_dir:
        outdir = Path(args.results_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, rep in unequal:
            tag = rep.seed if rep.seed is not None else i
            _write(str(outdir / f"counterexample-{tag}.json"), _dump(rep.to_json()) + "\n")

    if args.random is None:
        print(_dump(reports[0].to_json()))
    else:
        summary = {
            "instances": len(reports),
            "neurons": args.neurons,
            "seed": args.seed,
            "unequal": len(unequal),
            "reports": [rep.to_json() for rep in reports] if args.full else None,
            "unequal_seeds": [rep.seed for _, rep in unequal],
        }
        print(_dump(summary))
    return 1 if (unequal and args.strict) else 0


def cmd_cn(args: argparse.Namespace) -> int:
    print(_emit_code(generate_Cn(args.n), args.format))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    text = _read(args.file)
    stripped = text.lstrip()
    if stripped.startswith("{") and "intervals" in json.loads(stripped):
        svg = render_svg_1d(Realization1D.from_json(json.loads(stripped)))
    else:
        svg = render_svg_2d(construct(parse_code(text), preserve_order=args.preserve_order))
    if args.output:
        _write(args.output, svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", help="validate a code file and print it canonically")
    s.add_argument("file")
    s.add_argument("--strict", action="store_true", help="reject repeated codewords")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("construct", help="simplex-atom realization as JSON")
    s.add_argument("file")
    s.add_argument("--svg", metavar="OUT", help="also draw the panels (k <= 3)")
    s.add_argument("--preserve-order", action="store_true", help="order atoms by listing order")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check the construction end to end")
    s.add_argument("file")
    s.add_argument("--samples", type=int, default=32)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", help="embedding-dimension bounds")
    s.add_argument("file")
    s.add_argument("--refine", action="store_true", help="sharpen with the exact 1-D search")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("search1d", help="search for a realization on the line")
    s.add_argument("file")
    s.add_argument("--max-points", type=int, default=None)
    s.set_defaults(func=cmd_search1d)

    s = sub.add_parser("realize1d", help="code of a Realization1D JSON file")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_realize1d)

    s = sub.add_parser("openify", help="eps/3 open-ification of a Realization1D")
    s.add_argument("file")
    s.add_argument("--strict-epsilon", action="store_true", help="fail instead of using eps = 1")
    s.set_defaults(func=cmd_openify)

    s = sub.add_parser("conjecture1", help="compare codes before and after open-ification")
    s.add_argument("file", nargs="?")
    s.add_argument("--random", type=int, metavar="N", help="run N seeded random instances")
    s.add_argument("--neurons", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--strict", action="store_true", help="exit 1 when any code changes")
    s.add_argument("--full", action="store_true", help="include every report in batch output")
    s.add_argument("--results-dir", default=None, help="write counterexample reports here")
    s.set_defaults(func=cmd_conjecture1)

    s = sub.add_parser("cn", help="print the code of all (n-1)-subsets of [n]")
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_cn)

    s = sub.add_parser("render", help="SVG of a code's construction or of a Realization1D")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--preserve-order", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CodeError, InputError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
