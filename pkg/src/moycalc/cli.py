"""Command-line front end.

Exit codes: 0 when everything evaluated and every checked identity or bound
holds, 1 when a check failed, 2 for invalid input or an exceeded cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .braid import ColoredBraid, InvalidBraid, invariant, unnormalized_invariant
from .laurent import format_degree
from .statesum import CapExceeded, EmbeddingError, bracket, bracket_naive, get_caps, set_caps
from .web import InvalidWeb, TrackWeb

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

EPILOG = """\
inputs are a path, '-' for stdin, or inline JSON
  web:   {"strands": 2, "top_colors": [2, 0], "slices": [{"pos": 1, "dir": "right", "color": 1}, ...]}
  braid: {"strands": 2, "color": 1, "word": [1, 1, 1]}   (or "colors": [...] per strand)

environment:
  MOYCALC_STATE_CAP    default cap on enumerated states (naive evaluation), 100000
  MOYCALC_SECTION_CAP  default cap on cross-sections per sweep layer, 2000000
"""


@dataclass
class RunConfig:
    subcommand: str
    N: Optional[int] = None
    M: Optional[int] = None
    m: Optional[int] = None
    source: Optional[str] = None
    state_cap: Optional[int] = None
    section_cap: Optional[int] = None
    workers: int = 1
    fmt: str = "json"

    def validate(self) -> None:
        for name in ("state_cap", "section_cap"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if self.workers < 1:
            raise ValueError("--workers must be positive")
        if self.N is not None and self.N < 1:
            raise ValueError("N must be positive")
        if self.M is not None and self.M < 1:
            raise ValueError("M must be positive")
        if self.m is not None and self.m < 0:
            raise ValueError("m must be nonnegative")


class InputError(ValueError):
    pass


def load_json(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_web(source: str) -> TrackWeb:
    data = load_json(source)
    if not isinstance(data, dict):
        raise InputError("a web must be a JSON object")
    return TrackWeb.from_json(data)


def load_braid(source: str, m: Optional[int] = None) -> ColoredBraid:
    data = load_json(source)
    if not isinstance(data, dict):
        raise InputError("a braid must be a JSON object")
    D = ColoredBraid.from_json(data)
    if m is not None:
        D = ColoredBraid.uniform(D.b, m, D.word)
    D.validate()
    return D


def parse_range(text: str) -> List[int]:
    """``a..b`` (inclusive), ``a,b,c`` or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or a list of integers, got {text!r}") from None


def _emit(obj, fmt: str, text: str) -> None:
    print(json.dumps(obj) if fmt == "json" else text)


def cmd_eval_web(cfg: RunConfig, method: str) -> int:
    w = load_web(cfg.source)
    if method == "naive":
        value = bracket_naive(w, cfg.N)
    else:
        value = bracket(w, cfg.N, workers=cfg.workers)
    rng = value.degree_range()
    text = f"<web>_{cfg.N} = {value}"
    if rng is not None:
        text += f"\ndegrees {format_degree(rng[0])} .. {format_degree(rng[1])}"
    _emit(value.to_json(), cfg.fmt, text)
    return EXIT_OK


def cmd_invariant(cfg: RunConfig) -> int:
    D = load_braid(cfg.source, cfg.m)
    raw = unnormalized_invariant(D, cfg.N)
    P = invariant(D, cfg.N)
    obj = {"N": cfg.N, "braid": D.to_json(), "P_N": P.to_json(), "unnormalized": raw.to_json()}
    text = f"P_{cfg.N} = {P}\n<D>_{cfg.N} = {raw}"
    _emit(obj, cfg.fmt, text)
    return EXIT_OK


def cmd_verify_composition(cfg: RunConfig) -> int:
    from .composition import verify_composition

    w = load_web(cfg.source)
    rep = verify_composition(w, cfg.M, cfg.N, workers=cfg.workers)
    text = "\n".join([
        f"M={rep.M} N={rep.N} holds={rep.holds}",
        f"lhs <web>_{rep.M + rep.N} = {rep.lhs}",
        f"rhs over {len(rep.terms)} labellings = {rep.rhs}",
    ])
    _emit(rep.to_json(), cfg.fmt, text)
    return EXIT_OK if rep.holds else EXIT_FAILED


def _report_text(rep) -> str:
    win = f"[{format_degree(rep.window[0])}, {format_degree(rep.window[1])}]"
    obs = "zero" if rep.observed is None else \
        f"[{format_degree(rep.observed[0])}, {format_degree(rep.observed[1])}]"
    bad = sum(1 for r in rep.rows if not r.holds)
    extra = f", {len(rep.rows)} resolutions, {bad} outside" if rep.rows else ""
    return f"{rep.kind}: window {win} observed {obs} holds={rep.holds}{extra}\n  {rep.note}"


def cmd_bounds(cfg: RunConfig) -> int:
    from .bounds import chain_level_bounds_check, polynomial_bounds_check

    D = load_braid(cfg.source, cfg.m)
    reports = [chain_level_bounds_check(D, cfg.N), polynomial_bounds_check(D, cfg.N)]
    text = "\n".join(_report_text(r) for r in reports)
    _emit([r.to_json() for r in reports], cfg.fmt, text)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED


def cmd_convergence(cfg: RunConfig, Ns: Sequence[int]) -> int:
    from .bounds import mfw_report

    D = load_braid(cfg.source, cfg.m)
    table = mfw_report(D, Ns)
    _emit(table.to_json(), cfg.fmt, table.render())
    return EXIT_OK if table.holds else EXIT_FAILED


def cmd_selftest(cfg: RunConfig, only: Optional[Sequence[int]]) -> int:
    from .acceptance import CRITERIA, run_criterion

    results = []
    for num, *_ in CRITERIA:
        if only and num not in only:
            continue
        res = run_criterion(num)
        if cfg.fmt == "text":
            print(res.line(), flush=True)
        results.append(res)
    if cfg.fmt == "json":
        print(json.dumps([
            {"criterion": r.number, "name": r.name, "passed": r.ok, "seconds": round(r.seconds, 3),
             "budget": r.budget, "detail": r.detail}
            for r in results
        ]))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state-cap", type=int, help="cap on enumerated states (naive evaluation)")
    common.add_argument("--section-cap", type=int, help="cap on cross-sections per sweep layer")
    common.add_argument("--workers", type=int, default=1, help="processes for web evaluation")
    common.add_argument("--format", dest="fmt", choices=("json", "text"),
                        help="json by default; text for selftest")

    parser = argparse.ArgumentParser(
        prog="moycalc",
        description="Exact sl(N) MOY state sums and colored sl(N) polynomials of braid closures.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("eval-web", parents=[common], help="evaluate <web>_N")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--method", choices=("sweep", "naive"), default="sweep")
    p.add_argument("source")

    p = sub.add_parser("invariant", parents=[common], help="P_N and <D>_N of a braid closure")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-m", type=int, help="recolor every strand with m")
    p.add_argument("source")

    p = sub.add_parser("verify-composition", parents=[common],
                       help="check the composition product for <web>_(M+N)")
    p.add_argument("-M", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("source")

    p = sub.add_parser("bounds", parents=[common], help="chain-level and polynomial-level degree windows")
    p.add_argument("-m", type=int, help="recolor every strand with m")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("source")

    p = sub.add_parser("convergence", parents=[common], help="normalized degree ratios over a range of N")
    p.add_argument("-m", type=int, help="recolor every strand with m")
    p.add_argument("-N", dest="Ns", type=parse_range, required=True, help="a..b or a,b,c")
    p.add_argument("source")

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", type=parse_range, help="criterion numbers, e.g. 1..5")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        N=getattr(args, "N", None),
        M=getattr(args, "M", None),
        m=getattr(args, "m", None),
        source=getattr(args, "source", None),
        state_cap=args.state_cap,
        section_cap=args.section_cap,
        workers=args.workers,
        fmt=args.fmt or ("text" if args.subcommand == "selftest" else "json"),
    )
    saved = get_caps()
    try:
        cfg.validate()
        set_caps(cfg.state_cap, cfg.section_cap)
        if cfg.subcommand == "eval-web":
            return cmd_eval_web(cfg, args.method)
        if cfg.subcommand == "invariant":
            return cmd_invariant(cfg)
        if cfg.subcommand == "verify-composition":
            return cmd_verify_composition(cfg)
        if cfg.subcommand == "bounds":
            return cmd_bounds(cfg)
        if cfg.subcommand == "convergence":
            return cmd_convergence(cfg, args.Ns)
        return cmd_selftest(cfg, args.only)
    except InvalidWeb as exc:
        for v in exc.violations:
            print(f"invalid web: {v}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EmbeddingError as exc:
        print(f"embedding check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (InputError, InvalidBraid, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        set_caps(saved["state"], saved["section"])


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
