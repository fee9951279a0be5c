"""Command-line front end: ``ldic region|metrics|sweep|verify|examples|simulate``.

Exit codes: 0 success, 1 verification or golden failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import json
import os
import shutil
import sys

from ldic import golden
from ldic.converse import perfect_level
from ldic.gains import gain_report
from ldic.model import parse_params, validate
from ldic.report import (RegionDocument, dumps, region_svg, report_text, report_to_dict,
                         sweep_document)
from ldic.simulator import POLICIES, decompose, make_policy, run_session
from ldic.verify import run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _params(text: str):
    try:
        return validate(parse_params(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _base(text: str):
    try:
        base = parse_params(text, count=4)
        validate((*base, 0, 0))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return base


def _span(text: str) -> range:
    """``lo..hi`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def _emit(text: str, out: str | None) -> None:
    if out:
        os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands ----------------------------------------------------------------

def cmd_region(args) -> int:
    doc = RegionDocument.build(args.params, args.compare)
    fmt = args.format or "text"
    if fmt == "json":
        text = dumps(doc.to_dict())
    elif fmt == "csv":
        text = doc.to_csv()
    elif fmt == "svg":
        text = region_svg(doc.entries())
    else:
        text = doc.to_text()
    _emit(text, args.out)
    return EXIT_OK


def cmd_metrics(args) -> int:
    report = gain_report(args.params)
    if (args.format or "text") == "json":
        text = dumps(report_to_dict(report, decimal=args.decimal))
    else:
        text = report_text(report)
    _emit(text, args.out)
    return EXIT_OK


def cmd_sweep(args, parser) -> int:
    probe = validate((*args.base, 0, 0))
    fb1 = args.fb1 or range(perfect_level(probe, 1) + 1)
    fb2 = args.fb2 or range(perfect_level(probe, 2) + 1)
    fmt = args.format or "csv"
    if fmt not in ("csv", "json"):
        parser.error("sweep writes csv or json")
    doc = sweep_document(args.base, fb1, fb2, workers=args.workers)
    if fmt == "json":
        d = doc.to_dict()
        if args.decimal:
            d["decimal"] = [[a, b, *(float(v) for v in vals)] for a, b, vals in doc.rows()]
        text = dumps(d)
    else:
        text = doc.to_csv(decimal=args.decimal)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(args.max_param, workers=args.workers)
    text = dumps(report.to_dict()) if args.format == "json" else report.to_text()
    _emit(text, args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_examples(args) -> int:
    cases = golden.load(args.golden) if args.golden else None
    outcomes = golden.run(cases)
    if args.json or args.format == "json":
        text = dumps({"kind": "examples", "assertions": [o.to_dict() for o in outcomes]})
    else:
        lines = []
        for o in outcomes:
            mark = "ok  " if o.passed else "FAIL"
            extra = "" if o.passed else f"   expected {o.expected}, got {o.actual}"
            lines.append(f"{mark} {o.id}{extra}")
        passed = sum(o.passed for o in outcomes)
        lines.append(f"{passed}/{len(outcomes)} assertions match")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAIL


def _annotation(p) -> list[str]:
    lines = []
    for i in (1, 2):
        d = decompose(p, i)
        dims = " ".join(f"{k}={v}" for k, v in d.dims().items())
        lines.append(f"# user{i} dims: {dims}")
        for m in range(1, p.q + 1):
            lines.append(f"# user{i} level {m}: {','.join(d.labels(m))}")
    return lines


def cmd_simulate(args, parser) -> int:
    p = args.params
    names = args.policy.split(",")
    if len(names) == 1:
        names *= 2
    if len(names) != 2 or any(n not in POLICIES for n in names):
        parser.error(f"unknown policy {args.policy!r}; choose from {', '.join(POLICIES)}")
    if args.uses < 1:
        parser.error("--uses must be at least 1")
    try:
        pols = [make_policy(n, p.q, i, seed=args.seed, level=args.level)
                for i, n in zip((1, 2), names)]
    except ValueError as exc:
        parser.error(str(exc))
    trace = run_session(pols[0], pols[1], p, args.uses)
    head = [f"# params {p}", f"# policies {names[0]},{names[1]} seed {args.seed}"]
    _emit("\n".join(head + _annotation(p)) + "\n" + trace.dump(), args.out)
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldic",
        description="Capacity regions and feedback gains of the two-user linear "
                    "deterministic interference channel with noisy output feedback.")
    parser.add_argument("--manifest", metavar="FILE", help="run the jobs listed in an INI file")
    sub = parser.add_subparsers(dest="command")

    def common(sp, formats):
        sp.add_argument("--format", choices=formats)
        sp.add_argument("--out", metavar="PATH")

    sp = sub.add_parser("region", help="capacity region vertices and bounds")
    sp.add_argument("--params", type=_params, required=True, metavar="a,b,c,d,e,f")
    sp.add_argument("--compare", type=_params, metavar="a,b,c,d,e,f")
    common(sp, ("text", "json", "csv", "svg"))

    sp = sub.add_parser("metrics", help="feedback gains Delta1, Delta2, Sigma")
    sp.add_argument("--params", type=_params, required=True, metavar="a,b,c,d,e,f")
    sp.add_argument("--decimal", action="store_true")
    common(sp, ("text", "json"))

    sp = sub.add_parser("sweep", help="gains over a grid of feedback strengths")
    sp.add_argument("--base", type=_base, required=True, metavar="a,b,c,d")
    sp.add_argument("--fb1", type=_span, metavar="lo..hi")
    sp.add_argument("--fb2", type=_span, metavar="lo..hi")
    sp.add_argument("--decimal", action="store_true", help="append float columns")
    sp.add_argument("--workers", type=int, default=1)
    common(sp, ("csv", "json"))

    sp = sub.add_parser("verify", help="exhaustive consistency checks")
    sp.add_argument("--max-param", type=int, default=2)
    sp.add_argument("--workers", type=int, default=1)
    common(sp, ("text", "json"))

    sp = sub.add_parser("examples", help="recompute the reference example values")
    sp.add_argument("--golden", metavar="FILE", help="JSON list of assertions to use instead")
    sp.add_argument("--json", action="store_true")
    common(sp, ("text", "json"))

    sp = sub.add_parser("simulate", help="bit-level channel session trace")
    sp.add_argument("--params", type=_params, required=True, metavar="a,b,c,d,e,f")
    sp.add_argument("--uses", type=int, default=4)
    sp.add_argument("--policy", default="random", help=f"one of {', '.join(POLICIES)}, "
                    "or two comma-separated")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--level", type=int, default=1, help="impulse level")
    common(sp, ("text",))
    return parser


def dispatch(args, parser) -> int:
    if args.command == "region":
        return cmd_region(args)
    if args.command == "metrics":
        return cmd_metrics(args)
    if args.command == "sweep":
        return cmd_sweep(args, parser)
    if args.command == "verify":
        if args.max_param < 0:
            parser.error("--max-param must be non-negative")
        return cmd_verify(args)
    if args.command == "examples":
        return cmd_examples(args)
    if args.command == "simulate":
        return cmd_simulate(args, parser)
    parser.error("a command or --manifest is required")


# --- manifests ---------------------------------------------------------------

_EXT = {"json": "json", "csv": "csv", "svg": "svg", "text": "txt"}
_FLAGS = ("params", "compare", "base", "fb1", "fb2", "format", "seed", "uses", "policy",
          "level", "max_param", "workers", "golden")
_SWITCHES = ("decimal", "json")


def job_argv(section: configparser.SectionProxy) -> list[str]:
    argv = [section["command"]]
    for key in _FLAGS:
        if key in section:
            argv += ["--" + key.replace("_", "-"), section[key]]
    for key in _SWITCHES:
        if section.getboolean(key, fallback=False):
            argv.append("--" + key)
    return argv


def cache_key(argv: list[str]) -> str:
    return hashlib.sha256(json.dumps(argv).encode()).hexdigest()


def run_manifest(path: str, parser: argparse.ArgumentParser) -> int:
    """Run each ``[section]`` of an INI manifest as one job.

    Results are stored under ``output_dir/cache/<sha256>`` keyed by the
    job's canonical arguments, so rerunning a manifest skips finished jobs.
    """
    cfg = configparser.ConfigParser()
    if not cfg.read(path):
        parser.error(f"cannot read manifest {path!r}")
    root = os.path.dirname(os.path.abspath(path))
    outdir = os.path.join(root, cfg.defaults().get("output_dir", "ldic-out"))
    cache = os.path.join(outdir, "cache")
    os.makedirs(cache, exist_ok=True)
    worst = EXIT_OK
    for name in cfg.sections():
        section = cfg[name]
        if "command" not in section:
            parser.error(f"job {name!r} has no command")
        argv = job_argv(section)
        args = parser.parse_args(argv)
        ext = _EXT.get(args.format or "", "txt")
        if args.command == "sweep" and not args.format:
            ext = "csv"
        cached = os.path.join(cache, f"{cache_key(argv)}.{ext}")
        target = os.path.join(outdir, section.get("out", f"{name}.{ext}"))
        os.makedirs(os.path.dirname(target), exist_ok=True)
        if os.path.exists(cached):
            code = EXIT_OK
            print(f"{name}: cached")
        else:
            args.out = cached + ".part"
            code = dispatch(args, parser)
            # only successful results are reusable
            if code == EXIT_OK:
                os.replace(args.out, cached)
            else:
                os.replace(args.out, target)
            print(f"{name}: exit {code}")
        if code == EXIT_OK:
            shutil.copyfile(cached, target)
        worst = max(worst, code)
    return worst


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.manifest:
        if args.command:
            parser.error("--manifest cannot be combined with a command")
        return run_manifest(args.manifest, parser)
    return dispatch(args, parser)


if __name__ == "__main__":
    sys.exit(main())
