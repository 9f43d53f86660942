"""Command-line front end: single computations, verification suites and JSON reports."""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from . import __version__
from .scalar import S, fmt

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 2, 3

MODULE_ALIASES = {"interp": "interpolation", "koorn": "koornwinder", "lift": "lifting",
                  "c": "cnorm", "vanish": "vanishing"}
SUITE_ALIASES = {("lifting", "generic"): ("interp", "virtual", "koorn")}


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument handling

def _scalar(text):
    try:
        return S(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not an exact rational: {text!r}") from exc


def _partition(text):
    from .partitions import Partition
    from .suites import parse_partition
    if isinstance(text, (list, tuple)):
        return Partition(tuple(int(x) for x in text))
    try:
        return parse_partition(str(text))
    except ValueError as exc:
        raise ConfigError(f"bad partition: {text!r}") from exc


def _scalars(text, count=None):
    items = text if isinstance(text, (list, tuple)) else str(text).split(",")
    out = [_scalar(x) for x in items]
    if count is not None and len(out) != count:
        raise ConfigError(f"expected {count} comma-separated rationals, got {len(out)}")
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bcsym", description="Exact BC_n interpolation and Koornwinder polynomial toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        p.add_argument("--config", help="JSON file whose keys mirror the flags")
        p.add_argument("--report", help="write a JSON report here (atomically)")

    def params(p, s=True, r=False, T=False):
        p.add_argument("--qh", help="square root of q, as p/q")
        p.add_argument("--th", help="square root of t, as p/q")
        if s:
            p.add_argument("--s", help="shift parameter")
        if r:
            p.add_argument("--r", help="four Koornwinder half-parameters r0,r1,r2,r3 (t_i = r_i^2)")
            p.add_argument("--params-file", help="JSON file with qh, th, r")
        if T:
            p.add_argument("--T", help="lifting parameter standing for t^n")

    ip = sub.add_parser("interp", help="interpolation polynomial in the m-basis")
    common(ip)
    ip.add_argument("--n", type=int)
    ip.add_argument("--lambda", dest="lam")
    params(ip)

    kp = sub.add_parser("koorn", help="Koornwinder polynomial in the m-basis")
    common(kp)
    kp.add_argument("--n", type=int)
    kp.add_argument("--lambda", dest="lam")
    params(kp, s=False, r=True)

    lp = sub.add_parser("lift", help="lifted interpolation or Koornwinder symmetric function")
    common(lp)
    lp.add_argument("kind", choices=["interp", "koorn"])
    lp.add_argument("--lambda", dest="lam")
    params(lp, r=True, T=True)

    def batch(p):
        common(p)
        p.add_argument("--max-size", type=int)
        p.add_argument("--max-n", type=int)
        p.add_argument("--order", type=int)
        p.add_argument("--spec-count", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--jobs", type=int, help="worker processes")
        p.add_argument("--strict", action="store_const", const=True,
                       help="advisory failures also fail the run")
        p.add_argument("--quiet", action="store_const", const=True)

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("module")
    vp.add_argument("--suite", default=None)
    batch(vp)

    np_ = sub.add_parser("vanishing", help="vanishing-integral families")
    np_.add_argument("--family", default=None)
    batch(np_)

    sp = sub.add_parser("suites", help="list the available suites")
    sp.add_argument("--config", help=argparse.SUPPRESS)
    return parser


DEFAULTS = {"spec_count": 3, "seed": 0, "jobs": 1, "strict": False, "quiet": False, "order": 3,
            "suite": "all", "family": "all"}


def resolve(argv=None) -> argparse.Namespace:
    """Parse flags and merge the optional JSON config underneath them."""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise ConfigError("a command is required (interp, koorn, lift, verify, vanishing, suites)")
    config = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(config, dict):
            raise ConfigError("config file must hold a JSON object")
    if getattr(args, "params_file", None):
        try:
            with open(args.params_file) as fh:
                config = {**json.load(fh), **config}
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read params file: {exc}") from exc
    for key, value in config.items():
        dest = key.replace("-", "_")
        if dest == "lambda":
            dest = "lam"
        if not hasattr(args, dest):
            raise ConfigError(f"unknown config key {key!r} for {args.command}")
        if getattr(args, dest) is None:
            setattr(args, dest, value)
    for key, value in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    seed = getattr(args, "seed", 0)
    if seed is not None and not (0 <= int(seed) < 2 ** 64):
        raise ConfigError("seed must be a 64-bit unsigned integer")
    return args


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ConfigError("missing required value(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# ---------------------------------------------------------------------------
# output

def _header(seed, command) -> dict:
    return {"version": __version__, "seed": seed, "command": command,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")}


def write_atomic(path: str, payload: dict):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".bcsym-", dir=directory)
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=1, sort_keys=False)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_map(coeffs) -> str:
    """Render {partition: scalar} as {(2,1):3/4, ():-1}, largest shapes first."""
    items = sorted(coeffs.items(), key=lambda kv: (-kv[0].size, [-x for x in kv[0]]))
    return "{" + ", ".join(f"({','.join(map(str, k))}):{fmt(v)}" for k, v in items if v != 0) + "}"


# ---------------------------------------------------------------------------
# single computations

def _kparams(args):
    from .koornwinder import KParams
    _require(args, "qh", "th", "r")
    return KParams.from_halves(_scalar(args.qh), _scalar(args.th), _scalars(args.r, 4))


def cmd_interp(args):
    from .interpolation import interp_poly
    _require(args, "n", "lam", "qh", "th", "s")
    qh, th = _scalar(args.qh), _scalar(args.th)
    poly = interp_poly(int(args.n), _partition(args.lam), _scalar(args.s), qh * qh, th * th)
    return poly.mview, poly.to_json()


def cmd_koorn(args):
    from .koornwinder import koorn_poly
    _require(args, "n", "lam")
    poly = koorn_poly(int(args.n), _partition(args.lam), _kparams(args))
    return poly.mview, poly.to_json()


def cmd_lift(args):
    from . import lifting
    _require(args, "lam", "qh", "th", "T")
    lam = _partition(args.lam)
    if args.kind == "interp":
        _require(args, "s")
        qh, th = _scalar(args.qh), _scalar(args.th)
        f = lifting.lifted_interp(lam, _scalar(args.T), _scalar(args.s), qh * qh, th * th)
    else:
        f = lifting.lifted_koorn(lam, _scalar(args.T), _kparams(args))
    return dict(f.coeffs), f.to_json()


def run_single(args) -> int:
    from .scalar import DegenerateParameters
    handler = {"interp": cmd_interp, "koorn": cmd_koorn, "lift": cmd_lift}[args.command]
    try:
        coeffs, payload = handler(args)
    except (DegenerateParameters, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if args.report:
            write_atomic(args.report, {"header": _header(None, args.command),
                                       "items": [{"identity": args.command, "error": str(exc), "equal": False}]})
        return EXIT_FAIL
    print(format_map(coeffs))
    if args.report:
        write_atomic(args.report, {"header": _header(None, args.command), "items": [payload]})
    return EXIT_OK


# ---------------------------------------------------------------------------
# batch verification

def _expand(module: str, suite: str) -> list:
    from .suites import SUITES
    module = MODULE_ALIASES.get(module, module)
    if module not in SUITES:
        raise ConfigError(f"unknown module {module!r}; choose from {', '.join(SUITES)}")
    if suite == "all":
        return [(module, name) for name in SUITES[module]]
    names = SUITE_ALIASES.get((module, suite), (suite,))
    for name in names:
        if name not in SUITES[module]:
            raise ConfigError(f"unknown suite {suite!r} for {module}; choose from {', '.join(SUITES[module])}")
    return [(module, name) for name in names]


def _work(task):
    module, suite, cfg, seed, index = task
    from .suites import run_suite
    start = time.perf_counter()
    reports = run_suite(module, suite, cfg, seed, index)
    items = [r.to_json() for r in reports]
    return items, time.perf_counter() - start


def run_batch(tasks: list, cfg, seed: int, jobs: int = 1) -> list:
    """Run (module, suite, draw) tasks, returning per-task item lists in task order."""
    work = [(m, s, cfg, seed, i) for m, s, i in tasks]
    if jobs <= 1:
        return [_work(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_work, work))


def run_verify(args) -> int:
    from .suites import SuiteConfig
    if args.command == "vanishing":
        pairs = _expand("vanishing", args.family)
    else:
        pairs = _expand(args.module, args.suite)
    if int(args.spec_count) < 1:
        raise ConfigError("--spec-count must be positive")
    cfg = SuiteConfig(max_size=args.max_size, max_n=args.max_n, order=int(args.order))
    seed = int(args.seed)
    tasks = [(m, s, i) for m, s in pairs for i in range(int(args.spec_count))]
    results = run_batch(tasks, cfg, seed, int(args.jobs))

    items, must_fail, advisory_fail = [], 0, 0
    for (module, suite, index), (batch, elapsed) in zip(tasks, results):
        bad = [it for it in batch if not it["equal"]]
        must = sum(1 for it in bad if not it["advisory"])
        must_fail += must
        advisory_fail += len(bad) - must
        items += batch
        if not args.quiet:
            status = "PASS" if not bad else ("FAIL" if must else "ADVISORY")
            print(f"{status:8} {module}.{suite} draw {index}: {len(batch)} checks, "
                  f"{len(bad)} unequal ({elapsed:.1f}s)")
    ok = must_fail == 0 and (advisory_fail == 0 or not args.strict)
    print(f"{len(items)} checks, {must_fail} must-pass failures, {advisory_fail} advisory failures")
    if args.report:
        header = _header(seed, args.command)
        header.update({"passed": ok, "advisory_failures": advisory_fail > 0})
        write_atomic(args.report, {"header": header, "items": items})
    return EXIT_OK if ok else EXIT_FAIL


def list_suites() -> int:
    from .suites import SUITES
    for module, suites in SUITES.items():
        print(f"{module}: {', '.join(suites)}")
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = resolve(argv)
        if args.command == "suites":
            return list_suites()
        if args.command in ("verify", "vanishing"):
            return run_verify(args)
        return run_single(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
