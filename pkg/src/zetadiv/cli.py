"""Command-line front end: scans, single evaluations, caching, manifests.

Every run that writes data files also writes a JSON manifest next to them
(config echo, tool version, wall time, fitted constants, sha256 of each
output).  Data sections are byte-deterministic for a fixed config and
version: fixed iteration orders, no randomised quadrature, shortest
round-trip float formatting.

Exit codes: 0 success, 2 usage / invalid argument, 3 resource cap,
4 precision failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .divisor import (DivisorTable, delta_grid, load_table, save_table,
                      sieve_divisors)
from .errors import (CacheError, InvalidArgumentError, PrecisionError,
                     ResourceLimitError, ZetaDivError)
from .error_terms import (E_atkinson, E_balasubramanian, E_grid, ZetaMeanSquare,
                          estar_scan, fit_log_cubic, moment_scan_from_samples,
                          short_interval_ms)
from .exppairs import (ExponentPair, is_process_reachable, parse_fraction,
                       report, search_optimal, write_frontier_csv)
from .voronoi import voronoi_delta, voronoi_delta_star
from .zeta import TWO_PI, z_function, zeta_em

CACHE_ENV = "ZETADIV_CACHE_DIR"
CACHE_FILENAME = "divisor_table.bin"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_PRECISION = 4


@dataclass
class RunManifest:
    """Written once per run, alongside the outputs it describes."""

    command: str
    config: dict
    version: str
    wall_time_s: float
    fitted_constants: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)  # path -> sha256 of file bytes


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def _write_manifest(manifest: RunManifest, out_path: str) -> None:
    for p in list(manifest.outputs):
        manifest.outputs[p] = _sha256(p)
    with open(out_path + ".manifest.json", "w") as fh:
        json.dump(asdict(manifest), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _cache_dir(args) -> str:
    d = args.cache_dir or os.environ.get(CACHE_ENV) or os.path.join(".", ".zetadiv-cache")
    os.makedirs(d, exist_ok=True)
    return d


def cache_table(limit: int, cache_dir: str) -> tuple[DivisorTable, str, str]:
    """Load the cached divisor table covering ``limit``, rebuilding if needed.

    Returns (table, path, status) with status one of "hit", "rebuilt",
    "built".  A corrupt or too-small cache is rebuilt with a warning on
    stderr; the checksum is always verified on load.
    """
    path = os.path.join(cache_dir, CACHE_FILENAME)
    if os.path.exists(path):
        try:
            return load_table(path, limit=limit), path, "hit"
        except CacheError as exc:
            print(f"warning: rebuilding divisor cache ({exc})", file=sys.stderr)
            table = sieve_divisors(limit)
            save_table(table, path)
            return table, path, "rebuilt"
    table = sieve_divisors(limit)
    save_table(table, path)
    return table, path, "built"


def _float_grid(lo: float, hi: float, step: float | None, count: int | None,
                log_spaced: bool) -> np.ndarray:
    if hi <= lo:
        raise InvalidArgumentError(f"empty range: min={lo}, max={hi}")
    if count is not None:
        if count < 2:
            raise InvalidArgumentError("count must be >= 2")
        if log_spaced:
            if lo <= 0:
                raise InvalidArgumentError("log spacing needs min > 0")
            return np.exp(np.linspace(math.log(lo), math.log(hi), count))
        return np.linspace(lo, hi, count)
    if step is None or step <= 0:
        raise InvalidArgumentError("need a positive --step or a --count")
    n = int(math.floor((hi - lo) / step + 1e-9))
    return lo + step * np.arange(n + 1)


def _write_csv(path: str, header: str, columns) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in zip(*columns):
            fh.write(",".join(repr(v) if isinstance(v, float) else str(v)
                              for v in row) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_delta_scan(args) -> int:
    if args.max <= 0:
        raise InvalidArgumentError("--max must be positive")
    lo = max(args.min, 1.0)
    xs = _float_grid(lo, args.max, args.step, args.count, args.log_spaced)
    t0 = time.time()
    table, cache_path, status = cache_table(int(math.ceil(args.max)), _cache_dir(args))
    ds = delta_grid(table, xs)
    if args.out:
        _write_csv(args.out, "x,delta", (xs.tolist(), ds.tolist()))
        mani = RunManifest("delta-scan", _config_echo(args), __version__,
                           time.time() - t0,
                           fitted_constants={"max_abs_delta": float(np.max(np.abs(ds)))},
                           outputs={args.out: ""})
        mani.config["cache_status"] = status
        _write_manifest(mani, args.out)
        print(f"wrote {xs.size} rows to {args.out} (cache: {status} at {cache_path})")
    else:
        for x, d in zip(xs, ds):
            print(f"{x!r},{d!r}")
    return EXIT_OK


def cmd_voronoi(args) -> int:
    limit = max(int(args.n), int(math.ceil(4 * args.x)) + 2)
    table, _, _ = cache_table(limit, _cache_dir(args))
    fn = voronoi_delta_star if args.star else voronoi_delta
    v = fn(table, args.x, args.n)
    print(f"x={v.x!r} N={v.N} terms={v.term_count} value={v.value!r}")
    if args.compare:
        from .voronoi import delta_series_target, delta_star_series_target
        target = (delta_star_series_target if args.star else delta_series_target)(table, args.x)
        print(f"series_target={target!r} residual={abs(v.value - target)!r}")
    return EXIT_OK


def cmd_zeta_eval(args) -> int:
    if args.t < 10.0:
        z = zeta_em(0.5 + 1j * args.t)
        print(f"t={args.t!r} |zeta(1/2+it)|={abs(z)!r} (Euler-Maclaurin route, t < 10)")
        return EXIT_OK
    s = z_function(args.t)
    print(f"t={s.t!r} Z={s.Z!r} |zeta(1/2+it)|={abs(s.Z)!r} |zeta|^2={s.zeta_abs2!r}")
    return EXIT_OK


def cmd_e_scan(args) -> int:
    t0 = time.time()
    integ = ZetaMeanSquare(chunk=args.step)
    ts, es = E_grid(args.tmax, args.step, integ)
    err = integ.error_estimate(args.tmax)
    if err > args.tol:
        raise PrecisionError(f"quadrature error estimate {err:.3e} exceeds --tol {args.tol}")
    if args.out:
        _write_csv(args.out, "t,E", (ts.tolist(), es.tolist()))
        mani = RunManifest("e-scan", _config_echo(args), __version__, time.time() - t0,
                           fitted_constants={"quadrature_error_estimate": err},
                           outputs={args.out: ""})
        _write_manifest(mani, args.out)
        print(f"wrote {ts.size} rows to {args.out}")
    else:
        print(f"E({args.tmax!r}) = {es[-1]!r} (error estimate {err:.3e})")
    return EXIT_OK


def cmd_atkinson(args) -> int:
    N = args.N if args.N is not None else args.T
    limit = int(math.ceil(N)) + 1
    table, _, _ = cache_table(limit, _cache_dir(args))
    ev = E_atkinson(args.T, args.N, table=table)
    print(f"T={ev.T!r} N={ev.N!r} N'={ev.N_prime!r}")
    print(f"sigma1={ev.sigma1!r} sigma2={ev.sigma2!r} value={ev.value!r}")
    return EXIT_OK


def cmd_balasu(args) -> int:
    val = E_balasubramanian(args.T)
    print(f"T={args.T!r} value={val!r} K={int(math.sqrt(args.T / TWO_PI))}")
    return EXIT_OK


def cmd_estar_scan(args) -> int:
    t0 = time.time()
    limit = int(4 * args.tmax / TWO_PI) + 2
    table, _, _ = cache_table(limit, _cache_dir(args))
    integ = ZetaMeanSquare(chunk=args.step)
    scan = estar_scan(args.tmax, args.step, table=table, integrator=integ)
    if not args.out:
        raise InvalidArgumentError("estar-scan requires --out")
    scan.write_csv(args.out)
    summary = scan.summary()
    with open(args.out + ".summary.json", "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    mani = RunManifest("estar-scan", _config_echo(args), __version__, time.time() - t0,
                       fitted_constants={k: v for k, v in summary.items()
                                         if k.startswith("moment")},
                       outputs={args.out: "", args.out + ".summary.json": ""})
    _write_manifest(mani, args.out)
    print(f"wrote {scan.t.size} rows to {args.out}")
    return EXIT_OK


def cmd_moments(args) -> int:
    t0 = time.time()
    limit = int(4 * args.tmax / TWO_PI) + 2
    table, _, _ = cache_table(limit, _cache_dir(args))
    integ = ZetaMeanSquare(chunk=args.step)
    scan = estar_scan(args.tmax, args.step, table=table, integrator=integ)
    results = moment_scan_from_samples(scan.t, scan.E_star, args.k)
    fitted = {}
    if args.k == 2 and len(results) >= 4:
        coef, rel = fit_log_cubic(results)
        fitted = {"log_cubic_coefficients": coef.tolist(),
                  "log_cubic_max_rel_residual_top4": float(np.max(rel[-4:]))}
    header = "T,integral,normalizer,ratio"
    rows = ([r.T for r in results], [r.integral for r in results],
            [r.normalizer for r in results], [r.ratio for r in results])
    if args.out:
        _write_csv(args.out, header, rows)
        mani = RunManifest("moments", _config_echo(args), __version__, time.time() - t0,
                           fitted_constants=fitted, outputs={args.out: ""})
        _write_manifest(mani, args.out)
        print(f"wrote {len(results)} checkpoints to {args.out}")
    else:
        print(header)
        for r in results:
            print(f"{r.T!r},{r.integral!r},{r.normalizer!r},{r.ratio!r}")
        if fitted:
            print("cubic fit:", json.dumps(fitted))
    return EXIT_OK


def cmd_short_interval(args) -> int:
    val = short_interval_ms(args.T, args.G, profile=args.profile)
    ratio = val / (args.G * math.log(args.T))
    print(f"T={args.T!r} G={args.G!r} profile={args.profile} "
          f"value={val!r} value/(G*logT)={ratio!r}")
    return EXIT_OK


def cmd_exppair_report(args) -> int:
    kappa = parse_fraction(args.kappa)
    lam = parse_fraction(args.lam)
    if not args.hypothetical and not is_process_reachable(kappa, lam):
        raise InvalidArgumentError(
            f"({kappa}, {lam}) is not derivable from the seed pairs by the "
            "A/B processes; pass --hypothetical to report a conjectural pair")
    pair = ExponentPair(kappa, lam, hypothetical=args.hypothetical)
    r = report(pair)
    print(f"pair=({pair.kappa}, {pair.lam}) hypothetical={pair.hypothetical}")
    print(f"theta_div = {r.theta_div} (~{float(r.theta_div):.6f})")
    print(f"theta_zeta = {r.theta_zeta} (~{float(r.theta_zeta):.6f})")
    print(f"beats_one_third = {r.beats_one_third}")
    print(f"nontrivial = {r.nontrivial}")
    return EXIT_OK


def cmd_exppair_search(args) -> int:
    t0 = time.time()
    res = search_optimal(args.depth, args.objective)
    best = res.best
    print(f"best {args.objective} = {getattr(best, args.objective)} "
          f"(~{float(getattr(best, args.objective)):.6f}) at pair "
          f"({best.pair.kappa}, {best.pair.lam}) word={best.pair.word or 'seed'}")
    print(f"explored {res.explored} distinct pairs; frontier size {len(res.frontier)}")
    if args.out:
        write_frontier_csv(res.frontier, args.out)
        mani = RunManifest("exppair-search", _config_echo(args), __version__,
                           time.time() - t0,
                           fitted_constants={
                               "best_" + args.objective: str(getattr(best, args.objective))},
                           outputs={args.out: ""})
        _write_manifest(mani, args.out)
        print(f"wrote frontier to {args.out}")
    return EXIT_OK


def cmd_cache_table(args) -> int:
    if args.limit < 1:
        raise InvalidArgumentError("--limit must be >= 1")
    table, path, status = cache_table(args.limit, _cache_dir(args))
    print(f"cache {status}: {path} (limit {table.limit})")
    return EXIT_OK


def cmd_accept(args) -> int:
    from . import acceptance
    nums = [args.criterion] if args.criterion else sorted(acceptance.CRITERIA)
    kwargs_by_num = {7: {"tmax": 2e3 if args.smoke else 2e4}}
    all_ok = True
    for n in nums:
        all_ok = acceptance.run_criterion(n, **kwargs_by_num.get(n, {})) and all_ok
    return EXIT_OK if all_ok else 1


def _config_echo(args) -> dict:
    return {k: v for k, v in vars(args).items() if k != "func" and v is not None}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetadiv",
        description="Divisor remainders, critical-line zeta, mean-square error "
                    "terms, and the exponent-pair calculus.")
    p.add_argument("--cache-dir", default=None,
                   help=f"divisor-table cache directory (default ${CACHE_ENV} "
                        "or ./.zetadiv-cache)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("delta-scan", help="scan the divisor remainder delta(x)")
    sp.add_argument("--min", type=float, default=1.0)
    sp.add_argument("--max", type=float, required=True)
    sp.add_argument("--step", type=float, default=None)
    sp.add_argument("--count", type=int, default=None)
    sp.add_argument("--log-spaced", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_delta_scan)

    sp = sub.add_parser("voronoi", help="truncated expansion of delta or delta*")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--n", type=int, required=True, help="truncation N >= 2")
    sp.add_argument("--star", action="store_true")
    sp.add_argument("--compare", action="store_true",
                    help="also print the exact series target and residual")
    sp.set_defaults(func=cmd_voronoi)

    sp = sub.add_parser("zeta-eval", help="evaluate Z(t) and |zeta(1/2+it)|")
    sp.add_argument("--t", type=float, required=True)
    sp.set_defaults(func=cmd_zeta_eval)

    sp = sub.add_parser("e-scan", help="scan E(T) by direct quadrature")
    sp.add_argument("--tmax", type=float, required=True)
    sp.add_argument("--step", type=float, default=0.25)
    sp.add_argument("--tol", type=float, default=0.1)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_e_scan)

    sp = sub.add_parser("atkinson", help="E(T) by the Atkinson formula")
    sp.add_argument("--T", type=float, required=True)
    sp.add_argument("--N", type=float, default=None, help="cutoff (default T)")
    sp.set_defaults(func=cmd_atkinson)

    sp = sub.add_parser("balasu", help="E(T) by the Balasubramanian double sum")
    sp.add_argument("--T", type=float, required=True)
    sp.set_defaults(func=cmd_balasu)

    sp = sub.add_parser("estar-scan", help="scan E, 2pi*delta*(t/2pi) and E*")
    sp.add_argument("--tmax", type=float, required=True)
    sp.add_argument("--step", type=float, default=0.25)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_estar_scan)

    sp = sub.add_parser("moments", help="dyadic-checkpoint moments of |E*|^k")
    sp.add_argument("--tmax", type=float, required=True)
    sp.add_argument("--k", type=int, choices=(2, 4, 5), default=2)
    sp.add_argument("--step", type=float, default=0.25)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_moments)

    sp = sub.add_parser("short-interval", help="smoothed short-interval mean square")
    sp.add_argument("--T", type=float, required=True)
    sp.add_argument("--G", type=float, required=True)
    sp.add_argument("--profile", default="exp_bump",
                    choices=("exp_bump", "ratio_bump"))
    sp.set_defaults(func=cmd_short_interval)

    sp = sub.add_parser("exppair-report", help="exact exponents of one pair")
    sp.add_argument("--kappa", required=True, help="rational literal p/q")
    sp.add_argument("--lambda", dest="lam", required=True, help="rational literal p/q")
    sp.add_argument("--hypothetical", action="store_true",
                    help="allow conjectural pairs outside the A/B closure")
    sp.set_defaults(func=cmd_exppair_report)

    sp = sub.add_parser("exppair-search", help="exhaustive A/B word search")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--objective", default="theta_div",
                    choices=("theta_div", "theta_zeta"))
    sp.add_argument("--out", default=None, help="frontier CSV path")
    sp.set_defaults(func=cmd_exppair_search)

    sp = sub.add_parser("cache-table", help="build or verify the divisor cache")
    sp.add_argument("--limit", type=int, required=True)
    sp.set_defaults(func=cmd_cache_table)

    sp = sub.add_parser("accept", help="run acceptance criteria (all or one)")
    sp.add_argument("--criterion", type=int, choices=range(1, 9), default=None)
    sp.add_argument("--smoke", action="store_true",
                    help="reduced [0, 2e3] variant of the moment suite")
    sp.set_defaults(func=cmd_accept)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PrecisionError as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ZetaDivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
