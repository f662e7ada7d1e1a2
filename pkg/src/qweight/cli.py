"""Command-line entry point: ``qweight kl | ssot | verify``.

Exit codes: 0 success, 1 a conjecture-backed check found a counterexample,
2 bad parameters, 3 a theorem-backed check failed.  Standard output never
contains timings, so it is byte-identical across runs; timings go to the
``--report`` file only.

A JSON config file (``--config``) may supply any option using the flag
name with dashes turned into underscores; flags on the command line win.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness as H
from .crystal import UnsupportedRegion
from .kostant import kl_poly, stable_kl_poly
from .roots import LengthFunction, ParameterError, Partition
from .ssot import as_box_tensor, ssot_enumerate, ssot_to_tensor

EXIT_OK, EXIT_CONJECTURE, EXIT_PARAMS, EXIT_THEOREM = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAMS, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _intlist(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from None


def _rank_type(text: str) -> str:
    t = text.upper()
    if t not in ("A", "B", "C", "D"):
        raise argparse.ArgumentTypeError(f"unknown type {text!r}")
    return t


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qweight", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file of default option values")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    k = sub.add_parser("kl", help="compute a q-weight multiplicity")
    k.add_argument("--type", type=_rank_type, required=True)
    k.add_argument("--rank", type=int, required=True)
    k.add_argument("--lambda", dest="lam", type=_partition, required=True)
    k.add_argument("--mu", type=_partition, default=Partition())
    k.add_argument("--L", default="standard", choices=("standard", "glA"))
    k.add_argument("--stable", action="store_true", help="sum over S_n only")
    k.add_argument("--format", default="json", choices=("json", "plain"))

    s = sub.add_parser("ssot", help="enumerate semistandard oscillating tableaux")
    s.add_argument("--shape", type=_partition, required=True)
    s.add_argument("--weight", type=_intlist, required=True, help="strip sizes")
    s.add_argument("--gcap", type=int, required=True)
    s.add_argument("--emit", default="ssots", choices=("ssots", "tensors", "count"))
    s.add_argument("--format", default="json", choices=("json", "plain"))

    v = sub.add_parser("verify", help="run named checks or a grid sweep")
    v.add_argument("check", choices=H.CHECKS + ("sweep",))
    v.add_argument("--type", type=_rank_type, default=None)
    v.add_argument("--types", default=None, help="comma list for grids, default C")
    v.add_argument("--n", "--rank", dest="n", type=int, default=None)
    v.add_argument("--g", type=int, default=None)
    v.add_argument("--lambda", dest="lam", type=_partition, default=None)
    v.add_argument("--mu", type=_partition, default=None)
    v.add_argument("--L", default="standard", choices=("standard", "glA"))
    v.add_argument("--k-max", type=int, default=None)
    v.add_argument("--qmax", type=int, default=None, help="q-degree cap for demazure (default 6)")
    v.add_argument("--umax", type=int, default=None, help="root-count cap, needed for demazure with glA")
    v.add_argument("--bound", type=int, default=None, help="weight size bound for typeA-charge")
    v.add_argument("--size-max", type=int, default=4, help="grid: largest |lambda|")
    v.add_argument("--checks", default=None, help="sweep: comma list of checks (default all)")
    v.add_argument("--report", help="write JSON report here, CSV summary alongside")
    v.add_argument("--cache", help="JSON-lines KL cache")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", default="plain", choices=("plain", "json", "csv"))
    return p


def _apply_config(parser, argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        try:
            with open(known.config) as fh:
                cfg = {k.replace("-", "_"): v for k, v in json.load(fh).items()}
        except (OSError, ValueError, AttributeError) as exc:
            parser.exit(EXIT_PARAMS, f"qweight: bad config: {exc}\n")
        subs = parser._subparsers._group_actions[0].choices
        dests = {a.dest for sp in subs.values() for a in sp._actions}
        unknown = sorted(set(cfg) - dests)
        if unknown:
            parser.exit(EXIT_PARAMS, f"qweight: unknown config keys {unknown}\n")
        for sp in subs.values():
            own = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in cfg.items() if k in own})
    args = parser.parse_args(argv)
    for key in ("lam", "mu", "shape"):
        if isinstance(getattr(args, key, None), str):
            setattr(args, key, Partition.parse(getattr(args, key)))
    return args


def cmd_kl(args, out) -> int:
    L = LengthFunction.parse(args.L)
    fn = stable_kl_poly if args.stable else kl_poly
    p = fn(args.type, args.rank, args.lam, args.mu, L)
    out.write((json.dumps(p.to_json(), separators=(",", ":")) if args.format == "json" else str(p)) + "\n")
    return EXIT_OK


def cmd_ssot(args, out) -> int:
    if args.gcap < 0:
        raise ParameterError("--gcap must be >= 0")
    found = ssot_enumerate(args.shape, args.weight, args.gcap)
    if args.emit == "count":
        out.write(f"{len(found)}\n")
        return EXIT_OK
    if args.emit == "ssots":
        items = [T.to_json() for T in found]
    else:
        items = []
        for T in found:
            cols = ssot_to_tensor(T)
            if all(c.height == 1 for c in cols):
                items.append(as_box_tensor(cols).to_json())
            else:
                # rightmost column first, each column top to bottom
                items.append([c.to_json() for c in reversed(cols)])
    if args.format == "json":
        out.write(json.dumps(items, separators=(",", ":")) + "\n")
    else:
        for it in items:
            out.write(json.dumps(it, separators=(",", ":")) + "\n")
    return EXIT_OK


def _specs(args) -> list[H.CheckSpec]:
    c = args.check
    types = [t.strip().upper() for t in args.types.split(",")] if args.types else [args.type or "C"]
    n, g = args.n, args.g
    if c == "sweep":
        chosen = args.checks.split(",") if args.checks else list(H.CHECKS)
        bad = [x for x in chosen if x not in H.CHECKS]
        if bad:
            raise ParameterError(f"unknown checks {bad}")
        specs = []
        for x in chosen:
            specs += H.grid(x, n_max=n or 3, g_max=g or 2, size_max=args.size_max, types=types, L=args.L)
        return specs
    if c == "example13":
        return [H.CheckSpec("example13", "C", 3, (1, 1), ())]
    if c == "typeA-charge":
        return [H.CheckSpec(c, "A", n or 4, bound=args.bound if args.bound is not None else 6)]
    if args.lam is None:
        if c == "demazure":
            specs = H.grid(c, n_max=n or 2, size_max=args.size_max, types=types, L=args.L)
            return [H.CheckSpec(s.check, s.type, s.n, s.lam, L=s.L, qmax=args.qmax or 6, umax=args.umax)
                    for s in specs]
        return H.grid(c, n_max=n or 3, g_max=g or 2, size_max=args.size_max, types=types, L=args.L)
    if n is None:
        raise ParameterError("--n/--rank is required with --lambda")
    mu = args.mu if args.mu is not None else Partition()
    t = args.type or "C"
    if c == "conj1-box":
        if g is None:
            raise ParameterError("--g is required for conj1-box")
        return [H.CheckSpec(c, "C", n, args.lam, [g - 1] * n, g=g)]
    if c == "conj1-count":
        if g is None:
            raise ParameterError("--g is required for conj1-count")
        return [H.CheckSpec(c, "C", n, args.lam, mu, g=g)]
    if c == "demazure":
        return [H.CheckSpec(c, t, n, args.lam, L=args.L, qmax=args.qmax or 6, umax=args.umax)]
    if c == "stabilization":
        return [H.CheckSpec(c, t, n, args.lam, mu, k_max=args.k_max)]
    if c == "conj2":
        return [H.CheckSpec(c, "C", n, args.lam, mu, L="glA")]
    return [H.CheckSpec(c, t, n, args.lam, mu)]


def cmd_verify(args, out) -> int:
    if args.jobs < 1:
        raise ParameterError("--jobs must be >= 1")
    specs = _specs(args)
    try:
        cache = H.KLCache(args.cache)
    except H.CacheCorruption as exc:
        sys.stderr.write(f"qweight: {exc}\n")
        return EXIT_PARAMS
    reports, summary = H.run_sweep(specs, jobs=args.jobs, cache=cache)
    if args.report:
        H.write_reports(reports, args.report)
    if args.format == "json":
        out.write(H.reports_json(reports, timing=False) + "\n")
    elif args.format == "csv":
        out.write(H.reports_csv(reports, timing=False))
    else:
        for r in reports:
            if len(reports) == 1 or r.status is not H.Status.PASS:
                line = f"{r.status.value} {r.spec.check} {r.spec.params()}"
                if r.detail:
                    line += f"  [{r.detail}]"
                out.write(line + "\n")
        for (check, status), count in sorted(summary.counts.items()):
            out.write(f"{check}: {count} {status}\n")
    return H.exit_code(reports)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARAMS
    try:
        if args.command == "kl":
            return cmd_kl(args, out)
        if args.command == "ssot":
            return cmd_ssot(args, out)
        return cmd_verify(args, out)
    except (ParameterError, UnsupportedRegion) as exc:
        sys.stderr.write(f"qweight: {exc}\n")
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
