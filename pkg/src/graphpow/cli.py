"""Command-line interface: ``graphpow <command> ...``.

Commands emit human-readable lines by default and line-delimited JSON with
``--json``; the last record of every run is a ``run_report`` summary.
Exit status is 0 unless a bound FAILS, a certificate check fails, or an input
cannot be parsed (``--strict`` also fails on HYPOTHESES_UNMET).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Optional

from graphpow import __version__
from graphpow._backend import available, default_name
from graphpow.bounds import CHECKERS, TheoremId, Verdict, per_vertex_claims
from graphpow.cert import HypothesesUnmet, build_net, verify_certificate
from graphpow.generators import Family, FamilySpec, GenerationError, MAX_ENUM_CONNECTED, MAX_ENUM_TREES
from graphpow.graph import GraphError, min_degree, power, regularity
from graphpow.io import FormatError, format_edge_list, read_graph, write_graph
from graphpow.sweeps import ENUM_THEOREMS, enum_verify, trees_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunReport:
    command: str
    inputs: dict
    records: list[dict] = field(default_factory=list)
    instances: int = 0
    holds: int = 0
    hypotheses_unmet: int = 0
    failures: int = 0
    started: float = field(default_factory=time.perf_counter)

    def to_dict(self) -> dict:
        return {
            "record": "run_report",
            "command": self.command,
            "inputs": self.inputs,
            "counts": {"instances": self.instances, "holds": self.holds,
                       "hypotheses_unmet": self.hypotheses_unmet, "failures": self.failures},
            "wall_time_ms": int((time.perf_counter() - self.started) * 1000),
        }


class Emitter:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def record(self, rec: dict, text: str) -> None:
        # one write per record keeps records whole
        line = json.dumps(rec, sort_keys=True) if self.as_json else text
        self.stream.write(line + "\n")
        self.stream.flush()


def _parse_set(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _add_family_args(p: argparse.ArgumentParser, family_k: str = "-k") -> None:
    p.add_argument("-n", type=int, help="vertex count / modulus")
    p.add_argument("-d", type=int, help="degree parameter")
    p.add_argument("-t", type=int, help="H_t chain parameter")
    p.add_argument("-m", type=int, help="clique ring length")
    p.add_argument(family_k, dest="family_k", type=int, help="H'_t power parameter")
    p.add_argument("--set", dest="connection_set", type=_parse_set,
                   help="circulant connection set, e.g. 1,2,18,19")
    p.add_argument("--seed", type=int)


def _family_spec(name: str, args) -> FamilySpec:
    try:
        fam = Family(name)
    except ValueError:
        raise SystemExit(f"unknown family {name!r}; choose from {[f.value for f in Family]}") from None
    values = {"d": args.d, "t": args.t, "k": args.family_k, "n": args.n, "m": args.m,
              "connection_set": args.connection_set, "seed": args.seed}
    from graphpow.generators import _REQUIRED
    kwargs = {key: val for key, val in values.items() if key in _REQUIRED[fam] and val is not None}
    return FamilySpec(fam, **kwargs)


def _load(args):
    """Return ``(graph, inputs dict, transitive flag, spec or None)``."""
    if getattr(args, "family", None):
        spec = _family_spec(args.family, args)
        return spec.build(), spec.to_dict(), spec.transitive_by_construction, spec
    if not args.input:
        raise SystemExit("an input file or --family is required")
    g = read_graph(args.input)
    return g, {"file": args.input}, bool(getattr(args, "transitive", False)), None


# --- commands -----------------------------------------------------------------

def cmd_gen(args, out: Emitter) -> int:
    spec = _family_spec(args.family_name, args)
    g = spec.build()
    if args.out:
        write_graph(g, args.out)
        out.record({"record": "generated", "family": spec.to_dict(), "n": g.n, "m": g.num_edges,
                    "out": args.out}, f"wrote {spec.family.value} n={g.n} m={g.num_edges} to {args.out}")
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def cmd_power(args, out: Emitter) -> int:
    g, inputs, _, _ = _load(args)
    t0 = time.perf_counter()
    p = power(g, args.k, threads=args.threads)
    ms = int((time.perf_counter() - t0) * 1000)
    if args.out:
        write_graph(p, args.out)
        out.record({"record": "power", "k": args.k, "n": p.n, "m": p.num_edges, "out": args.out,
                    "wall_time_ms": ms}, f"wrote G^{args.k}: n={p.n} m={p.num_edges} to {args.out}")
    else:
        sys.stdout.write(format_edge_list(p))
    return EXIT_OK


def _verdict_line(rep) -> str:
    hyps = ", ".join(f"{n}={'yes' if ok else 'NO'}" for n, ok in rep.hypotheses)
    slack = "" if rep.slack is None else f" slack={rep.slack} (~{float(rep.slack):.4g})"
    return f"{rep.theorem_id.value}: {rep.verdict.value}{slack} [{hyps}]"


def cmd_check(args, out: Emitter) -> int:
    run = RunReport("check", {})
    theorem = args.theorem
    if theorem == "per_vertex":
        g, run.inputs, _, _ = _load(args)
        d = args.bound_d if args.bound_d is not None else min_degree(g)
        rep = per_vertex_claims(g, d, args.kprime or 1)
        run.instances = 1
        for c in rep.claims:
            text = (f"claim ({c.name}): {'n/a' if not c.applicable else ('pass' if c.passed else 'FAIL')}"
                    f" checked={c.checked} violations={len(c.violations)}")
            out.record({"record": "per_vertex", **c.to_dict()}, text)
        run.failures = int(not rep.ok)
        run.holds = int(rep.ok and any(c.applicable for c in rep.claims))
        run.hypotheses_unmet = int(not any(c.applicable for c in rep.claims))
        out.record(run.to_dict(), _summary(run))
        return _exit(run, args.strict)

    try:
        tid = TheoremId(theorem)
    except ValueError:
        raise SystemExit(f"unknown theorem {theorem!r}") from None
    if tid == TheoremId.CAYLEY_GROWTH:
        if args.n is None or args.connection_set is None or args.k is None:
            raise SystemExit("cayley_growth needs -n, --set and -k")
        run.inputs = {"n": args.n, "connection_set": args.connection_set}
        rep = CHECKERS[tid](args.n, args.connection_set, args.k)
    else:
        g, run.inputs, transitive, _ = _load(args)
        if tid in (TheoremId.THM_1_1, TheoremId.G3_BOUND):
            rep = CHECKERS[tid](g, args.bound_d)
        elif tid == TheoremId.VT_BOUND:
            if args.k is None:
                raise SystemExit("vt_bound needs -k")
            rep = CHECKERS[tid](g, args.k, transitive)
        else:
            if args.k is None:
                raise SystemExit(f"{tid.value} needs -k")
            rep = CHECKERS[tid](g, args.k)
    _tally(run, rep.verdict)
    out.record({"record": "bound", **rep.to_dict()}, _verdict_line(rep))
    out.record(run.to_dict(), _summary(run))
    return _exit(run, args.strict)


def cmd_cert(args, out: Emitter) -> int:
    g, inputs, _, _ = _load(args)
    run = RunReport("cert", {**inputs, "kprime": args.kprime})
    run.instances = 1
    try:
        cert = build_net(g, args.kprime)
    except HypothesesUnmet as exc:
        run.hypotheses_unmet = 1
        out.record({"record": "certificate", "status": "HYPOTHESES_UNMET",
                    "hypotheses": [{"name": n, "satisfied": ok} for n, ok in exc.hypotheses]}, str(exc))
        out.record(run.to_dict(), _summary(run))
        return _exit(run, args.strict)
    report = verify_certificate(g, cert)
    if report.ok:
        run.holds = 1
    else:
        run.failures = 1
    text = [f"certificate k'={cert.k_prime} (G^{cert.exponent}): |X|={len(cert.X)} z={len(cert.Z)} y={len(cert.Y)}"
            f" H connected={cert.h_connected}"]
    text += [f"  {name}: {'ok' if ok else 'FAIL'} {detail}".rstrip() for name, ok, detail in report.checks]
    out.record({"record": "certificate", "status": "VERIFIED" if report.ok else "FAILED",
                "certificate": cert.to_dict(), "audit": report.to_dict()}, "\n".join(text))
    out.record(run.to_dict(), _summary(run))
    return _exit(run, args.strict)


def cmd_enum_verify(args, out: Emitter) -> int:
    if args.n > MAX_ENUM_CONNECTED or args.n < 1:
        print(f"refusing enum-verify with n={args.n}: supported range is 1..{MAX_ENUM_CONNECTED}",
              file=sys.stderr)
        return EXIT_USAGE
    run = RunReport("enum-verify", {"n": args.n, "theorem": args.theorem, "k": args.k,
                                    "generic": args.generic})
    res = enum_verify(args.n, args.theorem, args.k, generic=args.generic, backend=args.backend)
    for f in res.failures:
        out.record({"record": "failure", **f}, f"FAILS: {f}")
    run.instances, run.holds, run.hypotheses_unmet, run.failures = (
        res.instances, res.holds, res.hypotheses_unmet, res.failed)
    out.record(run.to_dict(), f"{res.instances} connected graphs scanned on {args.n} vertices: "
               f"{res.holds} hold, {res.hypotheses_unmet} hypotheses unmet, {res.failed} failures")
    return _exit(run, args.strict)


def cmd_trees_verify(args, out: Emitter) -> int:
    if args.n > MAX_ENUM_TREES or args.n < 1:
        print(f"refusing trees-verify with n={args.n}: supported range is 1..{MAX_ENUM_TREES}",
              file=sys.stderr)
        return EXIT_USAGE
    run = RunReport("trees-verify", {"n": args.n, "k": args.k})
    res = trees_verify(args.n, args.k, backend=args.backend)
    for f in res.failures:
        out.record({"record": "failure", **f}, f"FAILS: {f}")
    run.instances, run.holds, run.failures = res.instances, res.holds, res.failed
    out.record(run.to_dict(), f"{res.instances} labelled trees on {args.n} vertices, k<= {args.k}: "
               f"{res.failed} failures")
    return _exit(run, args.strict)


def cmd_bench(args, out: Emitter) -> int:
    from graphpow.bench import bench_power

    spec = _family_spec(args.family, args)
    g = spec.build()
    run = RunReport("bench", {**spec.to_dict(), "k": args.power_k})
    backends = args.backends.split(",") if args.backends else available()
    results = bench_power(g, args.power_k, backends=backends, repeats=args.repeats, threads=args.threads)
    for r in results:
        out.record({"record": "bench", **r},
                   f"{r['backend']:>6}: median {r['median_ms']:.1f} ms over {r['repeats']} runs "
                   f"(n={g.n}, m(G^{args.power_k})={r['edges']})")
    if len({r["digest"] for r in results}) > 1:
        run.failures = 1
        out.record({"record": "error", "message": "backends disagree"}, "ERROR: backends disagree")
    if len(results) == 2:
        ratio = results[1]["median_ms"] / max(results[0]["median_ms"], 1e-9)
        out.record({"record": "speedup", "value": ratio}, f"speedup {results[0]['backend']} vs "
                   f"{results[1]['backend']}: {ratio:.1f}x")
    out.record(run.to_dict(), _summary(run))
    return _exit(run, False)


def _tally(run: RunReport, verdict: Verdict) -> None:
    run.instances += 1
    if verdict == Verdict.HOLDS:
        run.holds += 1
    elif verdict == Verdict.FAILS:
        run.failures += 1
    else:
        run.hypotheses_unmet += 1


def _summary(run: RunReport) -> str:
    d = run.to_dict()
    c = d["counts"]
    return (f"{run.command}: {c['instances']} instance(s), {c['holds']} hold, "
            f"{c['hypotheses_unmet']} hypotheses unmet, {c['failures']} failure(s) "
            f"[{d['wall_time_ms']} ms]")


def _exit(run: RunReport, strict: bool) -> int:
    if run.failures or (strict and run.hypotheses_unmet):
        return EXIT_FAIL
    return EXIT_OK


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphpow", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, strict=True):
        p.add_argument("--json", action="store_true", help="line-delimited JSON records")
        if strict:
            p.add_argument("--strict", action="store_true",
                           help="treat HYPOTHESES_UNMET as failure")

    p = sub.add_parser("gen", help="generate a family instance")
    p.add_argument("family_name", metavar="family")
    _add_family_args(p)
    p.add_argument("--out")
    common(p, strict=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("power", help="compute G^k")
    p.add_argument("input", nargs="?")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--threads", type=int)
    p.add_argument("--family")
    _add_family_args(p, "--hk")
    common(p, strict=False)
    p.set_defaults(func=cmd_power)

    theorems = [t.value for t in TheoremId] + ["per_vertex"]
    p = sub.add_parser("check", help="check one bound on one graph")
    p.add_argument("theorem", choices=theorems)
    p.add_argument("input", nargs="?")
    p.add_argument("--family")
    _add_family_args(p, "--hk")
    p.add_argument("-k", type=int, help="power exponent")
    p.add_argument("--bound-d", type=int, help="d for thm_1_1 / g3_bound / per_vertex (default: min degree)")
    p.add_argument("--kprime", type=int, help="k' for per_vertex claim (a)")
    p.add_argument("--transitive", action="store_true",
                   help="assert the input file is vertex-transitive (vt_bound)")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cert", help="build and audit a 3-net certificate")
    p.add_argument("input", nargs="?")
    p.add_argument("--family")
    _add_family_args(p, "--hk")
    p.add_argument("--kprime", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("enum-verify", help="check a theorem on all connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theorem", required=True, choices=[t.value for t in ENUM_THEOREMS])
    p.add_argument("-k", type=int)
    p.add_argument("--generic", action="store_true", help="per-graph checker instead of the kernel sweep")
    p.add_argument("--backend", choices=["native", "python"])
    common(p)
    p.set_defaults(func=cmd_enum_verify)

    p = sub.add_parser("trees-verify", help="tree-power lower bound on all labelled trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--backend", choices=["native", "python"])
    common(p)
    p.set_defaults(func=cmd_trees_verify)

    p = sub.add_parser("bench", help="time power() on each kernel backend")
    p.add_argument("--family", required=True)
    _add_family_args(p, "--hk")
    p.add_argument("-k", dest="power_k", type=int, default=4)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--backends", help=f"comma list (default: {','.join(available())})")
    common(p, strict=False)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Emitter(args.json)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args, out)
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (GraphError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
