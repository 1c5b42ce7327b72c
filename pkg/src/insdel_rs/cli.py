"""Command-line interface.

Exit codes: 0 success/pass, 1 property failure, 2 usage or input error,
3 search or attempt budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter

from . import channel
from .artifacts import (
    ArtifactError,
    code_document,
    load_spec,
    load_word,
    provenance,
    ring_document,
    write_document,
)
from .constructions import (
    construct_abc,
    field_size_lower_bound,
    k2_construction,
    random_construction,
    verify_abc,
)
from .criterion import default_jobs, verify_code
from .errors import AttemptsExhausted, InsdelError, SearchExhausted
from .rs_code import RSCodeSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3

log = logging.getLogger("insdel_rs")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_construct(args) -> int:
    if args.kind == "sidon-k2":
        built = k2_construction(args.m, args.seed, args.modulus_seed)
        prov = provenance("sidon-k2", {"m": args.m, "modulus_seed": args.modulus_seed}, args.seed)
        doc = code_document(
            built.code,
            prov,
            sidon={"gamma": built.sidon.gamma.to_json(), "basis": [b.to_json() for b in built.sidon.basis]},
            parity_matrix=built.parity.to_json(),
        )
    elif args.kind == "abc":
        params, alphas = construct_abc(args.k, args.n, force=args.force)
        doc = ring_document(params, alphas, provenance("abc", {"k": args.k, "n": args.n}, args.seed))
    else:
        stats: dict = {}
        code = random_construction(args.n, args.k, args.q, args.seed, args.max_attempts, stats=stats)
        prov = provenance("random", {"n": args.n, "k": args.k, "q": args.q, "attempts": stats["attempts"]}, args.seed)
        doc = code_document(code, prov)
    text = write_document(doc, args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        log.info("wrote %s", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    kind, spec = load_spec(args.spec)
    opts = dict(full=args.full, jobs=args.jobs, deterministic=args.deterministic)
    if kind == "ring":
        params, alphas = spec
        report = verify_abc(params, alphas, **opts)
    else:
        report = verify_code(spec, **opts)
    out = report.to_json()
    if args.full:
        out["failures"] = [{"I": list(i), "J": list(j)} for i, j in report.failures]
    _emit(out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _field_spec(path) -> RSCodeSpec:
    kind, spec = load_spec(path)
    if kind != "field":
        raise ArtifactError("simulation and decoding need a field-form spec")
    return spec


def cmd_simulate(args) -> int:
    code = _field_spec(args.spec)
    tally: Counter = Counter()
    sink = open(args.out, "w") if args.out else None
    try:
        for rec in channel.run_trials(code, args.trials, args.budget, args.seed, args.radius):
            tally[rec["outcome"]] += 1
            if sink:
                sink.write(json.dumps(rec, separators=(",", ":")) + "\n")
    finally:
        if sink:
            sink.close()
    _emit({"trials": args.trials, "budget": args.budget, "seed": args.seed, "outcomes": dict(tally)})
    return EXIT_OK if tally["ok"] == args.trials else EXIT_FAIL


def cmd_decode(args) -> int:
    code = _field_spec(args.spec)
    received = load_word(args.received, code.field)
    res = channel.decode(code, received, args.radius)
    _emit(res.to_json())
    return EXIT_OK if res.ok else EXIT_FAIL


def _k2_field_note(n: int):
    for m in (2, 3, 4, 5, 6):
        if (3**m + 1) // 2 == n:
            return m, 3 ** (4 * m)
    return None


def cmd_bounds(args) -> int:
    n, k = args.n, args.k
    if not 2 * k - 1 <= n:
        raise InsdelError(f"need 2k-1 <= n, got k={k}, n={n}")
    out = {"n": n, "k": k, "correction_radius": n - 2 * k + 1, "trivial_lower_bound": n}
    if k >= 2:
        lb = field_size_lower_bound(n, k)
        out["field_size_lower_bound"] = float(lb)
        out["field_size_lower_bound_exact"] = str(lb)
    rate = k / n
    delta = (n - 2 * k + 1) / n
    out["rate"] = rate
    out["delta"] = delta
    out["half_singleton_rhs"] = (1 - delta) / 2
    if k == 2 and (note := _k2_field_note(n)):
        m, q = note
        out["note"] = f"construct sidon-k2 --m {m} gives q = 3^{4 * m} = {q}"
    _emit(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="insdel-rs", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build evaluation points")
    csub = c.add_subparsers(dest="kind", required=True)
    s = csub.add_parser("sidon-k2", help="[(3^m+1)/2, 2] code over F_{3^4m}")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--modulus-seed", type=int, default=0)
    a = csub.add_parser("abc", help="alpha_i = (gamma - i)^((2k)!^2) in ring form")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--force", action="store_true", help="allow k above the work cap")
    r = csub.add_parser("random", help="Las Vegas search over F_q")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--q", type=int, required=True)
    r.add_argument("--max-attempts", type=int, default=10**5)
    for p in (s, a, r):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="exhaustive criterion check")
    v.add_argument("spec")
    v.add_argument("--full", action="store_true", help="collect every failing pair")
    v.add_argument("--deterministic", action="store_true", help="single-threaded lexicographic scan")
    v.add_argument("--jobs", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    sm = sub.add_parser("simulate", help="random adversarial trials")
    sm.add_argument("spec")
    sm.add_argument("--trials", type=int, default=100)
    sm.add_argument("--budget", type=int, required=True)
    sm.add_argument("--radius", type=int, default=None)
    sm.add_argument("--seed", type=int, default=0)
    sm.add_argument("--out", default=None, help="JSON-lines transcript")
    sm.set_defaults(func=cmd_simulate)

    d = sub.add_parser("decode", help="decode one received word")
    d.add_argument("spec")
    d.add_argument("received")
    d.add_argument("--radius", type=int, default=None)
    d.set_defaults(func=cmd_decode)

    b = sub.add_parser("bounds", help="field-size and rate bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "jobs", None) is None and args.command == "verify":
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except (SearchExhausted, AttemptsExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (ArtifactError, InsdelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
