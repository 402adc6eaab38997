"""Command-line front end: ``signed-kostka {decompose,kostka,verify}``.

Exit codes: 0 pass, 1 violation found, 2 unresolved (cap or budget), 3 usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from . import cache
from . import rep_engine as re
from .combinatorics import fmt_pair, labels, pair_size, unscale_label, validate_prime
from .registry import Registry, k_table
from . import verify as vf

EXIT_PASS, EXIT_VIOLATION, EXIT_UNRESOLVED, EXIT_USAGE = 0, 1, 2, 3

VERIFIERS = ("dominance", "scaling", "product", "indecomposable", "labels", "strict-inequality", "hyperoctahedral")
# short names accepted for compatibility with existing scripts
ALIASES = {
    "thm1.1": "dominance",
    "thm1.2": "scaling",
    "thm1.3": "product",
    "thm1.4": "indecomposable",
    "example6.1": "strict-inequality",
    "lemma6.1": "hyperoctahedral",
}


class UsageError(ValueError):
    pass


def parse_parts(text: str | None) -> tuple:
    """``"3,2,1"`` -> (3, 2, 1); empty string or ``-`` is the empty partition."""
    if text is None or text.strip() in ("", "-", "()", "empty"):
        return ()
    try:
        parts = tuple(int(x) for x in text.replace("-", ",").split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"cannot parse partition {text!r}") from exc
    if any(x <= 0 for x in parts):
        raise UsageError(f"parts must be positive: {text!r}")
    return tuple(sorted(parts, reverse=True))


# -- table serialisation ------------------------------------------------------------


def table_document(table: dict, n: int, p: int) -> dict:
    entries = []
    for (ab, L), k in table.items():
        lam, mu = unscale_label(L, p)
        entries.append(
            {"alpha": list(ab[0]), "beta": list(ab[1]), "lambda": list(lam), "mu": list(mu), "mult": int(k)}
        )
    return {"p": p, "n": n, "entries": entries}


def _dash(parts) -> str:
    return "-".join(str(x) for x in parts)


def _undash(text: str) -> list:
    return [int(x) for x in text.split("-")] if text else []


def to_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "beta", "lambda", "mu", "mult"])
    for e in doc["entries"]:
        w.writerow([_dash(e["alpha"]), _dash(e["beta"]), _dash(e["lambda"]), _dash(e["mu"]), e["mult"]])
    return buf.getvalue()


def from_csv(text: str, p: int, n: int) -> dict:
    rows = list(csv.DictReader(io.StringIO(text)))
    entries = [
        {
            "alpha": _undash(r["alpha"]),
            "beta": _undash(r["beta"]),
            "lambda": _undash(r["lambda"]),
            "mu": _undash(r["mu"]),
            "mult": int(r["mult"]),
        }
        for r in rows
    ]
    return {"p": p, "n": n, "entries": entries}


# -- commands ---------------------------------------------------------------------------


def _registry(args) -> Registry:
    R = Registry(args.p, seed=args.seed, cap=args.cap)
    R.cache_root = cache.cache_dir(args.cache_dir)
    return R


def _load_cached(R: Registry, n_max: int) -> None:
    for n in range(1, n_max + 1):
        cache.load(R, n, R.cache_root)


def _save_cached(R: Registry, n_max: int) -> None:
    if R.cache_root is None:
        return
    for n in range(1, n_max + 1):
        if all(L in R.entries for L in labels(n, R.p)):
            cache.save(R, n, R.cache_root)


def cmd_decompose(args, out) -> int:
    ab = (parse_parts(args.alpha), parse_parts(args.beta))
    if pair_size(ab) == 0:
        raise UsageError("the shape is empty")
    t0 = time.perf_counter()
    M = re.signed_young_rep(ab, args.p)
    parts = re.decompose(M, seed=args.seed, cap=args.cap)
    R = _registry(args)
    n = pair_size(ab)
    _load_cached(R, n)
    summands = []
    status = EXIT_PASS
    for S in parts:
        entry = {"dim": S.dim, "status": S.status, "end_dim": S.end_dim, "vertex": None, "label": None}
        if S.status != "certified":
            status = EXIT_UNRESOLVED
        else:
            entry["vertex"] = str(R.vertex(S))
            try:
                L = R.match(S, labels(n, args.p))
                entry["label"] = fmt_pair(L) if L else None
            except (re.Unresolved, AssertionError) as exc:
                entry["label_error"] = str(exc)
        summands.append(entry)
    _save_cached(R, n)
    doc = {
        "command": "decompose",
        "p": args.p,
        "alpha": list(ab[0]),
        "beta": list(ab[1]),
        "seed": args.seed,
        "dim": M.dim,
        "end_dim": re.end_dimension(M),
        "summands": summands,
        "seconds": round(time.perf_counter() - t0, 3),
    }
    if args.format == "json":
        json.dump(doc, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(f"M{fmt_pair(ab)}  p={args.p}  dim {M.dim}  End dim {doc['end_dim']}\n")
        out.write(f"{len(parts)} summand{'s' if len(parts) != 1 else ''}\n")
        for s in summands:
            label = f"Y{s['label']}" if s["label"] else "?"
            out.write(f"  {label:<24} dim {s['dim']:>6}  End dim {s['end_dim']}  vertex {s['vertex']}  {s['status']}\n")
    return status


def cmd_kostka(args, out) -> int:
    if args.n is None:
        raise UsageError("kostka needs --n")
    R = _registry(args)
    _load_cached(R, args.n)
    table = k_table(args.n, args.p, R, method=args.method, rows=args.rows)
    _save_cached(R, args.n)
    doc = table_document(table, args.n, args.p)
    if args.format == "csv":
        out.write(to_csv(doc))
    elif args.format == "json":
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        for e in doc["entries"]:
            if e["mult"]:
                out.write(f"[M({_dash(e['alpha'])}|{_dash(e['beta'])}) : Y({_dash(e['lambda'])}|p({_dash(e['mu'])}))] = {e['mult']}\n")
    return EXIT_PASS


def _run_verifier(args) -> vf.Report:
    p = args.p
    R = _registry(args)
    name = ALIASES.get(args.name, args.name)
    if name == "dominance":
        n = args.n or 4
        _load_cached(R, n)
        rep = vf.verify_dominance(n, p, R)
        _save_cached(R, n)
        return rep
    if name == "scaling":
        return vf.verify_scaling(args.n or 2, p, R)
    if name == "product":
        return vf.verify_product(
            parse_parts(args.pi), parse_parts(args.pit), parse_parts(args.phi), parse_parts(args.phit), args.k, p, R
        )
    if name == "indecomposable":
        n_max = args.n_max or args.n or 4
        return vf.verify_indecomposable(n_max, p, extra_max=args.extra_max, seed=args.seed, jobs=args.jobs)
    if name == "labels":
        return vf.verify_labels(args.n_max or args.n or 6, p, R)
    if name == "strict-inequality":
        return vf.strict_inequality_family(args.m, args.c, p, R)
    if name == "hyperoctahedral":
        return vf.verify_hyperoctahedral(args.m, p, R)
    raise UsageError(f"unknown verifier {name}")


def cmd_verify(args, out) -> int:
    rep = _run_verifier(args)
    if args.format == "json":
        json.dump(rep.to_dict(), out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        for c in rep.checks:
            if c.outcome != vf.PASS or args.verbose:
                out.write(f"{c.outcome.upper():<10} {c.name}  {c.detail}\n")
        summary = ", ".join(f"{rep.count(k)} {k}" for k in (vf.PASS, vf.FAIL, vf.UNRESOLVED, vf.SKIPPED))
        out.write(f"{rep.command}: {summary} ({rep.seconds:.1f}s)\n")
    return rep.exit_code


# -- argument parsing --------------------------------------------------------------------


def _prime(text: str) -> int:
    try:
        return validate_prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_prime, default=3, help="odd prime (default 3)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=re.DEFAULT_DIM_CAP, help="largest module decomposed")
    common.add_argument("--cache-dir", default=None, help=f"registry cache (else ${cache.ENV_VAR})")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = _Parser(prog="signed-kostka", description="Signed Young modules and signed p-Kostka numbers over F_p.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decompose", parents=[common], help="decompose M(alpha|beta)")
    d.add_argument("--alpha", default="")
    d.add_argument("--beta", default="")

    k = sub.add_parser("kostka", parents=[common], help="table of signed p-Kostka numbers")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--method", choices=("brute", "klyachko", "both"), default="brute")
    k.add_argument("--rows", choices=("labels", "all"), default="labels", help="label shapes only, or all of P^2(n)")

    v = sub.add_parser("verify", parents=[common], help="check one of the structural statements")
    v.add_argument("name", choices=VERIFIERS + tuple(ALIASES), metavar="{" + ",".join(VERIFIERS) + "}")
    v.add_argument("--n", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--extra-max", type=int, help="indecomposable: one-row and hook shapes up to this degree")
    v.add_argument("--m", type=int, default=1)
    v.add_argument("--c", type=int, default=1)
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--pi", default="1")
    v.add_argument("--pit", default="")
    v.add_argument("--phi", default="1")
    v.add_argument("--phit", default="")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_USAGE
    if args.verbose:
        logging.getLogger("signed_kostka").setLevel(logging.INFO)
    try:
        if args.command == "decompose":
            return cmd_decompose(args, out)
        if args.command == "kostka":
            return cmd_kostka(args, out)
        return cmd_verify(args, out)
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except re.Unresolved as exc:
        sys.stderr.write(f"unresolved: {exc}\n")
        return EXIT_UNRESOLVED
    except AssertionError as exc:
        sys.stderr.write(f"violation: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
