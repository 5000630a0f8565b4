"""Command-line front end: Betti tables, descriptor listings, verification.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
bound exceeded.  Output is deterministic: identical invocations produce
byte-identical bytes.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .betti import betti_table, betti_from_descriptors
from .koszul import ResourceBoundError
from .orbits import descriptors_for
from .verify import (
    betti_resolve_table,
    verify_crosscheck,
    verify_equivariant,
    verify_hilbert,
    verify_support,
    verify_tor,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


# -- serialization --------------------------------------------------------------


def _betti_doc(table):
    return {
        "n": table.n,
        "ideal": table.ideal,
        "method": table.provenance,
        "entries": [
            {"p": p, "q": q, "dim": v} for (p, q), v in table.sorted_entries()
        ],
    }


def _rep_terms(rep):
    if rep.s2:
        return [[list(lam), label, mult] for (lam, label), mult in rep.sorted_terms()]
    return [[list(lam), mult] for lam, mult in rep.sorted_terms()]


def _orbit_doc(m):
    pattern = [[d, p] for d, p in m.pattern.blocks]
    if m.pattern.zero_mult():
        pattern.append([0, m.pattern.zero_mult()])
    return {
        "pattern": pattern,
        "bidegree": list(m.pattern.bidegree) if m.pattern.bidegree else None,
        "g2": m.g2,
        "blocks": [_rep_terms(rep) for rep in m.block_reps],
        "dim": m.dim(),
        "decomposition": _rep_terms(m.decompose()),
    }


def _equivariant_doc(n, ideal, g2):
    strands = descriptors_for(ideal, n, g2=g2)
    return {
        "n": n,
        "ideal": ideal,
        "g2": g2,
        "entries": [
            {
                "p": s.p,
                "q": s.q,
                "strand": s.strand,
                "dim": s.dim(),
                "orbits": [_orbit_doc(m) for m in s.modules],
            }
            for s in strands
        ],
    }


def _report_doc(command, parameters, items):
    counts = {"match": 0, "mismatch": 0, "skip": 0, "documented_discrepancy": 0}
    rows = []
    for it in items:
        counts[it.status.replace("-", "_")] += 1
        rows.append(
            {
                "name": it.name,
                "status": it.status,
                "expected": _plain(it.expected),
                "actual": _plain(it.actual),
            }
        )
    return {
        "command": command,
        "parameters": parameters,
        "items": rows,
        "summary": counts,
        "version": __version__,
    }


def _plain(value):
    if value is None or isinstance(value, (int, str, bool)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    return str(value)


# -- rendering ------------------------------------------------------------------


def render_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv_cell(v):
    s = str(v)
    if "," in s or '"' in s or "\n" in s:
        s = '"' + s.replace('"', '""') + '"'
    return s


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(_csv_cell(c) for c in row) for row in rows]
    return "\n".join(lines) + "\n"


def _md(header, rows) -> str:
    widths = [
        max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
        for i, h in enumerate(header)
    ]
    out = ["| " + " | ".join(str(h).ljust(w) for h, w in zip(header, widths)) + " |"]
    out.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for r in rows:
        out.append("| " + " | ".join(str(c).ljust(w) for c, w in zip(r, widths)) + " |")
    return "\n".join(out) + "\n"


def render_betti(table, fmt) -> str:
    if fmt == "json":
        return render_json(_betti_doc(table))
    rows = [(p, q, v) for (p, q), v in table.sorted_entries()]
    if fmt == "csv":
        return _csv(("p", "q", "dim"), rows)
    return _md(("p", "q", "dim"), rows)


def render_equivariant(doc, fmt) -> str:
    if fmt == "json":
        return render_json(doc)
    rows = []
    for e in doc["entries"]:
        for o in e["orbits"]:
            pattern = ",".join(f"{d}^{m}" if m > 1 else str(d) for d, m in o["pattern"])
            blocks = "; ".join(
                " + ".join(
                    (f"{t[-1]}*" if t[-1] != 1 else "")
                    + str(t[0])
                    + (f"x{t[1]}" if len(t) == 3 else "")
                    for t in block
                )
                for block in o["blocks"]
            )
            decomp = " + ".join(
                (f"{t[-1]}*" if t[-1] != 1 else "")
                + str(t[0])
                + (f"x{t[1]}" if len(t) == 3 else "")
                for t in o["decomposition"]
            )
            rows.append(
                (
                    e["p"],
                    e["q"],
                    f"<{pattern}>",
                    str(tuple(o["bidegree"])) if o["bidegree"] else "-",
                    o["g2"] or "-",
                    o["dim"],
                    blocks,
                    decomp,
                )
            )
    header = ("p", "q", "pattern", "bidegree", "g2", "dim", "blocks", "decomposition")
    return _csv(header, rows) if fmt == "csv" else _md(header, rows)


def render_report(doc, fmt) -> str:
    if fmt == "json":
        return render_json(doc)
    rows = [
        (r["name"], r["status"], str(r["expected"]), str(r["actual"]))
        for r in doc["items"]
    ]
    header = ("check", "status", "expected", "actual")
    body = _csv(header, rows) if fmt == "csv" else _md(header, rows)
    summary = ", ".join(f"{k}={v}" for k, v in doc["summary"].items())
    return body + ("" if fmt == "csv" else f"\nsummary: {summary}\n")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------------


def cmd_betti(args) -> int:
    if args.method == "resolve":
        table = betti_resolve_table(args.n, args.ideal, unsafe_large=args.unsafe_large)
    elif args.method == "descriptors":
        table = betti_from_descriptors(args.n, args.ideal)
    else:
        table = betti_table(args.n, args.ideal, args.method)
    _emit(render_betti(table, args.format), args.out)
    return EXIT_OK


def cmd_equivariant(args) -> int:
    doc = _equivariant_doc(args.n, args.ideal, args.g2)
    _emit(render_equivariant(doc, args.format), args.out)
    return EXIT_OK


def _suite_tasks(args):
    """(name, thunk) pairs for the requested verification suite."""
    suite = args.suite
    tasks = []
    if suite in ("tor", "all"):
        for n in _ns(args, brute=True):
            tasks.append((f"tor(n={n})", lambda n=n: verify_tor(n, args.ideal, args.unsafe_large)))
    if suite in ("characters", "all"):
        for n in _ns(args, brute=True):
            tasks.append(
                (
                    f"characters(n={n})",
                    lambda n=n: verify_equivariant(args.ideal, n, args.unsafe_large),
                )
            )
    if suite in ("support", "all"):
        for n in _ns(args, brute=True):
            tasks.append((f"support(n={n})", lambda n=n: verify_support(n, args.unsafe_large)))
    if suite in ("hilbert", "all"):
        for n in _ns(args, brute=False, cap=5):
            tasks.append((f"hilbert(n={n})", lambda n=n: verify_hilbert(n, args.max_degree)))
    if suite in ("crosscheck", "all"):
        n_max = args.n_max or 10
        tasks.append((f"crosscheck(n_max={n_max})", lambda: verify_crosscheck(n_max)))
    return tasks


def _ns(args, brute, cap=None):
    if args.n is not None:
        return [args.n]
    hi = args.n_max or (4 if brute else (cap or 4))
    if brute and not args.unsafe_large:
        hi = min(hi, 4)
    if cap:
        hi = min(hi, cap)
    return list(range(2, hi + 1))


def cmd_verify(args) -> int:
    tasks = _suite_tasks(args)
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = [(name, pool.submit(fn)) for name, fn in tasks]
            results = [(name, f.result()) for name, f in futures]
    else:
        results = [(name, fn()) for name, fn in tasks]
    items = []
    for _name, res in results:
        items.extend(res)
    params = {
        "suite": args.suite,
        "n": args.n,
        "n_max": args.n_max,
        "ideal": args.ideal,
        "max_degree": args.max_degree,
    }
    doc = _report_doc("verify", params, items)
    _emit(render_report(doc, args.format), args.out)
    return EXIT_OK if doc["summary"]["mismatch"] == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="permsyz",
        description="Equivariant syzygy descriptors, Betti/Hilbert tables, and "
        "brute-force verification for 2x2 permanental ideals.",
    )
    ap.add_argument("--version", action="version", version=f"permsyz {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="md")
    common.add_argument("--out", metavar="PATH", default=None, help="write output to PATH")
    common.add_argument("--ideal", choices=("P", "D"), default="P")
    common.add_argument(
        "--unsafe-large",
        action="store_true",
        help="lift the n<=4 bound on brute-force computations",
    )

    b = sub.add_parser("betti", parents=[common], help="graded Betti table")
    b.add_argument("--n", type=int, required=True)
    b.add_argument(
        "--method",
        choices=("summation", "closed", "ghsw", "descriptors", "resolve"),
        default="summation",
    )
    b.set_defaults(fn=cmd_betti)

    e = sub.add_parser("equivariant", parents=[common], help="orbit-module descriptors")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--g2", action="store_true", help="refine by Z^2 bidegree and S_2 label")
    e.set_defaults(fn=cmd_equivariant)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument(
        "suite", choices=("tor", "characters", "hilbert", "support", "crosscheck", "all")
    )
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--max-degree", type=int, default=8)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
