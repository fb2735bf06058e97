"""Command-line front end.

Exit codes: 0 success (for ``verify``: certified optimal), 1 verified but not
optimal, 2 usage, precondition or file-format error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from .artifact import atomic_write, load_code, save_code
from .curve import sqrt_q
from .errors import LrcError, NoQualifyingSubgroup, SubmatrixSingular
from .gf.field import FieldSpec, field_of_order, prime_factors
from .lrc import build, capacity
from .shards import decode_shards, encode_file, repair_shard, shard_name
from .verify import DEFAULT_CAP, certify, singleton_type_bound

LOCALITIES = (2, 3, 5, 7, 11, 23)


class UsageError(Exception):
    pass


def admissible(p: int, r: int) -> str | None:
    """None if (p, r) is covered by a construction, else the reason it is not."""
    rules = {
        2: (p == 3 or p % 3 == 2, "r=2 requires p=3 or p=2 mod 3"),
        3: (p == 2 or p % 4 == 3, "r=3 requires p=2 or p=3 mod 4"),
        5: (p == 3 or p % 3 == 2, "r=5 requires p=3 or p=2 mod 3"),
        7: (p == 2, "r=7 requires p=2"),
        11: (p in (2, 3), "r=11 requires p=2 or p=3"),
        23: (p == 2, "r=23 requires p=2"),
    }
    if r not in rules:
        return f"r must be one of {', '.join(map(str, LOCALITIES))}"
    ok, why = rules[r]
    return None if ok else why


def closed_form_capacity(q: int, r: int) -> int:
    s = sqrt_q(field_of_order(q))
    if r == 2:
        return (q + 2 * s) // 3
    return (q + 2 * s - r - 2) // (r + 1)


def _field(q: int) -> FieldSpec:
    if q < 2:
        raise UsageError("q must be a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise UsageError(f"q={q} is not a prime power")
    p = ps[0]
    a = round(math.log(q, p))
    if a % 2:
        raise UsageError(f"q={q}={p}^{a}: a must be even")
    return field_of_order(q)


def _construct(args):
    F = _field(args.q)
    why = admissible(F.p, args.r)
    if why:
        raise UsageError(why)
    code = build(F, args.r, args.t, args.ell, seed=args.seed)
    report = certify(code, args.exhaustive_cap).to_dict() if args.verify else None
    save_code(code, args.out, report, seed=args.seed)
    print(f"[{code.n},{code.k},{code.d}] code over F_{F.q} with locality {code.r} -> {args.out}")
    return 0


def _verify(args):
    code = load_code(args.artifact)
    report = certify(code, args.exhaustive_cap)
    d = report.to_dict()
    if args.json:
        print(json.dumps(d, indent=1))
    else:
        for key, val in d.items():
            print(f"{key}: {val}")
    return 0 if report.optimal else 1


def _encode(args):
    code = load_code(args.artifact)
    paths = encode_file(code, args.input, args.out_dir)
    print(f"wrote {len(paths)} shards to {args.out_dir}")
    return 0


def _repair(args):
    code = load_code(args.artifact)
    blob = repair_shard(code, args.shards, args.lost)
    out = Path(args.out) if args.out else Path(args.shards) / shard_name(args.lost)
    atomic_write(out, blob)
    print(f"repaired shard {args.lost} -> {out}")
    return 0


def _decode(args):
    code = load_code(args.artifact)
    atomic_write(args.out, decode_shards(code, args.shards))
    print(f"decoded -> {args.out}")
    return 0


def table_rows(q: int, verify: bool = False, cap: int = DEFAULT_CAP):
    """(r, ell_max, closed_form, rows) per admissible locality; rows are dicts."""
    F = _field(q)
    out = []
    for r in LOCALITIES:
        if admissible(F.p, r):
            continue
        try:
            cap_r = capacity(F, r)
        except (NoQualifyingSubgroup, SubmatrixSingular) as exc:
            out.append((r, None, closed_form_capacity(q, r), [], str(exc)))
            continue
        if cap_r == 0:
            out.append((r, 0, closed_form_capacity(q, r), [], "no unramified orbit, no codes"))
            continue
        rows = []
        t_min = 0 if r == 2 else 1
        for ell in range(1, cap_r + 1):
            for t in range(t_min, ell):
                n = (r + 1) * ell
                k = 2 * t + 1 if r == 2 else r * t - r + 1
                d = n - 3 * t if r == 2 else n - (t - 1) * (r + 1)
                row = {"r": r, "t": t, "ell": ell, "n": n, "k": k, "d": d,
                       "bound": singleton_type_bound(n, k, r)}
                if verify:
                    row["status"] = "optimal" if certify(build(F, r, t, ell), cap).optimal else "FAILED"
                else:
                    row["status"] = "meets bound" if d == row["bound"] else "below bound"
                rows.append(row)
        out.append((r, cap_r, closed_form_capacity(q, r), rows, None))
    return out


def _table(args):
    fields = ["r", "t", "ell", "n", "k", "d", "bound", "status"]
    writer = csv.DictWriter(sys.stdout, fieldnames=fields) if args.csv else None
    if writer:
        writer.writeheader()
    for r, cap_r, closed, rows, note in table_rows(args.q, args.verify, args.exhaustive_cap):
        if not args.csv:
            if note:
                print(f"# r={r}: {note}")
                continue
            rel = "=" if cap_r == closed else ">"
            print(f"# r={r}: ell_max={cap_r} (closed form {closed}, computed {rel} closed form)")
        for row in rows:
            if writer:
                writer.writerow(row)
            else:
                print(" ".join(f"{k}={row[k]}" for k in fields))
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="elliptic-lrc",
                                 description="Optimal locally repairable codes from maximal elliptic curves")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write its artifact")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--ell", type=int, required=True)
    c.add_argument("--out", required=True)
    c.add_argument("--seed", type=int, default=None, help="shuffle fiber order (experiments only)")
    c.add_argument("--verify", action="store_true", help="embed a verification report")
    c.add_argument("--exhaustive-cap", type=int, default=DEFAULT_CAP)
    c.set_defaults(func=_construct)

    v = sub.add_parser("verify", help="certify an artifact")
    v.add_argument("artifact")
    v.add_argument("--exhaustive-cap", type=int, default=DEFAULT_CAP)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_verify)

    e = sub.add_parser("encode", help="stripe a file into n shards")
    e.add_argument("artifact")
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--out-dir", required=True)
    e.set_defaults(func=_encode)

    rp = sub.add_parser("repair", help="rebuild one lost shard from its repair group")
    rp.add_argument("artifact")
    rp.add_argument("--shards", required=True)
    rp.add_argument("--lost", type=int, required=True)
    rp.add_argument("--out", default=None)
    rp.set_defaults(func=_repair)

    d = sub.add_parser("decode", help="reassemble the original file from shards")
    d.add_argument("artifact")
    d.add_argument("--shards", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=_decode)

    t = sub.add_parser("table", help="list every admissible code for a field size")
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--csv", action="store_true")
    t.add_argument("--verify", action="store_true")
    t.add_argument("--exhaustive-cap", type=int, default=DEFAULT_CAP)
    t.set_defaults(func=_table)
    return ap


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, LrcError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
