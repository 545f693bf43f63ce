"""Command line front end: ``cascade-kit show | verify | table``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fixtures
from .cascade import compute_cascade, hasse_diagram
from .cascade_element import cascade_element, spectrum_of
from .errors import InvalidType, NotApplicable
from .involution import regular_certificate, z2_grading
from .kostant_ideal import kostant_for_cascade
from .orbit import orbit_data
from .root_system import build
from .simple_type import ALIASES, SimpleType, canonical_types
from .verify import verify_all, verify_type

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NA = 0, 1, 2, 3
TOPICS = ("roots", "cascade", "xk", "wk", "ideal", "involution", "orbit", "all")
TABLES = ("orbits-classical", "orbits-exceptional", "marks", "cascade-lists")


class UsageError(Exception):
    pass


def parse_type(text: str) -> SimpleType:
    """Case-insensitive family letter plus rank; low-rank aliases are refused."""
    try:
        t = SimpleType.parse(text)
    except InvalidType:
        label = text.strip().upper()
        if label in ALIASES:
            raise UsageError(f"{label} is not a canonical label; use {ALIASES[label]}") from None
        raise UsageError(f"cannot parse type {text!r}") from None
    if str(t) in ALIASES:
        raise UsageError(f"{t} is not a canonical label; use {ALIASES[str(t)]}")
    return t


def q(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _fmt_root(g) -> str:
    if all(v <= 0 for v in g) and any(g):
        return "-" + _fmt_root([-v for v in g])
    return "(" + "".join(str(v) for v in g) + ")" if all(0 <= v < 10 for v in g) else str(list(g))


def _fmt_q(text: str) -> str:
    return text[:-2] if text.endswith("/1") else text


# JSON sections ----------------------------------------------------------------------


NA_KEYS = {"wk": "w_k", "ideal": "ideal", "involution": "involution"}


def section(t: SimpleType, topic: str) -> dict:
    rs = build(t)
    c = compute_cascade(rs)
    if topic == "roots":
        return {"positive_roots": [list(g) for g in rs.positive_roots], "theta": list(rs.theta)}
    if topic == "cascade":
        return {"cascade": c.to_json()}
    if topic == "xk":
        x = cascade_element(c)
        return {
            "x_k": [q(v) for v in x],
            "marks": [q(v) for v in rs.marks(x)],
            "spectrum": spectrum_of(c).to_json(),
        }
    if t.is_a_even and topic in ("wk", "ideal", "involution"):
        raise NotApplicable("not applicable: type A_{2p}")
    if topic == "wk":
        w = kostant_for_cascade(c).w
        return {
            "w_k": {
                "matrix": w.matrix.tolist(),
                "order": w.order(),
                "images": {str(i + 1): list(g) for i, g in enumerate(w.images())},
                "word": [i + 1 for i in kostant_for_cascade(c).word],
            }
        }
    if topic == "ideal":
        kd = kostant_for_cascade(c)
        roots = sorted(kd.ideal, key=lambda g: (-sum(g), [-v for v in g]))
        return {"ideal": {"roots": [list(g) for g in roots], "d_k": kd.d}}
    if topic == "involution":
        z = z2_grading(c)
        nu, m = regular_certificate(c)
        out = z.to_json()
        out["certificate"] = {"base": m, "nu": [q(v) for v in nu]}
        return {"involution": out}
    if topic == "orbit":
        return {"orbit": orbit_data(c).to_json()}
    raise UsageError(f"unknown topic {topic!r}")


def report(t: SimpleType, topic: str) -> dict:
    out: dict = {"type": str(t), "rank": t.rank}
    topics = TOPICS[:-1] if topic == "all" else (topic,)
    for tp in topics:
        try:
            out.update(section(t, tp))
        except NotApplicable:
            if topic != "all":
                raise
            out[NA_KEYS[tp]] = None
    return out


# text rendering -----------------------------------------------------------------------


def render(t: SimpleType, topic: str, data: dict, hasse: str) -> str:
    lines = [f"type {t} (rank {t.rank})"]
    if "positive_roots" in data:
        lines.append(f"{len(data['positive_roots'])} positive roots, theta = {_fmt_root(data['theta'])}")
        for g in data["positive_roots"]:
            lines.append(f"  {_fmt_root(g)}  height {sum(g)}")
    if "cascade" in data:
        lines.append("cascade:")
        for n in data["cascade"]:
            parent = "-" if n["parent"] is None else f"beta_{n['parent']}"
            lines.append(
                f"  beta_{n['index']} = {_fmt_root(n['root'])}  parent {parent}  {n['subtype']}  phi {n['phi']}"
            )
        lines.append(hasse_diagram(compute_cascade(build(t)), hasse))
    if "x_k" in data:
        lines.append("x_K = " + ", ".join(map(_fmt_q, data["x_k"])) + "  (simple-root coordinates)")
        lines.append("marks alpha_i(x_K): " + ", ".join(map(_fmt_q, data["marks"])))
        spec = ", ".join(f"{_fmt_q(k)} x{m}" for k, m in data["spectrum"].items())
        lines.append(f"values on positive roots: {spec}")
    if data.get("w_k"):
        wk = data["w_k"]
        lines.append("w_K on simple roots:")
        for i, g in wk["images"].items():
            lines.append(f"  alpha_{i} -> {_fmt_root(g)}")
        lines.append(f"ord(w_K) = {wk['order']}")
    if data.get("ideal"):
        ideal = data["ideal"]
        lines.append(f"a_K: {len(ideal['roots'])} roots, d_K = {ideal['d_k']}")
        for g in ideal["roots"]:
            lines.append(f"  {_fmt_root(g)}")
    if data.get("involution"):
        inv = data["involution"]
        lines.append(f"dim g0 = {inv['dim_g0']}, dim g1 = {inv['dim_g1']}")
        cert = inv["certificate"]
        lines.append(f"regular certificate: nu = sum {cert['base']}^i beta_(i+1)")
    if "orbit" in data:
        o = data["orbit"]
        lines.append("weighted Dynkin diagram: " + " ".join(str(v) for v in o["wdd"]))
        lines.append(f"dim O_K = {o['dim']}, dim g(2) = {o['g2']}, dim g(4) = {o['g4']}")
        lines.append(f"height {o['height']}, {'spherical' if o['spherical'] else 'not spherical'}")
        if o["partition"] is not None:
            lines.append("partition: " + " ".join(str(p) for p in o["partition"]))
        if o["label"] is not None:
            lines.append(f"label: {o['label']}")
        lines.append(f"regular subalgebra: {o['regular_subalgebra']}")
    return "\n".join(lines)


# tables ---------------------------------------------------------------------------------


def table_rows(which: str, types: list[SimpleType]) -> list[dict]:
    rows = []
    for t in types:
        c = compute_cascade(build(t))
        if which in ("orbits-classical", "orbits-exceptional"):
            o = orbit_data(c)
            row = {"type": str(t), "wdd": list(o.wdd), "dim": o.dim, "g2": o.g2, "g4": o.g4}
            if t.is_classical:
                row["partition"] = list(o.partition)
            else:
                row["label"] = o.label
        elif which == "marks":
            row = {"type": str(t), "marks": [q(v) for v in c.rs.marks(cascade_element(c))]}
        else:
            row = {"type": str(t), "cascade": [list(b) for b in c.betas]}
        rows.append(row)
    return rows


def reference_row(which: str, t: SimpleType) -> dict:
    if which in ("orbits-classical", "orbits-exceptional"):
        ref = fixtures.orbit_table(t)
        row = {"type": str(t), "wdd": ref["wdd"], "dim": ref["dim"], "g2": ref["g2"], "g4": ref["g4"]}
        row["partition" if t.is_classical else "label"] = ref["partition" if t.is_classical else "label"]
        return row
    if which == "marks":
        return {"type": str(t), "marks": [q(v) for v in fixtures.marks(t)]}
    return {"type": str(t), "cascade": [list(b) for b in fixtures.cascade(t)]}


def diff_rows(which: str, rows: list[dict]) -> list[str]:
    out = []
    for row in rows:
        t = SimpleType.parse(row["type"])
        ref = reference_row(which, t)
        for k, v in row.items():
            got, want = v, ref[k]
            if which == "cascade-lists":
                got, want = sorted(got), sorted(want)  # numbering within a level is not canonical
            if got != want:
                out.append(f"{row['type']}: {k}: computed {v}, reference {ref[k]}")
    return out


def render_table(which: str, rows: list[dict]) -> str:
    lines = []
    for r in rows:
        if which == "marks":
            lines.append(f"{r['type']:>4}  " + " ".join(_fmt_q(m) for m in r["marks"]))
        elif which == "cascade-lists":
            roots = ", ".join(_fmt_root(b) for b in r["cascade"])
            lines.append(f"{r['type']:>4}  {roots}")
        else:
            name = " ".join(map(str, r["partition"])) if "partition" in r else r["label"]
            lines.append(
                f"{r['type']:>4}  {name:<28} dim {r['dim']:>4}  g(2) {r['g2']:>3}  g(4) {r['g4']:>3}  "
                f"wdd {' '.join(map(str, r['wdd']))}"
            )
    return "\n".join(lines)


# commands --------------------------------------------------------------------------------


def cmd_show(args) -> int:
    name = args.type_opt or args.type
    if not name:
        raise UsageError("show needs a type")
    t = parse_type(name)
    try:
        data = report(t, args.topic)
    except NotApplicable as e:
        print(str(e), file=sys.stderr)
        return EXIT_NA
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(render(t, args.topic, data, args.hasse))
    return EXIT_OK


def cmd_verify(args) -> int:
    name = args.type_opt or args.type
    if args.all == bool(name):
        raise UsageError("verify needs exactly one of TYPE or --all")
    if args.all:
        reports = verify_all(args.max_rank, args.seed)
    else:
        reports = [verify_type(parse_type(name), args.seed)]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            for line in r.lines():
                print(line)
    failed = [r for r in reports if not r.ok]
    if failed:
        first = failed[0].first_failure
        print(f"FAIL {failed[0].type}: {first.name}", file=sys.stderr)
        return EXIT_FAIL
    n = sum(len(r.checks) for r in reports)
    print(f"ok: {len(reports)} types, {n} checks", file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    name = args.type_opt
    if name:
        t = parse_type(name)
        if (args.which == "orbits-classical" and not t.is_classical) or (
            args.which == "orbits-exceptional" and t.is_classical
        ):
            raise UsageError(f"{t} does not belong in table {args.which}")
        types = [t]
    else:
        types = canonical_types(args.max_rank)
        if args.which == "orbits-classical":
            types = [t for t in types if t.is_classical]
        elif args.which == "orbits-exceptional":
            types = [t for t in types if not t.is_classical]
    rows = table_rows(args.which, types)
    print(json.dumps(rows, indent=2) if args.json else render_table(args.which, rows))
    if args.diff_fixtures:
        diffs = diff_rows(args.which, rows)
        for d in diffs:
            print(d, file=sys.stderr)
        print(f"{len(diffs)} discrepancies against the reference data", file=sys.stderr)
        return EXIT_FAIL if diffs else EXIT_OK
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cascade-kit", description="Cascades of strongly orthogonal roots.")
    sub = p.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", help="report on one type")
    show.add_argument("type", nargs="?")
    show.add_argument("topic", choices=TOPICS)
    show.add_argument("--type", dest="type_opt")
    show.add_argument("--json", action="store_true")
    show.add_argument("--hasse", choices=("text", "dot"), default="text")
    show.set_defaults(func=cmd_show)

    ver = sub.add_parser("verify", help="run the invariant suite")
    ver.add_argument("type", nargs="?")
    ver.add_argument("--type", dest="type_opt")
    ver.add_argument("--all", action="store_true")
    ver.add_argument("--max-rank", type=int, default=12)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    tab = sub.add_parser("table", help="regenerate a reference table from computation")
    tab.add_argument("which", choices=TABLES)
    tab.add_argument("--type", dest="type_opt")
    tab.add_argument("--max-rank", type=int, default=12)
    tab.add_argument("--json", action="store_true")
    tab.add_argument("--diff-fixtures", action="store_true")
    tab.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"cascade-kit: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
