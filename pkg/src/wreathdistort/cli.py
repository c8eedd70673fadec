"""Command-line front end.

    wreathdistort zz len "t^2 a^3 t a^-2 t a t^-7 a^2 t"
    wreathdistort bg table --max-n 3
    wreathdistort oracle verify zz --radius 8
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from typing import Iterable, List, Sequence

from . import baumslag, embedding, oracle, thompson, wreath
from .words import WordParseError


class DomainError(Exception):
    pass


def _emit_table(args, columns: Sequence[str], rows: Iterable[Sequence]) -> None:
    out = sys.stdout
    if args.format == "json":
        out.write(json.dumps([dict(zip(columns, r)) for r in rows], indent=1) + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if v is None else v for v in r])


def _emit_record(args, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record))
    else:
        _emit_table(args, list(record), [list(record.values())])


def _emit_value(args, name: str, value) -> None:
    if args.format == "json":
        print(json.dumps({name: value}))
    else:
        print(value)


# ------------------------------------------------------------------ zz

def cmd_zz_len(args):
    _emit_value(args, "length", wreath.word_length(wreath.evaluate_word(args.word)))


def cmd_zz_nf(args):
    w = wreath.evaluate_word(args.word)
    nf = wreath.normal_form(w, args.variant)
    if args.format == "json":
        print(json.dumps({
            "variant": nf.variant,
            "positive": [list(p) for p in nf.positive],
            "negative": [list(p) for p in nf.negative],
            "cursor": nf.cursor,
        }))
    else:
        print(str(nf) or "1")


def cmd_zz_geodesic(args):
    _emit_value(args, "geodesic", wreath.geodesic_word(wreath.evaluate_word(args.word)))


def cmd_zz_mult(args):
    w = wreath.multiply(wreath.evaluate_word(args.word), wreath.evaluate_word(args.other))
    if args.format == "json":
        print(json.dumps(w.to_json()))
    else:
        print(str(w) or "1")


# ------------------------------------------------------------------- f

def _f_element(text: str) -> thompson.TreePair:
    return thompson.evaluate_word(text)


def cmd_f_mult(args):
    p = thompson.multiply(_f_element(args.word), _f_element(args.other))
    _emit_record(args, {"normal_form": str(p), **p.to_json()})


def cmd_f_nf(args):
    p = _f_element(args.word)
    _emit_record(args, {"normal_form": str(p), **p.to_json()})


def cmd_f_carets(args):
    _emit_value(args, "carets", thompson.caret_count(_f_element(args.word)))


def cmd_f_weight(args):
    p = _f_element(args.word)
    try:
        _emit_value(args, "weight", thompson.fordham_weight(p))
    except thompson.UnsupportedPairing as exc:
        raise DomainError(str(exc)) from None


def cmd_f_len(args):
    d = oracle.distance(thompson.cayley_group(), _f_element(args.word), args.radius, args.limit)
    _emit_value(args, "length", str(d))


# --------------------------------------------------------------- embed

def cmd_embed_phi(args):
    w = wreath.evaluate_word(args.word)
    p = embedding.phi(w)
    nf = wreath.normal_form(w)
    try:
        pred = embedding.predicted_caret_count(nf)
    except embedding.OutsidePaperCase:
        pred = None
    _emit_record(args, {
        "element": str(nf) or "1",
        "image": str(p),
        **p.to_json(),
        "carets": thompson.caret_count(p),
        "carets_predicted": pred,
        "carets_exact": embedding.exact_caret_count(nf),
    })


def cmd_embed_report(args):
    try:
        records = embedding.distortion_report(args.max_len, args.radius, args.limit, args.threads)
    except embedding.ReportIncomplete as exc:
        _write_report(args, exc.records)
        raise DomainError(str(exc)) from None
    _write_report(args, records)


def _write_report(args, records):
    if args.format == "json":
        sys.stdout.write(embedding.records_json(records) + "\n")
    else:
        for line in embedding.records_csv(records):
            sys.stdout.write(line)


# ------------------------------------------------------------------ bg

def cmd_bg_conj_s(args):
    try:
        w = baumslag.s_conjugate(wreath.evaluate_word(args.word), args.k)
    except baumslag.NegativePower as exc:
        raise DomainError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(w.to_json()))
    else:
        print(str(w) or "1")


def cmd_bg_table(args):
    columns = ["n", "len_G_witness", "len_H", "ratio"]

    def rows():
        for n in range(args.max_n + 1):
            r = baumslag.distortion_row(n)
            yield [r.n, r.len_G_witness, r.len_H, str(r.ratio)]

    if args.format == "json":
        _emit_table(args, columns, list(rows()))
    else:
        _emit_table(args, columns, rows())


def cmd_bg_eval(args):
    g = baumslag.evaluate_word(args.word)
    if args.format == "json":
        print(json.dumps(g.to_json()))
    else:
        print(g)


# -------------------------------------------------------------- oracle

def _group(name: str):
    return {"zz": wreath.cayley_group, "f": thompson.cayley_group, "bg": baumslag.cayley_group}[name]()


def _evaluate(name: str, word: str):
    return {"zz": wreath.evaluate_word, "f": thompson.evaluate_word, "bg": baumslag.evaluate_word}[name](word)


def cmd_oracle_ball(args):
    group = _group(args.group)
    try:
        b = oracle.ball(group, args.radius, args.limit, args.threads)
    except oracle.LimitExceeded as exc:
        _write_ball(args, group, exc.partial)
        raise DomainError(str(exc)) from None
    _write_ball(args, group, b)


def _write_ball(args, group, b):
    if args.format == "json":
        rows = sorted((d, group.label(k)) for k, d in b.distances.items())
        print(json.dumps({
            "radius": b.radius,
            "sphere_sizes": b.sphere_sizes,
            "elements": [{"element": s, "distance": d} for d, s in rows],
        }, indent=1))
    else:
        for line in oracle.ball_csv(b, group.label):
            sys.stdout.write(line)


def cmd_oracle_distance(args):
    d = oracle.distance(_group(args.group), _evaluate(args.group, args.word), args.radius, args.limit)
    _emit_value(args, "distance", d if isinstance(d, int) else str(d))


def cmd_oracle_verify(args):
    rng = random.Random(args.seed)
    if args.group == "zz":
        b = oracle.ball(wreath.cayley_group(), args.radius, args.limit, args.threads, keep_elements=True)
        bad = [k for k, w in b.elements.items() if wreath.word_length(w) != b.distances[k]]
        elems = list(b.elements.values())
        for _ in range(200):
            u, v = rng.choice(elems), rng.choice(elems)
            if wreath.word_length(u * v) > wreath.word_length(u) + wreath.word_length(v):
                bad.append((u, v))
        what = "formula = BFS"
    elif args.group == "f":
        b = oracle.ball(thompson.cayley_group(), args.radius, args.limit, args.threads, keep_elements=True)
        bad = [k for k, p in b.elements.items()
               if thompson.normal_form_to_tree_pair(thompson.tree_pair_to_normal_form(p)) != p]
        what = "normal form round trip"
    else:
        raise DomainError(f"no verification defined for group {args.group!r}")
    if bad:
        raise DomainError(f"FAIL: {what} on {len(b)} elements; {len(bad)} mismatches")
    print(f"OK: {what} on {len(b)} elements")


# ---------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--radius", type=int, default=8)
    common.add_argument("--max-len", type=int, default=3)
    common.add_argument("--max-n", type=int, default=20)
    common.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1, help="worker processes for breadth-first search")

    parser = argparse.ArgumentParser(prog="wreathdistort", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="area", required=True)

    def leaf(sub, name, func, *positional, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        for arg in positional:
            if isinstance(arg, tuple):
                p.add_argument(arg[0], **arg[1])
            else:
                p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    zz = top.add_parser("zz", help="Z wr Z").add_subparsers(dest="cmd", required=True)
    leaf(zz, "len", cmd_zz_len, "word")
    p = leaf(zz, "nf", cmd_zz_nf, "word")
    p.add_argument("--variant", choices=["rf", "lf"], default="rf")
    leaf(zz, "geodesic", cmd_zz_geodesic, "word")
    leaf(zz, "mult", cmd_zz_mult, "word", "other")

    f = top.add_parser("f", help="Thompson's group F").add_subparsers(dest="cmd", required=True)
    leaf(f, "mult", cmd_f_mult, "word", "other")
    leaf(f, "nf", cmd_f_nf, "word")
    leaf(f, "carets", cmd_f_carets, "word")
    leaf(f, "weight", cmd_f_weight, "word")
    leaf(f, "len", cmd_f_len, "word")

    em = top.add_parser("embed", help="Z wr Z inside F").add_subparsers(dest="cmd", required=True)
    leaf(em, "phi", cmd_embed_phi, "word")
    leaf(em, "report", cmd_embed_report)

    bg = top.add_parser("bg", help="Baumslag's metabelian group").add_subparsers(dest="cmd", required=True)
    leaf(bg, "conj-s", cmd_bg_conj_s, "word", ("k", {"type": int}))
    leaf(bg, "table", cmd_bg_table)
    leaf(bg, "eval", cmd_bg_eval, "word")

    orc = top.add_parser("oracle", help="breadth-first ground truth").add_subparsers(dest="cmd", required=True)
    groups = ("group", {"choices": ["zz", "f", "bg"]})
    leaf(orc, "ball", cmd_oracle_ball, groups)
    leaf(orc, "distance", cmd_oracle_distance, groups, "word")
    leaf(orc, "verify", cmd_oracle_verify, groups)
    return parser


def main(argv: List[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (DomainError, WordParseError, ValueError) as exc:
        sys.stdout.flush()
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
