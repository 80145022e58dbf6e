"""Command-line interface: ``hwbound <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a regenerated
table differs from its bundled fixture.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from hwbound.classify import (
    classification_kind,
    classify_bounded,
    make_module,
    pq_catalogue,
    render_text,
    search_dimension,
    weight_label,
)
from hwbound.dims import f_poly, min_fundamental, weyl_dim
from hwbound.duality import coweight_parity, duality_indicator, is_self_dual
from hwbound.heightmin import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    certificate_problems,
    find_injection,
    lemma33_holds,
    min_dim_at_height,
    verify_theorem1,
)
from hwbound.rootsys import InvalidLieType, LieType, all_types, build, dominant_weights_of_height, fundamental

DEFAULT_MAX_RANK = 12
DEFAULT_MAX_HEIGHT = 8
DEFAULT_DIM_CAP = 10 ** 6
TABLE_IDS = ("1", "3", "4", "6")
SUITES = ("theorem1", "lemma2", "lemma33", "bounds", "pq", "duality")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    lie_type: LieType | None = None
    weight: tuple[int, ...] | None = None
    max_height: int = DEFAULT_MAX_HEIGHT
    max_rank: int = DEFAULT_MAX_RANK
    rank_range: tuple[int, int] | None = None
    cap: int | None = None
    fmt: str = "text"
    output: str | None = None
    extra: dict = field(default_factory=dict)


# --- parsing helpers -----------------------------------------------------------

def parse_type(spec: str) -> LieType:
    try:
        return LieType.parse(spec)
    except InvalidLieType as exc:
        raise UsageError(str(exc)) from None


def parse_weight(text: str, t: LieType | None = None) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {text!r}") from None
    if any(a < 0 for a in w):
        raise UsageError("weight coefficients must be non-negative")
    if t is not None and len(w) != t.rank:
        raise UsageError(f"{t} needs {t.rank} coefficients, got {len(w)}")
    return w


def parse_ranks(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"--ranks expects A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad rank range {text!r}")
    return lo, hi


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


# --- rendering ------------------------------------------------------------------

def render(records: list[dict], fmt: str, columns: Sequence[str], text: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(records, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in records:
            writer.writerow([_csv_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    if text is not None:
        return text
    lines = ["  ".join(columns)]
    lines += ["  ".join(_csv_cell(r.get(c)) for c in columns) for r in records]
    return "\n".join(lines) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_cell(x) for x in v)
    if isinstance(v, dict):
        return ";".join(f"{k}={_csv_cell(x)}" for k, x in sorted(v.items()))
    return "" if v is None else str(v)


MODULE_COLUMNS = ("type", "coefficients", "dim", "bound", "duality", "tag")


# --- subcommands ------------------------------------------------------------------

def cmd_dim(cfg: RunConfig) -> tuple[str, int]:
    rs = build(cfg.lie_type)
    m = make_module(rs, cfg.weight)
    rec = m.as_dict()
    b = m.bound
    short = "" if b.short_bound is None else f" short={b.short_bound}"
    text = (f"{m.dim}\n"
            f"type {cfg.lie_type}  weight {weight_label(m.weight)}\n"
            f"bound long={b.long_bound}{short} prime={b.prime_bound}\n"
            f"duality {m.duality}\n")
    return render([rec], cfg.fmt, MODULE_COLUMNS, text), EXIT_OK


def cmd_minheight(cfg: RunConfig) -> tuple[str, int]:
    t = cfg.extra["height"]
    hm = min_dim_at_height(build(cfg.lie_type), t)
    rec = {
        "type": str(cfg.lie_type),
        "t": t,
        "min_dim": str(hm.min_dim),
        "minimizers": [list(w) for w in sorted(hm.minimizing_weights, reverse=True)],
    }
    text = (f"{hm.min_dim}\n"
            f"minimizers {', '.join(weight_label(w) for w in sorted(hm.minimizing_weights, reverse=True))}\n")
    return render([rec], cfg.fmt, ("type", "t", "min_dim", "minimizers"), text), EXIT_OK


def cmd_classify(cfg: RunConfig) -> tuple[str, int]:
    kind = cfg.extra.get("kind") or classification_kind(cfg.lie_type)
    res = classify_bounded(cfg.lie_type, kind)
    recs = [m.as_dict() for m in res.modules]
    for f in res.families:
        recs.append({"type": str(f.lie_type), "family": f.name, "constraint": f.constraint,
                     "dim_formula": f.dim_formula, "origin": list(f.origin),
                     "direction": list(f.direction)})
    return render(recs, cfg.fmt, MODULE_COLUMNS, render_text(res, nonzero=False)), EXIT_OK


def cmd_pq(cfg: RunConfig) -> tuple[str, int]:
    cap = cfg.cap or DEFAULT_DIM_CAP
    mods = pq_catalogue(cfg.lie_type, cap)
    recs = [m.as_dict() for m in mods]
    lines = [f"{m.dim:>8}  {weight_label(m.weight):<20} {m.duality.sign}  {m.tag}" for m in mods]
    text = "\n".join(lines) + ("\n" if lines else "")
    status = EXIT_OK if all("UNMATCHED" not in m.tag for m in mods) else EXIT_MISMATCH
    return render(recs, cfg.fmt, MODULE_COLUMNS, text), status


def cmd_duality(cfg: RunConfig) -> tuple[str, int]:
    t, w = cfg.lie_type, cfg.weight
    ind = duality_indicator(t, w)
    rec = {"type": str(t), "coefficients": list(w), "self_dual": is_self_dual(t, w),
           "duality": str(ind), "coweight_parity": coweight_parity(t, w) % 2}
    return render([rec], cfg.fmt, tuple(rec), f"{ind}\n"), EXIT_OK


def cmd_search(cfg: RunConfig) -> tuple[str, int]:
    d = cfg.extra["dim"]
    ws = search_dimension(cfg.lie_type, d, cfg.max_height)
    recs = [{"type": str(cfg.lie_type), "coefficients": list(w), "dim": str(d)} for w in ws]
    text = "".join(f"{weight_label(w)}\n" for w in ws)
    return render(recs, cfg.fmt, ("type", "coefficients", "dim"), text), EXIT_OK


# --- tables ---------------------------------------------------------------------------

def _table_types(cfg: RunConfig) -> list[LieType]:
    lo, hi = cfg.rank_range or (3, DEFAULT_MAX_RANK)
    out = []
    for f in "ABCD":
        for n in range(max(lo, 4 if f == "D" else lo), hi + 1):
            out.append(LieType(f, n))
    return out + [LieType("E", 6), LieType("E", 7), LieType("E", 8), LieType("F", 4)]


def table1(cfg: RunConfig) -> tuple[list[dict], bool]:
    from hwbound.tables import table1_expected

    corrected = cfg.extra.get("against") == "corrected"
    recs, ok = [], True
    for t in _table_types(cfg):
        res = classify_bounded(t)
        got = {}
        for m in res.nonzero:
            key = max(m.orbit)
            got[key] = m
        expected = table1_expected(t, corrected=corrected)
        for key in sorted(set(got) | set(expected), key=lambda k: (sum(k), [-x for x in k])):
            m = got.get(key)
            status = "ok"
            if m is None:
                status = "missing"
            elif key not in expected:
                status = "extra"
            elif expected[key] != m.dim:
                status = f"printed {expected[key]}"
            ok &= status == "ok"
            recs.append({"type": str(t), "weight": weight_label(key), "coefficients": list(key),
                         "dim": "" if m is None else str(m.dim), "status": status})
    return recs, ok


def table3(cfg: RunConfig) -> tuple[list[dict], bool]:
    from hwbound.tables import table3_nodes

    lo, hi = cfg.rank_range or (1, DEFAULT_MAX_RANK)
    types = [t for t in all_types(hi) if t.rank >= lo or t.family in "EFG"]
    recs, ok = [], True
    for t in types:
        computed = frozenset(
            j for j in range(1, t.rank + 1)
            if is_self_dual(t, fundamental(t.rank, j)) and coweight_parity(t, fundamental(t.rank, j)) % 2
        )
        match = computed == table3_nodes(t)
        ok &= match
        recs.append({"type": str(t), "nodes": sorted(computed), "status": "ok" if match else "mismatch"})
    return recs, ok


def table4(cfg: RunConfig) -> tuple[list[dict], bool]:
    from hwbound.tables import TABLE4

    recs, ok = [], True
    for name, (make, degree) in TABLE4.items():
        t = LieType.parse(name)
        rs = build(t)
        s = min_fundamental(rs).s
        f = make()
        identity = all(f(k) / f(0) == weyl_dim(rs, fundamental(t.rank, s, k)) for k in range(21))
        deg = f_poly(rs, s).degree
        good = identity and deg == degree == f.degree
        ok &= good
        recs.append({"type": name, "s": s, "degree": deg, "printed_degree": degree,
                     "status": "ok" if good else "mismatch"})
    return recs, ok


def table6(cfg: RunConfig) -> tuple[list[dict], bool]:
    from hwbound.primes import is_semiprime
    from hwbound.tables import TABLE6_PRINTED

    cap = cfg.cap or 1000
    recs, ok = [], True
    for row in TABLE6_PRINTED:
        if row.block == "any":
            params = [d for d in range(4, cap + 1) if is_semiprime(d)]
        elif row.block.startswith("a("):
            params = [a for a in range(1, cap + 1) if row.dim(a) <= cap]
        else:
            params = [int(row.block)]
        for p in params:
            if not row.admissible(p) or row.dim(p) > cap:
                continue
            inst = row.instantiate(p)
            if inst is None:
                continue
            t, w = inst
            if t.rank > cfg.max_rank:
                continue
            d = weyl_dim(build(t), w)
            ind = duality_indicator(t, w)
            dim_ok = d == row.dim(p)
            sign_ok = row.sign == "o" or row.sign == ind.sign
            ok &= dim_ok and sign_ok
            status = "ok" if dim_ok and sign_ok else ", ".join(
                x for x, bad in ((f"dim {d} != {row.dim(p)}", not dim_ok),
                                 (f"sign {ind.sign} != {row.sign}", not sign_ok)) if bad)
            recs.append({"row": row.label, "param": p, "type": str(t), "weight": weight_label(w),
                         "dim": str(d), "sign": row.sign, "status": status})
    return recs, ok


def cmd_tables(cfg: RunConfig) -> tuple[str, int]:
    tid = cfg.extra["table"]
    if tid not in TABLE_IDS:
        raise UsageError(f"unknown table {tid!r}; choose from {', '.join(TABLE_IDS)}")
    fn = {"1": table1, "3": table3, "4": table4, "6": table6}[tid]
    recs, ok = fn(cfg)
    cols = tuple(recs[0]) if recs else ()
    return render(recs, cfg.fmt, cols), EXIT_OK if ok else EXIT_MISMATCH


# --- verification suites -----------------------------------------------------------

def _verify_theorem1(cfg):
    cap = cfg.cap or DEFAULT_ENUMERATION_CAP
    for t in all_types(cfg.max_rank):
        rs = build(t)
        for h in range(1, cfg.max_height + 1):
            try:
                rep = verify_theorem1(rs, h, cap)
            except EnumerationCapExceeded as exc:
                yield f"theorem1 {t} t={h}", None, str(exc)
                continue
            yield f"theorem1 {t} t={h}", rep.passed, f"{rep.enumerated} weights, min {rep.observed_min}"


def _verify_lemma2(cfg):
    for t in all_types(cfg.max_rank):
        rs = build(t)
        for j in range(1, t.rank + 1):
            cert = find_injection(rs, j)
            probs = certificate_problems(rs, cert)
            expect_fallback = t.family == "B" and j == t.rank
            good = not probs and (cert.full != expect_fallback)
            kind = "fallback" if cert.fallback else "matching"
            yield f"lemma2 {t} j={j}", good, kind + ("" if not probs else f": {probs[0]}")


def _verify_lemma33(cfg):
    for n in range(3, 21):
        good = all(lemma33_holds(n, t) for t in range(101))
        yield f"lemma33 n={n}", good, "t=0..100"


def _verify_bounds(cfg):
    for t in all_types(cfg.max_rank):
        res = classify_bounded(t)
        if res.cutoff is None:
            yield f"bounds {t}", True, "families certified by polynomial coefficients"
            continue
        cert = res.cutoff
        rs = build(t)
        s = min_fundamental(rs).s
        stop = cert.stop_height
        sound = cert.is_sound() and weyl_dim(rs, fundamental(t.rank, s, stop)) > cert.bmax(stop) ** 2
        yield f"bounds {t}", sound, f"cutoff height {stop}, {len(res.modules)} weights"


def _verify_pq(cfg):
    cap = cfg.cap or DEFAULT_DIM_CAP
    for t in all_types(min(cfg.max_rank, 10)):
        mods = pq_catalogue(t, cap)
        bad = [m for m in mods if "UNMATCHED" in m.tag]
        detail = f"{len(mods)} hits" + (f"; unmatched {[weight_label(m.weight) for m in bad]}" if bad else "")
        yield f"pq {t}", not bad, detail


def _verify_duality(cfg):
    from hwbound.duality import duality_by_coweight, duality_closed_form

    for t in all_types(min(cfg.max_rank, 9)):
        bad = 0
        for h in range(0, 5 if t.rank <= 7 else 4):
            for w in dominant_weights_of_height(t.rank, h):
                a = duality_indicator(t, w)
                bad += a != duality_closed_form(t, w) or a != duality_by_coweight(t, w)
        yield f"duality {t}", bad == 0, f"{bad} disagreements"


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    suite = cfg.extra["suite"]
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    gen = {"theorem1": _verify_theorem1, "lemma2": _verify_lemma2, "lemma33": _verify_lemma33,
           "bounds": _verify_bounds, "pq": _verify_pq, "duality": _verify_duality}[suite]
    recs = []
    for name, ok, detail in gen(cfg):
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        recs.append({"check": name, "status": status, "detail": detail})
    fails = sum(r["status"] == "FAIL" for r in recs)
    passes = sum(r["status"] == "PASS" for r in recs)
    skips = len(recs) - fails - passes
    lines = [f"{r['status']} {r['check']}: {r['detail']}" for r in recs]
    lines.append(f"{passes} passed, {fails} failed, {skips} skipped")
    text = "\n".join(lines) + "\n"
    return render(recs, cfg.fmt, ("check", "status", "detail"), text), EXIT_FAIL if fails else EXIT_OK


COMMANDS = {
    "dim": cmd_dim, "minheight": cmd_minheight, "classify": cmd_classify, "pq": cmd_pq,
    "duality": cmd_duality, "tables": cmd_tables, "verify": cmd_verify, "search": cmd_search,
}


# --- argument parsing -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    common.add_argument("--ranks", metavar="A..B", help="rank range for classical families")
    common.add_argument("--max-height", type=_positive, default=DEFAULT_MAX_HEIGHT,
                        help=f"height cap (default {DEFAULT_MAX_HEIGHT})")
    common.add_argument("--max-rank", type=_positive, default=None,
                        help=f"rank cap (default {DEFAULT_MAX_RANK}; 6 for verify theorem1; "
                             "also bounds the parametric rows of tables 6)")
    common.add_argument("--cap", type=_positive, default=None,
                        help=f"dimension cap (default {DEFAULT_DIM_CAP}) or enumeration cap "
                             f"for verify theorem1 (default {DEFAULT_ENUMERATION_CAP})")
    common.add_argument("--seedless", action="store_true", help=argparse.SUPPRESS)

    p = _Parser(prog="hwbound", description="Exact dimensions and bounds for highest-weight modules.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    s = sub.add_parser("dim", parents=[common], help="dimension, bound and duality of V(lambda)")
    s.add_argument("type")
    s.add_argument("weight", help="comma-separated coefficients, e.g. 0,5")

    s = sub.add_parser("minheight", parents=[common], help="least dimension at height t")
    s.add_argument("type")
    s.add_argument("height", type=_positive)

    s = sub.add_parser("classify", parents=[common], help="all weights with dim <= bound^2")
    s.add_argument("type")
    s.add_argument("--kind", choices=("long", "short", "prime"), default=None)

    s = sub.add_parser("pq", parents=[common], help="weights of semiprime dimension up to --cap")
    s.add_argument("type")

    s = sub.add_parser("duality", parents=[common], help="not-self-dual / orthogonal / symplectic")
    s.add_argument("type")
    s.add_argument("weight")

    s = sub.add_parser("tables", parents=[common], help="regenerate a table and diff it (1, 3, 4, 6)")
    s.add_argument("table")
    s.add_argument("--against", choices=("printed", "corrected"), default="printed")

    s = sub.add_parser("verify", parents=[common], help=f"run a suite: {', '.join(SUITES)}")
    s.add_argument("suite")

    s = sub.add_parser("search", parents=[common], help="weights with dimension exactly D")
    s.add_argument("type")
    s.add_argument("dim", type=_positive)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.seedless:
        raise UsageError("--seedless is reserved: nothing here is random, so there is no seed to drop")
    cfg = RunConfig(subcommand=ns.subcommand, fmt=ns.format, output=ns.output,
                    max_height=ns.max_height, cap=ns.cap)
    default_rank = 6 if ns.subcommand == "verify" and getattr(ns, "suite", "") == "theorem1" else DEFAULT_MAX_RANK
    cfg.max_rank = ns.max_rank or default_rank
    if ns.ranks:
        cfg.rank_range = parse_ranks(ns.ranks)
    if getattr(ns, "type", None):
        cfg.lie_type = parse_type(ns.type)
    if getattr(ns, "weight", None) is not None:
        cfg.weight = parse_weight(ns.weight, cfg.lie_type)
    for key in ("height", "kind", "table", "against", "suite", "dim"):
        if hasattr(ns, key):
            cfg.extra[key] = getattr(ns, key)
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        out, code = COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"hwbound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
