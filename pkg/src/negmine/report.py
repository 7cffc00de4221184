"""Build run reports as plain dicts and render them as JSON or text.

The text rendering is produced from the same dict as the JSON one, so both
always carry identical sets and counts.
"""
from __future__ import annotations

import json
from decimal import Decimal, ROUND_HALF_EVEN
from fractions import Fraction

from . import example
from .measures import best_report, interesting_positive_partitions, negative_partitions
from .miner import MiningResult
from .oracle import OracleResult
from .transactions import Itemset, TransactionDB

DECIMAL_PLACES = 6


def decimal_str(x: Fraction) -> str:
    """Exact decimal when the denominator allows it, else rounded to 6 places."""
    d = x.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    value = Decimal(x.numerator) / Decimal(x.denominator)
    if d != 1:
        value = value.quantize(Decimal(1).scaleb(-DECIMAL_PLACES), rounding=ROUND_HALF_EVEN)
    text = format(value.normalize(), "f")
    return "0" if text in ("-0", "") else text


def rational(x: Fraction) -> dict:
    return {"fraction": f"{x.numerator}/{x.denominator}", "decimal": decimal_str(x)}


def _items(db: TransactionDB, q: Itemset) -> list[str]:
    return sorted(db.decode(q))


def _best(db, q, thr, negative):
    fn = negative_partitions if negative else interesting_positive_partitions
    r = best_report(fn(db, q, thr))
    return {
        "itemset": _items(db, q),
        "support": rational(r.q_support),
        "left": _items(db, r.partition.left),
        "right": _items(db, r.partition.right),
        "leverage": rational(r.leverage),
        "abs_leverage": rational(r.abs_leverage),
    }


def _family_diff(db, ours, theirs):
    a, b = set(ours), set(theirs)
    return (
        [_items(db, q) for q in ours if q not in b],
        [_items(db, q) for q in theirs if q not in a],
    )


def oracle_block(db, thr, result: MiningResult, oracle: OracleResult) -> dict:
    miner_ps, oracle_ps = _family_diff(db, result.ps, oracle.ps)
    miner_ns, oracle_ns = _family_diff(db, result.ns, oracle.ns)
    block = {
        "agrees": not (miner_ps or oracle_ps or miner_ns or oracle_ns),
        "miner_only": {"ps": miner_ps, "ns": miner_ns},
        "oracle_only": {"ps": oracle_ps, "ns": oracle_ns},
        "reference_errata": None,
    }
    if example.matches_example(db, thr):
        listed_ps, listed_ns = example.listed_families(db)
        ex = {}
        for name, found, listed, negative in (
            ("ps", oracle.ps, listed_ps, False),
            ("ns", oracle.ns, listed_ns, True),
        ):
            listed_set, found_set = set(listed), set(found)
            ex[name] = {
                "oracle_only": [_best(db, q, thr, negative) for q in found if q not in listed_set],
                "listed_only": [_items(db, q) for q in listed if q not in found_set],
            }
        block["reference_errata"] = ex
    return block


def build_report(db: TransactionDB, thr, cfg, result: MiningResult, *, source="",
                 rules=None, oracle=None, trace=False) -> dict:
    levels = []
    for lv in result.levels:
        entry = {"k": lv.k, "counts": lv.sizes()}
        if trace:
            entry.update(
                temp=[_items(db, q) for q in lv.temp],
                candidates=[_items(db, q) for q in lv.candidates],
                frequent=[_items(db, q) for q in lv.freq],
                positive_interesting=[_items(db, q) for q in lv.positive_pruned],
                nn=[_items(db, q) for q in lv.nn],
                negative_interesting=[_items(db, q) for q in lv.negative_interesting],
            )
        levels.append(entry)

    report = {
        "params": {
            "input": str(source),
            "minsprt": rational(thr.minsprt),
            "minconf": rational(thr.minconf),
            "mininterest": rational(thr.mininterest),
            "mode": cfg.candidate_filter,
            "termination": cfg.termination,
            "rules": rules is not None,
            "num_transactions": db.num_transactions,
            "num_items": db.num_items,
        },
        "item_supports": [
            {"item": tok, "support": rational(db.support((i,)))} for i, tok in enumerate(db.items)
        ],
        "levels": levels,
        "ps": [_items(db, q) for q in result.ps],
        "ns": [_items(db, q) for q in result.ns],
        "best_partitions": {
            "ps": [_best(db, q, thr, False) for q in result.ps],
            "ns": [_best(db, q, thr, True) for q in result.ns],
        },
        "rules": [
            {
                "form": r.form.value,
                "antecedent": _items(db, r.antecedent),
                "consequent": _items(db, r.consequent),
                "text": r.describe(db),
                "support": rational(r.rule_support),
                "confidence": rational(r.confidence),
                "interest": rational(r.signed_interest),
            }
            for r in (rules or [])
        ],
        "stats": {
            "frequent_count": result.stats.frequent_count,
            "positive_interesting_count": result.stats.positive_interesting_count,
            "negative_candidate_count": result.stats.negative_candidate_count,
            "negative_interesting_count": result.stats.negative_interesting_count,
        },
    }
    if oracle is not None:
        report["oracle"] = oracle_block(db, thr, result, oracle)
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _r(v: dict) -> str:
    return f"{v['fraction']} ({v['decimal']})"


def _set(items: list[str]) -> str:
    return "{" + " ".join(items) + "}"


def to_text(report: dict) -> str:
    p = report["params"]
    lines = [
        f"input: {p['input']}  ({p['num_transactions']} transactions, {p['num_items']} items)",
        f"minsprt={_r(p['minsprt'])}  minconf={_r(p['minconf'])}  mininterest={_r(p['mininterest'])}",
        f"mode={p['mode']}  termination={p['termination']}",
    ]
    if p["rules"] and p["minconf"]["fraction"] == "0/1":
        lines.append("NOTE: minconf is 0, so the confidence condition admits every rule")
    lines += ["", "item supports:"]
    lines += [f"  {e['item']}: {_r(e['support'])}" for e in report["item_supports"]]

    lines += ["", "levels:", "  k   |Temp|   |C|   |Freq|   |P|   |NN|   |N|"]
    for lv in report["levels"]:
        c = lv["counts"]
        lines.append(
            f"  {lv['k']:<3} {c['temp']:>6} {c['candidates']:>5} {c['frequent']:>8}"
            f" {c['positive_interesting']:>5} {c['nn']:>6} {c['negative_interesting']:>5}"
        )
    if report["levels"] and "temp" in report["levels"][0]:
        for lv in report["levels"]:
            lines.append(f"  level {lv['k']}:")
            for key in ("temp", "candidates", "frequent", "positive_interesting", "nn",
                        "negative_interesting"):
                fam = " ".join("".join(q) if all(len(t) == 1 for t in q) else _set(q) for q in lv[key])
                lines.append(f"    {key}: {fam}")

    for name in ("ps", "ns"):
        lines += ["", f"{name.upper()} ({len(report[name])}):"]
        for b in report["best_partitions"][name]:
            lines.append(
                f"  {_set(b['itemset'])}  support={_r(b['support'])}  best split "
                f"{_set(b['left'])}|{_set(b['right'])}  leverage={_r(b['leverage'])}"
            )

    if p["rules"]:
        lines += ["", f"rules ({len(report['rules'])}):"]
        for r in report["rules"]:
            lines.append(
                f"  [{r['form']}] {r['text']}  support={_r(r['support'])}"
                f"  confidence={_r(r['confidence'])}  interest={_r(r['interest'])}"
            )

    lines += ["", "stats:"]
    lines += [f"  {k}: {v}" for k, v in report["stats"].items()]

    if "oracle" in report:
        o = report["oracle"]
        lines += ["", f"oracle comparison: {'agrees' if o['agrees'] else 'DIFFERS'}"]
        for side in ("miner_only", "oracle_only"):
            for fam in ("ps", "ns"):
                if o[side][fam]:
                    lines.append(f"  {side} {fam}: " + " ".join(_set(q) for q in o[side][fam]))
        ex = o["reference_errata"]
        if ex is not None:
            lines.append("  errata against the hand-listed reference results:")
            for fam in ("ps", "ns"):
                for b in ex[fam]["oracle_only"]:
                    lines.append(
                        f"    oracle-only {fam}: {_set(b['itemset'])} via "
                        f"{_set(b['left'])}|{_set(b['right'])}  |leverage|={_r(b['abs_leverage'])}"
                    )
                for q in ex[fam]["listed_only"]:
                    lines.append(f"    listed-only {fam}: {_set(q)}")
    return "\n".join(lines) + "\n"
