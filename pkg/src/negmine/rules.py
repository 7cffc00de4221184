"""Positive and negative association rules drawn from PS and NS."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .measures import RuleForm, Thresholds, leverage, partitions, rule_stats
from .transactions import Itemset, TransactionDB

_FORM_ORDER = {f: n for n, f in enumerate(RuleForm)}


@dataclass(frozen=True)
class Rule:
    form: RuleForm
    antecedent: Itemset
    consequent: Itemset
    rule_support: Fraction
    confidence: Fraction
    signed_interest: Fraction

    def sort_key(self):
        return (_FORM_ORDER[self.form], len(self.antecedent), self.antecedent,
                len(self.consequent), self.consequent)

    def describe(self, db: TransactionDB) -> str:
        lhs = " ".join(sorted(db.decode(self.antecedent)))
        rhs = " ".join(sorted(db.decode(self.consequent)))
        if self.form in (RuleForm.NP, RuleForm.NN):
            lhs = f"not({lhs})"
        if self.form in (RuleForm.PN, RuleForm.NN):
            rhs = f"not({rhs})"
        return f"{lhs} -> {rhs}"


def _ordered_splits(q: Itemset):
    for p in partitions(q):
        yield p.left, p.right
        yield p.right, p.left


def _finish(rules: Iterable[Rule]) -> list[Rule]:
    unique = {(r.form, r.antecedent, r.consequent): r for r in rules}
    return sorted(unique.values(), key=Rule.sort_key)


def positive_rules(db: TransactionDB, ps: Iterable[Itemset], thr: Thresholds) -> list[Rule]:
    """Rules ``X -> Y`` meeting all four positive conditions."""
    out = []
    for q in ps:
        sq = db.support(q)
        if sq < thr.minsprt:
            continue
        for x, y in _ordered_splits(q):
            sx, sy = db.support(x), db.support(y)
            if abs(leverage(sq, sx, sy)) < thr.mininterest:
                continue
            stats = rule_stats(RuleForm.PP, sx, sy, sq)
            if stats.confidence >= thr.minconf:
                out.append(Rule(RuleForm.PP, x, y, *stats))
    return _finish(out)


def negative_rules(db: TransactionDB, ns: Iterable[Itemset], thr: Thresholds) -> list[Rule]:
    """Rules ``A -> not B``, ``not A -> B`` and ``not A -> not B`` of interest.

    Interest is taken signed here: each form must show a leverage of at
    least ``mininterest`` in its own direction.
    """
    out = []
    for q in ns:
        sq = db.support(q)
        for a, b in _ordered_splits(q):
            sa, sb = db.support(a), db.support(b)
            if sa < thr.minsprt or sb < thr.minsprt:
                continue
            for form in (RuleForm.PN, RuleForm.NP, RuleForm.NN):
                ante = sa if form is RuleForm.PN else 1 - sa
                if ante == 0:
                    continue
                stats = rule_stats(form, sa, sb, sq)
                if (stats.rule_support >= thr.minsprt
                        and stats.signed_interest >= thr.mininterest
                        and stats.confidence >= thr.minconf):
                    out.append(Rule(form, a, b, *stats))
    return _finish(out)
