"""Interest (leverage), negated supports, confidences and partition tests.

All quantities are :class:`fractions.Fraction`; thresholds are compared with
``>=`` on exact values, so an interest exactly equal to ``mininterest``
passes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterator, NamedTuple

from .exceptions import DomainError, InconsistentSupportError, UndefinedConfidenceError
from .transactions import Itemset, TransactionDB


def to_fraction(value) -> Fraction:
    """Convert a threshold-like value to an exact rational.

    Strings may be decimals (``"0.07"``) or fractions (``"3/10"``). Floats go
    through their shortest ``repr`` so ``0.3`` becomes ``3/10`` rather than
    the nearest binary double.
    """
    if isinstance(value, bool):
        raise DomainError(f"not a rational number: {value!r}")
    if isinstance(value, (Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"not a rational number: {value!r}") from None
    raise DomainError(f"not a rational number: {value!r}")


@dataclass(frozen=True)
class Thresholds:
    """Minimum support, confidence and interest, each in [0, 1]."""

    minsprt: Fraction
    minconf: Fraction = Fraction(0)
    mininterest: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("minsprt", "minconf", "mininterest"):
            value = to_fraction(getattr(self, name))
            if not 0 <= value <= 1:
                raise DomainError(f"{name} must lie in [0, 1], got {value}")
            object.__setattr__(self, name, value)


class RuleForm(str, enum.Enum):
    PP = "PP"  # X -> Y
    PN = "PN"  # A -> not B
    NP = "NP"  # not A -> B
    NN = "NN"  # not A -> not B


class Partition(NamedTuple):
    left: Itemset
    right: Itemset


@dataclass(frozen=True)
class InterestReport:
    partition: Partition
    q_support: Fraction
    left_support: Fraction
    right_support: Fraction
    leverage: Fraction

    @property
    def abs_leverage(self) -> Fraction:
        return abs(self.leverage)


class NegatedSupports(NamedTuple):
    a_notb: Fraction
    nota_b: Fraction
    nota_notb: Fraction
    nota: Fraction
    notb: Fraction


class RuleStats(NamedTuple):
    rule_support: Fraction
    confidence: Fraction
    signed_interest: Fraction


def leverage(sprt_q, sprt_x, sprt_y) -> Fraction:
    """Signed leverage ``sprt(X u Y) - sprt(X) * sprt(Y)``."""
    return Fraction(sprt_q) - Fraction(sprt_x) * Fraction(sprt_y)


def negated_supports(sprt_a, sprt_b, sprt_ab) -> NegatedSupports:
    """Supports of the itemset combinations involving a negated side.

    Raises :class:`InconsistentSupportError` when the three inputs cannot be
    the supports of ``A``, ``B`` and ``A u B`` in a single database.
    """
    a, b, ab = Fraction(sprt_a), Fraction(sprt_b), Fraction(sprt_ab)
    if not (0 <= ab <= min(a, b) and a + b - ab <= 1):
        raise InconsistentSupportError(
            f"supports a={a}, b={b}, ab={ab} violate 0 <= ab <= min(a, b) "
            "and a + b - ab <= 1"
        )
    return NegatedSupports(
        a_notb=a - ab,
        nota_b=b - ab,
        nota_notb=1 - a - b + ab,
        nota=1 - a,
        notb=1 - b,
    )


def rule_stats(form, sprt_a, sprt_b, sprt_ab) -> RuleStats:
    """Support, confidence and signed interest of a rule in the given form.

    ``A`` is always the antecedent side and ``B`` the consequent side; the
    form says which of them is negated.
    """
    form = RuleForm(form)
    a, b, ab = Fraction(sprt_a), Fraction(sprt_b), Fraction(sprt_ab)
    neg = negated_supports(a, b, ab)
    if form is RuleForm.PP:
        ante, cons, joint = a, b, ab
    elif form is RuleForm.PN:
        ante, cons, joint = a, neg.notb, neg.a_notb
    elif form is RuleForm.NP:
        ante, cons, joint = neg.nota, b, neg.nota_b
    else:
        ante, cons, joint = neg.nota, neg.notb, neg.nota_notb
    if ante == 0:
        raise UndefinedConfidenceError(f"antecedent of {form.value} rule has zero support")
    return RuleStats(joint, joint / ante, joint - ante * cons)


def partitions(q: Itemset) -> Iterator[Partition]:
    """Yield every unordered split of ``q`` into two non-empty parts.

    The left part always holds ``q[0]``, which makes each split appear
    exactly once: ``2 ** (len(q) - 1) - 1`` splits in total.
    """
    head, rest = q[:1], q[1:]
    for r in range(len(rest)):
        for extra in combinations(rest, r):
            left = head + extra
            right = tuple(i for i in rest if i not in extra)
            yield Partition(left, right)


def _check_size(q: Itemset) -> None:
    if len(q) < 2:
        raise DomainError(f"itemset {q!r} has fewer than two items and cannot be split")


def _report(db: TransactionDB, q: Itemset, p: Partition, sprt_q: Fraction) -> InterestReport:
    sl, sr = db.support(p.left), db.support(p.right)
    return InterestReport(p, sprt_q, sl, sr, leverage(sprt_q, sl, sr))


def interesting_positive_partitions(db: TransactionDB, q: Itemset, thr: Thresholds) -> list[InterestReport]:
    """Splits of ``q`` whose absolute leverage reaches ``mininterest``.

    ``q`` is a positive itemset of interest iff the list is non-empty (and
    ``q`` itself is frequent, which the caller checks).
    """
    _check_size(q)
    sprt_q = db.support(q)
    reports = (_report(db, q, p, sprt_q) for p in partitions(q))
    return [r for r in reports if r.abs_leverage >= thr.mininterest]


def negative_partitions(db: TransactionDB, q: Itemset, thr: Thresholds) -> list[InterestReport]:
    """Splits of ``q`` into two frequent parts whose absolute leverage reaches ``mininterest``."""
    _check_size(q)
    sprt_q = db.support(q)
    out = []
    for p in partitions(q):
        r = _report(db, q, p, sprt_q)
        if r.left_support < thr.minsprt or r.right_support < thr.minsprt:
            continue
        if r.abs_leverage >= thr.mininterest:
            out.append(r)
    return out


def best_report(reports: list[InterestReport]) -> InterestReport | None:
    """The report with the largest absolute leverage; earliest split wins ties."""
    best = None
    for r in reports:
        if best is None or r.abs_leverage > best.abs_leverage:
            best = r
    return best
