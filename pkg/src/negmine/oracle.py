"""Exhaustive reference search used to check the level-wise miner.

Nothing here reuses the miner, the measures module or the bitset index:
supports come from scanning the transaction list and every split is
enumerated with a bit mask.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .exceptions import CapacityError
from .transactions import Itemset, TransactionDB

MAX_ITEMS = 20


class OracleResult(NamedTuple):
    ps: list[Itemset]
    ns: list[Itemset]


def _splits(q: Itemset):
    n = len(q)
    # masks with the top bit clear visit each unordered split once
    for mask in range(1, 1 << (n - 1)):
        left = tuple(q[i] for i in range(n) if mask >> i & 1)
        right = tuple(q[i] for i in range(n) if not mask >> i & 1)
        yield left, right


def oracle_mine(db: TransactionDB, thr) -> OracleResult:
    """Classify every itemset of two or more frequent items by brute force."""
    if db.num_items > MAX_ITEMS:
        raise CapacityError(
            f"oracle enumerates at most {MAX_ITEMS} items, database has {db.num_items}"
        )
    baskets = [frozenset(t) for t in db.transactions]
    n = len(baskets)
    cache: dict[Itemset, Fraction] = {}

    def sprt(q: Itemset) -> Fraction:
        if q not in cache:
            s = frozenset(q)
            cache[q] = Fraction(sum(1 for t in baskets if s <= t), n)
        return cache[q]

    minsprt, mininterest = Fraction(thr.minsprt), Fraction(thr.mininterest)
    universe = [i for i in range(db.num_items) if sprt((i,)) >= minsprt]
    ps, ns = [], []
    for size in range(2, len(universe) + 1):
        for q in combinations(universe, size):
            sq = sprt(q)
            frequent = sq >= minsprt
            for left, right in _splits(q):
                sl, sr = sprt(left), sprt(right)
                if not frequent and (sl < minsprt or sr < minsprt):
                    continue
                if abs(sq - sl * sr) >= mininterest:
                    (ps if frequent else ns).append(q)
                    break
    return OracleResult(ps, ns)
