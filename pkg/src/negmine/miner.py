"""Level-wise search for positive and negative itemsets of interest.

Each pass ``k`` builds the families

``temp``
    every k-itemset that is the union of two frequent itemsets found at
    earlier levels;
``candidates``
    members of ``temp`` with a (k-1)-subset in the reference family
    (the pruned positives of level k-1, or all of Freq_{k-1});
``freq``
    candidates whose support reaches ``minsprt``;
``positive_pruned``
    frequent itemsets with at least one interesting split;
``nn``
    ``temp`` minus ``freq``;
``negative_interesting``
    members of ``nn`` with a split into two frequent, interesting parts.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal, Mapping

from .measures import Thresholds, interesting_positive_partitions, negative_partitions
from .transactions import Itemset, TransactionDB, sorted_itemsets

logger = logging.getLogger(__name__)

CandidateFilter = Literal["literal", "freq"]
Termination = Literal["temp_empty", "paper_literal"]


@dataclass(frozen=True)
class MinerConfig:
    """Search variants.

    ``candidate_filter="literal"`` tests candidates against the pruned
    positives of the previous level; ``"freq"`` tests against every frequent
    itemset of the previous level (classic Apriori, and the mode that agrees
    with exhaustive enumeration).

    ``termination="temp_empty"`` stops once no k-itemset can be generated;
    ``"paper_literal"`` stops after the first level whose pruned positive and
    interesting negative families are both empty.
    """

    candidate_filter: CandidateFilter = "literal"
    termination: Termination = "temp_empty"

    def __post_init__(self):
        if self.candidate_filter not in ("literal", "freq"):
            raise ValueError(f"unknown candidate_filter {self.candidate_filter!r}")
        if self.termination not in ("temp_empty", "paper_literal"):
            raise ValueError(f"unknown termination {self.termination!r}")


@dataclass
class LevelState:
    k: int
    temp: list[Itemset]
    counts: dict[Itemset, int]
    candidates: list[Itemset]
    freq: list[Itemset]
    positive_pruned: list[Itemset]
    nn: list[Itemset]
    negative_interesting: list[Itemset]

    def sizes(self) -> dict[str, int]:
        return {
            "temp": len(self.temp),
            "candidates": len(self.candidates),
            "frequent": len(self.freq),
            "positive_interesting": len(self.positive_pruned),
            "nn": len(self.nn),
            "negative_interesting": len(self.negative_interesting),
        }


@dataclass
class MiningStats:
    frequent_count: int = 0
    positive_interesting_count: int = 0
    negative_candidate_count: int = 0
    negative_interesting_count: int = 0


@dataclass
class MiningResult:
    ps: list[Itemset]
    ns: list[Itemset]
    freq1: list[Itemset]
    levels: list[LevelState] = field(default_factory=list)
    stats: MiningStats = field(default_factory=MiningStats)

    def level(self, k: int) -> LevelState:
        for lv in self.levels:
            if lv.k == k:
                return lv
        raise KeyError(k)


def frequent_singletons(db: TransactionDB, thr: Thresholds) -> list[Itemset]:
    """All 1-itemsets whose support reaches ``minsprt``, in id order."""
    return [(i,) for i in range(db.num_items) if db.support((i,)) >= thr.minsprt]


def generate_temp(freq_levels: Mapping[int, Iterable[Itemset]], k: int) -> list[Itemset]:
    """k-itemsets obtainable as ``A | B`` with A, B frequent at levels 1..k-1.

    ``A`` and ``B`` may overlap; only the size of the union matters.
    """
    pool = sorted_itemsets({q for i in range(1, k) for q in freq_levels.get(i, ())})
    sets = [frozenset(q) for q in pool]
    out = set()
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if len(a) + len(b) < k:
                continue
            u = a | b
            if len(u) == k:
                out.add(tuple(sorted(u)))
    return sorted_itemsets(out)


def count_level(db: TransactionDB, temp: Iterable[Itemset]) -> dict[Itemset, int]:
    """Support count of every itemset in ``temp`` via tid-bitset intersection."""
    return {q: db.support_count(q) for q in temp}


def _has_subset_in(q: Itemset, family: set[Itemset]) -> bool:
    return any(sub in family for sub in combinations(q, len(q) - 1))


def run_level(
    db: TransactionDB,
    thr: Thresholds,
    cfg: MinerConfig,
    freq_levels: Mapping[int, Iterable[Itemset]],
    prev_p: Iterable[Itemset],
    k: int,
) -> LevelState:
    """Execute one pass of the search at level ``k``."""
    if k < 2:
        raise ValueError("levels start at k=2")
    temp = generate_temp(freq_levels, k)
    counts = count_level(db, temp)

    if k == 2 or cfg.candidate_filter == "freq":
        reference = set(freq_levels.get(k - 1, ()))
    else:
        reference = set(prev_p)
    candidates = [q for q in temp if _has_subset_in(q, reference)]

    n = db.num_transactions
    # count/n >= minsprt, kept in integers
    freq = [q for q in candidates if counts[q] >= thr.minsprt * n]
    freq_set = set(freq)
    positive = [q for q in freq if interesting_positive_partitions(db, q, thr)]
    nn = [q for q in temp if q not in freq_set]
    negative = [q for q in nn if negative_partitions(db, q, thr)]
    return LevelState(k, temp, counts, candidates, freq, positive, nn, negative)


def mine(db: TransactionDB, thr: Thresholds, cfg: MinerConfig | None = None) -> MiningResult:
    """Search ``db`` for positive (PS) and negative (NS) itemsets of interest."""
    cfg = cfg or MinerConfig()
    if db.num_transactions == 0:
        raise ValueError("cannot mine an empty database")

    freq1 = frequent_singletons(db, thr)
    freq_levels: dict[int, list[Itemset]] = {1: freq1}
    result = MiningResult(ps=[], ns=[], freq1=freq1)
    prev_p: list[Itemset] = freq1
    k = 1
    while True:
        k += 1
        level = run_level(db, thr, cfg, freq_levels, prev_p, k)
        if not level.temp:
            break
        logger.debug("level %d: %s", k, level.sizes())
        result.levels.append(level)
        freq_levels[k] = level.freq
        prev_p = level.positive_pruned
        result.ps.extend(level.positive_pruned)
        result.ns.extend(level.negative_interesting)
        if cfg.termination == "paper_literal" and not level.positive_pruned and not level.negative_interesting:
            break

    st = result.stats
    st.frequent_count = sum(len(lv.freq) for lv in result.levels)
    st.positive_interesting_count = len(result.ps)
    st.negative_candidate_count = sum(len(lv.nn) for lv in result.levels)
    st.negative_interesting_count = len(result.ns)
    return result
