"""Mining positive and negative itemsets of interest and their association rules."""
from .estimator import InterestingItemsetMiner
from .exceptions import (
    CapacityError,
    DomainError,
    InconsistentSupportError,
    IngestionError,
    NegmineError,
    UndefinedConfidenceError,
)
from .measures import (
    InterestReport,
    Partition,
    RuleForm,
    Thresholds,
    interesting_positive_partitions,
    leverage,
    negated_supports,
    negative_partitions,
    rule_stats,
)
from .miner import LevelState, MinerConfig, MiningResult, mine
from .oracle import oracle_mine
from .rules import Rule, negative_rules, positive_rules
from .transactions import Itemset, TransactionDB, load_basket, parse_basket

__all__ = [
    "CapacityError", "DomainError", "InconsistentSupportError", "IngestionError",
    "InterestReport", "InterestingItemsetMiner", "Itemset", "LevelState", "MinerConfig",
    "MiningResult", "NegmineError", "Partition", "Rule", "RuleForm", "Thresholds",
    "TransactionDB", "UndefinedConfidenceError", "interesting_positive_partitions",
    "leverage", "load_basket", "mine", "negated_supports", "negative_partitions",
    "negative_rules", "oracle_mine", "parse_basket", "positive_rules", "rule_stats",
]
