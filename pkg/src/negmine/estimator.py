"""scikit-learn style front end for the miner."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_transactions
from .measures import Thresholds
from .miner import MinerConfig, mine
from .rules import negative_rules, positive_rules


class InterestingItemsetMiner(TransformerMixin, BaseEstimator):
    """Find positive and negative itemsets of interest in a set of baskets.

    Parameters
    ----------
    min_support : rational-like, default=0.3
        Minimum support (``minsprt``). Strings such as ``"3/10"`` are accepted;
        floats are read through their decimal repr.
    min_confidence : rational-like, default=0
        Minimum confidence, applied only when rules are extracted.
    min_interest : rational-like, default=0.07
        Minimum absolute leverage (``mininterest``).
    candidate_filter : {"literal", "freq"}, default="literal"
        Reference family for the candidate subset test.
    termination : {"temp_empty", "paper_literal"}, default="temp_empty"
        Loop stopping rule.

    Attributes
    ----------
    db_ : TransactionDB
        The fitted database.
    result_ : MiningResult
        Full search trace.
    ps_, ns_ : list of tuple of str
        Positive and negative itemsets of interest as item tokens.
    n_features_in_ : int
        Number of distinct items.

    Examples
    --------
    >>> miner = InterestingItemsetMiner(min_support="0.3", min_interest="0.07")
    >>> miner.fit([["A", "B"], ["A"], ["B"], ["C"]]).ps_
    []
    """

    def __init__(self, min_support=0.3, min_confidence=0, min_interest=0.07,
                 candidate_filter="literal", termination="temp_empty"):
        self.min_support = min_support
        self.min_confidence = min_confidence
        self.min_interest = min_interest
        self.candidate_filter = candidate_filter
        self.termination = termination

    def _thresholds(self) -> Thresholds:
        return Thresholds(self.min_support, self.min_confidence, self.min_interest)

    def fit(self, X, y=None, feature_names=None):
        self.thresholds_ = self._thresholds()
        cfg = MinerConfig(self.candidate_filter, self.termination)
        self.db_ = check_transactions(X, feature_names)
        self.result_ = mine(self.db_, self.thresholds_, cfg)
        self.ps_ = [self.db_.decode(q) for q in self.result_.ps]
        self.ns_ = [self.db_.decode(q) for q in self.result_.ns]
        self.n_features_in_ = self.db_.num_items
        return self

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "result_")
        names = [" ".join(q) for q in self.ps_ + self.ns_]
        return np.asarray(names, dtype=object)

    def transform(self, X):
        """Indicator matrix: column ``j`` is 1 where a basket contains itemset ``j``.

        Columns list PS first, then NS, matching :meth:`get_feature_names_out`.
        Tokens unseen during ``fit`` are ignored.
        """
        check_is_fitted(self, "result_")
        db = check_transactions(X)
        baskets = [set(db.decode(t)) for t in db.transactions]
        cols = self.ps_ + self.ns_
        out = np.zeros((len(baskets), len(cols)), dtype=np.int8)
        for j, q in enumerate(cols):
            need = set(q)
            for i, b in enumerate(baskets):
                if need <= b:
                    out[i, j] = 1
        return out

    def rules(self):
        """Positive rules from PS followed by negative rules from NS."""
        check_is_fitted(self, "result_")
        return (positive_rules(self.db_, self.result_.ps, self.thresholds_)
                + negative_rules(self.db_, self.result_.ns, self.thresholds_))
