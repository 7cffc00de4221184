"""Transaction storage, basket-file ingestion and support counting.

Items are mapped to dense integer ids in order of first appearance. An
itemset is a strictly increasing tuple of those ids. Every item also owns a
tid-bitset (a Python ``int`` whose bit ``t`` is set when transaction ``t``
contains the item), so the support count of a k-itemset is the popcount of
the AND of k bitsets.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .exceptions import DomainError, IngestionError

Itemset = tuple[int, ...]

_TOKEN_SEP = re.compile(r"[,\s]+")


def make_itemset(items: Iterable[int]) -> Itemset:
    """Return the canonical (sorted, duplicate-free) form of ``items``."""
    return tuple(sorted(set(items)))


def itemset_key(q: Itemset) -> tuple[int, Itemset]:
    """Sort key ordering itemsets by size, then lexicographically by id."""
    return (len(q), q)


def sorted_itemsets(family: Iterable[Itemset]) -> list[Itemset]:
    return sorted(family, key=itemset_key)


def _build_index(transactions: Sequence[Itemset], num_items: int) -> tuple[int, ...]:
    bits = [0] * num_items
    for tid, t in enumerate(transactions):
        mask = 1 << tid
        for i in t:
            bits[i] |= mask
    return tuple(bits)


@dataclass(frozen=True)
class TransactionDB:
    """Immutable transaction database over an item dictionary.

    Parameters
    ----------
    items : tuple of str
        Item tokens; position ``i`` is the token of item id ``i``.
    transactions : tuple of Itemset
        Each transaction as a canonical itemset of item ids.
    """

    items: tuple[str, ...]
    transactions: tuple[Itemset, ...]
    _index: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _lookup: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.items)) != len(self.items):
            raise DomainError("item tokens must be distinct")
        n = len(self.items)
        for t in self.transactions:
            if t != make_itemset(t):
                raise DomainError(f"transaction {t!r} is not a canonical itemset")
            if t and not (0 <= t[0] and t[-1] < n):
                raise DomainError(f"transaction {t!r} references an unknown item id")
        object.__setattr__(self, "_index", _build_index(self.transactions, n))
        object.__setattr__(self, "_lookup", {tok: i for i, tok in enumerate(self.items)})

    @classmethod
    def from_baskets(cls, baskets: Iterable[Iterable[str]]) -> "TransactionDB":
        """Build a database from token baskets, assigning ids by first appearance."""
        lookup: dict[str, int] = {}
        transactions = []
        for basket in baskets:
            ids = []
            for tok in basket:
                if tok not in lookup:
                    lookup[tok] = len(lookup)
                ids.append(lookup[tok])
            transactions.append(make_itemset(ids))
        return cls(tuple(lookup), tuple(transactions))

    @property
    def num_items(self) -> int:
        return len(self.items)

    @property
    def num_transactions(self) -> int:
        return len(self.transactions)

    @property
    def index(self) -> tuple[int, ...]:
        """Per-item tid-bitsets."""
        return self._index

    def rebuild_index(self) -> tuple[int, ...]:
        return _build_index(self.transactions, self.num_items)

    def encode(self, tokens: Iterable[str]) -> Itemset:
        try:
            return make_itemset(self._lookup[tok] for tok in tokens)
        except KeyError as exc:
            raise DomainError(f"unknown item token {exc.args[0]!r}") from None

    def decode(self, q: Itemset) -> tuple[str, ...]:
        return tuple(self.items[i] for i in q)

    def format(self, q: Itemset, sep: str = " ") -> str:
        return sep.join(self.decode(q))

    def _check(self, q: Itemset) -> None:
        for i in q:
            if not (isinstance(i, int) and 0 <= i < self.num_items):
                raise DomainError(f"item id {i!r} is not valid for this database")

    def tidset(self, q: Itemset) -> int:
        """Bitset of the transactions containing every item of ``q``."""
        self._check(q)
        if not q:
            return (1 << self.num_transactions) - 1
        return reduce(lambda acc, i: acc & self._index[i], q[1:], self._index[q[0]])

    def support_count(self, q: Itemset) -> int:
        """Number of transactions that contain ``q``."""
        return self.tidset(q).bit_count()

    def support(self, q: Itemset) -> Fraction:
        """Exact support of ``q``: its count over the number of transactions."""
        if self.num_transactions == 0:
            raise DomainError("support is undefined on an empty database")
        return Fraction(self.support_count(q), self.num_transactions)

    def to_basket(self) -> str:
        """Serialize back to the basket text format, one transaction per line."""
        return "".join(", ".join(self.decode(t)) + "\n" for t in self.transactions)


def scan_count(db: TransactionDB, q: Iterable[int]) -> int:
    """Support count by a plain scan over the transaction list.

    Independent of the bitset index; used to cross-check it.
    """
    qs = set(q)
    return sum(1 for t in db.transactions if qs.issubset(t))


def parse_basket(text: str) -> TransactionDB:
    """Parse basket text into a :class:`TransactionDB`.

    One transaction per line. Tokens are separated by commas and/or
    whitespace; blank lines are skipped and a leading token ending in ``:``
    (a transaction id such as ``T1:``) is dropped.
    """
    baskets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = [tok for tok in _TOKEN_SEP.split(line) if tok]
        if tokens and tokens[0].endswith(":"):
            tokens = tokens[1:]
        if not tokens:
            raise IngestionError("transaction has no items", lineno)
        baskets.append(tokens)
    if not baskets:
        raise IngestionError("input contains no transactions")
    return TransactionDB.from_baskets(baskets)


def load_basket(source) -> TransactionDB:
    """Load a basket file from a path or an open text stream."""
    if isinstance(source, (str, os.PathLike)):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except UnicodeDecodeError as exc:
            raise IngestionError(f"input is not valid UTF-8: {exc}") from None
    else:
        text = source.read()
    return parse_basket(text)
