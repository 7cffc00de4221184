"""Ten-basket reference database over items A-F with its hand-listed results.

The hand-listed NS omits two itemsets the definitions admit (DE and BCDF).
The CLI diffs runs on this database against these listings.
"""
from __future__ import annotations

from fractions import Fraction

from .transactions import TransactionDB, parse_basket

EXAMPLE_BASKET = """\
T1: A, B, D
T2: A, B, C, D
T3: B, D
T4: B, C, D, E
T5: A, C, E
T6: B, D, F
T7: A, E, F
T8: C, F
T9: B, C, F
T10: A, B, C, D, F
"""

MINSPRT = Fraction(3, 10)
MININTEREST = Fraction(7, 100)

LISTED_PS = ("BD", "ABD", "BCD")
LISTED_NS = ("BE", "DF", "ABE", "ADE", "BDE", "BDF", "BEF", "CDF", "CEF", "ABCD", "ABDE")


def example_db() -> TransactionDB:
    return parse_basket(EXAMPLE_BASKET)


def _signature(db: TransactionDB):
    return sorted(tuple(sorted(db.decode(t))) for t in db.transactions)


def matches_example(db: TransactionDB, thr) -> bool:
    """True when ``db`` and the thresholds are those of the worked example."""
    return (
        _signature(db) == _signature(example_db())
        and thr.minsprt == MINSPRT
        and thr.mininterest == MININTEREST
    )


def listed_families(db: TransactionDB):
    """The listed PS and NS encoded against ``db``'s item ids."""
    ps = [db.encode(s) for s in LISTED_PS]
    ns = [db.encode(s) for s in LISTED_NS]
    return ps, ns
