"""Input validation helpers shared by the estimator and the CLI."""
from __future__ import annotations

import numpy as np

from .exceptions import IngestionError
from .transactions import TransactionDB


def _is_matrix(X) -> bool:
    return hasattr(X, "columns") or (isinstance(X, np.ndarray) and X.ndim == 2)


def check_transactions(X, feature_names=None) -> TransactionDB:
    """Coerce ``X`` into a :class:`TransactionDB`.

    Accepted inputs:

    * a ``TransactionDB`` (returned as is);
    * an iterable of baskets, each an iterable of hashable item tokens;
    * a 2-D one-hot array or DataFrame; columns are items, non-zero cells
      mark membership. Column labels (or ``feature_names``) become tokens.
    """
    if isinstance(X, TransactionDB):
        return X
    if _is_matrix(X):
        if hasattr(X, "columns"):
            names = [str(c) for c in X.columns]
            values = np.asarray(X.to_numpy())
        else:
            values = X
            names = ([str(c) for c in feature_names] if feature_names is not None
                     else [str(j) for j in range(values.shape[1])])
        if len(names) != values.shape[1]:
            raise IngestionError("feature_names does not match the number of columns")
        if len(set(names)) != len(names):
            raise IngestionError("column labels must be distinct")
        mask = values.astype(bool)
        baskets = [[names[j] for j in np.flatnonzero(row)] for row in mask]
        # keep column order as the item-id order
        db = TransactionDB.from_baskets([names] + baskets)
        db = TransactionDB(db.items, db.transactions[1:])
    else:
        if isinstance(X, (str, bytes)):
            raise IngestionError("expected an iterable of baskets, got a string")
        baskets = []
        for n, basket in enumerate(X):
            if isinstance(basket, (str, bytes)):
                raise IngestionError(f"basket {n} is a string; pass a list of item tokens")
            baskets.append([str(tok) for tok in basket])
        db = TransactionDB.from_baskets(baskets)
    if db.num_transactions == 0:
        raise IngestionError("input contains no transactions")
    return db
