"""scikit-learn style transformer: strings in, edit distances to references out."""
from __future__ import annotations

from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from rled.engine import rle_edit_distance
from rled.rle import RleString, encode_raw, parse_rle


def check_strings(X: Iterable, raw: bool = False) -> list[RleString]:
    """Coerce a 1-d collection of strings into :class:`RleString` values.

    Items may be ``RleString`` already, or ``str`` read as RLE text (or as
    literal text when ``raw``).  Anything else raises ``TypeError``.
    """
    if isinstance(X, (str, bytes, RleString)):
        raise TypeError("expected a collection of strings, got a single string")
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise ValueError(f"expected a 1-d array of strings, got shape {X.shape}")
    out = []
    for item in X:
        if isinstance(item, RleString):
            out.append(item)
        elif isinstance(item, str):
            out.append(encode_raw(item) if raw else parse_rle(item))
        else:
            raise TypeError(f"cannot read {type(item).__name__} as a string")
    return out


class RleEditDistance(TransformerMixin, BaseEstimator):
    """Map each input string to its edit distances against the fitted references.

    Parameters
    ----------
    raw : bool
        Read ``str`` items as literal text instead of RLE text.

    Attributes
    ----------
    references_ : list of RleString
    n_features_out_ : int
        Number of references, i.e. output columns.
    """

    def __init__(self, raw: bool = False):
        self.raw = raw

    def fit(self, X, y=None):
        refs = check_strings(X, self.raw)
        if not refs:
            raise ValueError("need at least one reference string")
        self.references_ = refs
        self.n_features_out_ = len(refs)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "references_")
        xs = check_strings(X, self.raw)
        out = np.empty((len(xs), self.n_features_out_), dtype=np.int64)
        for i, x in enumerate(xs):
            for j, ref in enumerate(self.references_):
                out[i, j] = rle_edit_distance(x, ref)
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "references_")
        return np.array([f"dist_{j}" for j in range(self.n_features_out_)], dtype=object)
