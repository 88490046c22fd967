"""scikit-learn style wrappers around the classifier and the balancer.

Samples are relators (word text or :class:`~onerel.words.Word`); the
exponent ``n`` of ``<a, b ; R^n>`` is a hyperparameter.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .classify import classify_out
from .normalize import balance_relator
from .validation import check_exponent, check_relators
from .words import format_word

OUT_CLASSES = ("Trivial", "C2", "C2xC2", "Z", "ZxC2", "Dinf", "DinfxC2",
               "PrimitiveDnAutCn", "DerivedCommutator", "DerivedUnclassified")


class OutClassifier(ClassifierMixin, BaseEstimator):
    """Predict the isomorphism class of Out(G) for each relator.

    Nothing is learned: ``fit`` only validates its inputs and records the
    label set, so that ``score`` can compare against reference labels.

    >>> OutClassifier(n=2).fit(["a b A b^2"]).predict(["a b A b^2", "a^2 b A^2 b"])
    array(['Dinf', 'C2xC2'], dtype=object)
    """

    def __init__(self, n: int = 2, with_parameter: bool = False):
        self.n = n
        self.with_parameter = with_parameter

    def fit(self, X, y=None):
        check_exponent(self.n)
        check_relators(X)
        labels = set(OUT_CLASSES) if y is None else set(OUT_CLASSES) | {str(v) for v in y}
        self.classes_ = np.array(sorted(labels), dtype=object)
        self.n_features_in_ = 1
        return self

    def _label(self, report) -> str:
        c = report.out_class
        return str(c) if self.with_parameter else c.tag

    def predict_reports(self, X):
        check_is_fitted(self, "classes_")
        n = check_exponent(self.n)
        return [classify_out(r, n) for r in check_relators(X)]

    def predict(self, X):
        return np.array([self._label(rep) for rep in self.predict_reports(X)], dtype=object)


class RelatorBalancer(TransformerMixin, BaseEstimator):
    """Rewrite each relator so that a has exponent sum zero.

    ``output="word"`` yields canonical text, ``"sums"`` the exponent sums
    ``(sigma_a, sigma_b)`` of the balanced relator.
    """

    def __init__(self, n: int = 2, output: str = "word"):
        self.n = n
        self.output = output

    def fit(self, X, y=None):
        check_exponent(self.n)
        check_relators(X)
        if self.output not in ("word", "sums"):
            raise ValueError(f"unknown output {self.output!r}")
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        n = check_exponent(self.n)
        balanced = [balance_relator(r, n) for r in check_relators(X)]
        if self.output == "sums":
            return np.array([[bp.s.exponent_sum("a"), bp.s.exponent_sum("b")] for bp in balanced])
        return np.array([format_word(bp.s) for bp in balanced], dtype=object)

    def presentations(self, X):
        n = check_exponent(self.n)
        return [balance_relator(r, n) for r in check_relators(X)]
