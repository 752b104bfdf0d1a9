"""Scikit-learn style estimator wrapping the build/rank/merge/evaluate flow."""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .cooccurrence import build_g0
from .errors import SemmapError
from .graph import GoldStandard
from .merging import merge, unconnected_forms
from .metrics import DEFAULT_PRECISION_CAP, accuracy, evaluate
from .spanning import enumerate_mst, select_top_m
from .table import FormFunctionTable
from .validation import as_table


class SemanticMapBuilder(BaseEstimator):
    """Fit a ranked set of semantic map candidates to a form-function table.

    Parameters
    ----------
    k : int or None
        How many maximum spanning trees to enumerate before ranking
        (None = all of them).
    m : int
        How many ranked candidates to keep.
    merge : bool
        Augment each kept candidate until every form's function set is
        connected (recall 1.0).
    acc_mode : str
        'matrix' or 'edge_overlap' agreement against a gold standard.
    precision_cap : int
        Maximum node count for the exact precision computation.

    Attributes (after fit)
    ----------------------
    table_ : FormFunctionTable. g0_ : the complete co-occurrence graph.
    candidates_ : list of kept graphs, best first. reports_ : their metric
    reports. max_weight_ : the shared spanning weight. truncated_ : whether
    enumeration was cut off at k.
    """

    def __init__(
        self,
        k: int | None = 10000,
        m: int = 3,
        merge: bool = False,
        acc_mode: str = "matrix",
        precision_cap: int = DEFAULT_PRECISION_CAP,
    ):
        self.k = k
        self.m = m
        self.merge = merge
        self.acc_mode = acc_mode
        self.precision_cap = precision_cap

    def fit(self, X, y: GoldStandard | None = None):
        """Build, rank, optionally merge, and evaluate candidates for X.

        X may be a FormFunctionTable, CSV text/bytes, or a CSV path;
        y, if given, is a GoldStandard used for the accuracy column.
        """
        table = as_table(X)
        self.table_ = table
        self.g0_ = build_g0(table)
        cand_set = enumerate_mst(self.g0_, self.k)
        selected = select_top_m(cand_set, self.m)
        if self.merge:
            selected = [merge(t, table, self.g0_) for t in selected]
        self.candidates_ = selected
        self.max_weight_ = cand_set.max_weight
        self.truncated_ = cand_set.truncated
        self.reports_ = [
            evaluate(
                t,
                table,
                y,
                acc_mode=self.acc_mode,
                precision_cap=self.precision_cap,
            )
            for t in selected
        ]
        return self

    def _check_fitted(self):
        if not hasattr(self, "candidates_"):
            raise SemmapError("this SemanticMapBuilder instance is not fitted yet")

    def predict(self, X=None) -> list[bool]:
        """Per-row connectivity flags on the best candidate.

        True means the row's function set induces a connected subgraph
        (rows with fewer than two functions are trivially connected).
        """
        self._check_fitted()
        table: FormFunctionTable = self.table_ if X is None else as_table(X)
        if table.functions != self.table_.functions:
            raise SemmapError("predict needs a table with the fitted function columns")
        best = self.candidates_[0]
        bad = {id(inst) for inst in unconnected_forms(best, table)}
        return [id(inst) not in bad for inst in table.instances]

    def score(self, X=None, y: GoldStandard | None = None) -> float:
        """Recall of the best candidate, or accuracy when a gold standard is given."""
        self._check_fitted()
        best = self.candidates_[0]
        if y is not None:
            return accuracy(best, y, self.acc_mode)
        table = self.table_ if X is None else as_table(X)
        report = evaluate(table=table, g=best, precision_cap=self.precision_cap)
        return report.recall
