"""semmap: build, rank, merge, evaluate, and edit semantic map graphs.

A semantic map places the functions a linguistic form can express as nodes
of a graph in which every attested form occupies a connected region. This
package turns a binary form-function table into a weighted co-occurrence
graph, enumerates and ranks its maximum spanning trees, augments them until
every form is connected, scores everything with intrinsic and extrinsic
metrics, and exposes the whole flow through an estimator, a CLI, and an
HTTP service for interactive editing.
"""

from .cooccurrence import build_g0
from .errors import (
    CapacityError,
    ConnectivityError,
    ConstructionError,
    EditError,
    GraphFormatError,
    MetricUndefinedError,
    PipelineStageError,
    SemmapError,
    TableFormatError,
)
from .estimator import SemanticMapBuilder
from .graph import (
    ConceptualGraph,
    GoldStandard,
    WeightedEdge,
    parse_gold,
    parse_graph,
    serialize_gold,
    serialize_graph,
)
from .merging import MergeCandidate, merge, unconnected_forms
from .metrics import (
    MetricsReport,
    SweepRow,
    accuracy,
    count_connected_subsets,
    degree_stats,
    evaluate,
    k_sweep,
    pearson,
    precision,
    recall,
    size,
    sweep_to_csv,
)
from .session import (
    EditAction,
    SessionBundle,
    apply_edit,
    replay,
    run_pipeline,
    save_bundle,
    switch_active,
    undo,
)
from .spanning import CandidateSet, enumerate_mst, max_spanning_weight, select_top_m
from .table import FormFunctionTable, FormInstance, FunctionId, parse_table, serialize_table

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "CapacityError",
    "ConceptualGraph",
    "ConnectivityError",
    "ConstructionError",
    "EditAction",
    "EditError",
    "FormFunctionTable",
    "FormInstance",
    "FunctionId",
    "GoldStandard",
    "GraphFormatError",
    "MergeCandidate",
    "MetricUndefinedError",
    "MetricsReport",
    "PipelineStageError",
    "SemanticMapBuilder",
    "SemmapError",
    "SessionBundle",
    "SweepRow",
    "TableFormatError",
    "WeightedEdge",
    "accuracy",
    "apply_edit",
    "build_g0",
    "count_connected_subsets",
    "degree_stats",
    "enumerate_mst",
    "evaluate",
    "k_sweep",
    "max_spanning_weight",
    "merge",
    "parse_gold",
    "parse_graph",
    "parse_table",
    "pearson",
    "precision",
    "recall",
    "replay",
    "run_pipeline",
    "save_bundle",
    "select_top_m",
    "serialize_gold",
    "serialize_graph",
    "serialize_table",
    "size",
    "sweep_to_csv",
    "switch_active",
    "undo",
    "unconnected_forms",
]
