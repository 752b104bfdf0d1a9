"""Exception hierarchy shared by all semmap modules."""

from __future__ import annotations


class SemmapError(Exception):
    """Base class for all domain errors raised by this package."""


class TableFormatError(SemmapError):
    """The form-function CSV is malformed (header, cell values, labels)."""


class GraphFormatError(SemmapError):
    """A graph or gold-standard document is malformed or unresolvable."""


class ConstructionError(SemmapError):
    """A graph cannot be constructed from the given table."""


class ConnectivityError(SemmapError):
    """The admitted edge pool does not connect all functions."""

    def __init__(self, message: str, components: list[list[str]] | None = None):
        super().__init__(message)
        self.components = components or []


class CapacityError(SemmapError):
    """An exact computation was refused because the input exceeds its cap."""


class MetricUndefinedError(SemmapError):
    """A metric has no defined value for this input (e.g. 0/0)."""


class EditError(SemmapError):
    """An edit action targets an invalid node, edge, or weight."""


class PipelineStageError(SemmapError):
    """Wraps an upstream error with the pipeline stage where it occurred."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause
