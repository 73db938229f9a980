"""Exception types shared across the package."""


class PnfError(Exception):
    """Base class for all package errors."""


class InvalidInputError(PnfError, ValueError):
    """An argument violates a documented precondition."""


class ConfigError(PnfError, ValueError):
    """A configuration is internally inconsistent or names unknown entities."""


class MissingMarkerError(PnfError, ValueError):
    """A clinical marker required by the active configuration has no value."""


class DatasetError(PnfError, ValueError):
    """A dataset on disk fails schema or invariant validation."""


class CheckpointError(PnfError, ValueError):
    """A checkpoint file is corrupt or incompatible with the requested config."""


class UndefinedMetricError(PnfError, ValueError):
    """A metric is undefined for the given inputs (e.g. single-class AUROC)."""


class TrainingDivergedError(PnfError, RuntimeError):
    """Training produced a non-finite loss."""
