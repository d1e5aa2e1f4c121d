class AaxError(Exception):
    """Base class for all package errors."""


class ConfigurationError(AaxError):
    """A config value or model description is invalid or unsupported."""


class InputError(AaxError):
    """An operation was called with data violating its preconditions."""


class TrainingError(AaxError):
    """Training could not proceed (e.g. non-finite loss)."""


class IngestError(AaxError):
    """A dataset root yielded no usable images."""


class NotFoundError(AaxError):
    """A review item id does not exist."""


class ConflictError(AaxError):
    """A verdict conflicts with an already-recorded one."""
