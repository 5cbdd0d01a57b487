"""Exception types shared across the package."""


class ContractError(ValueError):
    """An argument violates a documented precondition (shape, range, structure)."""


class NoLegalTreeError(RuntimeError):
    """Decoding was asked for the best tree of an empty search space."""


class EmptySupportError(RuntimeError):
    """Marginals were requested for a distribution with zero total mass."""


class AnnotationError(ValueError):
    """A gold annotation cannot be converted into a consistent constraint set."""

    def __init__(self, message, tuple_index=None):
        if tuple_index is not None:
            message = f"tuple {tuple_index}: {message}"
        super().__init__(message)
        self.tuple_index = tuple_index


class DataError(ValueError):
    """A dataset file or record is malformed."""

    def __init__(self, message, sent_id=None, path=None):
        parts = []
        if path is not None:
            parts.append(str(path))
        if sent_id is not None:
            parts.append(f"sent_id={sent_id}")
        if parts:
            message = f"{' '.join(parts)}: {message}"
        super().__init__(message)
        self.sent_id = sent_id
        self.path = path


class ConfigError(ValueError):
    """A configuration file contains an unknown key or a bad value."""
