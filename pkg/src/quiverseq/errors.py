"""Base class for all structured errors raised by this package."""


class QuiverSeqError(Exception):
    """Common ancestor so callers (and the CLI) can catch domain errors."""
