"""Exception types with the CLI exit codes they map to."""

from __future__ import annotations


class RealformsError(Exception):
    """Base class; `exit_code` drives the CLI."""

    exit_code = 1


class VerificationError(RealformsError):
    """An identity or certified property failed (with a witness)."""

    exit_code = 2

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ConstructionError(RealformsError):
    """A build step received inconsistent or unsupported input."""

    exit_code = 3


class IOFormatError(RealformsError):
    """Malformed file, unknown name, or unparsable literal."""

    exit_code = 4
