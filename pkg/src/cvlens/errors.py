"""Typed errors shared across the package.

Every error a caller is expected to handle has its own class so that the
CLI and the HTTP API can map failures to exit codes / status codes without
string matching.
"""


class CvlensError(Exception):
    """Base class for all package errors."""


class MalformedDocument(CvlensError):
    """Profile document text could not be parsed at all."""


class SchemaViolation(CvlensError):
    """Document parsed but violates the profile schema (missing id,
    source, or basic names; unsupported schema version; wrong shapes)."""


class EmptyCorpus(CvlensError):
    """Ingestion produced zero successfully parsed profiles."""


class IoFailure(CvlensError):
    """Reading or writing a corpus / snapshot file failed."""


class VersionMismatch(CvlensError):
    """Snapshot file carries an unsupported format version."""


class DigestMismatch(CvlensError):
    """Snapshot file is corrupt: payload digest does not match header."""


class EmptyQuery(CvlensError):
    """Recommendation query was blank (or normalizes to the empty key)."""


class InfeasibleSpec(CvlensError):
    """Generator spec demands more planted values than available slots."""
