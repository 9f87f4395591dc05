"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class DiagminError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DiagminError):
    """Invalid user input: bad graph data, mismatched grids, malformed flags. Exit code 2."""


class ResourceGuardError(DiagminError):
    """A desk-scale guard was exceeded; rerun with --force to override where allowed. Exit code 3."""


class VerificationError(DiagminError):
    """A verified mathematical claim failed to hold on some input. Exit code 1."""
