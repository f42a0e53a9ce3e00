"""Exception hierarchy shared by all exlab modules.

The four concrete classes map onto the CLI exit codes: parse errors (2),
solver failures (3), violated preconditions (4), and resource caps (5).
"""


class ExlabError(Exception):
    """Base class for all errors raised by exlab."""


class ParseError(ExlabError):
    """Malformed input text (edge lists, graph6 strings, CLI values)."""


class SolverError(ExlabError):
    """A numerical solver failed or returned an unusable solution."""


class PreconditionError(ExlabError):
    """An operation was called on inputs that violate its contract."""


class ResourceLimitError(ExlabError):
    """A size or enumeration cap was exceeded; failing loudly instead of truncating."""
