"""Exception hierarchy shared by every resnum module.

Three branches matter to callers: bad input (``InputError``), a size cap
that an exact routine refuses to exceed (``TooLarge``), and a computed
result contradicting a proved statement (``TheoremViolation``).  The CLI
maps them to exit codes 2, 3 and 4.
"""

from __future__ import annotations


class ResnumError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ResnumError):
    """Caller-supplied data is malformed or out of domain."""


class InvalidEdge(InputError):
    """An edge is a self-loop or otherwise not a vertex pair."""


class IndexOutOfRange(InputError):
    """A vertex index is negative or not below the graph order."""


class Disconnected(InputError):
    """Operation defined only for connected graphs got a disconnected one."""


class InvalidPermutation(InputError):
    """A relabeling is not a bijection on the vertex indices."""


class DegeneratePair(InputError):
    """A vertex pair must consist of two distinct vertices."""


class EmptySet(InputError):
    """A vertex set argument that must be nonempty is empty."""


class InvalidFamilyParam(InputError):
    """Family parameters outside the documented domain."""


class InvalidPartition(InputError):
    """A partition does not cover the vertex set exactly once."""


class MalformedGraph6(InputError):
    """A line is not valid graph6 for an order this parser supports."""


class MalformedLine(InputError):
    """An edge-list line does not match the expected layout."""


class CatalogMissing(InputError):
    """A classification needed the res-3 catalog but none is available."""


class NotApplicable(InputError):
    """The operation's precondition on the graph does not hold."""


class TooLarge(ResnumError):
    """The instance exceeds the cap under which a routine is exact."""


class TheoremViolation(ResnumError):
    """A computed value contradicts a statement the package relies on."""
