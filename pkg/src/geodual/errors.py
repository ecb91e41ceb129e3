"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: ``InputError`` is a malformed file or
mismatched universe (exit 1), ``PreconditionError`` is a semantic
precondition violation such as an unranked base (exit 2), and
``VerificationError`` is a failed post-hoc consistency check (exit 3).
"""

from __future__ import annotations


class GeodualError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GeodualError):
    """Malformed input: parse errors, bad labels, universe mismatches."""


class PreconditionError(GeodualError):
    """An operation was called on data violating its semantic precondition."""


class VerificationError(GeodualError):
    """An optional verification pass found the result inconsistent."""


class SizeGuardError(PreconditionError):
    """A brute-force routine refused an instance above its size guard."""


class NotRankedError(PreconditionError):
    """The implicational base admits no rank function.

    Carries the :class:`~geodual.ranking.RankConflict` witness when one is
    available.
    """

    def __init__(self, message: str, conflict=None):
        super().__init__(message)
        self.conflict = conflict


class NotConvexGeometryError(PreconditionError):
    """A meet family failed the unique-successor partition test."""


class DuplicateImplicationWarning(UserWarning):
    """Emitted when duplicate implications are dropped at construction."""


class DuplicateSetWarning(UserWarning):
    """Emitted when duplicate member sets are dropped from a family."""


class RelabelWarning(UserWarning):
    """Emitted when a fresh element had to be renamed to avoid a clash."""
