"""Meet-irreducible enumeration from a ranked implicational base.

The enumerator lists, for every element j, the maximal closed sets
avoiding j.  Those families partition the meet-irreducible sets of the
closure system, so streaming them element by element covers every meet
exactly once, with no duplicate suppression.

Each family is produced rank by rank: given the set B of elements to
avoid at the current rank, the maximal independent sets of a small
hypergraph (premises of rules concluding in B, over the vertices one
rank up) split the solution family into disjoint branches, and each
branch recurses one rank higher.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NotRankedError, PreconditionError
from .hypergraphs import DualizationBackend, Hypergraph, maximal_independent_sets
from .implications import ImplicationalBase
from .ranking import RankConflict, RankFunction, compute_rank, validate_rank
from .sets import ElementSet


@dataclass(frozen=True, slots=True)
class RankedSet:
    """A set of elements sharing one rank, with the rank kept explicitly.

    Carrying the rank keeps the recursion well-defined when the member
    set is empty.
    """

    members: ElementSet
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise PreconditionError("rank must be a natural number")


def _check_ranked(base: ImplicationalBase, rho: RankFunction) -> None:
    if not validate_rank(base, rho):
        raise PreconditionError("rank function is not valid for the base")


def _check_ranked_set(rho: RankFunction, b: RankedSet) -> None:
    if any(rho.ranks[pos] != b.rank for pos in b.members):
        raise PreconditionError(
            f"members of {b.members!r} do not all have rank {b.rank}"
        )


def level_hypergraph(
    base: ImplicationalBase, rho: RankFunction, b: RankedSet
) -> Hypergraph:
    """The hypergraph steering one recursion step.

    Vertices are the elements one rank above `b`; edges are the premises
    of all rules concluding inside `b`.  The vertex set may properly
    contain the union of the edges: vertices in no edge are free to join
    every branch.
    """
    _check_ranked(base, rho)
    _check_ranked_set(rho, b)
    return _level_hypergraph(base, rho, b)


def _level_hypergraph(
    base: ImplicationalBase, rho: RankFunction, b: RankedSet
) -> Hypergraph:
    u = base.ground
    vertices = ElementSet(u, rho.level_mask(b.rank + 1))
    bmask = b.members.mask
    edges = [imp.premise for imp in base.implications if bmask >> imp.conclusion & 1]
    return Hypergraph(vertices, edges)


def seed_region(base: ImplicationalBase, rho: RankFunction, b: RankedSet) -> ElementSet:
    """Elements of rank at most `b.rank` outside `b`: common to every output."""
    mask = 0
    for pos, r in enumerate(rho.ranks):
        if r <= b.rank:
            mask |= 1 << pos
    return ElementSet(base.ground, mask & ~b.members.mask)


def maximal_avoiding_sets(
    base: ImplicationalBase,
    rho: RankFunction,
    b: RankedSet,
    c: ElementSet,
    backend: DualizationBackend | None = None,
) -> Iterator[ElementSet]:
    """Recursive enumeration of the maximal closed sets disjoint from `b`.

    Seeded with `c` equal to ``seed_region(base, rho, b)``, the stream is
    exactly the family of maximal closed sets avoiding `b`, without
    duplicates; every output is closed.  Branches are explored in the
    deterministic order of the hypergraph module.
    """
    _check_ranked(base, rho)
    _check_ranked_set(rho, b)
    if c.mask & b.members.mask:
        raise PreconditionError("the accumulated region must avoid the target set")
    k = max(rho.ranks, default=b.rank)
    yield from _recurse(base, rho, k, b, c.mask, backend)


def _recurse(
    base: ImplicationalBase,
    rho: RankFunction,
    k: int,
    b: RankedSet,
    cmask: int,
    backend: DualizationBackend | None,
) -> Iterator[ElementSet]:
    u = base.ground
    if b.rank >= k:
        yield ElementSet(u, cmask)
        return
    hb = _level_hypergraph(base, rho, b)
    next_level = rho.level_mask(b.rank + 1)
    for s in maximal_independent_sets(hb, backend):
        complement = RankedSet(ElementSet(u, next_level & ~s.mask), b.rank + 1)
        yield from _recurse(base, rho, k, complement, cmask | s.mask, backend)


def meet_irreducibles(
    base: ImplicationalBase, backend: DualizationBackend | None = None
) -> Iterator[tuple[int, ElementSet]]:
    """Stream every meet-irreducible closed set of a ranked base.

    Yields pairs ``(j, M)`` where `M` is a maximal closed set avoiding
    the element `j`; iterating j in position order covers the
    meet-irreducible family exactly once.  Raises
    :class:`NotRankedError`, with the conflict attached, when the base
    admits no rank function.
    """
    rho = compute_rank(base)
    if isinstance(rho, RankConflict):
        raise NotRankedError(
            f"base is not ranked: {rho.describe()}", conflict=rho
        )
    k = rho.max_rank
    u = base.ground
    for j in range(u.size):
        b = RankedSet(ElementSet(u, 1 << j), rho.ranks[j])
        seed = seed_region(base, rho, b)
        for m in _recurse(base, rho, k, b, seed.mask, backend):
            yield j, m
