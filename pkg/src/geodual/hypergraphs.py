"""Hypergraphs with minimal-transversal and maximal-independent-set streams.

Dualization sits behind a small backend interface so the sequential Berge
baseline can later be swapped for an asymptotically better algorithm
without touching any caller.  The baseline materializes intermediate
families, so streams are lazy but not delay-bounded.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Protocol, Sequence

from .errors import InputError
from .sets import (
    ElementSet,
    GroundSet,
    Immutable,
    iter_bits,
    minimal_masks,
    same_universe,
    sort_key_lex,
)


class Hypergraph(Immutable):
    """A vertex set together with a family of edges over one ground set.

    The raw edge list is preserved exactly as given (construction sites
    quote premises verbatim); the absorption-reduced, duplicate-free view
    used by transversal computations is derived on demand.
    """

    __slots__ = ("vertices", "edges", "_reduced")

    def __init__(self, vertices: ElementSet, edges: Iterable[ElementSet] = ()):
        edges = tuple(edges)
        for e in edges:
            same_universe(vertices, e)
            if e.mask & ~vertices.mask:
                raise InputError(f"edge {e!r} is not contained in the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_reduced", None)

    @property
    def universe(self) -> GroundSet:
        return self.vertices.universe

    @property
    def dimension(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def reduced_edge_masks(self) -> tuple[int, ...]:
        """Inclusion-minimal, duplicate-free edges, canonically ordered."""
        cached = self._reduced
        if cached is None:
            cached = tuple(minimal_masks(e.mask for e in self.edges))
            object.__setattr__(self, "_reduced", cached)
        return cached

    def reduced_edges(self) -> tuple[ElementSet, ...]:
        u = self.universe
        return tuple(ElementSet(u, m) for m in self.reduced_edge_masks())

    def edge_family(self) -> frozenset[ElementSet]:
        """The edges as a set family (duplicates collapsed, order dropped)."""
        return frozenset(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(V={self.vertices!r}, {len(self.edges)} edges)"


class DualizationBackend(Protocol):
    """Interface for minimal-transversal engines.

    Implementations receive the absorption-reduced edge masks and return
    the masks of all minimal transversals, in any order.
    """

    def transversal_masks(self, edges: Sequence[int]) -> Iterable[int]:
        ...


class BergeBackend:
    """Sequential Berge multiplication with absorption after each edge."""

    def transversal_masks(self, edges: Sequence[int]) -> list[int]:
        partial: list[int] = [0]
        for edge in edges:
            if edge == 0:
                return []
            extended: set[int] = set()
            for t in partial:
                if t & edge:
                    extended.add(t)
                else:
                    for v in iter_bits(edge):
                        extended.add(t | 1 << v)
            partial = minimal_masks(extended)
        return partial


DEFAULT_BACKEND = BergeBackend()


def minimal_transversals(
    h: Hypergraph, backend: DualizationBackend | None = None
) -> Iterator[ElementSet]:
    """Stream the minimal transversals of `h`.

    Every yielded set meets every edge and is inclusion-minimal with that
    property.  If some edge is empty the stream is empty; with no edges
    at all the single empty set is streamed.  Order is lexicographic on
    the ascending position sequence.
    """
    backend = backend or DEFAULT_BACKEND
    u = h.universe
    masks = backend.transversal_masks(h.reduced_edge_masks())
    for mask in sorted(masks, key=sort_key_lex):
        yield ElementSet(u, mask)


def maximal_independent_sets(
    h: Hypergraph, backend: DualizationBackend | None = None
) -> Iterator[ElementSet]:
    """Stream the maximal independent sets of `h`.

    Computed as vertex-set complements of the minimal transversals; with
    no edges the whole vertex set is the single output.  Order is
    lexicographic on the ascending position sequence.
    """
    backend = backend or DEFAULT_BACKEND
    u = h.universe
    vmask = h.vertices.mask
    masks = backend.transversal_masks(h.reduced_edge_masks())
    for mask in sorted((vmask & ~m for m in masks), key=sort_key_lex):
        yield ElementSet(u, mask)


def induced(h: Hypergraph, s: ElementSet) -> Hypergraph:
    """The subhypergraph on `s`: every edge intersected with `s`.

    Empty intersections are kept; they correctly make the transversal
    stream of the result empty.
    """
    same_universe(h.vertices, s)
    if s.mask & ~h.vertices.mask:
        raise InputError("induced vertex set must be a subset of the vertices")
    u = h.universe
    return Hypergraph(s, tuple(ElementSet(u, e.mask & s.mask) for e in h.edges))
