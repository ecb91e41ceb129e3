"""Ground sets and immutable bit-indexed subsets.

Every algorithm in the package is dominated by subset tests, unions and
intersections, so subsets are stored as Python integers used as bit masks.
``ElementSet`` is a thin immutable wrapper that keeps the owning
:class:`GroundSet` alongside the mask; raw masks are used internally in
hot loops and wrapped at API boundaries.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InputError

#: Hard capacity of a ground set; fixed once at construction.
MAX_GROUND_SIZE = 4096


class Immutable:
    """Blocks attribute assignment after construction; pickle-safe."""

    __slots__ = ()

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __getstate__(self):
        return {slot: getattr(self, slot) for slot in self.__slots__}

    def __setstate__(self, state):
        for name, value in state.items():
            object.__setattr__(self, name, value)


class GroundSet(Immutable):
    """A fixed, ordered universe of distinctly labelled elements.

    Elements are addressed by their position ``0..n-1``; labels are only
    used at the parsing and printing boundary.
    """

    __slots__ = ("labels", "index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if len(labels) > MAX_GROUND_SIZE:
            raise InputError(
                f"ground set of {len(labels)} elements exceeds the capacity "
                f"of {MAX_GROUND_SIZE}"
            )
        index: dict[str, int] = {}
        for pos, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise InputError(f"label at position {pos} is not a nonempty string")
            if label != "".join(label.split()):
                raise InputError(f"label {label!r} contains whitespace")
            if label in ("->", ".") or label.startswith("#"):
                raise InputError(f"label {label!r} clashes with file-format syntax")
            if label in index:
                raise InputError(f"duplicate label {label!r}")
            index[label] = pos
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({' '.join(self.labels)})"

    def position(self, label: str) -> int:
        """Position of `label`, raising :class:`InputError` if unknown."""
        try:
            return self.index[label]
        except KeyError:
            raise InputError(f"unknown element label {label!r}") from None


def same_universe(a: "ElementSet", b: "ElementSet") -> GroundSet:
    """Return the common ground set of `a` and `b` or raise :class:`InputError`."""
    ua, ub = a.universe, b.universe
    if ua is not ub and ua != ub:
        raise InputError(
            f"universe mismatch: {ua!r} vs {ub!r}"
        )
    return ua


class ElementSet(Immutable):
    """An immutable subset of a :class:`GroundSet`, stored as a bit mask.

    Supports the usual set algebra through operators: ``|``, ``&``, ``-``
    for union, intersection and difference, ``<=`` and ``<`` for subset
    tests, iteration in ascending position order, and hashing.
    """

    __slots__ = ("universe", "mask")

    def __init__(self, universe: GroundSet, mask: int):
        if mask < 0 or mask >> universe.size:
            raise InputError(
                f"mask {mask:#x} has bits outside the {universe.size}-element universe"
            )
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "mask", mask)

    # -- constructors ----------------------------------------------------

    @classmethod
    def of(cls, universe: GroundSet, positions: Iterable[int] = ()) -> "ElementSet":
        mask = 0
        n = universe.size
        for pos in positions:
            if not 0 <= pos < n:
                raise InputError(f"position {pos} outside universe of size {n}")
            mask |= 1 << pos
        return cls(universe, mask)

    @classmethod
    def from_labels(cls, universe: GroundSet, labels: Iterable[str]) -> "ElementSet":
        return cls.of(universe, (universe.position(lab) for lab in labels))

    @classmethod
    def empty(cls, universe: GroundSet) -> "ElementSet":
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: GroundSet) -> "ElementSet":
        return cls(universe, (1 << universe.size) - 1)

    # -- set algebra ------------------------------------------------------

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(same_universe(self, other), self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(same_universe(self, other), self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(same_universe(self, other), self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        full = (1 << self.universe.size) - 1
        return ElementSet(self.universe, self.mask ^ full)

    def with_element(self, pos: int) -> "ElementSet":
        if not 0 <= pos < self.universe.size:
            raise InputError(f"position {pos} outside universe")
        return ElementSet(self.universe, self.mask | (1 << pos))

    def without_element(self, pos: int) -> "ElementSet":
        return ElementSet(self.universe, self.mask & ~(1 << pos))

    def __le__(self, other: "ElementSet") -> bool:
        same_universe(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "ElementSet") -> bool:
        return other <= self

    def __gt__(self, other: "ElementSet") -> bool:
        return other < self

    def isdisjoint(self, other: "ElementSet") -> bool:
        same_universe(self, other)
        return self.mask & other.mask == 0

    # -- inspection -------------------------------------------------------

    def __contains__(self, pos: int) -> bool:
        return 0 <= pos < self.universe.size and bool(self.mask >> pos & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.mask == other.mask
            and (self.universe is other.universe or self.universe == other.universe)
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.universe.labels))

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def labels(self) -> tuple[str, ...]:
        labs = self.universe.labels
        return tuple(labs[i] for i in iter_bits(self.mask))

    def __repr__(self) -> str:
        inner = " ".join(self.labels())
        return "{" + inner + "}"


# -- raw mask helpers -----------------------------------------------------


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of masks, in stable order.

    Output is sorted by (popcount, ascending bit tuple) so callers get a
    deterministic family.
    """
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), bits_tuple(m)))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family of masks, in stable order."""
    ordered = sorted(set(masks), key=lambda m: (-m.bit_count(), bits_tuple(m)))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return sorted(kept, key=lambda m: (m.bit_count(), bits_tuple(m)))


def sort_key_lex(mask: int) -> tuple[int, ...]:
    """Lexicographic key on the ascending position sequence of a mask."""
    return bits_tuple(mask)


def sort_key_size_lex(mask: int) -> tuple:
    """Size-then-lexicographic key, used for closed-set listings."""
    return (mask.bit_count(), bits_tuple(mask))
