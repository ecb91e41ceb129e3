"""Independent brute-force references and random instance generators.

Everything here exists to cross-check the streaming algorithms at desk
scale and is never on a hot path.  Exhaustive scans are guarded by hard
size limits; set ``GEODUAL_GUARD_OVERRIDE=1`` or pass ``guard=False`` to
lift them.
"""

from __future__ import annotations

import os
import random
from typing import Iterable, Sequence

import numpy as np

from .errors import PreconditionError, SizeGuardError
from .hypergraphs import Hypergraph
from .implications import (
    Implication,
    ImplicationalBase,
    closure_mask,
    is_standard,
)
from .ranking import RankConflict, compute_rank
from .sets import (
    ElementSet,
    GroundSet,
    iter_bits,
    maximal_masks,
    sort_key_size_lex,
)

GUARD_ENV = "GEODUAL_GUARD_OVERRIDE"

CLOSED_SET_GUARD = 20
TRANSVERSAL_GUARD = 16


def _guard(value: int, limit: int, what: str, guard: bool) -> None:
    if not guard or os.environ.get(GUARD_ENV) == "1":
        return
    if value > limit:
        raise SizeGuardError(
            f"{what} of size {value} exceeds the brute-force guard of {limit}; "
            f"pass guard=False or set {GUARD_ENV}=1 to override"
        )


# -- exhaustive references --------------------------------------------------


def closed_set_masks(base: ImplicationalBase, guard: bool = True) -> list[int]:
    """Masks of all closed sets, sorted by size then position sequence."""
    n = base.ground.size
    _guard(n, CLOSED_SET_GUARD, "ground set", guard)
    masks = np.arange(1 << n, dtype=np.uint32)
    keep = np.ones(masks.shape, dtype=bool)
    for pmask, concl, _ in base._rules:
        keep &= ((masks & pmask) != pmask) | ((masks >> concl) & 1).astype(bool)
    return sorted((int(m) for m in masks[keep]), key=sort_key_size_lex)


def all_closed_sets(base: ImplicationalBase, guard: bool = True) -> tuple[ElementSet, ...]:
    """Every closed set of `base`, by exhaustive filtering of all subsets."""
    u = base.ground
    return tuple(ElementSet(u, m) for m in closed_set_masks(base, guard=guard))


def family_meet_masks(family: Sequence[int], full: int) -> list[int]:
    """Members of an intersection-closed family with a unique cover.

    A member below the top is meet-irreducible exactly when the
    intersection of its proper supersets in the family differs from it.
    """
    arr = np.array(sorted(set(family)), dtype=np.uint64)
    out = []
    for m in arr:
        if int(m) == full:
            continue
        above = arr[(arr & m) == m]
        above = above[above != m]
        if above.size and int(np.bitwise_and.reduce(above)) != int(m):
            out.append(int(m))
    return sorted(out, key=sort_key_size_lex)


def meets_brute(base: ImplicationalBase, guard: bool = True) -> tuple[ElementSet, ...]:
    """The meet-irreducible closed sets, by cover analysis of the lattice."""
    masks = closed_set_masks(base, guard=guard)
    full = (1 << base.ground.size) - 1
    u = base.ground
    return tuple(ElementSet(u, m) for m in family_meet_masks(masks, full))


def joins_brute(base: ImplicationalBase, guard: bool = True) -> tuple[ElementSet, ...]:
    """The join-irreducible closed sets, cross-checked two ways.

    Computed as the closures of singletons; compared against the closed
    sets with a unique maximal proper closed subset.  A mismatch means
    the base is not standard and is reported as an error.
    """
    masks = closed_set_masks(base, guard=guard)
    u = base.ground
    closures = [closure_mask(base, 1 << j) for j in range(u.size)]
    singleton_closures = sorted(set(closures), key=sort_key_size_lex)
    unique_pred = []
    for m in masks:
        if m == 0:
            continue
        below = [c for c in masks if c & m == c and c != m]
        maximal_below = [
            c for c in below if not any(c & d == c and c != d for d in below)
        ]
        if len(maximal_below) == 1:
            unique_pred.append(m)
    # standard exactly when the element-to-closure map is a bijection onto
    # the unique-predecessor elements
    if len(singleton_closures) != len(closures) or singleton_closures != unique_pred:
        raise PreconditionError(
            "standardness violation: singleton closures do not match the "
            "unique-predecessor elements of the closure lattice one for one"
        )
    return tuple(ElementSet(u, m) for m in singleton_closures)


def mingens_brute(
    base: ImplicationalBase, target: int, guard: bool = True
) -> tuple[ElementSet, ...]:
    """All minimal generators of `target`, by exhaustive subset filtering."""
    from itertools import combinations

    n = base.ground.size
    _guard(n, CLOSED_SET_GUARD, "ground set", guard)
    tbit = 1 << target
    others = [p for p in range(n) if p != target]
    found: list[int] = []
    for size in range(1, n + 1):
        for combo in combinations(others, size):
            amask = 0
            for pos in combo:
                amask |= 1 << pos
            if any(g & amask == g for g in found):
                continue
            if closure_mask(base, amask) & tbit:
                found.append(amask)
    u = base.ground
    return tuple(ElementSet(u, m) for m in sorted(found, key=sort_key_size_lex))


def transversals_brute(h: Hypergraph, guard: bool = True) -> tuple[ElementSet, ...]:
    """All minimal transversals, by exhaustive subset filtering."""
    from itertools import combinations

    nverts = len(h.vertices)
    _guard(nverts, TRANSVERSAL_GUARD, "vertex set", guard)
    edges = [e.mask for e in h.edges]
    positions = h.vertices.indices()
    found: list[int] = []
    for size in range(0, nverts + 1):
        for combo in combinations(positions, size):
            tmask = 0
            for pos in combo:
                tmask |= 1 << pos
            if any(t & tmask == t for t in found):
                continue
            if all(tmask & e for e in edges):
                found.append(tmask)
    u = h.universe
    return tuple(ElementSet(u, m) for m in sorted(found, key=sort_key_size_lex))


def maximal_closed_avoiding(
    base: ImplicationalBase, avoid: ElementSet, guard: bool = True
) -> tuple[ElementSet, ...]:
    """Maximal closed sets disjoint from `avoid`, from the full lattice."""
    masks = closed_set_masks(base, guard=guard)
    u = base.ground
    disjoint = [m for m in masks if m & avoid.mask == 0]
    return tuple(
        ElementSet(u, m)
        for m in sorted(maximal_masks(disjoint), key=sort_key_size_lex)
    )


def intersection_closure(ground: GroundSet, sets: Iterable[ElementSet]) -> list[int]:
    """Masks of the closure under intersection of `sets`, plus the top."""
    full = (1 << ground.size) - 1
    family = {full}
    family.update(s.mask for s in sets)
    frontier = list(family)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(family):
                c = a & b
                if c not in family:
                    family.add(c)
                    fresh.append(c)
        frontier = fresh
    return sorted(family, key=sort_key_size_lex)


def rank_exists_brute(base: ImplicationalBase) -> bool:
    """Exhaustive search for any rank function with values in 0..n.

    Backtracks over the elements occurring in implications, component by
    component in constraint order, trying every value and pruning on the
    first violated constraint.  Values 0..n suffice: any rank function
    can be shifted, per component, into that window.
    """
    n = base.ground.size
    constraints: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    involved: set[int] = set()
    for pmask, concl, _ in base._rules:
        for a in iter_bits(pmask):
            constraints[a].append((concl, -1))
            constraints[concl].append((a, +1))
            involved.add(a)
            involved.add(concl)
    if not involved:
        return True

    # visit order: breadth-first over the constraint graph, so each new
    # element is usually pinned by an already-assigned neighbor
    order: list[int] = []
    seen: set[int] = set()
    for seed in sorted(involved):
        if seed in seen:
            continue
        queue = [seed]
        seen.add(seed)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y, _ in constraints[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)

    assignment: dict[int, int] = {}

    def admissible(x: int, value: int) -> bool:
        for y, delta in constraints[x]:
            ry = assignment.get(y)
            if ry is not None and ry != value + delta:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for value in range(n + 1):
            if admissible(x, value):
                assignment[x] = value
                if search(i + 1):
                    return True
                del assignment[x]
        return False

    return search(0)


# -- random instance generators ---------------------------------------------


def _labels(n: int) -> GroundSet:
    return GroundSet(str(i + 1) for i in range(n))


def _random_level_split(rng: random.Random, n: int, parts: int) -> list[list[int]]:
    positions = list(range(n))
    rng.shuffle(positions)
    cuts = sorted(rng.sample(range(1, n), parts - 1)) if parts > 1 else []
    levels = []
    prev = 0
    for cut in cuts + [n]:
        levels.append(positions[prev:cut])
        prev = cut
    return levels


def random_ranked_base(
    rng: random.Random,
    max_elements: int = 12,
    max_implications: int = 30,
    min_elements: int = 2,
) -> ImplicationalBase:
    """A random base that admits a rank function by construction.

    Elements are split into nonempty rank levels; every implication takes
    its premise inside one level and concludes one level below.
    Standardness is enforced by rejection, although ranked bases built
    this way always pass.
    """
    while True:
        n = rng.randint(min_elements, max_elements)
        ground = _labels(n)
        parts = rng.randint(2, min(n, 5))
        levels = _random_level_split(rng, n, parts)
        lo = 0 if n <= 7 else n - 6
        count = rng.randint(min(lo, max_implications), max_implications)
        chosen: set[tuple[int, int]] = set()
        for _ in range(count):
            i = rng.randrange(len(levels) - 1)
            upper, lower = levels[i + 1], levels[i]
            psize = rng.randint(1, min(3, len(upper)))
            premise = 0
            for pos in rng.sample(upper, psize):
                premise |= 1 << pos
            chosen.add((premise, rng.choice(lower)))
        base = ImplicationalBase(
            ground,
            [Implication(ElementSet(ground, p), c) for p, c in sorted(chosen)],
        )
        if is_standard(base):
            return base


def random_acyclic_base(
    rng: random.Random,
    max_elements: int = 10,
    max_implications: int = 20,
    min_elements: int = 2,
) -> ImplicationalBase:
    """A random acyclic base: premises sit above their conclusion in a
    random topological order.  Standardness is enforced by rejection."""
    while True:
        n = rng.randint(min_elements, max_elements)
        ground = _labels(n)
        topo = list(range(n))
        rng.shuffle(topo)  # topo[i] is the i-th element bottom-up
        count = rng.randint(0, max_implications)
        chosen: set[tuple[int, int]] = set()
        for _ in range(count):
            ci = rng.randrange(n - 1)
            concl = topo[ci]
            pool = topo[ci + 1 :]
            psize = rng.randint(1, min(3, len(pool)))
            premise = 0
            for pos in rng.sample(pool, psize):
                premise |= 1 << pos
            chosen.add((premise, concl))
        base = ImplicationalBase(
            ground,
            [Implication(ElementSet(ground, p), c) for p, c in sorted(chosen)],
        )
        if is_standard(base):
            return base


def random_distributive_base(
    rng: random.Random, max_elements: int = 8, min_elements: int = 2
) -> ImplicationalBase:
    """A random acyclic base with singleton premises."""
    n = rng.randint(min_elements, max_elements)
    ground = _labels(n)
    topo = list(range(n))
    rng.shuffle(topo)
    chosen: set[tuple[int, int]] = set()
    for _ in range(rng.randint(0, 2 * n)):
        ci = rng.randrange(n - 1)
        concl = topo[ci]
        src = rng.choice(topo[ci + 1 :])
        chosen.add((1 << src, concl))
    return ImplicationalBase(
        ground, [Implication(ElementSet(ground, p), c) for p, c in sorted(chosen)]
    )


def random_hypergraph(
    rng: random.Random, max_vertices: int = 10, max_edges: int = 12
) -> Hypergraph:
    """A random hypergraph; empty edges appear with small probability."""
    n = rng.randint(1, max_vertices)
    ground = _labels(n)
    vertices = ElementSet.full(ground)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        if rng.random() < 0.03:
            edges.append(ElementSet.empty(ground))
            continue
        size = rng.randint(1, min(4, n))
        mask = 0
        for pos in rng.sample(range(n), size):
            mask |= 1 << pos
        edges.append(ElementSet(ground, mask))
    return Hypergraph(vertices, edges)


def random_antichain_families(
    base: ImplicationalBase, rng: random.Random, dual: bool = True
) -> tuple[list[ElementSet], list[ElementSet]]:
    """A pair (plus, minus) of antichains of closed sets of `base`.

    With ``dual=True`` the pair satisfies the lattice duality; otherwise
    one maximal set is removed from the positive side, which always
    breaks it.
    """
    u = base.ground
    n = u.size
    minus_masks: set[int] = set()
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(1, n)
        smask = 0
        for pos in rng.sample(range(n), size):
            smask |= 1 << pos
        minus_masks.add(closure_mask(base, smask))
    minus = maximal_masks(m for m in minus_masks if m != 0)
    closed = closed_set_masks(base)
    plus = maximal_masks(
        f for f in closed if not any(a & f == a for a in minus)
    )
    if not dual:
        drop = rng.randrange(len(plus))
        plus = plus[:drop] + plus[drop + 1 :]
    return (
        [ElementSet(u, m) for m in plus],
        [ElementSet(u, m) for m in minus],
    )


def perturb_until_unranked(
    rng: random.Random, base: ImplicationalBase, max_tries: int = 200
) -> ImplicationalBase:
    """Add random implications to `base` until no rank function exists."""
    n = base.ground.size
    current = base
    for _ in range(max_tries):
        if isinstance(compute_rank(current), RankConflict):
            return current
        concl = rng.randrange(n)
        pool = [p for p in range(n) if p != concl]
        psize = rng.randint(1, min(3, len(pool)))
        pmask = 0
        for pos in rng.sample(pool, psize):
            pmask |= 1 << pos
        if any(r[:2] == (pmask, concl) for r in current._rules):
            continue
        current = ImplicationalBase(
            current.ground,
            list(current.implications)
            + [Implication(ElementSet(current.ground, pmask), concl)],
        )
    raise PreconditionError("failed to perturb the base into an unranked one")
