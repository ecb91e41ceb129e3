"""Shared fixtures: the worked example systems used throughout the suite."""

from pathlib import Path

import pytest

from geodual import ElementSet, GroundSet, Implication, ImplicationalBase, implication
from geodual.implications import implication_graph

DATA = Path(__file__).parent / "data"


def make_base(labels, rules):
    """Build a base from ('a b', 'c') premise/conclusion label pairs."""
    ground = GroundSet(labels.split())
    imps = [implication(ground, premise.split(), concl) for premise, concl in rules]
    return ImplicationalBase(ground, imps)


def equivalent_perturbation(rng, base):
    """Reorder `base` and pad it with entailed superset-premise implications."""
    arcs = set(implication_graph(base).arcs)
    order = {}
    remaining = set(range(base.ground.size))
    rank = 0
    while remaining:
        sinks = {
            v
            for v in remaining
            if not any(u == v and w in remaining for (u, w) in arcs)
        }
        for v in sinks:
            order[v] = rank
        remaining -= sinks
        rank += 1
    imps = list(base.implications)
    for imp in list(imps):
        # arcs run from higher to lower order, so padding a premise with a
        # strictly higher element can never close a cycle
        candidates = [
            x
            for x in range(base.ground.size)
            if order[x] > order[imp.conclusion]
            and x not in imp.premise
            and x != imp.conclusion
        ]
        if candidates and rng.random() < 0.7:
            extra = rng.choice(candidates)
            imps.append(Implication(imp.premise.with_element(extra), imp.conclusion))
    rng.shuffle(imps)
    return ImplicationalBase(base.ground, dict.fromkeys(imps))


def sets_of(base_or_ground, *label_groups):
    ground = getattr(base_or_ground, "ground", base_or_ground)
    return [ElementSet.from_labels(ground, labels.split()) for labels in label_groups]


def family(items):
    """Set family as comparable frozenset of index tuples."""
    return frozenset(s.indices() for s in items)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def crossed():
    """Unrankable five-element system; its critical base is itself."""
    return make_base(
        "1 2 3 4 5",
        [("4", "1"), ("5", "2"), ("3", "1"), ("3", "2"), ("4 5", "3")],
    )


@pytest.fixture
def layered():
    """Ranked three-level system with top element j."""
    return make_base("1 2 3 4 5 j", [("1 2", "4"), ("3", "5"), ("4 5", "j")])


@pytest.fixture
def uneven():
    """Acyclic but unrankable system that still partitions cleanly."""
    return make_base("1 2 3 4 5", [("1", "2"), ("1", "3"), ("2", "4"), ("3 4", "5")])


@pytest.fixture
def chain():
    return make_base("1 2", [("1", "2")])
