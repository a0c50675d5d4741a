from __future__ import annotations

from itertools import combinations
from typing import List, Set

import pytest

from wmod.semigroup import NumericalSemigroup


@pytest.fixture
def s4710() -> NumericalSemigroup:
    return NumericalSemigroup.from_generators([4, 7, 10])


@pytest.fixture
def s23() -> NumericalSemigroup:
    return NumericalSemigroup.from_generators([2, 3])


@pytest.fixture
def s345() -> NumericalSemigroup:
    return NumericalSemigroup.from_generators([3, 4, 5])


@pytest.fixture
def codim4() -> NumericalSemigroup:
    return NumericalSemigroup.from_generators([16, 17, 18, 20, 24])


def brute_members(generators, upto: int) -> Set[int]:
    """Members up to ``upto`` by closing {0} under the generators."""
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for a in generators:
            y = x + a
            if y <= upto and y not in members:
                members.add(y)
                frontier.append(y)
    return members


def brute_gap_sets(genus: int) -> List[frozenset]:
    """Gap sets of all semigroups of the given genus, found by testing subsets of [1, 2g - 1]."""
    if genus == 0:
        return [frozenset()]
    out = []
    universe = range(1, 2 * genus)
    for gaps in combinations(universe, genus):
        gap_set = set(gaps)
        if 1 not in gap_set:
            continue
        top = max(gaps)
        nongaps = [x for x in range(1, top + 1) if x not in gap_set]
        if all(x + y not in gap_set for x in nongaps for y in nongaps):
            out.append(frozenset(gap_set))
    return out
