"""s-orbits through a normalized basepoint and their root-space splitting.

A basepoint a0 with alpha_i(a0) in {0, sqrt(-1)} is encoded by its support.
The orbit geometry only depends on the support, so no other basepoints are
modelled.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .rootsys import Root
from .symspace import SymmetricSpace


class InvalidMarkingError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Marking:
    """Support of a0 on the simple restricted roots, 1-based and sorted."""

    rank: int
    support: tuple[int, ...]

    def __post_init__(self):
        sup = tuple(sorted(set(self.support)))
        if not sup:
            raise InvalidMarkingError("marking support must be non-empty")
        bad = [i for i in sup if not 1 <= i <= self.rank]
        if bad:
            raise InvalidMarkingError(f"support nodes {bad} outside 1..{self.rank}")
        object.__setattr__(self, "support", sup)

    @classmethod
    def of(cls, space: SymmetricSpace, *nodes: int) -> "Marking":
        return cls(space.rank, tuple(nodes))

    @property
    def indicator(self) -> tuple[int, ...]:
        return tuple(int(i in self.support) for i in range(1, self.rank + 1))

    def level(self, alpha: Root) -> int:
        """sum of n_i(alpha) over the support"""
        return sum(alpha.simple_coeffs[i - 1] for i in self.support)


def all_markings(rank: int) -> Iterator[Marking]:
    """Every non-empty support, by size then lexicographically."""
    nodes = range(1, rank + 1)
    for size in range(1, rank + 1):
        for sup in combinations(nodes, size):
            yield Marking(rank, sup)


def parse_support(text: str) -> tuple[int, ...]:
    """'1,2' or '{1,2}' -> (1, 2)"""
    body = text.strip().strip("{}[]()")
    if not body:
        raise InvalidMarkingError("marking support must be non-empty")
    return tuple(int(t) for t in body.replace(" ", "").split(","))


MOST_SINGULAR = "most_singular"
TWO_NODE = "two_node"
INTERMEDIATE = "intermediate"
PRINCIPAL = "principal"


@dataclass(frozen=True)
class OrbitGeometry:
    tangent_roots: tuple[Root, ...]
    normal_roots: tuple[Root, ...]
    tangent_dim: int
    normal_dim_in_ambient: int
    kind: str

    @property
    def codim(self) -> int:
        return self.normal_dim_in_ambient


def _kind(marking: Marking) -> str:
    n = len(marking.support)
    if n == marking.rank:
        return PRINCIPAL
    if n == 1:
        return MOST_SINGULAR
    if n == 2:
        return TWO_NODE
    return INTERMEDIATE


def _check(space: SymmetricSpace, marking: Marking) -> None:
    if marking.rank != space.rank:
        raise InvalidMarkingError(
            f"marking has rank {marking.rank}, {space.label} has rank {space.rank}")


@lru_cache(maxsize=None)
def orbit_geometry(space: SymmetricSpace, marking: Marking) -> OrbitGeometry:
    _check(space, marking)
    tangent, normal = [], []
    tdim = ndim = 0
    for alpha, m in space.weighted_roots:
        if marking.level(alpha) > 0:
            tangent.append(alpha)
            tdim += m
        else:
            normal.append(alpha)
            ndim += m
    return OrbitGeometry(tuple(tangent), tuple(normal), tdim, space.rank + ndim,
                         _kind(marking))


def is_extrinsically_symmetric(space: SymmetricSpace, marking: Marking) -> bool:
    _check(space, marking)
    if len(marking.support) != 1:
        return False
    (i,) = marking.support
    return space.root_system.highest_root.simple_coeffs[i - 1] == 1


def symmetric_nodes(space: SymmetricSpace) -> list[int]:
    delta = space.root_system.highest_root.simple_coeffs
    return [i + 1 for i, n in enumerate(delta) if n == 1]


def monotonicity_check(space: SymmetricSpace, m1: Marking, m2: Marking) -> bool:
    if not set(m1.support) <= set(m2.support):
        raise InvalidMarkingError(f"{m1.support} is not contained in {m2.support}")
    t2 = set(orbit_geometry(space, m2).tangent_roots)
    return all(a in t2 for a in orbit_geometry(space, m1).tangent_roots)
