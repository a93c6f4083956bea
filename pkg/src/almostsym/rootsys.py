"""Restricted root systems in exact arithmetic.

Roots are enumerated from the usual orthogonal-coordinate formulas of each
family and then rewritten in the basis of simple roots (Bourbaki numbering).
The non-reduced family BC is handled the same way; nothing here relies on
closure under root strings.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")
EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANK = {"A": 1, "BC": 1, "B": 2, "C": 2, "D": 3}

#: Largest rank for which full root enumeration is allowed.
RANK_CEILING = 8

Vec = tuple[Fraction, ...]


class InvalidRankError(ValueError):
    pass


class NotARootError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RootSystemKind:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRankError(f"unknown root system family {self.family!r}")
        if self.family in EXCEPTIONAL_RANK:
            if self.rank != EXCEPTIONAL_RANK[self.family]:
                raise InvalidRankError(
                    f"family {self.family} has fixed rank "
                    f"{EXCEPTIONAL_RANK[self.family]}, got {self.rank}")
        elif not isinstance(self.rank, int) or self.rank < MIN_RANK[self.family]:
            raise InvalidRankError(
                f"family {self.family} needs rank >= {MIN_RANK[self.family]}, "
                f"got {self.rank}")

    @property
    def name(self) -> str:
        if self.family in EXCEPTIONAL_RANK:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def reduced(self) -> bool:
        return self.family != "BC"


def kind(family: str, rank: int | None = None) -> RootSystemKind:
    if rank is None:
        rank = EXCEPTIONAL_RANK[family]
    return RootSystemKind(family, rank)


@dataclass(frozen=True)
class Root:
    simple_coeffs: tuple[int, ...]
    ortho_coords: Vec

    @property
    def height(self) -> int:
        return sum(self.simple_coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-n for n in self.simple_coeffs),
                    tuple(-x for x in self.ortho_coords))


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _unit(dim: int, *entries: tuple[int, Fraction | int]) -> Vec:
    v = [Fraction(0)] * dim
    for i, c in entries:
        v[i] += Fraction(c)
    return tuple(v)


# --- orthogonal models -----------------------------------------------------

def _classical_roots(family: str, q: int) -> list[Vec]:
    """All roots (both signs) of a classical family in R^q (R^{q+1} for A)."""
    out: list[Vec] = []
    if family == "A":
        n = q + 1
        for i, j in combinations(range(n), 2):
            out.append(_unit(n, (i, 1), (j, -1)))
            out.append(_unit(n, (i, -1), (j, 1)))
        return out
    for i, j in combinations(range(q), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_unit(q, (i, si), (j, sj)))
    for i in range(q):
        for s in (1, -1):
            if family in ("B", "BC"):
                out.append(_unit(q, (i, s)))
            if family in ("C", "BC"):
                out.append(_unit(q, (i, 2 * s)))
    return out


def _e8_roots() -> list[Vec]:
    out: list[Vec] = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_unit(8, (i, si), (j, sj)))
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(s * half for s in signs))
    return out


def _f4_roots() -> list[Vec]:
    out: list[Vec] = []
    for i in range(4):
        for s in (1, -1):
            out.append(_unit(4, (i, s)))
    for i, j in combinations(range(4), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_unit(4, (i, si), (j, sj)))
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=4):
        out.append(tuple(s * half for s in signs))
    return out


def _g2_roots() -> list[Vec]:
    out: list[Vec] = []
    for i, j in combinations(range(3), 2):
        out.append(_unit(3, (i, 1), (j, -1)))
        out.append(_unit(3, (i, -1), (j, 1)))
    for i in range(3):
        others = [k for k in range(3) if k != i]
        long = _unit(3, (i, 2), (others[0], -1), (others[1], -1))
        out.append(long)
        out.append(tuple(-x for x in long))
    return out


def simple_roots_ortho(k: RootSystemKind) -> list[Vec]:
    """Bourbaki simple roots in the orthogonal model of the family."""
    f, q = k.family, k.rank
    half = Fraction(1, 2)
    if f == "A":
        return [_unit(q + 1, (i, 1), (i + 1, -1)) for i in range(q)]
    if f in ("B", "C", "D", "BC"):
        simple = [_unit(q, (i, 1), (i + 1, -1)) for i in range(q - 1)]
        if f in ("B", "BC"):
            simple.append(_unit(q, (q - 1, 1)))
        elif f == "C":
            simple.append(_unit(q, (q - 1, 2)))
        else:
            simple.append(_unit(q, (q - 2, 1), (q - 1, 1)))
        return simple
    if f in ("E6", "E7", "E8"):
        e8 = [tuple([half, -half, -half, -half, -half, -half, -half, half]),
              _unit(8, (0, 1), (1, 1))]
        e8 += [_unit(8, (i - 1, -1), (i, 1)) for i in range(1, 7)]
        return e8[:q]
    if f == "F4":
        return [_unit(4, (1, 1), (2, -1)), _unit(4, (2, 1), (3, -1)),
                _unit(4, (3, 1)), tuple([half, -half, -half, -half])]
    if f == "G2":
        return [_unit(3, (0, 1), (1, -1)), _unit(3, (0, -2), (1, 1), (2, 1))]
    raise InvalidRankError(f"unknown family {f}")


def _all_roots_ortho(k: RootSystemKind) -> list[Vec]:
    if k.family in ("A", "B", "C", "D", "BC"):
        return _classical_roots(k.family, k.rank)
    if k.family == "F4":
        return _f4_roots()
    if k.family == "G2":
        return _g2_roots()
    return _e8_roots()  # E6, E7 are cut out below by their simple coordinates


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals for a square system."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def pairings_matrix(k: RootSystemKind) -> tuple[tuple[Fraction, ...], ...]:
    simple = simple_roots_ortho(k)
    return tuple(tuple(dot(a, b) for b in simple) for a in simple)


def cartan_matrix(k: RootSystemKind) -> tuple[tuple[int, ...], ...]:
    """Integer Cartan matrix A[i][j] = 2<a_i,a_j>/<a_j,a_j>; no enumeration, any rank."""
    g = pairings_matrix(k)
    n = len(g)
    return tuple(tuple(int(2 * g[i][j] / g[j][j]) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    kind: RootSystemKind
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    cartan_pairings: tuple[tuple[Fraction, ...], ...]
    highest_root: Root

    @property
    def rank(self) -> int:
        return self.kind.rank

    def root(self, coeffs: Sequence[int]) -> Root:
        return _index(self)[tuple(coeffs)]

    def norm2(self, alpha: Root) -> Fraction:
        return dot(alpha.ortho_coords, alpha.ortho_coords)

    def to_ortho(self, coeffs: Sequence[int]) -> Vec:
        dim = len(self.simple_roots[0].ortho_coords)
        out = [Fraction(0)] * dim
        for n, a in zip(coeffs, self.simple_roots):
            for t in range(dim):
                out[t] += n * a.ortho_coords[t]
        return tuple(out)

    def to_simple(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        rhs = [dot(v, a.ortho_coords) for a in self.simple_roots]
        return tuple(_solve([list(r) for r in self.cartan_pairings], rhs))

    def dump_json(self) -> str:
        """Deterministic debug dump of the positive roots."""
        rows = [{"simple_coeffs": list(a.simple_coeffs),
                 "ortho_coords": [str(x) for x in a.ortho_coords]}
                for a in self.positive_roots]
        return json.dumps(rows, separators=(",", ":"))


def _index(rs: RootSystem) -> dict[tuple[int, ...], Root]:
    # keyed by kind: hashing a whole RootSystem means hashing every Fraction
    return _index_for(rs.kind)


@lru_cache(maxsize=None)
def _index_for(k: RootSystemKind) -> dict[tuple[int, ...], Root]:
    rs = build_root_system(k)
    idx = {a.simple_coeffs: a for a in rs.positive_roots}
    idx.update({(-a).simple_coeffs: -a for a in rs.positive_roots})
    return idx


@lru_cache(maxsize=None)
def build_root_system(k: RootSystemKind) -> RootSystem:
    if k.rank > RANK_CEILING:
        raise InvalidRankError(
            f"family {k.family} rank {k.rank} exceeds the rank ceiling {RANK_CEILING}")
    simple = simple_roots_ortho(k)
    gram = [[dot(a, b) for b in simple] for a in simple]
    n = k.rank
    # exact integer pipeline: doubled coordinates and a scaled inverse Gram matrix
    inv = list(zip(*(_solve(gram, [Fraction(int(i == j)) for i in range(n)])
                     for j in range(n))))
    scale = math.lcm(*((x / 4).denominator for row in inv for x in row))
    inv_int = [[int(x / 4 * scale) for x in row] for row in inv]
    simple2 = [tuple(int(2 * x) for x in a) for a in simple]
    embedded = k.family in ("E6", "E7")
    positive: list[Root] = []
    for v in _all_roots_ortho(k):
        v2 = [int(2 * x) for x in v]
        pair = [sum(x * y for x, y in zip(v2, a)) for a in simple2]
        raw = [sum(x * y for x, y in zip(row, pair)) for row in inv_int]
        if any(r % scale for r in raw):
            continue
        ints = tuple(r // scale for r in raw)
        if not (all(c >= 0 for c in ints) or all(c <= 0 for c in ints)):
            continue
        # E6/E7 live inside the E8 model: keep vectors lying in the span
        if embedded and tuple(sum(c * a[t] for c, a in zip(ints, simple2))
                              for t in range(len(v))) != tuple(v2):
            continue
        if all(c >= 0 for c in ints) and any(ints):
            positive.append(Root(ints, v))
    positive.sort(key=lambda a: a.simple_coeffs)
    simple_roots = tuple(
        Root(tuple(1 if j == i else 0 for j in range(k.rank)), simple[i])
        for i in range(k.rank))
    top = max(positive, key=lambda a: (a.height, a.simple_coeffs))
    return RootSystem(k, simple_roots, tuple(positive),
                      tuple(tuple(r) for r in gram), top)


def coefficients(rs: RootSystem, alpha: Root | Sequence[int]) -> tuple[int, ...]:
    coeffs = alpha.simple_coeffs if isinstance(alpha, Root) else tuple(alpha)
    if not is_root(rs, coeffs):
        raise NotARootError(f"{coeffs} is not a root of {rs.kind.name}")
    return coeffs


def highest_root(rs: RootSystem) -> Root:
    return rs.highest_root


def weight_decomposition(rs: RootSystem, alpha: Root) -> tuple[Fraction, ...]:
    """Coordinates of alpha in the basis of fundamental weights."""
    return tuple(2 * dot(alpha.ortho_coords, a.ortho_coords) / rs.norm2(a)
                 for a in rs.simple_roots)


def is_root(rs: RootSystem, v: Sequence[int]) -> bool:
    if len(v) != rs.rank:
        raise ValueError(f"expected {rs.rank} coefficients, got {len(v)}")
    return tuple(v) in _index(rs)


def positive_count(k: RootSystemKind) -> int:
    """Closed-form number of positive roots."""
    q = k.rank
    return {
        "A": q * (q + 1) // 2, "B": q * q, "C": q * q, "D": q * (q - 1),
        "BC": q * q + q, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120,
    }[k.family]


def diagram_automorphisms(rs: RootSystem) -> list[tuple[int, ...]]:
    """Permutations of simple roots preserving the Cartan matrix (0-based images)."""
    a = cartan_matrix(rs.kind)
    n = rs.rank
    if n > 8:
        raise InvalidRankError("diagram automorphism search limited to rank 8")
    found = []
    for perm in _candidate_perms(a):
        if all(a[perm[i]][perm[j]] == a[i][j] for i in range(n) for j in range(n)):
            found.append(perm)
    return sorted(found)


def _candidate_perms(a):
    # degree-preserving permutations only; keeps E8 and friends cheap
    from itertools import permutations, product as iproduct

    n = len(a)
    sig = [tuple(sorted(a[i][j] for j in range(n) if j != i)) + (a[i][i],) for i in range(n)]
    groups: dict[tuple, list[int]] = {}
    for i, s in enumerate(sig):
        groups.setdefault(s, []).append(i)
    classes = list(groups.values())
    for choice in iproduct(*(permutations(c) for c in classes)):
        perm = [0] * n
        for cls, img in zip(classes, choice):
            for src, dst in zip(cls, img):
                perm[src] = dst
        yield tuple(perm)
