"""Catalog of irreducible compact symmetric spaces of rank >= 2.

Each entry carries its restricted root system, the multiplicity of every
root-length class, its Satake diagram and the dimension ``dim G - dim K``.
The dimension is computed from the groups, independently of the
multiplicities, so ``rank + sum of multiplicities`` can be checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .rootsys import (
    EXCEPTIONAL_RANK,
    Root,
    RootSystem,
    RootSystemKind,
    build_root_system,
    cartan_matrix,
    kind,
)


class CatalogIntegrityError(ValueError):
    pass


# --- multiplicities ----------------------------------------------------------

def root_class(rs: RootSystem, alpha: Root) -> str:
    """Length class of a root: 'long'/'short', or 'long'/'mid'/'short' for BC."""
    key = tuple(abs(n) for n in alpha.simple_coeffs)
    try:
        return _class_map(rs.kind)[key]
    except KeyError:
        raise ValueError(f"{alpha.simple_coeffs} is not a root of {rs.kind.name}") from None


@lru_cache(maxsize=None)
def _class_map(rk: RootSystemKind) -> dict[tuple[int, ...], str]:
    rs = build_root_system(rk)
    if rk.family == "BC":
        names = {Fraction(4): "long", Fraction(2): "mid", Fraction(1): "short"}
    else:
        longest = max(rs.norm2(a) for a in rs.simple_roots)
        names = {n: "long" if n == longest else "short"
                 for n in {rs.norm2(a) for a in rs.positive_roots}}
    return {a.simple_coeffs: names[rs.norm2(a)] for a in rs.positive_roots}


def root_classes(rk: RootSystemKind) -> tuple[str, ...]:
    if rk.family == "BC":
        return ("long", "mid", "short")
    if rk.family in ("A", "D", "E6", "E7", "E8"):
        return ("long",)
    return ("long", "short")


# --- Satake diagrams ---------------------------------------------------------

@dataclass(frozen=True)
class SatakeDiagram:
    """Ambient Dynkin diagram (1-based nodes) with black nodes and arrows."""

    components: tuple[RootSystemKind, ...]
    black: frozenset[int] = frozenset()
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen: set[int] = set()
        for a, b in self.arrows:
            if a == b or a in self.black or b in self.black:
                raise CatalogIntegrityError(f"arrow {(a, b)} must join distinct white nodes")
            if a in seen or b in seen:
                raise CatalogIntegrityError(f"node in more than one arrow: {(a, b)}")
            seen.update((a, b))

    @property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return _block_cartan(self.components)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.cartan) + 1))

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(i for i in self.nodes if i not in self.black)

    def partner(self, i: int) -> int | None:
        for a, b in self.arrows:
            if i == a:
                return b
            if i == b:
                return a
        return None

    def white_classes(self) -> int:
        return len(self.white) - len(self.arrows)


@lru_cache(maxsize=None)
def _block_cartan(components: tuple[RootSystemKind, ...]) -> tuple[tuple[int, ...], ...]:
    blocks = [cartan_matrix(c) for c in components]
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


# --- entries -----------------------------------------------------------------

@dataclass(frozen=True)
class Flags:
    maximal_rank: bool
    group_case: bool
    splitting_rank: bool
    hermitian: bool


@dataclass(frozen=True)
class SymmetricSpace:
    label: str
    family: str
    parameters: tuple[tuple[str, int], ...]
    g_name: str
    k_name: str
    restricted: RootSystemKind
    mults: tuple[tuple[str, int], ...]
    satake: SatakeDiagram
    known_dim: int
    flags: Flags
    note: str = field(default="", compare=False)

    def __hash__(self):
        return hash((self.label, self.restricted, self.mults))

    @property
    def rank(self) -> int:
        return self.restricted.rank

    @property
    def mult_map(self) -> dict[str, int]:
        return dict(self.mults)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.restricted)

    @property
    def weighted_roots(self) -> tuple[tuple[Root, int], ...]:
        """Positive roots paired with their multiplicities."""
        return _weighted(self.restricted, self.mults)

    def multiplicity(self, alpha: Root) -> int:
        return _mult_lookup(self.restricted, self.mults)[
            tuple(abs(n) for n in alpha.simple_coeffs)]

    def sort_key(self):
        return (self.family, tuple(v for _, v in self.parameters))


@lru_cache(maxsize=None)
def _mult_lookup(rk: RootSystemKind, mults: tuple[tuple[str, int], ...]) -> dict:
    m = dict(mults)
    return {k: m[c] for k, c in _class_map(rk).items()}


@lru_cache(maxsize=None)
def _weighted(rk: RootSystemKind, mults: tuple[tuple[str, int], ...]):
    m = _mult_lookup(rk, mults)
    return tuple((a, m[a.simple_coeffs]) for a in build_root_system(rk).positive_roots)


def flags_from_mults(mults: dict[str, int], hermitian: bool) -> Flags:
    ms = set(mults.values())
    return Flags(maximal_rank=ms == {1}, group_case=ms == {2},
                 splitting_rank=all(m % 2 == 0 for m in ms), hermitian=hermitian)


def dimension(space: SymmetricSpace) -> int:
    """rank + sum of multiplicities over positive roots; checked against known_dim."""
    rs = space.root_system
    d = rs.rank + sum(space.multiplicity(a) for a in rs.positive_roots)
    if d != space.known_dim:
        raise CatalogIntegrityError(
            f"{space.label}: rank + sum of multiplicities = {d}, "
            f"but dim G - dim K = {space.known_dim}")
    return d


# group dimensions
def _su(n): return n * n - 1
def _so(n): return n * (n - 1) // 2
def _sp(n): return n * (2 * n + 1)
def _u(n): return n * n


_EXC_DIM = {"g2": 14, "f4": 52, "e6": 78, "e7": 133, "e8": 248}
_SIMPLE_DIM = {"A": lambda r: _su(r + 1), "B": lambda r: _so(2 * r + 1),
               "C": lambda r: _sp(r), "D": lambda r: _so(2 * r),
               "E6": lambda r: 78, "E7": lambda r: 133, "E8": lambda r: 248,
               "F4": lambda r: 52, "G2": lambda r: 14}
_SIMPLE_NAME = {"A": lambda r: f"su({r + 1})", "B": lambda r: f"so({2 * r + 1})",
                "C": lambda r: f"sp({r})", "D": lambda r: f"so({2 * r})",
                "E6": lambda r: "e_6", "E7": lambda r: "e_7", "E8": lambda r: "e_8",
                "F4": lambda r: "f_4", "G2": lambda r: "g_2"}


def _entry(label, family, params, g, k, restricted, mults, satake, dim,
           hermitian=False, note="") -> SymmetricSpace:
    return SymmetricSpace(
        label=label, family=family, parameters=tuple(params), g_name=g, k_name=k,
        restricted=restricted, mults=tuple(sorted(mults.items())), satake=satake,
        known_dim=dim, flags=flags_from_mults(mults, hermitian), note=note)


def _AI(q):
    return _entry(f"AI({q})", "AI", [("q", q)], f"su({q + 1})", f"so({q + 1})",
                  kind("A", q), {"long": 1}, SatakeDiagram((kind("A", q),)),
                  _su(q + 1) - _so(q + 1))


def _AII(q):
    amb = kind("A", 2 * q + 1)
    return _entry(f"AII({q})", "AII", [("q", q)], f"su({2 * q + 2})", f"sp({q + 1})",
                  kind("A", q), {"long": 4},
                  SatakeDiagram((amb,), frozenset(range(1, 2 * q + 2, 2))),
                  _su(2 * q + 2) - _sp(q + 1))


def _AIII(p, q):
    n = p + q
    amb = kind("A", n - 1)
    arrows = tuple((i, n - i) for i in range(1, q + 1) if i < n - i)
    sat = SatakeDiagram((amb,), frozenset(range(q + 1, p)), arrows)
    if p == q:
        rk, mults = kind("C", q), {"short": 2, "long": 1}
    else:
        rk, mults = kind("BC", q), {"mid": 2, "short": 2 * (p - q), "long": 1}
    return _entry(f"AIII({p},{q})", "AIII", [("p", p), ("q", q)], f"su({n})",
                  f"s(u({p})+u({q}))", rk, mults, sat, _su(n) - (p * p + q * q - 1),
                  hermitian=True)


def _BDI(p, q):
    n = p + q
    if n % 2:
        r = (n - 1) // 2
        amb = kind("B", r)
        sat = SatakeDiagram((amb,), frozenset(range(q + 1, r + 1)))
    else:
        r = n // 2
        amb = kind("D", r)
        if p == q + 2:
            sat = SatakeDiagram((amb,), frozenset(), ((q, q + 1),))
        else:
            sat = SatakeDiagram((amb,), frozenset(range(q + 1, r + 1)))
    if p == q:
        rk, mults = kind("D", q), {"long": 1}
    elif p == q + 1:
        rk, mults = kind("B", q), {"long": 1, "short": 1}
    else:
        rk, mults = kind("B", q), {"long": 1, "short": p - q}
    return _entry(f"BDI({p},{q})", "BDI", [("p", p), ("q", q)], f"so({n})",
                  f"so({p})+so({q})", rk, mults, sat, _so(n) - _so(p) - _so(q),
                  hermitian=(q == 2))


def _DIII(n):
    q = n // 2
    amb = kind("D", n)
    black = frozenset(range(1, 2 * q, 2))
    if n % 2 == 0:
        rk, mults, arrows = kind("C", q), {"short": 4, "long": 1}, ()
    else:
        rk, mults = kind("BC", q), {"mid": 4, "short": 4, "long": 1}
        arrows = ((n - 1, n),)
    return _entry(f"DIII({n})", "DIII", [("n", n)], f"so({2 * n})", f"u({n})", rk,
                  mults, SatakeDiagram((amb,), black, arrows), _so(2 * n) - _u(n),
                  hermitian=True)


def _CI(q):
    return _entry(f"CI({q})", "CI", [("q", q)], f"sp({q})", f"u({q})", kind("C", q),
                  {"short": 1, "long": 1}, SatakeDiagram((kind("C", q),)),
                  _sp(q) - _u(q), hermitian=True)


def _CII(p, q):
    n = p + q
    amb = kind("C", n)
    black = frozenset(range(1, 2 * q, 2)) | frozenset(range(2 * q + 1, n + 1))
    if p == q:
        rk, mults = kind("C", q), {"short": 4, "long": 3}
    else:
        rk, mults = kind("BC", q), {"mid": 4, "short": 4 * (p - q), "long": 3}
    return _entry(f"CII({p},{q})", "CII", [("p", p), ("q", q)], f"sp({n})",
                  f"sp({p})+sp({q})", rk, mults, SatakeDiagram((amb,), black),
                  _sp(n) - _sp(p) - _sp(q))


def _exceptional() -> list[SymmetricSpace]:
    E6, E7, E8, F4, G2 = (kind(f) for f in ("E6", "E7", "E8", "F4", "G2"))
    sat = SatakeDiagram
    return [
        _entry("EI", "EI", [], "e_6", "sp(4)", E6, {"long": 1}, sat((E6,)), 78 - _sp(4)),
        _entry("EII", "EII", [], "e_6", "su(6)+su(2)", F4, {"long": 1, "short": 2},
               sat((E6,), frozenset(), ((1, 6), (3, 5))), 78 - _su(6) - _su(2)),
        _entry("EIII", "EIII", [], "e_6", "so(10)+u(1)", kind("BC", 2),
               {"mid": 6, "short": 8, "long": 1},
               sat((E6,), frozenset({3, 4, 5}), ((1, 6),)), 78 - _so(10) - 1,
               hermitian=True),
        _entry("EIV", "EIV", [], "e_6", "f_4", kind("A", 2), {"long": 8},
               sat((E6,), frozenset({2, 3, 4, 5})), 78 - 52),
        _entry("EV", "EV", [], "e_7", "su(8)", E7, {"long": 1}, sat((E7,)), 133 - _su(8)),
        _entry("EVI", "EVI", [], "e_7", "so(12)+su(2)", F4, {"long": 1, "short": 4},
               sat((E7,), frozenset({2, 5, 7})), 133 - _so(12) - _su(2)),
        _entry("EVII", "EVII", [], "e_7", "e_6+u(1)", kind("C", 3),
               {"short": 8, "long": 1}, sat((E7,), frozenset({2, 3, 4, 5})), 133 - 79,
               hermitian=True,
               note="root spaces of 2*theta_i carry multiplicity 1 (C3 long class)"),
        _entry("EVIII", "EVIII", [], "e_8", "so(16)", E8, {"long": 1}, sat((E8,)),
               248 - _so(16)),
        _entry("EIX", "EIX", [], "e_8", "e_7+su(2)", F4, {"long": 1, "short": 8},
               sat((E8,), frozenset({2, 3, 4, 5})), 248 - 133 - _su(2)),
        _entry("FI", "FI", [], "f_4", "sp(3)+sp(1)", F4, {"long": 1, "short": 1},
               sat((F4,)), 52 - _sp(3) - _sp(1)),
        _entry("G", "G", [], "g_2", "so(4)", G2, {"long": 1, "short": 1}, sat((G2,)),
               14 - _so(4)),
    ]


def _group(rk: RootSystemKind) -> SymmetricSpace:
    r = rk.rank
    arrows = tuple((i, i + r) for i in range(1, r + 1))
    name = _SIMPLE_NAME[rk.family](r)
    mults = {c: 2 for c in root_classes(rk)}
    return _entry(f"GROUP-{rk.name}", "GROUP", [("rank", r)] if rk.family not in
                  EXCEPTIONAL_RANK else [], f"{name}+{name}", name, rk, mults,
                  SatakeDiagram((rk, rk), frozenset(), arrows), _SIMPLE_DIM[rk.family](r))


def _candidates(max_rank: int) -> list[SymmetricSpace]:
    out: list[SymmetricSpace] = []
    for q in range(2, max_rank + 1):
        out += [_AI(q), _AII(q), _CI(q)]
        out += [_AIII(p, q) for p in (q, q + 1, q + 3)]
        out += [_CII(p, q) for p in (q, q + 1, q + 3)]
        out += [_BDI(p, q) for p in (q, q + 1, q + 2, q + 3) if (p, q) != (2, 2)]
        out += [_group(kind(f, q)) for f, lo in (("A", 2), ("B", 2), ("C", 3), ("D", 4))
                if q >= lo]
    out += [_DIII(n) for n in range(4, 2 * max_rank + 2)]
    out += [e for e in _exceptional() if e.rank <= max_rank]
    out += [_group(kind(f)) for f in EXCEPTIONAL_RANK if EXCEPTIONAL_RANK[f] <= max_rank]
    return out


def validate(space: SymmetricSpace) -> None:
    dimension(space)
    if set(space.mult_map) != set(root_classes(space.restricted)):
        raise CatalogIntegrityError(f"{space.label}: multiplicity classes do not match")
    if any(m < 1 for m in space.mult_map.values()):
        raise CatalogIntegrityError(f"{space.label}: multiplicities must be positive")
    if space.satake.white_classes() != space.rank:
        raise CatalogIntegrityError(
            f"{space.label}: Satake diagram has {space.satake.white_classes()} "
            f"white classes, restricted rank is {space.rank}")


@lru_cache(maxsize=None)
def _catalog(max_rank: int) -> tuple[SymmetricSpace, ...]:
    entries = _candidates(max_rank)
    for e in entries:
        validate(e)
    return tuple(sorted(entries, key=SymmetricSpace.sort_key))


def catalog(max_rank: int = 8) -> list[SymmetricSpace]:
    if max_rank < 2:
        raise ValueError(f"max_rank must be at least 2, got {max_rank}")
    return list(_catalog(max_rank))


def lookup(label: str, max_rank: int = 8) -> SymmetricSpace:
    for s in catalog(max_rank):
        if s.label == label:
            return s
    raise KeyError(f"no catalog entry {label!r} with rank <= {max_rank}")


# --- diagram automorphisms ---------------------------------------------------

def _satake_graph(sat: SatakeDiagram) -> nx.DiGraph:
    g = nx.DiGraph()
    a = sat.cartan
    for i in sat.nodes:
        g.add_node(i, black=i in sat.black)
    for i in sat.nodes:
        for j in sat.nodes:
            if i != j and a[i - 1][j - 1]:
                g.add_edge(i, j, bond=a[i - 1][j - 1])
    return g


@lru_cache(maxsize=None)
def _satake_automorphisms(sat: SatakeDiagram) -> tuple[tuple[int, ...], ...]:
    g = _satake_graph(sat)
    matcher = DiGraphMatcher(
        g, g, node_match=lambda x, y: x["black"] == y["black"],
        edge_match=lambda x, y: x["bond"] == y["bond"])
    arrows = {frozenset(a) for a in sat.arrows}
    out = []
    for iso in matcher.isomorphisms_iter():
        if all(frozenset((iso[a], iso[b])) in arrows for a, b in sat.arrows):
            out.append(tuple(iso[i] for i in sat.nodes))
    return tuple(sorted(out))


def satake_automorphisms(space: SymmetricSpace) -> list[tuple[int, ...]]:
    """Node permutations (images of nodes 1..N) preserving the whole Satake diagram."""
    return list(_satake_automorphisms(space.satake))


def admissible_automorphisms(space: SymmetricSpace) -> list[tuple[int, ...]]:
    """Automorphisms sending each white node to itself or to its arrow partner."""
    sat = space.satake
    return [perm for perm in satake_automorphisms(space)
            if all(perm[i - 1] in (i, sat.partner(i)) for i in sat.white)]


def inner_only(space: SymmetricSpace) -> bool:
    return len(admissible_automorphisms(space)) == 1
