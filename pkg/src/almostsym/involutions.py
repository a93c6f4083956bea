"""Diagonal model of candidate involutions.

A parity coweight c in {0,1}^rank acts on the root space p_alpha by
eps_c(alpha) = (-1)^(c . n(alpha)).  The canonical involution exp(pi ad a0) of
a marked orbit is the character c = indicator(support).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .orbits import Marking, orbit_geometry
from .rootsys import Root, RootSystem
from .symspace import SymmetricSpace

SYMMETRY = "symmetry"
ALMOST_SYMMETRY = "almost_symmetry"
CANONICAL = "canonical_certified"
CANDIDATE = "torus_candidate"

NORMAL_NOT_FIXED = "normal_not_fixed"
TRIVIAL = "trivial_character"
ORIENTATION = "orientation"
COINDEX = "coindex_k"


@dataclass(frozen=True, order=True)
class SignCharacter:
    c: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (0, 1) for x in self.c):
            raise ValueError(f"parity coweight must be a 0/1 vector, got {self.c}")

    @property
    def rank(self) -> int:
        return len(self.c)

    def parity(self, alpha: Root) -> int:
        if len(alpha.simple_coeffs) != len(self.c):
            raise ValueError(
                f"character of length {len(self.c)} applied to a rank "
                f"{len(alpha.simple_coeffs)} root")
        return sum(ci * ni for ci, ni in zip(self.c, alpha.simple_coeffs)) % 2

    def __call__(self, alpha: Root) -> int:
        return -1 if self.parity(alpha) else 1


def evaluate_character(rs: RootSystem, c: Sequence[int] | SignCharacter, alpha: Root) -> int:
    ch = c if isinstance(c, SignCharacter) else SignCharacter(tuple(c))
    if ch.rank != rs.rank:
        raise ValueError(f"character has length {ch.rank}, root system has rank {rs.rank}")
    return ch(alpha)


def canonical_involution(marking: Marking) -> SignCharacter:
    return SignCharacter(marking.indicator)


@dataclass(frozen=True)
class FixedProfile:
    fixed_tangent_dim: int
    normal_identity: bool
    neg_mult_total: int


def fixed_profile(space: SymmetricSpace, marking: Marking, c: SignCharacter) -> FixedProfile:
    if c.rank != space.rank:
        raise ValueError(f"character has length {c.rank}, {space.label} has rank {space.rank}")
    orbit_geometry(space, marking)  # validates the marking
    fixed = neg = 0
    normal_ok = True
    for a, m in space.weighted_roots:
        odd = c.parity(a)
        neg += m * odd
        if marking.level(a) > 0:
            fixed += m * (not odd)
        elif odd:
            normal_ok = False
    return FixedProfile(fixed, normal_ok, neg)


@dataclass(frozen=True, order=True)
class Finding:
    space: str
    support: tuple[int, ...]
    c: tuple[int, ...]
    classification: str
    certification: str
    fixed_tangent_dim: int
    orbit_dim: int

    def to_json(self) -> dict:
        return {"space": self.space, "support": list(self.support), "c": list(self.c),
                "class": self.classification, "certification": self.certification,
                "fixed_tangent_dim": self.fixed_tangent_dim, "orbit_dim": self.orbit_dim}


@dataclass(frozen=True)
class Rejection:
    """Why a character was discarded; k is the fixed tangent dimension when known."""

    reason: str
    k: int | None = None

    def __str__(self) -> str:
        return f"{self.reason}={self.k}" if self.reason == COINDEX else self.reason


@dataclass(frozen=True)
class _Tables:
    """Per-space lookup tables indexed by node bitmasks (bit i-1 for node i)."""

    tangent_dim: tuple[int, ...]  # by support mask
    neg_total: tuple[int, ...]  # by character mask


def _mask(bits: Sequence[int]) -> int:
    return sum(1 << i for i, b in enumerate(bits) if b)


@lru_cache(maxsize=None)
def _tables(space: SymmetricSpace) -> _Tables:
    rs = space.root_system
    nz: dict[int, int] = {}
    par: dict[int, int] = {}
    for a, m in space.weighted_roots:
        k = _mask(a.simple_coeffs)
        nz[k] = nz.get(k, 0) + m
        k = _mask([n % 2 for n in a.simple_coeffs])
        par[k] = par.get(k, 0) + m
    size = 1 << rs.rank
    tdim = tuple(sum(m for k, m in nz.items() if k & s) for s in range(size))
    neg = tuple(sum(m for k, m in par.items() if (k & c).bit_count() % 2)
                for c in range(size))
    return _Tables(tdim, neg)


def classify_character(space: SymmetricSpace, marking: Marking,
                       c: SignCharacter) -> Finding | Rejection:
    """Decide what the involution eps_c does to the marked orbit.

    Rejections are tried in order: the normal space must be fixed, the
    character must act non-trivially on the tangent space, and a
    non-canonical character must act with even total determinant.  The
    canonical character is realized by exp(pi ad a0) itself, so it is not
    subjected to the determinant test.
    """
    if c.rank != space.rank:
        raise ValueError(f"character has length {c.rank}, {space.label} has rank {space.rank}")
    s, cm = _mask(marking.indicator), _mask(c.c)
    # a simple root off the support is normal, so c must live on the support;
    # then every root with odd parity has a support coefficient and is tangent
    if cm & ~s:
        return Rejection(NORMAL_NOT_FIXED)
    tab = _tables(space)
    tdim, neg = tab.tangent_dim[s], tab.neg_total[cm]
    fixed = tdim - neg
    if fixed == tdim:
        return Rejection(TRIVIAL)
    canonical = cm == s
    if not canonical and neg % 2:
        return Rejection(ORIENTATION, fixed)
    if fixed >= 2:
        return Rejection(COINDEX, fixed)
    return Finding(
        space=space.label, support=marking.support, c=c.c,
        classification=SYMMETRY if fixed == 0 else ALMOST_SYMMETRY,
        certification=CANONICAL if canonical else CANDIDATE,
        fixed_tangent_dim=fixed, orbit_dim=tdim)


def characters(rank: int) -> list[SignCharacter]:
    """All non-trivial parity coweights, lexicographic."""
    return [SignCharacter(c) for c in product((0, 1), repeat=rank) if any(c)]


def _character(mask: int, rank: int) -> SignCharacter:
    return SignCharacter(tuple((mask >> i) & 1 for i in range(rank)))


def sweep(space: SymmetricSpace, marking: Marking) -> list[tuple[SignCharacter, Finding | Rejection]]:
    """classify_character for every non-trivial c supported on the marking.

    Any other c is non-trivial on a simple root outside the support, which is
    normal, so it is rejected with normal_not_fixed and is left out here.
    """
    s = _mask(marking.indicator)
    out = []
    sub = s
    while sub:
        ch = _character(sub, space.rank)
        out.append((ch, classify_character(space, marking, ch)))
        sub = (sub - 1) & s
    out.sort(key=lambda t: t[0].c)
    return out


def torus_search(space: SymmetricSpace, marking: Marking) -> list[Finding]:
    found = [r for _, r in sweep(space, marking) if isinstance(r, Finding)]
    return sorted(found, key=lambda f: (f.support, f.c))
