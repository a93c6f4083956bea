import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from almostsym.rootsys import (
    FAMILIES,
    InvalidRankError,
    NotARootError,
    build_root_system,
    cartan_matrix,
    coefficients,
    diagram_automorphisms,
    highest_root,
    is_root,
    kind,
    positive_count,
    weight_decomposition,
)
from oracles import HIGHEST_ROOT_WEIGHTS, bc_roots, cartan, closure_roots


def all_kinds(max_rank=8):
    out = []
    for f in FAMILIES:
        for r in range(1, max_rank + 1):
            try:
                out.append(kind(f, r))
            except InvalidRankError:
                pass
    return out


KINDS = all_kinds()
kinds_st = st.sampled_from(KINDS)


def test_a1_has_one_root():
    rs = build_root_system(kind("A", 1))
    assert [a.simple_coeffs for a in rs.positive_roots] == [(1,)]


def test_g2_count():
    assert len(build_root_system(kind("G2")).positive_roots) == 6


def test_bc2_roots():
    rs = build_root_system(kind("BC", 2))
    # theta_1 - theta_2, theta_2, theta_1, 2theta_2, theta_1 + theta_2, 2theta_1
    assert {a.simple_coeffs for a in rs.positive_roots} == {
        (1, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)}


@pytest.mark.parametrize("family,rank", [("D", 2), ("B", 1), ("C", 1), ("A", 0), ("BC", 0)])
def test_invalid_rank(family, rank):
    with pytest.raises(InvalidRankError, match=family):
        kind(family, rank)


def test_exceptional_rank_is_fixed():
    with pytest.raises(InvalidRankError, match="E6"):
        kind("E6", 5)
    assert kind("F4").rank == 4


def test_unknown_family():
    with pytest.raises(InvalidRankError):
        kind("H", 3)


def test_rank_ceiling():
    with pytest.raises(InvalidRankError, match="9"):
        build_root_system(kind("A", 9))


def test_coefficients_examples():
    a3 = build_root_system(kind("A", 3))
    assert coefficients(a3, a3.root((1, 1, 0))) == (1, 1, 0)
    assert coefficients(build_root_system(kind("G2")), highest_root(build_root_system(kind("G2")))) == (3, 2)
    f4 = build_root_system(kind("F4"))
    assert coefficients(f4, f4.highest_root) == (2, 3, 4, 2)
    with pytest.raises(NotARootError):
        coefficients(a3, (1, 0, 1))


@pytest.mark.parametrize("q", range(1, 9))
def test_highest_root_a(q):
    assert build_root_system(kind("A", q)).highest_root.simple_coeffs == (1,) * q


def test_highest_root_examples():
    assert build_root_system(kind("C", 3)).highest_root.simple_coeffs == (2, 2, 1)
    assert build_root_system(kind("G2")).highest_root.simple_coeffs == (3, 2)
    assert build_root_system(kind("E8")).highest_root.simple_coeffs == (2, 3, 4, 6, 5, 4, 3, 2)


def test_weight_examples():
    f4 = build_root_system(kind("F4"))
    assert weight_decomposition(f4, f4.highest_root) == (1, 0, 0, 0)
    for q in range(2, 9):
        a = build_root_system(kind("A", q))
        w = weight_decomposition(a, a.highest_root)
        assert w == tuple(Fraction(int(i in (0, q - 1))) for i in range(q))
        c = build_root_system(kind("C", q))
        assert weight_decomposition(c, c.highest_root) == (2,) + (0,) * (q - 1)


@pytest.mark.parametrize("k", [k for k in KINDS if k.family in HIGHEST_ROOT_WEIGHTS],
                         ids=lambda k: k.name)
def test_weight_table(k):
    rs = build_root_system(k)
    want = HIGHEST_ROOT_WEIGHTS[k.family](k.rank)
    got = weight_decomposition(rs, rs.highest_root)
    assert all(x >= 0 for x in got)
    assert {i + 1: int(x) for i, x in enumerate(got) if x} == want


def test_is_root_examples():
    a2 = build_root_system(kind("A", 2))
    assert is_root(a2, (1, 1))
    assert not is_root(a2, (2, 1))
    assert is_root(a2, (-1, -1))
    assert is_root(build_root_system(kind("G2")), (2, 1))
    with pytest.raises(ValueError):
        is_root(a2, (1, 1, 0))


@pytest.mark.parametrize("k", KINDS, ids=lambda k: k.name)
def test_count_and_oracle(k):
    rs = build_root_system(k)
    assert len(rs.positive_roots) == positive_count(k)
    got = {a.simple_coeffs for a in rs.positive_roots}
    if k.family == "BC":
        assert got == bc_roots(k.rank)
    else:
        assert got == closure_roots(cartan(k.family, k.rank))
        assert cartan_matrix(k) == tuple(tuple(r) for r in cartan(k.family, k.rank))


@pytest.mark.parametrize("k", KINDS, ids=lambda k: k.name)
def test_ordering_and_positivity(k):
    rs = build_root_system(k)
    coeffs = [a.simple_coeffs for a in rs.positive_roots]
    assert coeffs == sorted(coeffs)
    assert all(min(c) >= 0 and any(c) for c in coeffs)


@pytest.mark.parametrize("k", KINDS, ids=lambda k: k.name)
def test_highest_root_dominates(k):
    rs = build_root_system(k)
    top = rs.highest_root.simple_coeffs
    for a in rs.positive_roots:
        assert all(t >= n for t, n in zip(top, a.simple_coeffs))


@pytest.mark.parametrize("k", KINDS, ids=lambda k: k.name)
def test_basis_consistency(k):
    rs = build_root_system(k)
    for a in rs.positive_roots:
        assert rs.to_ortho(a.simple_coeffs) == a.ortho_coords
        assert rs.to_simple(a.ortho_coords) == a.simple_coeffs


@settings(max_examples=150, deadline=None)
@given(kinds_st, st.data())
def test_closure(k, data):
    rs = build_root_system(k)
    a = data.draw(st.sampled_from(rs.positive_roots))
    b = data.draw(st.sampled_from(rs.positive_roots))
    s = tuple(x + y for x, y in zip(a.simple_coeffs, b.simple_coeffs))
    if is_root(rs, s):
        assert s in {r.simple_coeffs for r in rs.positive_roots}


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([k for k in KINDS if k.reduced]), st.data())
def test_unbroken_strings(k, data):
    rs = build_root_system(k)
    roots = list(rs.positive_roots) + [-a for a in rs.positive_roots]
    a = data.draw(st.sampled_from(roots))
    b = data.draw(st.sampled_from(roots))
    if a.simple_coeffs in (b.simple_coeffs, (-b).simple_coeffs):
        return
    ks = [t for t in range(-4, 5)
          if is_root(rs, tuple(y + t * x for x, y in zip(a.simple_coeffs, b.simple_coeffs)))]
    assert ks == list(range(ks[0], ks[-1] + 1))


def test_dump_json_deterministic():
    rs = build_root_system(kind("BC", 2))
    text = rs.dump_json()
    assert text == build_root_system(kind("BC", 2)).dump_json()
    rows = json.loads(text)
    assert set(rows[0]) == {"simple_coeffs", "ortho_coords"}
    assert [r["simple_coeffs"] for r in rows] == sorted(r["simple_coeffs"] for r in rows)


@pytest.mark.parametrize("name,count", [
    ("A1", 1), ("A2", 2), ("A5", 2), ("B3", 1), ("C4", 1), ("D4", 6), ("D5", 2),
    ("E6", 2), ("E7", 1), ("E8", 1), ("F4", 1), ("G2", 1), ("BC3", 1)])
def test_diagram_automorphisms(name, count):
    fam = name.rstrip("0123456789") if not name.startswith(("E", "F", "G")) else name
    rank = int(name[len(fam):]) if fam != name else None
    perms = diagram_automorphisms(build_root_system(kind(fam, rank)))
    assert len(perms) == count
    assert perms[0] == tuple(range(len(perms[0])))
