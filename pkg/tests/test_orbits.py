import pytest
from hypothesis import given, settings, strategies as st

from almostsym.orbits import (
    INTERMEDIATE,
    MOST_SINGULAR,
    PRINCIPAL,
    TWO_NODE,
    InvalidMarkingError,
    Marking,
    all_markings,
    is_extrinsically_symmetric,
    monotonicity_check,
    orbit_geometry,
    parse_support,
    symmetric_nodes,
)
from almostsym.symspace import catalog, lookup

CATALOG = catalog(8)
SMALL = [s for s in CATALOG if s.rank <= 5]


def test_g2_second_node():
    g = lookup("G")
    geo = orbit_geometry(g, Marking.of(g, 2))
    assert geo.tangent_dim == 5
    assert {a.simple_coeffs for a in geo.tangent_roots} == {
        (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


@pytest.mark.parametrize("space", SMALL, ids=lambda s: s.label)
def test_full_support(space):
    geo = orbit_geometry(space, Marking(space.rank, tuple(range(1, space.rank + 1))))
    assert geo.normal_roots == ()
    assert geo.normal_dim_in_ambient == space.rank
    assert geo.kind == PRINCIPAL


def test_eiii_first_node():
    s = lookup("EIII")
    geo = orbit_geometry(s, Marking.of(s, 1))
    assert geo.tangent_dim == 21
    assert geo.codim == 11


def test_symmetric_examples():
    for q in range(2, 9):
        ai = lookup(f"AI({q})")
        assert is_extrinsically_symmetric(ai, Marking.of(ai, 1))
        ci = lookup(f"CI({q})")
        assert not is_extrinsically_symmetric(ci, Marking.of(ci, 1))
    g = lookup("G")
    assert not is_extrinsically_symmetric(g, Marking.of(g, 1))
    assert not is_extrinsically_symmetric(lookup("AI(3)"), Marking(3, (1, 2)))


def test_monotonicity_examples():
    a3 = lookup("AI(3)")
    assert monotonicity_check(a3, Marking(3, (1,)), Marking(3, (1, 2)))
    g = lookup("G")
    assert monotonicity_check(g, Marking(2, (2,)), Marking(2, (1, 2)))
    f = lookup("FI")
    assert monotonicity_check(f, Marking(4, (1,)), Marking(4, (1, 2, 3, 4)))
    with pytest.raises(InvalidMarkingError):
        monotonicity_check(a3, Marking(3, (1, 3)), Marking(3, (1, 2)))


def test_marking_validation():
    with pytest.raises(InvalidMarkingError):
        Marking(3, ())
    with pytest.raises(InvalidMarkingError):
        Marking(3, (4,))
    with pytest.raises(InvalidMarkingError):
        orbit_geometry(lookup("G"), Marking(3, (1,)))
    assert Marking(4, (3, 1, 3)).support == (1, 3)


def test_parse_support():
    assert parse_support("1,2") == (1, 2)
    assert parse_support("{2, 3}") == (2, 3)
    with pytest.raises(InvalidMarkingError):
        parse_support("{}")


def test_kinds():
    assert orbit_geometry(lookup("FI"), Marking(4, (2,))).kind == MOST_SINGULAR
    assert orbit_geometry(lookup("FI"), Marking(4, (1, 3))).kind == TWO_NODE
    assert orbit_geometry(lookup("FI"), Marking(4, (1, 2, 3))).kind == INTERMEDIATE
    # at rank 2 the two-node marking is the principal orbit
    assert orbit_geometry(lookup("G"), Marking(2, (1, 2))).kind == PRINCIPAL


def test_all_markings_count():
    for r in range(1, 9):
        ms = list(all_markings(r))
        assert len(ms) == 2 ** r - 1 == len(set(ms))


@pytest.mark.parametrize("space", CATALOG, ids=lambda s: s.label)
def test_partition_and_dimension(space):
    pos = set(space.root_system.positive_roots)
    for m in all_markings(space.rank):
        geo = orbit_geometry(space, m)
        t, n = set(geo.tangent_roots), set(geo.normal_roots)
        assert t | n == pos and not t & n
        assert geo.tangent_dim + geo.normal_dim_in_ambient == space.known_dim
        if space.flags.maximal_rank:
            assert geo.tangent_dim == len(geo.tangent_roots)


@pytest.mark.parametrize("space", CATALOG, ids=lambda s: s.label)
def test_symmetric_orbit_count(space):
    sym = [i for i in range(1, space.rank + 1)
           if is_extrinsically_symmetric(space, Marking(space.rank, (i,)))]
    assert sym == symmetric_nodes(space)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_monotonicity_property(space, data):
    nodes = list(range(1, space.rank + 1))
    big = data.draw(st.sets(st.sampled_from(nodes), min_size=1))
    small = data.draw(st.sets(st.sampled_from(sorted(big)), min_size=1))
    assert monotonicity_check(space, Marking(space.rank, tuple(small)),
                              Marking(space.rank, tuple(big)))
