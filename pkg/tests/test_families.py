from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convlab.families import (
    DEGENERATE,
    Carrier,
    CapacityError,
    PFilter,
    bits,
    complements,
    down_closure,
    filter_ops,
    grill,
    intersection_closure,
    is_filter_family,
    is_ideal_family,
    mesh,
    submasks,
    union_closure,
    up_closure,
)

ABC = Carrier(("a", "b", "c"))


def fam(*literals, carrier=ABC):
    return frozenset(carrier.parse(t) for t in literals)


def test_carrier_labels_round_trip():
    assert ABC.parse("{a,c}") == 0b101
    assert ABC.format(0b101) == "{a,c}"
    assert ABC.parse("{}") == 0
    assert ABC.format(0) == "{}"
    assert ABC.index("b") == 1


def test_carrier_rejects_bad_input():
    with pytest.raises(ValueError):
        Carrier(("a", "a"))
    with pytest.raises(ValueError):
        Carrier(())
    with pytest.raises(CapacityError):
        Carrier(tuple(f"p{i}" for i in range(17)))
    with pytest.raises(KeyError):
        ABC.parse("{a,z}")


def test_bits_and_submasks():
    assert list(bits(0b1011)) == [0, 1, 3]
    assert sorted(submasks(0b101)) == [0, 0b001, 0b100, 0b101]


def test_up_closure_of_singleton():
    assert up_closure(fam("{a}"), ABC.full) == fam("{a}", "{a,b}", "{a,c}", "{a,b,c}")


def test_down_and_up_edge_cases():
    assert down_closure(fam("{}")) == fam("{}")
    assert up_closure(frozenset(), ABC.full) == frozenset()


def test_union_and_intersection_closures():
    assert union_closure(fam("{a}", "{b}")) == fam("{a}", "{b}", "{a,b}")
    assert intersection_closure(fam("{a,b}", "{b,c}")) == fam("{a,b}", "{b,c}", "{b}")
    assert union_closure(fam("{c}")) == fam("{c}")
    # empty selections are not used, so nothing new appears
    assert union_closure(frozenset()) == frozenset()
    assert intersection_closure(frozenset()) == frozenset()


def test_complements():
    assert complements(fam("{a}"), ABC.full) == fam("{b,c}")
    assert complements(fam("{}", "{a,b,c}"), ABC.full) == fam("{a,b,c}", "{}")


def test_mesh_and_grill():
    assert mesh(fam("{a,b}"), fam("{b,c}"))
    assert not mesh(fam("{}"), fam("{a}", "{b}"))
    assert grill(PFilter(ABC.parse("{b}")).members(ABC.full), ABC.full) == fam("{b}", "{a,b}", "{b,c}", "{a,b,c}")
    assert PFilter(0b010).grill(ABC.full) == fam("{b}", "{a,b}", "{b,c}", "{a,b,c}")


def test_filter_ops():
    b, ab, ac = PFilter(0b010), PFilter(0b011), PFilter(0b101)
    assert filter_ops(b, ab).finer_than
    for g in (b, ab, ac):
        assert not DEGENERATE.meshes(g)
        assert DEGENERATE.finer_than(g)
    assert filter_ops(ac, ac).ultra_set == 0b101


families = st.frozensets(st.integers(0, 7), max_size=5)


@given(families, families)
def test_closures_are_closure_operators(a, b):
    full = 7
    for op in (lambda f: up_closure(f, full), down_closure, union_closure, intersection_closure):
        ca = op(a)
        assert a <= ca
        assert op(ca) == ca
        assert op(a) <= op(a | b)


@given(families)
def test_complements_involutive(f):
    assert complements(complements(f, 7), 7) == f


@given(families, families)
def test_mesh_is_grill_membership(a, b):
    assert mesh(a, b) == (b <= grill(a, 7))


def test_grill_of_grill_returns_up_closed_families():
    subsets = range(8)
    for r in range(1, 4):
        for members in combinations(subsets, r):
            f = up_closure(members, 7)
            if 0 in f:
                continue
            assert grill(grill(f, 7), 7) == f


def test_filter_families_are_principal_and_dual_to_ideals():
    subsets = range(1, 8)
    seen = 0
    for r in range(1, 4):
        for members in combinations(subsets, r):
            f = up_closure(members, 7)
            principal = any(up_closure([k], 7) == f for k in range(1, 8))
            assert is_filter_family(f, 7) == principal
            assert is_filter_family(f, 7) == is_ideal_family(complements(f, 7), 7)
            seen += principal
    assert seen > 0
