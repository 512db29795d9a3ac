import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convlab.families import Carrier, PFilter
from convlab.harness.enumeration import all_convergences
from convlab.harness.rng import random_space
from convlab.oracles import closed_sets_by_definition
from convlab.space import (
    Convergence,
    InvalidSpace,
    adherence,
    adherence_by_mesh,
    antidiscrete,
    closed_sets,
    closure_of,
    compact_parts,
    discrete,
    finer_than,
    first_coarser_kernel,
    generate_convergence,
    is_pseudotopology,
    is_topological,
    open_sets,
    reflector_s,
    reflector_t,
    require_valid,
    validate,
)


def S(c, text):
    return c.carrier.parse(text)


def table_of(c):
    return list(c.tabulate().table)


def test_chain_limit_table(chain):
    # topology with opens {}, {a}, {a,b}, X: limits are points whose
    # neighbourhoods all contain the kernel
    expected = {
        "{a}": "{a,b,c}",
        "{b}": "{b,c}",
        "{c}": "{c}",
        "{a,b}": "{b,c}",
        "{a,c}": "{c}",
        "{b,c}": "{c}",
        "{a,b,c}": "{c}",
    }
    for kernel, lim in expected.items():
        assert c_lim(chain, kernel) == lim


def c_lim(c, kernel):
    return c.carrier.format(c.lim(S(c, kernel)))


def test_fixtures_validate(chain, ultra, overlap, disc2):
    for c in (chain, ultra, overlap, disc2):
        assert validate(c) == []


def test_antitone_violation_reported(chain):
    table = table_of(chain)
    table[S(chain, "{a,b}")] = chain.full
    bad = Convergence.from_table(chain.carrier, table)
    violations = validate(bad)
    assert [v.kind for v in violations] == ["antitone"]
    with pytest.raises(InvalidSpace):
        require_valid(bad)


def test_centeredness_violation_reported(chain):
    table = table_of(chain)
    table[S(chain, "{a}")] = S(chain, "{b,c}")
    kinds = {v.kind for v in validate(Convergence.from_table(chain.carrier, table))}
    assert "centered" in kinds


def test_adherence_examples(chain, disc2):
    assert adherence(chain, PFilter(S(chain, "{a,b}"))) == chain.full
    assert adherence(chain, PFilter(0)) == 0
    assert adherence(disc2, PFilter(S(disc2, "{p}"))) == S(disc2, "{p}")


def test_closed_sets_examples(chain, disc2):
    assert closed_sets(chain) == {S(chain, t) for t in ("{}", "{c}", "{b,c}", "{a,b,c}")}
    assert closure_of(chain, S(chain, "{b}")) == S(chain, "{b,c}")
    assert closed_sets(disc2) == frozenset(range(4))


def test_reflectors_on_fixtures(ultra, overlap):
    assert reflector_t(ultra).tabulate() == antidiscrete(ultra.carrier)
    s = reflector_s(ultra)
    assert s.lim(S(ultra, "{1,2}")) == ultra.full
    assert ultra.lim(S(ultra, "{1,2}")) == 0
    assert finer_than(ultra, s)
    assert reflector_s(overlap).lim(overlap.full) == overlap.full


def test_topology_predicates(chain, ultra, overlap):
    assert is_topological(chain) and is_pseudotopology(chain)
    for c in (ultra, overlap):
        assert not is_topological(c)
        assert not is_pseudotopology(c)


def test_compactness(chain, disc2):
    parts = compact_parts(chain)
    assert S(chain, "{a}") in parts.compacts
    assert disc2.full in compact_parts(disc2).compacts
    # every finite space is compactoid in itself
    assert chain.full in parts.compactoids
    assert parts.cocompactoid.kernel == 0


def test_finer_than_examples(chain, disc2):
    assert finer_than(disc2, antidiscrete(disc2.carrier))
    three = discrete(chain.carrier)
    assert not finer_than(chain, three)
    assert first_coarser_kernel(chain, three) == S(chain, "{a}")


def test_generate_convergence_examples():
    pq = Carrier(("p", "q"))
    g = generate_convergence(pq, [])
    assert [g.lim(k) for k in (1, 2, 3)] == [1, 2, 0]

    one23 = Carrier(("1", "2", "3"))
    g = generate_convergence(one23, [(one23.full, one23.parse("{1}"))])
    assert g.lim(one23.parse("{2}")) == one23.parse("{1,2}")
    assert g.lim(one23.parse("{1}")) == one23.parse("{1}")
    assert g.lim(one23.parse("{2,3}")) == one23.parse("{1}")
    assert g.lim(one23.full) == one23.parse("{1}")

    ultra_like = generate_convergence(one23, [(1 << i, one23.full) for i in range(3)])
    from convlab.harness.fixtures import fix_ultra

    assert ultra_like == fix_ultra()


def test_open_sets_round_trip(chain):
    assert open_sets(chain) == {S(chain, t) for t in ("{}", "{a}", "{a,b}", "{a,b,c}")}


def test_exhaustive_adherence_and_closed_sets():
    for c in all_convergences(3):
        assert closed_sets(c) == closed_sets_by_definition(c)
        for k in range(c.full + 1):
            assert adherence(c, PFilter(k)) == adherence_by_mesh(c, PFilter(k))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(4, 5), st.sampled_from([0.15, 0.5, 0.9]))
def test_reflector_laws_on_random_spaces(seed, n, density):
    c = random_space(seed, n, density)
    assert validate(c) == []
    s, t = reflector_s(c).tabulate(), reflector_t(c).tabulate()
    assert reflector_s(s).tabulate() == s
    assert reflector_t(t).tabulate() == t
    assert finer_than(c, s) and finer_than(s, t)
    assert is_pseudotopology(s) and is_topological(t)
    for k in range(c.full + 1):
        assert adherence(c, PFilter(k)) == adherence(s, PFilter(k))
