import pytest

from convlab.covers import (
    completeness_number,
    cover_criterion,
    ideal_transforms,
    is_cauchy,
    is_cocomplete_collection,
    is_complete_collection,
    is_cover,
)
from convlab.families import PFilter
from convlab.harness.enumeration import all_convergences
from convlab.oracles import naive_completeness
from convlab.space import closed_sets


def F(c, *literals):
    return frozenset(c.carrier.parse(t) for t in literals)


def K(c, text):
    return PFilter(c.carrier.parse(text))


def test_chain_cover_example(chain):
    fam = F(chain, "{a,b}", "{c}")
    verdict = is_cover(chain, fam)
    assert not verdict
    # a witness is a convergent kernel inside no member; {b,c} is one, and the
    # search reports the first in mask order, {a,c}
    failing = [k for k in chain.carrier.kernels() if chain.lim(k) and not any(k & ~p == 0 for p in fam)]
    assert chain.carrier.parse("{b,c}") in failing
    assert verdict.witness == failing[0] == chain.carrier.parse("{a,c}")
    assert is_cover(chain, fam, "pseudocover")


def test_whole_carrier_is_a_cover(chain, ultra, overlap):
    for c in (chain, ultra, overlap):
        assert is_cover(c, {c.full})
        assert cover_criterion(c, {c.full})


def test_ultra_pseudocover_witness(ultra):
    verdict = is_cover(ultra, F(ultra, "{1}", "{2}"), "pseudocover")
    assert not verdict
    assert verdict.witness == ultra.carrier.parse("{3}")


def test_cover_criterion_examples(chain):
    fam = F(chain, "{a,b}", "{b,c}")
    assert cover_criterion(chain, fam) == bool(is_cover(chain, fam))
    assert not cover_criterion(chain, F(chain, "{a}"))
    assert not is_cover(chain, F(chain, "{a}"))


def test_cauchy_examples(chain):
    coll = [F(chain, "{a,b}", "{c}")]
    assert is_cauchy(K(chain, "{b}"), coll)
    assert not is_cauchy(K(chain, "{a,c}"), coll)
    assert is_cauchy(K(chain, "{a,c}"), coll, "preCauchy")
    assert is_cauchy(K(chain, "{a,c}"), [])


def test_complete_collections_on_finite_carriers(chain):
    assert is_complete_collection(chain, [frozenset({chain.full})])
    assert is_complete_collection(chain, [frozenset({chain.full})], "ultracomplete")


def test_complete_collection_rejects_non_covers(chain):
    with pytest.raises(ValueError):
        is_complete_collection(chain, [F(chain, "{a}")])


def test_ideal_transforms(chain):
    t = ideal_transforms([F(chain, "{a}", "{b}")], chain.full)
    assert t.union_down[0] == F(chain, "{}", "{a}", "{b}", "{a,b}")
    assert t.filter_form[0].kernel == chain.carrier.parse("{c}")
    t = ideal_transforms([frozenset({chain.full})], chain.full)
    assert t.filter_form[0].kernel == 0


def test_cocomplete_examples(chain):
    c_only = chain.carrier.parse("{c}")
    assert is_cocomplete_collection(chain, [K(chain, "{c}")], c_only)
    assert is_cocomplete_collection(chain, [K(chain, "{c}")], c_only, "ultracocomplete")
    verdict = is_cocomplete_collection(chain, [PFilter(0)], c_only, "ultracocomplete")
    assert not verdict
    assert verdict.witness == K(chain, "{c}")
    full = chain.full
    assert is_cocomplete_collection(chain, [PFilter(full)], full)
    assert is_cocomplete_collection(chain, [PFilter(full)], full, "ultracocomplete")


def test_cocomplete_rejects_non_qualifying_members(chain):
    with pytest.raises(ValueError):
        is_cocomplete_collection(chain, [K(chain, "{a}")], chain.carrier.parse("{c}"))


def test_completeness_numbers_on_chain(chain):
    r = completeness_number(chain, chain.carrier.parse("{c}"), "ultra")
    assert r.value == 1
    assert [f.kernel for f in r.witness] == [chain.carrier.parse("{c}")]

    r = completeness_number(chain, 0, "ultra")
    assert (r.value, r.classic_value) == (1, 0)
    assert [f.kernel for f in r.witness] == [0]
    assert r.classic_witness == ()

    r = completeness_number(chain, chain.carrier.parse("{b,c}"), "plain")
    assert r.value == 1
    assert [f.kernel for f in r.witness] == [chain.carrier.parse("{b,c}")]


def test_completeness_matches_brute_force_on_all_small_spaces():
    for n in (1, 2):
        for c in all_convergences(n):
            for target in closed_sets(c):
                for kind in ("plain", "ultra"):
                    r = completeness_number(c, target, kind)
                    assert r.value == naive_completeness(c, target, kind)
                    assert r.classic_value == naive_completeness(c, target, kind, classic=True)


def test_completeness_matches_brute_force_on_fixtures(chain, ultra, overlap):
    for c in (chain, ultra, overlap):
        for target in closed_sets(c):
            for kind in ("plain", "ultra"):
                r = completeness_number(c, target, kind)
                assert r.value == naive_completeness(c, target, kind)
                assert r.classic_value == naive_completeness(c, target, kind, classic=True)
