import pytest

from convlab.dual import DualSpace
from convlab.families import PFilter
from convlab.harness.enumeration import all_convergences
from convlab.oracles import naive_paving
from convlab.paving import (
    KINDS,
    character_of,
    convergent_points,
    is_pavement,
    k_arens_number,
    maximal_convergent_kernels,
    paving_number,
)
from convlab.space import is_pseudotopology


def K(c, text):
    return PFilter(c.carrier.parse(text))


def test_convergent_points(chain, ultra):
    assert convergent_points(chain, 2) == chain.full
    assert convergent_points(chain, 0) == chain.carrier.parse("{a}")
    assert convergent_points(ultra, 0) == ultra.full


def test_pavement_examples(ultra, overlap):
    assert is_pavement(ultra, [K(ultra, "{1}"), K(ultra, "{2}"), K(ultra, "{3}")], 0)
    assert is_pavement(ultra, [K(ultra, "{1}")], 0, "dagger")
    d = [K(overlap, "{1,2}"), K(overlap, "{2,3}")]
    assert is_pavement(overlap, d, 0, "pseudo")
    verdict = is_pavement(overlap, d, 0)
    assert not verdict
    assert verdict.witness == K(overlap, "{1,3}")


def test_pavement_members_must_converge(overlap):
    with pytest.raises(ValueError):
        is_pavement(overlap, [PFilter(overlap.full)], 0)


@pytest.mark.parametrize("x", [0, 1, 2])
def test_ultra_paving_numbers(ultra, x):
    values = [paving_number(ultra, x, kind).value for kind in ("pavement", "pseudo", "dagger")]
    assert values == [3, 3, 1]


def test_overlap_paving_numbers(overlap):
    assert paving_number(overlap, 0, "pavement").value == 3
    assert paving_number(overlap, 0, "pseudo").value == 2
    assert len(maximal_convergent_kernels(overlap, 0)) == 3


def test_paving_witness_is_deterministic_and_valid(overlap):
    r = paving_number(overlap, 0, "pseudo")
    assert r == paving_number(overlap, 0, "pseudo")
    assert is_pavement(overlap, list(r.witness), 0, "pseudo")


def test_paving_matches_brute_force_exhaustively():
    for n in (1, 2, 3):
        for c in all_convergences(n):
            pseudo_top = is_pseudotopology(c)
            for x in range(n):
                values = {}
                for kind in KINDS:
                    r = paving_number(c, x, kind)
                    assert r.value == naive_paving(c, x, kind)
                    assert is_pavement(c, list(r.witness), x, kind)
                    values[kind] = r.value
                assert values["dagger"] <= values["pseudo"] <= values["pavement"]
                assert values["pavement"] == len(maximal_convergent_kernels(c, x))
                if pseudo_top:
                    assert values["pavement"] == values["pseudo"] == 1


def test_saturated_pavements_on_duals(chain, ultra):
    for base in (chain, ultra):
        d = DualSpace(base)
        conv = d.conv.tabulate()
        for x in range(d.size):
            r = paving_number(conv, x)
            saturated = [d.saturate(f) for f in r.witness]
            assert is_pavement(conv, saturated, x)
            assert len(set(saturated)) == r.value


def test_finite_shadows(chain, disc2, ultra):
    assert k_arens_number(chain) == 1
    assert character_of(chain, chain.carrier.parse("{c}")) == 1
    assert character_of(disc2, disc2.carrier.parse("{p}")) == 1
    with pytest.raises(ValueError):
        k_arens_number(ultra)
