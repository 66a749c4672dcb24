import pytest
from hypothesis import given, settings, strategies as st

from chargraph.arith import DomainError
from chargraph.degrees import gen_psl2
from chargraph.domination import (
    DominationCertificate,
    domination_number,
    is_dominating,
    minimum_odd_dominating_set,
)
from chargraph.graph import build_character_graph, complement, odd_cycle_vertices
from chargraph.oracle import (
    all_graphs,
    brute_domination_number,
    brute_min_odd_dominating,
    brute_odd_cycle_vertices,
)

from conftest import make, small_graphs

K3 = make([2, 3, 5], [(2, 3), (3, 5), (2, 5)])
PATH = make([2, 3, 7], [(2, 7), (7, 3)])
PSL13_C = complement(build_character_graph(gen_psl2(13)))


def test_is_dominating_examples(c5):
    assert all(is_dominating(K3, [v]) for v in K3.vertices)
    assert is_dominating(c5, [1, 3])
    assert not is_dominating(c5, [1, 2])
    assert is_dominating(PSL13_C, [13])


def test_empty_set_dominates_only_empty_graph():
    assert is_dominating(make([], []), [])
    assert not is_dominating(K3, [])


def test_is_dominating_domain():
    with pytest.raises(DomainError):
        is_dominating(K3, [7])


def test_domination_number_examples(c5):
    assert domination_number(K3)[0] == 1
    k, cert = domination_number(c5)
    assert k == 2 and cert.set == (1, 3)
    k, cert = domination_number(PATH)
    assert k == 1 and cert.set == (7,)
    assert domination_number(make([], [])) == (0, DominationCertificate(()))


def test_minimum_odd_dominating_set_examples(c5):
    cert = minimum_odd_dominating_set(PSL13_C)
    assert cert.set == (13,) and cert.kind == "odd"
    assert cert.verify(PSL13_C)
    assert minimum_odd_dominating_set(PATH) is None
    assert minimum_odd_dominating_set(c5).set == (1, 3)


def test_odd_set_needs_dominating_odd_vertices():
    # triangle 1-2-3 with a path 3-4-5: 5 is two steps away from any odd vertex
    g = make([1, 2, 3, 4, 5], [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
    assert set(odd_cycle_vertices(g)) == {1, 2, 3}
    assert minimum_odd_dominating_set(g) is None
    assert domination_number(g)[0] == 2


def test_against_brute_force_up_to_5():
    for n in range(6):
        for g in all_graphs(n):
            k, cert = domination_number(g)
            assert k == brute_domination_number(g)
            assert cert.verify(g) and len(cert.set) == k
            odd = brute_odd_cycle_vertices(g)
            mods = minimum_odd_dominating_set(g)
            assert (None if mods is None else len(mods.set)) == brute_min_odd_dominating(g, odd)
            exists = bool(odd) and is_dominating(g, odd)
            assert (mods is not None) == exists


def test_lexicographic_tie_break():
    # C6: {1,4} {2,5} {3,6} all dominate with 2 vertices
    c6 = make([1, 2, 3, 4, 5, 6], [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)])
    assert domination_number(c6)[1].set == (1, 4)


@settings(max_examples=200)
@given(small_graphs(max_vertices=9), st.data())
def test_monotone_under_superset(g, data):
    if not g.vertices:
        return
    d = data.draw(st.sets(st.sampled_from(g.vertices)))
    extra = data.draw(st.sets(st.sampled_from(g.vertices)))
    if is_dominating(g, d):
        assert is_dominating(g, d | extra)


@settings(max_examples=200)
@given(small_graphs(max_vertices=10))
def test_certificates_revalidate(g):
    k, cert = domination_number(g)
    assert cert.verify(g) and len(cert.set) == k
    mods = minimum_odd_dominating_set(g)
    if mods is not None:
        assert mods.verify(g) and mods.set
        assert len(mods.set) >= k


def test_tampered_certificate_fails(c5):
    cert = minimum_odd_dominating_set(c5)
    assert not DominationCertificate((1, 2), "odd", cert.member_evidence).verify(c5)
    assert not DominationCertificate((1, 3), "odd", {}).verify(c5)
