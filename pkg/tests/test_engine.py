import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from strategies import catalog_expr, two_knot
from zeroconc import knots
from zeroconc.engine import (
    ConditionalOnAssertion,
    Distinguished,
    NotObstructed,
    compare,
    family,
    is_distinguished,
    profile,
    signature_check,
    signature_factor,
)
from zeroconc.errors import NotQuasiAlternating
from zeroconc.invariants import Unknown
from zeroconc.manifolds import Lens, manifold
from zeroconc.parser import parse
from zeroconc.two_knots import AssertedSeifert, ConnSum, Reverse, Ribbon, TwistSpin, UnknotS2


def test_unknot_profile():
    prof = profile(UnknotS2())
    assert (prof.mu, prof.d_bar, prof.h1_order) == (0, 0, 1)


def test_poincare_profile():
    prof = profile(parse("twistspin(5,torus(2,3))"))
    assert (prof.mu, prof.d_bar, prof.h1_order) == (8, 2, 1)


def test_lens_examples():
    prof = profile(parse("twistspin(2,twobridge(3,1))"))
    assert (prof.mu, prof.d_bar) == (14, Fraction(1, 2))
    prof = profile(parse("rev(twistspin(2,twobridge(7,3)))"))
    assert prof.d_bar == -profile(parse("twistspin(2,twobridge(7,3))")).d_bar


def test_verdicts():
    v = compare(parse("twistspin(2,twobridge(3,1))"), UnknotS2())
    assert isinstance(v, Distinguished) and "d" in v.witnesses
    assert compare(parse("ribbon(3)"), UnknotS2()) == NotObstructed()
    assert isinstance(compare(TwistSpin(0, knots.torus(2, 3)), UnknotS2()), NotObstructed)


def test_unknown_is_not_obstructed():
    e = TwistSpin(3, knots.torus(2, 7))
    prof = profile(e)
    assert isinstance(prof.d_bar, Unknown)
    v = compare(e, UnknotS2())
    assert isinstance(v, NotObstructed) and v.unknowns


def test_ambiguous_candidates_need_all_pairings():
    rp3 = AssertedSeifert(manifold(Lens(2, 1)))
    prof = profile(rp3)
    assert prof.ambiguous
    assert set(prof.mu) == {1, 15}
    v = compare(rp3, UnknotS2())
    assert isinstance(v, ConditionalOnAssertion) and is_distinguished(v)
    # candidate (mu, d) pairs that overlap leave the pair undecided
    v = compare(rp3, AssertedSeifert(manifold(Lens(2, 1)), spin=0))
    assert isinstance(v, ConditionalOnAssertion) and not is_distinguished(v)


@settings(max_examples=60)
@given(two_knot)
def test_compare_reflexive(e):
    assert not is_distinguished(compare(e, e)) or profile(e).ambiguous


@settings(max_examples=60)
@given(catalog_expr)
def test_reverse_negates(e):
    a, b = profile(e), profile(Reverse(e))
    assert b.d_bar == -a.d_bar
    assert b.mu == (-a.mu) % 16


@given(catalog_expr)
def test_stabilization_via_ribbon(e):
    assert profile(ConnSum((e, Ribbon(4)))).candidates == profile(e).candidates


def test_signature_check():
    assert signature_factor() == -4
    for k in (knots.torus(2, 3), knots.twobridge(7, 3), knots.mirror(knots.twobridge(9, 2))):
        r = signature_check(k)
        assert r.relation_holds
    r = signature_check(knots.twobridge(5, 2))
    assert r.d == 0 and r.obstructed is False
    with pytest.raises(NotQuasiAlternating):
        signature_check(knots.torus(3, 4))


def test_families():
    d_fam = family("d-family", 6)
    assert [m.profile.d_bar for m in d_fam] == [2, 4, 6, 8, 10, 12]
    mu_fam = family("mu", 16)
    assert {m.profile.mu for m in mu_fam} == set(range(16))
    catalog = [m for m in mu_fam if not m.profile.conditional]
    assert len(catalog) == 8
    for a, b in itertools.combinations(catalog, 2):
        assert isinstance(compare(a.expr, b.expr), Distinguished)
    with pytest.raises(ValueError):
        family("x", 3)
    with pytest.raises(ValueError):
        family("d", 0)
