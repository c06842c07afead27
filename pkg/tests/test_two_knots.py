import pytest
from hypothesis import given

from strategies import two_knot
from zeroconc import knots
from zeroconc.errors import Ambiguous, SemanticError
from zeroconc.manifolds import S3, Brieskorn, Lens, S1xS2, manifold
from zeroconc.two_knots import (
    AssertedSeifert,
    ConnSum,
    Reverse,
    Ribbon,
    TwistSpin,
    UnknotS2,
    conn_sum,
    normalize,
    seifert_candidates,
    seifert_hypersurface,
    stabilize,
)


def test_trivial_normalizations():
    assert normalize(TwistSpin(1, knots.torus(2, 3))) == UnknotS2()
    assert normalize(TwistSpin(4, knots.Unknot())) == UnknotS2()
    assert normalize(Ribbon(1)) == UnknotS2()
    assert normalize(Reverse(Reverse(TwistSpin(2, knots.torus(2, 3))))) == TwistSpin(2, knots.torus(2, 3))
    assert normalize(Reverse(Ribbon(3))) == Ribbon(3)
    assert conn_sum(UnknotS2(), Ribbon(2)) == Ribbon(2)


def test_validation():
    with pytest.raises(SemanticError):
        TwistSpin(-1, knots.torus(2, 3))
    with pytest.raises(SemanticError):
        Ribbon(0)
    with pytest.raises(SemanticError):
        AssertedSeifert(manifold(Lens(3, 1)), spin=1)


@given(two_knot)
def test_normalize_idempotent(e):
    assert normalize(normalize(e)) == normalize(e)


@given(two_knot, two_knot)
def test_sum_commutative(a, b):
    assert conn_sum(a, b) == conn_sum(b, a)


@given(two_knot)
def test_reverse_involution(e):
    assert normalize(Reverse(Reverse(e))) == normalize(e)


def test_hypersurfaces():
    assert seifert_hypersurface(TwistSpin(5, knots.torus(2, 3))).Y == manifold(Brieskorn(2, 3, 5))
    assert seifert_hypersurface(TwistSpin(2, knots.twobridge(7, 3))).Y == manifold(Lens(7, 3))
    assert seifert_hypersurface(Ribbon(3)).Y == manifold(S1xS2(), S1xS2())
    spun = seifert_hypersurface(TwistSpin(0, knots.torus(2, 3)))
    assert spun.Y == S3 and spun.notes
    rev = seifert_hypersurface(Reverse(TwistSpin(2, knots.twobridge(7, 3))))
    assert rev.Y == manifold(Lens(7, 4))


def test_connsum_hypersurface():
    e = ConnSum((TwistSpin(2, knots.twobridge(5, 2)), TwistSpin(5, knots.torus(2, 3))))
    assert seifert_hypersurface(e).Y == manifold(Lens(5, 2), Brieskorn(2, 3, 5))


def test_ambiguity():
    e = AssertedSeifert(manifold(Lens(2, 1)))
    assert len(seifert_candidates(e)) == 2
    with pytest.raises(Ambiguous) as info:
        seifert_hypersurface(e)
    assert len(info.value.candidates) == 2
    assert len(seifert_candidates(AssertedSeifert(manifold(Lens(2, 1)), spin=0))) == 1


def test_stabilize():
    data = seifert_hypersurface(TwistSpin(2, knots.twobridge(5, 1)))
    st2 = stabilize(data, 2)
    assert st2.Y == manifold(Lens(5, 1), S1xS2(), S1xS2())
    assert st2.stabilizations == 2
    with pytest.raises(ValueError):
        stabilize(data, -1)
