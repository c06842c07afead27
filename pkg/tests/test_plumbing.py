import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroconc.errors import Degenerate, Unsupported
from zeroconc.linalg import adjugate, inertia
from zeroconc.plumbing import (
    CharacteristicSublink,
    SurgeryPresentation,
    bad_vertices,
    characteristic_sublinks,
    d_lattice_oracle,
    e8_tree,
    lens_presentation,
    minus_continued_fraction,
    mu,
    spin_covector,
)


@st.composite
def tree(draw, max_n=5, lo=-6, hi=6):
    n = draw(st.integers(1, max_n))
    edges = tuple((draw(st.integers(0, v - 1)), v) for v in range(1, n))
    framings = tuple(draw(st.integers(lo, hi)) for _ in range(n))
    return SurgeryPresentation(framings, edges)


def brute_sublinks(pres):
    m = pres.matrix
    n = pres.size
    return [
        c
        for c in itertools.product((0, 1), repeat=n)
        if all((sum(m[i][j] * c[j] for j in range(n)) - m[i][i]) % 2 == 0 for i in range(n))
    ]


def brute_d(pres, covector, radius=3):
    """Box search over K = covector + 2 L z; only for small definite lattices."""
    m = pres.matrix
    n = pres.size
    det, adj = adjugate(m)
    sign = 1 if inertia(m)[0] == n else -1
    best = None
    for z in itertools.product(range(-radius, radius + 1), repeat=n):
        k = [covector[i] + 2 * sum(m[i][j] * z[j] for j in range(n)) for i in range(n)]
        norm = Fraction(sum(k[i] * adj[i][j] * k[j] for i in range(n) for j in range(n)), det)
        val = (norm - sign * n) / 4
        best = val if best is None else (min(best, val) if sign > 0 else max(best, val))
    return best


def test_cycle_rejected():
    with pytest.raises(ValueError):
        SurgeryPresentation((2, 2, 2), ((0, 1), (1, 2), (0, 2)))


def test_json_round_trip():
    pres = e8_tree()
    assert SurgeryPresentation.from_json(pres.to_json()) == pres
    assert SurgeryPresentation.from_json('{"framings": [3]}') == SurgeryPresentation((3,))


def test_continued_fraction():
    assert minus_continued_fraction(7, 3) == [3, 2, 2]
    assert minus_continued_fraction(5, 1) == [5]
    for p in range(2, 30):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            a = minus_continued_fraction(p, q)
            assert all(x >= 2 for x in a)
            # det of the chain recovers p
            assert lens_presentation(p, q).h1_order() == p


def test_sublinks_single_component():
    # [2] has two characteristic sublinks and its boundary L(2,1) two spin structures
    assert [s.c for s in characteristic_sublinks(SurgeryPresentation((2,)))] == [(0,), (1,)]
    assert [s.components for s in characteristic_sublinks(SurgeryPresentation((3,)))] == [(0,)]


def test_e8():
    pos = e8_tree(2)
    assert inertia(pos.matrix) == (8, 0, 0)
    assert pos.h1_order() == 1
    (sub,) = characteristic_sublinks(pos)
    assert sub.c == (0,) * 8
    assert mu(pos, sub) == 8
    assert d_lattice_oracle(pos, sub) == -2
    assert d_lattice_oracle(e8_tree(-2), (0,) * 8) == 2
    assert bad_vertices(pos) == [4]


def test_lens_classes():
    vals = sorted(d_lattice_oracle(SurgeryPresentation((3,)), (k,)) for k in (1, 3, 5))
    assert vals == [Fraction(-1, 6), Fraction(-1, 6), Fraction(1, 2)]


def test_degenerate_and_indefinite():
    with pytest.raises(Degenerate):
        characteristic_sublinks(SurgeryPresentation((0,)))
    with pytest.raises(Unsupported):
        d_lattice_oracle(SurgeryPresentation((2, -3), ((0, 1),)), (0, 1))
    with pytest.raises(ValueError):
        d_lattice_oracle(SurgeryPresentation((3,)), (0,))
    with pytest.raises(ValueError):
        mu(SurgeryPresentation((3,)), CharacteristicSublink((0,)))


@given(tree())
def test_sublinks_match_brute_force(pres):
    if pres.h1_order() == 0:
        return
    subs = characteristic_sublinks(pres)
    assert [s.c for s in subs] == brute_sublinks(pres)
    # the number of spin structures is the size of H^1(Y; Z/2)
    two_rank = 1 if pres.h1_order() % 2 else len(subs)
    assert len(subs) in (1, 2, 4, 8, 16, 32) and len(subs) >= two_rank


@given(tree())
def test_sublinks_never_adjacent(pres):
    if pres.h1_order() == 0:
        return
    for s in characteristic_sublinks(pres):
        chosen = set(s.components)
        assert not any(i in chosen and j in chosen for i, j in pres.edges)


@given(tree(max_n=4), st.integers(0, 3), st.sampled_from([1, -1]))
def test_mu_blowup_invariance(pres, v, eps):
    # blowing up a +-1 unknot linked once with component v changes its framing by eps
    if pres.h1_order() == 0:
        return
    v %= pres.size
    framings = list(pres.framings)
    framings[v] += eps
    bigger = SurgeryPresentation(tuple(framings) + (eps,), pres.edges + ((v, pres.size),))
    before = sorted(mu(pres, s) for s in characteristic_sublinks(pres))
    after = sorted(mu(bigger, s) for s in characteristic_sublinks(bigger))
    assert before == after


@given(tree(max_n=4))
def test_mu_split_blowup(pres):
    if pres.h1_order() == 0:
        return
    for eps in (1, -1):
        bigger = pres.direct_sum(SurgeryPresentation((eps,)))
        assert sorted(mu(pres, s) for s in characteristic_sublinks(pres)) == sorted(
            mu(bigger, s) for s in characteristic_sublinks(bigger)
        )


@settings(max_examples=40)
@given(tree(max_n=3, lo=2, hi=5), st.data())
def test_oracle_matches_box_search_positive(pres, data):
    if inertia(pres.matrix)[0] != pres.size or len(bad_vertices(pres)) > 1:
        return
    m = pres.matrix
    cov = tuple(m[i][i] % 2 + 2 * data.draw(st.integers(-2, 2)) for i in range(pres.size))
    assert d_lattice_oracle(pres, cov) == brute_d(pres, cov)


@settings(max_examples=40)
@given(tree(max_n=3, lo=-5, hi=-2), st.data())
def test_oracle_matches_box_search_negative(pres, data):
    if inertia(pres.matrix)[1] != pres.size or len(bad_vertices(pres)) > 1:
        return
    m = pres.matrix
    cov = tuple(m[i][i] % 2 + 2 * data.draw(st.integers(-2, 2)) for i in range(pres.size))
    assert d_lattice_oracle(pres, cov) == brute_d(pres, cov)
    flipped = tuple(e * k for e, k in zip(pres.bipartition_signs(), cov))
    assert d_lattice_oracle(pres.negated(), flipped) == -d_lattice_oracle(pres, cov)


@given(tree(max_n=4, lo=2, hi=6))
def test_spin_d_and_mu_agree_mod_8(pres):
    # spin structures satisfy 4d + mu = 0 (mod 8)
    if inertia(pres.matrix)[0] != pres.size or len(bad_vertices(pres)) > 1:
        return
    for s in characteristic_sublinks(pres):
        d = d_lattice_oracle(pres, s)
        assert (4 * d + mu(pres, s)) % 8 == 0
        assert spin_covector(pres, s) == tuple(
            sum(pres.matrix[i][j] * s.c[j] for j in range(pres.size)) for i in range(pres.size)
        )
