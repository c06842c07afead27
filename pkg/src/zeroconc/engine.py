"""Invariant profiles of 2-knots and 0-concordance verdicts.

0-concordant 2-knots have equal Rochlin invariants, and equal d-invariants
of their (destabilized) rational-homology-sphere Seifert hypersurfaces.  Both
invariants here are computed up to S^1 x S^2 stabilization, so a mismatch in
either one obstructs 0-concordance.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from . import knots
from .errors import NotQuasiAlternating, Unsupported
from .invariants import Unknown, d_manifold, d_normalized, is_known, mu_manifold
from .manifolds import Lens, manifold, spin_structures
from .two_knots import (
    AssertedSeifert,
    TwistSpin,
    TwoKnotExpr,
    UnknotS2,
    conn_sum,
    contains_assertion,
    normalize,
    seifert_candidates,
    seifert_hypersurface,
)


@dataclass(frozen=True)
class InvariantProfile:
    """Invariants of a 2-knot, one ``(mu, d_bar)`` pair per candidate spin structure."""

    candidates: tuple
    h1_order: Union[int, Unknown]
    conditional: bool = False
    notes: tuple = field(default=(), compare=False)

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1

    @property
    def mu(self):
        vals = {c[0] for c in self.candidates}
        return vals.pop() if len(vals) == 1 else tuple(c[0] for c in self.candidates)

    @property
    def d_bar(self):
        vals = {c[1] for c in self.candidates}
        return vals.pop() if len(vals) == 1 else tuple(c[1] for c in self.candidates)


def profile(e: TwoKnotExpr) -> InvariantProfile:
    """Rochlin invariant and normalized d of the Seifert hypersurface.

    Unsupported constructions give :class:`Unknown` entries, never errors.
    """
    conditional = contains_assertion(e)
    try:
        cands = seifert_candidates(e)
    except Unsupported as exc:
        u = Unknown(str(exc))
        return InvariantProfile(((u, u),), u, conditional, (str(exc),))
    pairs = tuple((mu_manifold(d.Y, d.s), d_normalized(d.Y, d.s)) for d in cands)
    notes = []
    for d in cands:
        notes.extend(n for n in d.notes if n not in notes)
    if len(cands) > 1:
        notes.append(f"{len(cands)} candidate spin structures")
    for m, dv in pairs:
        for v in (m, dv):
            if isinstance(v, Unknown) and v.reason not in notes:
                notes.append(v.reason)
    return InvariantProfile(pairs, cands[0].Y.h1_order(), conditional, tuple(notes))


@dataclass(frozen=True)
class Distinguished:
    witnesses: frozenset


@dataclass(frozen=True)
class NotObstructed:
    unknowns: tuple = ()


@dataclass(frozen=True)
class ConditionalOnAssertion:
    inner: Union[Distinguished, NotObstructed]


Verdict = Union[Distinguished, NotObstructed, ConditionalOnAssertion]


def _differs(a, b) -> bool:
    return is_known(a) and is_known(b) and a != b


def compare_profiles(p1: InvariantProfile, p2: InvariantProfile) -> Verdict:
    pairings = list(itertools.product(p1.candidates, p2.candidates))
    mu_all = all(_differs(a[0], b[0]) for a, b in pairings)
    d_all = all(_differs(a[1], b[1]) for a, b in pairings)
    covered = all(_differs(a[0], b[0]) or _differs(a[1], b[1]) for a, b in pairings)
    if covered:
        witnesses = {name for name, flag in (("mu", mu_all), ("d", d_all)) if flag} or {"mu", "d"}
        verdict: Verdict = Distinguished(frozenset(witnesses))
    else:
        unknowns = []
        for side, prof in (("K1", p1), ("K2", p2)):
            for name, idx in (("mu", 0), ("d_bar", 1)):
                if any(not is_known(c[idx]) for c in prof.candidates):
                    unknowns.append(f"{name}({side})")
        verdict = NotObstructed(tuple(unknowns))
    if p1.conditional or p2.conditional:
        return ConditionalOnAssertion(verdict)
    return verdict


def compare(k1: TwoKnotExpr, k2: TwoKnotExpr) -> Verdict:
    """Obstruct 0-concordance of ``k1`` and ``k2`` when possible.

    ``Distinguished`` needs the invariants to differ for every pairing of
    candidate spin structures; otherwise the result is ``NotObstructed``.
    """
    return compare_profiles(profile(k1), profile(k2))


def is_distinguished(v: Verdict) -> bool:
    if isinstance(v, ConditionalOnAssertion):
        v = v.inner
    return isinstance(v, Distinguished)


CALIBRATION_KNOT = knots.torus(2, 3)


def double_cover_d(k: knots.KnotExpr) -> Union[Fraction, Unknown]:
    """d of the double branched cover in the structure induced from S^4."""
    try:
        data = seifert_hypersurface(TwistSpin(2, k))
    except Unsupported as exc:
        return Unknown(str(exc))
    return d_manifold(data.Y, data.s)


@lru_cache(maxsize=None)
def signature_factor() -> Fraction:
    """Constant ``c`` with ``sigma(K) = c * d(Sigma_2(K))``, fixed on the trefoil."""
    return Fraction(knots.signature(CALIBRATION_KNOT)) / double_cover_d(CALIBRATION_KNOT)


CONVENTION_NOTE = (
    "lens spaces are oriented as positive plumbing boundaries and sigma(torus(2,3)) = -2, "
    "so the relation reads sigma = c*d with c calibrated on the trefoil"
)


@dataclass(frozen=True)
class SignatureReport:
    knot: knots.KnotExpr
    signature: int
    d: Union[Fraction, Unknown]
    factor: Fraction
    relation_holds: Optional[bool]
    obstructed: Optional[bool]
    notes: tuple = ()


def signature_check(k: knots.KnotExpr) -> SignatureReport:
    """Signature versus double-cover d for a quasi-alternating knot.

    ``obstructed`` is True when ``d != 0``; then the 2-twist spin of ``k``
    is not 0-slice.
    """
    if knots.is_quasi_alternating(k) is not True:
        raise NotQuasiAlternating(f"{k!r} is not known to be quasi-alternating")
    sigma = knots.signature(k)
    d = double_cover_d(k)
    c = signature_factor()
    notes = [CONVENTION_NOTE]
    if isinstance(d, Unknown):
        notes.append(d.reason)
        return SignatureReport(k, sigma, d, c, None, None, tuple(notes))
    return SignatureReport(k, sigma, d, c, sigma == c * d, d != 0, tuple(notes))


@dataclass(frozen=True)
class FamilyMember:
    expr: TwoKnotExpr
    profile: InvariantProfile


POINCARE_KNOT = TwistSpin(5, knots.torus(2, 3))
LENS_GENERATOR = TwistSpin(2, knots.twobridge(3, 1))


def rp3_mu_one() -> AssertedSeifert:
    """Asserted L(2,1) hypersurface in the spin structure with Rochlin invariant 1."""
    y = manifold(Lens(2, 1))
    idx = next(i for i, s in enumerate(spin_structures(y)) if mu_manifold(y, s) == 1)
    return AssertedSeifert(y, idx, label="L(2,1) fiber")


def copies(e: TwoKnotExpr, k: int) -> TwoKnotExpr:
    return conn_sum(*([e] * k)) if k else UnknotS2()


def family(kind: str, size: int) -> list[FamilyMember]:
    """Pairwise non-0-concordant families.

    ``"d"``: ``k``-fold sums of the 5-twist-spun trefoil, ``k = 1..size``.
    ``"mu"``: catalog sums ``k * twistspin(2, twobridge(3,1))`` for
    ``k < min(size, 8)`` (the even residues), then asserted ``L(2,1)``
    sums for ``1 <= k < min(size, 16)`` (conditional).
    """
    if size < 1:
        raise ValueError("family size must be >= 1")
    kind = kind.removesuffix("-family")
    if kind == "d":
        exprs = [copies(POINCARE_KNOT, k) for k in range(1, size + 1)]
    elif kind == "mu":
        exprs = [copies(LENS_GENERATOR, k) for k in range(min(size, 8))]
        gen = rp3_mu_one()
        exprs += [copies(gen, k) for k in range(1, min(size, 16))]
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    return [FamilyMember(normalize(e), profile(e)) for e in exprs]
