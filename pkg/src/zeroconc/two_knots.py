"""2-knots in S^4 as formal expressions, and their Seifert hypersurfaces.

For ``n >= 2`` the complement of the ``n``-twist spin of ``k`` fibers over
the circle with fiber the punctured ``n``-fold branched cover of ``k``, which
is therefore a Seifert hypersurface.  A ribbon knot built from ``n`` spheres
bounds a punctured ``#(n-1) S^1 x S^2``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from . import knots
from .errors import Ambiguous, SemanticError
from .manifolds import (
    S3,
    S1xS2,
    SpinCSelector,
    ThreeManifold,
    branched_cover,
    connected_sum_spin,
    induced_spin,
    orientation_reverse,
    spin_structures,
    with_spin,
)


@dataclass(frozen=True)
class UnknotS2:
    pass


@dataclass(frozen=True)
class TwistSpin:
    n: int
    k: knots.KnotExpr

    def __post_init__(self):
        if self.n < 0:
            raise SemanticError("twist-spin parameter must be >= 0; use rev() for orientation", "n >= 0")


@dataclass(frozen=True)
class Ribbon:
    spheres: int

    def __post_init__(self):
        if self.spheres < 1:
            raise SemanticError("ribbon knots need at least one sphere", "spheres >= 1")


@dataclass(frozen=True)
class ConnSum:
    parts: tuple


@dataclass(frozen=True)
class Reverse:
    inner: "TwoKnotExpr"


@dataclass(frozen=True)
class AssertedSeifert:
    """A 2-knot known only through an asserted Seifert hypersurface.

    ``spin`` indexes :func:`spin_structures` of ``Y``; ``None`` leaves the
    induced structure open.
    """

    Y: ThreeManifold
    spin: Optional[int] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.spin is not None and not 0 <= self.spin < len(spin_structures(self.Y)):
            raise SemanticError(f"spin index {self.spin} out of range", "spin index in range")


TwoKnotExpr = Union[UnknotS2, TwistSpin, Ribbon, ConnSum, Reverse, AssertedSeifert]


def normalize(e: TwoKnotExpr) -> TwoKnotExpr:
    """Canonical form: flattened sorted sums, trivial spins removed."""
    if isinstance(e, TwistSpin):
        if e.n == 1 or isinstance(e.k, knots.Unknot):
            return UnknotS2()
        return e
    if isinstance(e, Ribbon):
        return UnknotS2() if e.spheres == 1 else e
    if isinstance(e, Reverse):
        inner = normalize(e.inner)
        if isinstance(inner, Reverse):
            return inner.inner
        if isinstance(inner, (UnknotS2, Ribbon)):
            return inner
        if isinstance(inner, ConnSum):
            return normalize(ConnSum(tuple(Reverse(p) for p in inner.parts)))
        return Reverse(inner)
    if isinstance(e, ConnSum):
        flat = []
        for part in e.parts:
            part = normalize(part)
            if isinstance(part, ConnSum):
                flat.extend(part.parts)
            elif not isinstance(part, UnknotS2):
                flat.append(part)
        if not flat:
            return UnknotS2()
        if len(flat) == 1:
            return flat[0]
        return ConnSum(tuple(sorted(flat, key=repr)))
    return e


def conn_sum(*parts: TwoKnotExpr) -> TwoKnotExpr:
    return normalize(ConnSum(tuple(parts)))


def contains_assertion(e: TwoKnotExpr) -> bool:
    if isinstance(e, AssertedSeifert):
        return True
    if isinstance(e, Reverse):
        return contains_assertion(e.inner)
    if isinstance(e, ConnSum):
        return any(contains_assertion(p) for p in e.parts)
    return False


@dataclass(frozen=True)
class SeifertData:
    Y: ThreeManifold
    s: SpinCSelector
    stabilizations: int = 0
    notes: tuple = field(default=(), compare=False)


def _sum_data(parts: list[SeifertData]) -> SeifertData:
    y, s = connected_sum_spin(*((d.Y, d.s) for d in parts)) if parts else (S3, SpinCSelector(()))
    notes = tuple(n for d in parts for n in d.notes)
    return SeifertData(y, s, sum(d.stabilizations for d in parts), notes)


def seifert_candidates(e: TwoKnotExpr) -> list[SeifertData]:
    """Every admissible (hypersurface, induced spin structure) pair.

    More than one entry only when some summand has even ``|H_1|`` and the
    structure induced from S^4 is not pinned down.
    """
    e = normalize(e)
    if isinstance(e, UnknotS2):
        return [SeifertData(S3, SpinCSelector(()))]
    if isinstance(e, Ribbon):
        return [stabilize(SeifertData(S3, SpinCSelector(())), e.spheres - 1)]
    if isinstance(e, TwistSpin):
        if e.n == 0:
            return [SeifertData(S3, SpinCSelector(()), 0, ("spun knot is ribbon; hypersurface taken up to stabilization",))]
        y = branched_cover(e.k, e.n)
        return [SeifertData(y, s) for s in induced_spin(y)]
    if isinstance(e, AssertedSeifert):
        if e.spin is not None:
            choices = [spin_structures(e.Y)[e.spin]]
        else:
            choices = induced_spin(e.Y)
        note = f"asserted hypersurface{': ' + e.label if e.label else ''}"
        return [SeifertData(e.Y, s, e.Y.b1, (note,)) for s in choices]
    if isinstance(e, Reverse):
        out = []
        for d in seifert_candidates(e.inner):
            y, s = orientation_reverse(d.Y, d.s)
            out.append(SeifertData(y, s, d.stabilizations, d.notes))
        return out
    if isinstance(e, ConnSum):
        per_part = [seifert_candidates(p) for p in e.parts]
        return [_sum_data(list(combo)) for combo in itertools.product(*per_part)]
    raise TypeError(f"not a 2-knot expression: {e!r}")


def seifert_hypersurface(e: TwoKnotExpr) -> SeifertData:
    cands = seifert_candidates(e)
    if len(cands) > 1:
        raise Ambiguous("induced spin structure is not determined", cands)
    return cands[0]


def stabilize(data: SeifertData, n: int) -> SeifertData:
    """Connected sum with ``n`` copies of S^1 x S^2."""
    if n < 0:
        raise ValueError("stabilization count must be >= 0")
    pairs = [(S1xS2(), 0)] * n
    y, s = with_spin(list(zip(data.Y.summands, data.s.tags)) + pairs)
    return replace(data, Y=y, s=s, stabilizations=data.stabilizations + n)
