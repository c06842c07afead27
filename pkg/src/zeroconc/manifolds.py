"""Formal oriented connected sums of lens spaces, Brieskorn spheres, S^1 x S^2.

Orientation convention: ``Lens(p, q)`` is the boundary of the positive-definite
linear plumbing for ``p/q``.  ``Brieskorn(2, 3, 5)`` carries its orientation as
the link of a singularity, i.e. it bounds the negative-definite E8 plumbing.

A spin^c choice on a manifold is a :class:`SpinCSelector` whose tags line up
with ``ThreeManifold.summands``:

* ``Lens``: spin^c label ``i`` in ``0..p-1``
* ``Brieskorn``: ``0`` (the unique structure)
* ``S1xS2``: spin structure bit ``0``/``1`` (both have torsion spin^c ``s0``)
* ``Raw``: a characteristic sublink tuple, i.e. a spin structure
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Union

from . import knots
from .errors import SemanticError, Unsupported
from .plumbing import (
    SurgeryPresentation,
    characteristic_sublinks,
    e8_tree,
    lens_label_of,
    lens_presentation,
    spin_covector,
)


@dataclass(frozen=True)
class Lens:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or not 0 < self.q < self.p or gcd(self.p, self.q) != 1:
            raise SemanticError(f"lens({self.p},{self.q}) needs p >= 2, 0 < q < p, gcd 1", "lens parameters")

    def reversed(self):
        # -L(p, q) = L(p, p - q)
        return Lens(self.p, self.p - self.q)


BRIESKORN_CATALOG = {(2, 3, 5)}


@dataclass(frozen=True)
class Brieskorn:
    a: int
    b: int
    c: int
    orientation: int = 1

    def __post_init__(self):
        t = (self.a, self.b, self.c)
        if list(t) != sorted(t) or any(gcd(x, y) != 1 for x, y in itertools.combinations(t, 2)):
            raise SemanticError(f"brieskorn{t} must be sorted and pairwise coprime", "pairwise coprime")
        if min(t) < 2:
            raise SemanticError(f"brieskorn{t} exponents must be >= 2", "exponents >= 2")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    @property
    def triple(self):
        return (self.a, self.b, self.c)

    def reversed(self):
        return Brieskorn(self.a, self.b, self.c, -self.orientation)


@dataclass(frozen=True)
class S1xS2:
    def reversed(self):
        return self


@dataclass(frozen=True)
class Raw:
    pres: SurgeryPresentation

    def __post_init__(self):
        if self.pres.h1_order() == 0:
            raise SemanticError("raw presentation must have det != 0", "det != 0")

    def reversed(self):
        return Raw(self.pres.negated())


PrimeSummand = Union[Lens, Brieskorn, S1xS2, Raw]


def _summand_key(s: PrimeSummand):
    if isinstance(s, Lens):
        return (0, s.p, s.q)
    if isinstance(s, Brieskorn):
        return (1, s.triple, -s.orientation)
    if isinstance(s, Raw):
        return (2, s.pres.framings, s.pres.edges)
    return (3,)


def _normalize_prime(s: PrimeSummand) -> PrimeSummand | None:
    if isinstance(s, Raw) and s.pres.size == 0:
        return None
    return s


@dataclass(frozen=True)
class ThreeManifold:
    """Connected sum as a sorted multiset of prime summands (``()`` is S^3)."""

    summands: tuple[PrimeSummand, ...] = ()

    def __post_init__(self):
        kept = [s for s in map(_normalize_prime, self.summands) if s is not None]
        object.__setattr__(self, "summands", tuple(sorted(kept, key=_summand_key)))

    @property
    def b1(self) -> int:
        return sum(isinstance(s, S1xS2) for s in self.summands)

    @property
    def core(self) -> "ThreeManifold":
        """The rational homology sphere left after removing S^1 x S^2 summands."""
        return ThreeManifold(tuple(s for s in self.summands if not isinstance(s, S1xS2)))

    def h1_order(self) -> int:
        """``|H_1|`` of the core (torsion part of ``H_1``)."""
        return prod(summand_h1_order(s) for s in self.summands if not isinstance(s, S1xS2))

    def __add__(self, other: "ThreeManifold") -> "ThreeManifold":
        return connected_sum(self, other)


def summand_h1_order(s: PrimeSummand) -> int:
    if isinstance(s, Lens):
        return s.p
    if isinstance(s, Brieskorn):
        return 1
    if isinstance(s, Raw):
        return s.pres.h1_order()
    return 0


S3 = ThreeManifold()


def manifold(*summands: PrimeSummand) -> ThreeManifold:
    return ThreeManifold(tuple(summands))


def connected_sum(*parts: ThreeManifold) -> ThreeManifold:
    return ThreeManifold(tuple(s for y in parts for s in y.summands))


@dataclass(frozen=True)
class SpinCSelector:
    tags: tuple = field(default=())


def _sorted_pairs(pairs: Iterable[tuple[PrimeSummand, object]]):
    return sorted(pairs, key=lambda sv: (_summand_key(sv[0]), repr(sv[1])))


def with_spin(pairs: Iterable[tuple[PrimeSummand, object]]) -> tuple[ThreeManifold, SpinCSelector]:
    """Build a manifold and an aligned selector from (summand, tag) pairs."""
    pairs = _sorted_pairs(pairs)
    return ThreeManifold(tuple(s for s, _ in pairs)), SpinCSelector(tuple(t for _, t in pairs))


def spun_summands(y: ThreeManifold, s: SpinCSelector):
    if len(s.tags) != len(y.summands):
        raise ValueError("spin^c selector does not match the manifold's summands")
    return list(zip(y.summands, s.tags))


def connected_sum_spin(*parts: tuple[ThreeManifold, SpinCSelector]) -> tuple[ThreeManifold, SpinCSelector]:
    return with_spin(pair for y, s in parts for pair in spun_summands(y, s))


def conjugate_label(p: int, q: int, i: int) -> int:
    """Conjugation on lens spin^c labels, ``i -> p + q - 1 - i (mod p)``."""
    return (p + q - 1 - i) % p


def lens_spin_labels(p: int, q: int) -> list[int]:
    """Self-conjugate labels on ``L(p, q)``: one for odd ``p``, two for even."""
    return [i for i in range(p) if conjugate_label(p, q, i) == i]


@lru_cache(maxsize=None)
def lens_spin_sublink(p: int, q: int, i: int):
    """Characteristic sublink of the lens chain realizing spin label ``i``."""
    pres = lens_presentation(p, q)
    for sub in characteristic_sublinks(pres):
        if lens_label_of(p, q, spin_covector(pres, sub)) == i:
            return sub
    raise ValueError(f"label {i} on lens({p},{q}) is not a spin structure")


def summand_presentation(s: PrimeSummand) -> SurgeryPresentation:
    if isinstance(s, Lens):
        return lens_presentation(s.p, s.q)
    if isinstance(s, Brieskorn):
        if s.triple != (2, 3, 5):
            raise Unsupported(f"brieskorn{s.triple} is not in the catalog")
        return e8_tree(-2 * s.orientation)
    if isinstance(s, Raw):
        return s.pres
    raise Unsupported("S1xS2 has no definite presentation")


def _summand_spin_tags(s: PrimeSummand) -> list:
    if isinstance(s, Lens):
        return lens_spin_labels(s.p, s.q)
    if isinstance(s, Brieskorn):
        if s.triple not in BRIESKORN_CATALOG:
            raise Unsupported(f"brieskorn{s.triple} is not in the catalog")
        return [0]
    if isinstance(s, S1xS2):
        return [0, 1]
    return [sub.c for sub in characteristic_sublinks(s.pres)]


def spin_structures(y: ThreeManifold) -> list[SpinCSelector]:
    """All spin structures, ``2^b1 * prod(1 or 2)`` of them for lens sums.

    Ordering is lexicographic with the S^1 x S^2 bits most significant, so
    the first ``len(spin_structures(y.core))`` entries all use bit 0 there.
    """
    per = [_summand_spin_tags(s) for s in y.summands]
    idx_s1s2 = [k for k, s in enumerate(y.summands) if isinstance(s, S1xS2)]
    idx_core = [k for k, s in enumerate(y.summands) if not isinstance(s, S1xS2)]
    out = []
    for bits in itertools.product(*(per[k] for k in idx_s1s2)):
        for core_tags in itertools.product(*(per[k] for k in idx_core)):
            tags = [None] * len(y.summands)
            for k, t in zip(idx_s1s2, bits):
                tags[k] = t
            for k, t in zip(idx_core, core_tags):
                tags[k] = t
            out.append(SpinCSelector(tuple(tags)))
    return out


def is_spin(y: ThreeManifold, s: SpinCSelector) -> bool:
    for summand, tag in spun_summands(y, s):
        if isinstance(summand, Lens) and conjugate_label(summand.p, summand.q, tag) != tag:
            return False
    return True


def _reverse_tag(summand: PrimeSummand, tag):
    if isinstance(summand, Lens):
        # L(p,q) label i corresponds to -L(p,q) = L(p,p-q) label p-1-i
        return (summand.p - 1 - tag) % summand.p
    return tag


def orientation_reverse(y: ThreeManifold, s: SpinCSelector | None = None):
    """``-Y``; with a selector, returns ``(-Y, s')`` carrying the same structure."""
    if s is None:
        return ThreeManifold(tuple(p.reversed() for p in y.summands))
    return with_spin((p.reversed(), _reverse_tag(p, t)) for p, t in spun_summands(y, s))


def branched_cover(k: knots.KnotExpr, n: int) -> ThreeManifold:
    """n-fold cyclic branched cover of S^3 along ``k`` for the catalog cases."""
    if n < 2:
        raise ValueError("branched covers need n >= 2")
    if isinstance(k, knots.Unknot):
        return S3
    if isinstance(k, knots.Mirror):
        return orientation_reverse(branched_cover(k.inner, n))
    if isinstance(k, knots.TwoBridge):
        if n == 2:
            return manifold(Lens(k.p, k.q))
        raise Unsupported(f"{n}-fold cover of twobridge({k.p},{k.q}) is not in the catalog")
    if isinstance(k, knots.Torus):
        if n == 2 and k.p == 2:
            return manifold(Lens(k.q, 1))
        triple = tuple(sorted((n, k.p, k.q)))
        if all(gcd(x, y) == 1 for x, y in itertools.combinations(triple, 2)):
            if triple in BRIESKORN_CATALOG:
                return manifold(Brieskorn(*triple))
            raise Unsupported(f"brieskorn{triple} is not in the catalog")
        raise Unsupported(f"{n}-fold cover of torus({k.p},{k.q}) is not in the catalog")
    raise Unsupported(f"no branched cover construction for {k!r}")


def induced_spin(y: ThreeManifold) -> list[SpinCSelector]:
    """Candidate structures induced by an embedding in S^4.

    S^1 x S^2 bits are fixed to 0 (they do not affect any invariant).  The
    list has one entry whenever every core summand has odd ``|H_1|``.
    """
    return spin_structures(y)[: len(spin_structures(y.core))]
