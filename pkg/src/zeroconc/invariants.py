"""Correction terms and Rochlin invariants of formal connected sums."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

from .errors import Unsupported
from .manifolds import (
    BRIESKORN_CATALOG,
    Brieskorn,
    Lens,
    Raw,
    S1xS2,
    SpinCSelector,
    ThreeManifold,
    conjugate_label,
    lens_spin_sublink,
    spun_summands,
    summand_presentation,
)
from .plumbing import CharacteristicSublink, d_lattice_oracle, mu as mu_presentation

# d of the Poincare sphere, oriented as the boundary of the negative E8 plumbing
POINCARE_D = Fraction(2)


@dataclass(frozen=True)
class Unknown:
    reason: str

    def __str__(self):
        return f"unknown ({self.reason})"


DValue = Union[Fraction, Unknown]
MuValue = Union[int, Unknown]


def is_known(x) -> bool:
    return not isinstance(x, Unknown)


def add_values(values, modulus=None):
    """Sum that short-circuits to the first :class:`Unknown`."""
    total = 0
    for v in values:
        if isinstance(v, Unknown):
            return v
        total += v
    return total % modulus if modulus else total


@lru_cache(maxsize=None)
def _d_lens(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    return Fraction((2 * i + 1 - p - q) ** 2 - p * q, 4 * p * q) - _d_lens(q, p % q, i % q)


def d_lens(p: int, q: int, i: int) -> Fraction:
    """d-invariant of ``L(p, q)`` in spin^c label ``i``.

    ``d(L(p,q), i) = ((2i + 1 - p - q)^2 - pq) / 4pq - d(L(q, p mod q), i mod q)``
    with ``d(L(1, 0), 0) = 0``.  The spin label of ``L(p, 1)`` has value
    ``(p - 1)/4``.
    """
    if p < 1 or gcd(p, q) != 1 or (p > 1 and not 0 < q < p) or (p == 1 and q not in (0, 1)):
        raise ValueError(f"need gcd(p,q) = 1 and 0 < q < p, got ({p},{q})")
    if not 0 <= i < p:
        raise ValueError(f"spin^c label {i} out of range for p = {p}")
    return _d_lens(p, q % p if p > 1 else 0, i)


def spin_label(p: int, q: int) -> int:
    """The unique self-conjugate label for odd ``p``."""
    labels = [i for i in range(p) if conjugate_label(p, q, i) == i]
    if len(labels) != 1:
        raise ValueError(f"lens({p},{q}) has {len(labels)} spin structures")
    return labels[0]


def _summand_d(summand, tag) -> DValue:
    if isinstance(summand, Lens):
        return d_lens(summand.p, summand.q, tag)
    if isinstance(summand, S1xS2):
        return Fraction(-1, 2)
    if isinstance(summand, Brieskorn):
        if summand.triple not in BRIESKORN_CATALOG:
            return Unknown(f"brieskorn{summand.triple} not in catalog")
        return summand.orientation * POINCARE_D
    if isinstance(summand, Raw):
        try:
            return d_lattice_oracle(summand.pres, CharacteristicSublink(tuple(tag)))
        except (Unsupported, ValueError) as exc:
            return Unknown(str(exc))
    return Unknown(f"unsupported summand {summand!r}")


def d_manifold(y: ThreeManifold, s: SpinCSelector) -> DValue:
    """Additive d over summands; each S^1 x S^2 contributes ``-1/2``."""
    return add_values(_summand_d(summand, tag) for summand, tag in spun_summands(y, s))


def d_normalized(y: ThreeManifold, s: SpinCSelector) -> DValue:
    """``d(Y) + b1(Y)/2``, unchanged by adding S^1 x S^2 summands."""
    d = d_manifold(y, s)
    if isinstance(d, Unknown):
        return d
    return d + Fraction(y.b1, 2)


def _summand_mu(summand, tag) -> MuValue:
    if isinstance(summand, S1xS2):
        return 0
    try:
        pres = summand_presentation(summand)
        if isinstance(summand, Lens):
            sub = lens_spin_sublink(summand.p, summand.q, tag)
        elif isinstance(summand, Raw):
            sub = CharacteristicSublink(tuple(tag))
        else:
            sub = CharacteristicSublink((0,) * pres.size)
        return mu_presentation(pres, sub)
    except (Unsupported, ValueError) as exc:
        return Unknown(str(exc))


def mu_manifold(y: ThreeManifold, s: SpinCSelector) -> MuValue:
    """Rochlin invariant mod 16, summed over prime summands."""
    return add_values((_summand_mu(summand, tag) for summand, tag in spun_summands(y, s)), modulus=16)
