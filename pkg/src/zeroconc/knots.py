"""Classical knots in S^3: torus knots, 2-bridge knots, Seifert-matrix knots.

Sign convention: ``Torus(2, p)`` carries the Seifert matrix with ``-1`` on the
diagonal and ``+1`` on the superdiagonal, so its signature is ``-(p - 1)``.
Use :class:`Mirror` for the other chirality.  ``TwoBridge(p, 1)`` is the same
knot as ``Torus(2, p)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .errors import SemanticError, Unsupported
from .linalg import determinant as int_det
from .linalg import quadratic_form, signature as form_signature
from .plumbing import characteristic_sublinks, linear_chain, minus_continued_fraction


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class Torus:
    p: int
    q: int

    def __post_init__(self):
        if not (2 <= self.p < self.q) or gcd(self.p, self.q) != 1:
            raise SemanticError(
                f"torus({self.p},{self.q}) is not canonical; build it with torus()", "torus canonical form"
            )


@dataclass(frozen=True)
class TwoBridge:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise SemanticError(f"twobridge({self.p},{self.q}): p must be odd and >= 3", "p odd")
        if not 0 < self.q < self.p:
            raise SemanticError(f"twobridge({self.p},{self.q}): need 0 < q < p", "0 < q < p")
        if gcd(self.p, self.q) != 1:
            raise SemanticError(f"gcd({self.p},{self.q}) != 1", "gcd(p,q) = 1")


@dataclass(frozen=True)
class SeifertMatrix:
    """Knot given only by a Seifert matrix.

    ``quasi_alternating`` lets a caller assert the property; ``None`` means
    nothing is known.
    """

    V: tuple[tuple[int, ...], ...]
    quasi_alternating: Optional[bool] = None

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.V)
        if any(len(r) != len(rows) for r in rows):
            raise SemanticError("Seifert matrix must be square", "square matrix")
        object.__setattr__(self, "V", rows)
        n = len(rows)
        # V - V^T is the intersection form of the Seifert surface: unimodular
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if n % 2 or int_det(skew) != 1:
            raise SemanticError("V - V^T must be unimodular", "det(V - V^T) = 1")


@dataclass(frozen=True)
class Mirror:
    inner: "KnotExpr"


KnotExpr = Union[Unknot, Torus, TwoBridge, SeifertMatrix, Mirror]


def torus(p: int, q: int) -> KnotExpr:
    """Normalizing constructor: sorts parameters, folds signs into a mirror."""
    if p == 0 or q == 0 or gcd(p, q) != 1:
        raise SemanticError(f"gcd({p},{q}) != 1", "gcd(p,q) = 1")
    flip = (p < 0) != (q < 0)
    p, q = sorted((abs(p), abs(q)))
    k = Unknot() if p == 1 else Torus(p, q)
    return mirror(k) if flip else k


def twobridge(p: int, q: int) -> KnotExpr:
    if p == 1:
        return Unknot()
    return TwoBridge(p, q)


def mirror(k: KnotExpr) -> KnotExpr:
    if isinstance(k, Mirror):
        return k.inner
    if isinstance(k, Unknot):
        return k
    return Mirror(k)


def torus_seifert_matrix(p: int) -> list[list[int]]:
    n = p - 1
    return [[-1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def seifert_matrix(k: KnotExpr) -> list[list[int]]:
    if isinstance(k, Unknot):
        return []
    if isinstance(k, SeifertMatrix):
        return [list(r) for r in k.V]
    if isinstance(k, Torus):
        if k.p == 2:
            return torus_seifert_matrix(k.q)
        raise Unsupported(f"no built-in Seifert matrix for torus({k.p},{k.q})")
    if isinstance(k, Mirror):
        # mirror image: V -> -V^T
        v = seifert_matrix(k.inner)
        return [[-v[j][i] for j in range(len(v))] for i in range(len(v))]
    raise Unsupported(f"no Seifert matrix available for {k!r}")


def _symmetrized(v: list[list[int]]) -> list[list[int]]:
    n = len(v)
    return [[v[i][j] + v[j][i] for j in range(n)] for i in range(n)]


def goeritz_signature(p: int, q: int) -> int:
    """Signature of ``TwoBridge(p, q)`` from the tridiagonal Goeritz matrix.

    ``G`` is the linear plumbing matrix of ``p/q = [a1, ..., an]``.  The
    Gordon-Litherland correction equals ``w.G.w`` where ``w`` is the unique
    characteristic vector of ``G`` (``det G = p`` is odd); calibrated on
    ``TwoBridge(p, 1) = Torus(2, p)``.
    """
    chain = linear_chain(minus_continued_fraction(p, q))
    (w,) = characteristic_sublinks(chain)
    g = chain.matrix
    return form_signature(g) - quadratic_form(g, w.c)


def signature(k: KnotExpr) -> int:
    if isinstance(k, Unknot):
        return 0
    if isinstance(k, Mirror):
        return -signature(k.inner)
    if isinstance(k, TwoBridge):
        return goeritz_signature(k.p, k.q)
    if isinstance(k, (Torus, SeifertMatrix)):
        return form_signature(_symmetrized(seifert_matrix(k)))
    raise TypeError(f"not a knot expression: {k!r}")


def determinant(k: KnotExpr) -> int:
    if isinstance(k, Unknot):
        return 1
    if isinstance(k, Mirror):
        return determinant(k.inner)
    if isinstance(k, TwoBridge):
        return k.p
    if isinstance(k, (Torus, SeifertMatrix)):
        return abs(int_det(_symmetrized(seifert_matrix(k))))
    raise TypeError(f"not a knot expression: {k!r}")


def is_quasi_alternating(k: KnotExpr) -> Optional[bool]:
    """True for the alternating catalog families; ``None`` when unknown."""
    if isinstance(k, Mirror):
        return is_quasi_alternating(k.inner)
    if isinstance(k, (Unknot, TwoBridge)):
        return True
    if isinstance(k, Torus):
        return True if k.p == 2 else None
    if isinstance(k, SeifertMatrix):
        return k.quasi_alternating
    raise TypeError(f"not a knot expression: {k!r}")
