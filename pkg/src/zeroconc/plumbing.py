"""Framed unknot-component links (linear chains and trees) and their lattices.

A presentation is stored as framings plus an edge list; each edge contributes
a ``+1`` linking number.  The linking matrix is the intersection form of the
4-dimensional 2-handlebody, so everything computed here is exact integer or
rational arithmetic on that form.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import Degenerate, Unsupported
from .linalg import (
    adjugate,
    determinant,
    inertia,
    quadratic_form,
    signature,
    solve_mod2,
)


@dataclass(frozen=True)
class SurgeryPresentation:
    framings: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = len(self.framings)
        norm = []
        for e in self.edges:
            i, j = sorted(int(v) for v in e)
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bad edge {e!r} for {n} components")
            norm.append((i, j))
        if len(set(norm)) != len(norm):
            raise ValueError("repeated edge")
        object.__setattr__(self, "framings", tuple(int(a) for a in self.framings))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self._has_cycle():
            raise ValueError("plumbing graph must be acyclic (chain or tree)")

    def _has_cycle(self) -> bool:
        parent = list(range(len(self.framings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            ri, rj = find(i), find(j)
            if ri == rj:
                return True
            parent[ri] = rj
        return False

    @property
    def size(self) -> int:
        return len(self.framings)

    @property
    def matrix(self) -> list[list[int]]:
        n = self.size
        m = [[0] * n for _ in range(n)]
        for i, a in enumerate(self.framings):
            m[i][i] = a
        for i, j in self.edges:
            m[i][j] = m[j][i] = 1
        return m

    def neighbors(self, v: int) -> list[int]:
        return [j if i == v else i for i, j in self.edges if v in (i, j)]

    @property
    def shape(self) -> str:
        n = self.size
        degrees = [len(self.neighbors(v)) for v in range(n)]
        if len(self.edges) == max(n - 1, 0) and all(d <= 2 for d in degrees):
            return "chain"
        return "tree"

    def negated(self) -> "SurgeryPresentation":
        """Presentation of ``-Y``.

        Its matrix is ``-L`` conjugated by the diagonal sign change
        :meth:`bipartition_signs`, which turns ``-1`` linkings back into ``+1``.
        """
        return SurgeryPresentation(tuple(-a for a in self.framings), self.edges)

    def bipartition_signs(self) -> tuple[int, ...]:
        """``+-1`` per vertex, alternating along every edge."""
        signs = [0] * self.size
        for v, parent in _tree_order(self)[::-1]:
            signs[v] = 1 if parent is None else -signs[parent]
        return tuple(signs)

    def h1_order(self) -> int:
        """``|H_1|`` of the boundary, i.e. ``|det|``; 0 signals ``b_1 > 0``."""
        return abs(determinant(self.matrix))

    def to_json(self) -> str:
        return json.dumps({"framings": list(self.framings), "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text_or_obj) -> "SurgeryPresentation":
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        if not isinstance(obj, dict) or "framings" not in obj:
            raise ValueError('presentation JSON needs a "framings" list')
        return cls(tuple(obj["framings"]), tuple(tuple(e) for e in obj.get("edges", [])))

    def direct_sum(self, other: "SurgeryPresentation") -> "SurgeryPresentation":
        shift = self.size
        return SurgeryPresentation(
            self.framings + other.framings,
            self.edges + tuple((i + shift, j + shift) for i, j in other.edges),
        )


@dataclass(frozen=True)
class CharacteristicSublink:
    """0/1 vector ``c`` with ``L c = diag(L) (mod 2)``."""

    c: tuple[int, ...]

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.c) if x)


def minus_continued_fraction(p: int, q: int) -> list[int]:
    """Expansion ``p/q = a1 - 1/(a2 - 1/(...))`` with every ``a_i >= 2``.

    Requires ``p > q > 0``; ``p/1`` gives ``[p]``.
    """
    if not (p > q > 0) and not (q == 1 and p >= 2):
        raise ValueError(f"need p > q > 0, got {p}/{q}")
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def linear_chain(framings: Sequence[int]) -> SurgeryPresentation:
    return SurgeryPresentation(tuple(framings), tuple((i, i + 1) for i in range(len(framings) - 1)))


def e8_tree(framing: int = 2) -> SurgeryPresentation:
    """E8 plumbing tree: a chain of seven with an eighth vertex on the fifth."""
    edges = [(i, i + 1) for i in range(6)] + [(4, 7)]
    return SurgeryPresentation((framing,) * 8, tuple(edges))


def characteristic_sublinks(pres: SurgeryPresentation) -> list[CharacteristicSublink]:
    """Every characteristic sublink, in lexicographic order of ``c``.

    These are in bijection with spin structures on the boundary.  For chains
    and trees no two chosen components are adjacent; that is asserted here.
    """
    m = pres.matrix
    if determinant(m) == 0:
        raise Degenerate("characteristic sublinks need det != 0")
    n = pres.size
    if n == 0:
        return [CharacteristicSublink(())]
    sol = solve_mod2(m, [m[i][i] for i in range(n)])
    # a symmetric matrix always has its diagonal in its mod-2 image
    assert sol is not None
    base, kernel = sol
    out = []
    for coeffs in itertools.product((0, 1), repeat=len(kernel)):
        v = list(base)
        for use, k in zip(coeffs, kernel):
            if use:
                v = [x ^ y for x, y in zip(v, k)]
        out.append(CharacteristicSublink(tuple(v)))
    for link in out:
        chosen = set(link.components)
        assert not any(i in chosen and j in chosen for i, j in pres.edges), "adjacent characteristic components"
    return sorted(out, key=lambda s: s.c)


def _check_characteristic(pres: SurgeryPresentation, c: Sequence[int]) -> None:
    m = pres.matrix
    if len(c) != pres.size or any(x not in (0, 1) for x in c):
        raise ValueError("characteristic sublink must be a 0/1 vector of full length")
    for i in range(pres.size):
        if (sum(m[i][j] * c[j] for j in range(pres.size)) - m[i][i]) % 2:
            raise ValueError(f"not characteristic at component {i}")


def mu(pres: SurgeryPresentation, sub: CharacteristicSublink) -> int:
    """Rochlin invariant ``sign(L) - c.L.c + 8 Arf(C)`` reduced mod 16."""
    c = sub.c
    _check_characteristic(pres, c)
    chosen = set(sub.components)
    if any(i in chosen and j in chosen for i, j in pres.edges):
        # the Arf term is only known to vanish for split unions of unknots
        raise Unsupported("characteristic sublink has linked components")
    m = pres.matrix
    return (signature(m) - quadratic_form(m, c)) % 16


def spin_covector(pres: SurgeryPresentation, sub: CharacteristicSublink) -> tuple[int, ...]:
    """Characteristic covector ``L c`` whose class is the spin structure's spin^c."""
    m = pres.matrix
    return tuple(sum(m[i][j] * sub.c[j] for j in range(pres.size)) for i in range(pres.size))


def same_spinc_class(pres: SurgeryPresentation, k1: Sequence[int], k2: Sequence[int]) -> bool:
    """True when ``k1 - k2`` lies in ``2 L Z^n``."""
    d, adj = _adjugate_cached(pres)
    n = pres.size
    diff = [a - b for a, b in zip(k1, k2)]
    return all(sum(adj[i][j] * diff[j] for j in range(n)) % (2 * d) == 0 for i in range(n))


def bad_vertices(pres: SurgeryPresentation) -> list[int]:
    return [v for v in range(pres.size) if len(pres.neighbors(v)) > abs(pres.framings[v])]


def _tree_order(pres: SurgeryPresentation) -> list[tuple[int, int | None]]:
    """(vertex, parent) pairs in an order where children precede parents."""
    seen = set()
    order = []
    for root in range(pres.size):
        if root in seen:
            continue
        stack = [(root, None)]
        seen.add(root)
        comp = []
        while stack:
            v, par = stack.pop()
            comp.append((v, par))
            for w in pres.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append((w, v))
        order.extend(reversed(comp))
    return order


@lru_cache(maxsize=4096)
def _adjugate_cached(pres: SurgeryPresentation):
    return adjugate(pres.matrix)


@lru_cache(maxsize=4096)
def _definite_form(pres: SurgeryPresentation):
    """``(sign, positive presentation)`` for a definite lattice the oracle handles."""
    pos, neg, _ = inertia(pres.matrix)
    n = pres.size
    if pos == n:
        sign = 1
    elif neg == n:
        sign, pres = -1, pres.negated()
    else:
        raise Unsupported("lattice oracle needs a definite linking matrix")
    if len(bad_vertices(pres)) > 1:
        raise Unsupported("lattice oracle supports at most one bad vertex")
    return sign, pres


def _min_norm_in_class(pres: SurgeryPresentation, covector: Sequence[int]) -> Fraction:
    """``min K.L^{-1}.K`` over ``K`` in ``covector + 2 L Z^n``; ``L`` positive definite.

    Substituting ``K = L y`` turns the objective into ``y.L.y`` over the coset
    ``L^{-1} covector + 2 Z^n``, which is a sum of vertex and edge terms, so
    a min-plus dynamic program over the tree is exact.  With integers
    ``Y = D y`` (``D = det L``) we seed an upper bound ``B`` from the coset
    point nearest the origin coordinatewise; any point with ``Y.L.Y <= B``
    satisfies ``Y_i^2 <= B (L^{-1})_{ii}``, which bounds each coordinate.
    """
    m = pres.matrix
    n = pres.size
    d, adj = _adjugate_cached(pres)
    y0 = [sum(adj[i][j] * covector[j] for j in range(n)) for i in range(n)]
    step = 2 * d
    reduced = [((y + d) % step) - d for y in y0]
    bound = quadratic_form(m, reduced)
    cands = []
    for i in range(n):
        r, a = reduced[i], adj[i][i]
        lim = isqrt(bound * a // d) + 1
        t = -((lim + r) // step) - 1
        vals = []
        while r + step * t <= lim:
            y = r + step * t
            if y * y * d <= bound * a:
                vals.append(y)
            t += 1
        cands.append(vals)
    biggest = max((abs(v) for vals in cands for v in vals), default=0)
    max_entry = max((abs(x) for row in m for x in row), default=0)
    wide = 4 * (n + 1) * max_entry * biggest * biggest >= 2**62
    dtype = object if wide else np.int64
    arr = [np.array(vals, dtype=dtype) for vals in cands]

    incoming: dict[int, np.ndarray] = {}
    total = 0
    for v, parent in _tree_order(pres):
        own = m[v][v] * arr[v] * arr[v] + incoming.pop(v, 0)
        if parent is None:
            total += int(own.min())
            continue
        grid = own[:, None] + 2 * m[v][parent] * arr[v][:, None] * arr[parent][None, :]
        msg = grid.min(axis=0)
        incoming[parent] = incoming.get(parent, 0) + msg
    return Fraction(total, d * d)


def d_lattice_oracle(pres: SurgeryPresentation, spinc) -> Fraction:
    """Correction term of the boundary from the intersection lattice.

    ``spinc`` is a characteristic covector (tuple of ints) or a
    :class:`CharacteristicSublink`.  For positive-definite ``L`` the value is
    ``min (K.L^{-1}.K - n)/4`` over the class of ``K``; for negative-definite
    ``L`` it is ``max (K.L^{-1}.K + n)/4``.  Valid for chains and trees with
    at most one bad vertex.
    """
    if isinstance(spinc, CharacteristicSublink):
        _check_characteristic(pres, spinc.c)
        spinc = spin_covector(pres, spinc)
    covector = tuple(int(x) for x in spinc)
    n = pres.size
    if len(covector) != n:
        raise ValueError("covector length does not match presentation")
    if n == 0:
        return Fraction(0)
    m = pres.matrix
    if any((covector[i] - m[i][i]) % 2 for i in range(n)):
        raise ValueError("covector is not characteristic")
    sign, pres = _definite_form(pres)
    if sign < 0:
        # K for L corresponds to S K for negated(), S the bipartition signs
        covector = tuple(e * k for e, k in zip(pres.bipartition_signs(), covector))
    value = (_min_norm_in_class(pres, covector) - n) / 4
    return sign * value


def lens_presentation(p: int, q: int) -> SurgeryPresentation:
    """Positive linear plumbing bounding ``L(p, q)`` (``p/q = [a1, ..., an]``)."""
    if gcd(p, q) != 1:
        raise ValueError("gcd(p, q) must be 1")
    return linear_chain(minus_continued_fraction(p, q))


def lens_covector(p: int, q: int, i: int) -> tuple[int, ...]:
    """Characteristic covector for spin^c label ``i`` on ``L(p, q)``.

    In a basis where the chain has ``-1`` linkings the label is
    ``(a1 - 2, ..., a_{n-1} - 2, a_n + 2 i)``; switching to ``+1`` linkings
    flips the sign of every other coordinate counted from the last one.
    """
    a = minus_continued_fraction(p, q)
    n = len(a)
    vec = [x - 2 for x in a[:-1]] + [a[-1] + 2 * i]
    return tuple(v if (n - 1 - k) % 2 == 0 else -v for k, v in enumerate(vec))


def lens_label_of(p: int, q: int, covector: Sequence[int]) -> int:
    """Inverse of :func:`lens_covector`."""
    pres = lens_presentation(p, q)
    for i in range(p):
        if same_spinc_class(pres, covector, lens_covector(p, q, i)):
            return i
    raise ValueError("covector is not characteristic for this lens space")


def as_presentation(obj: SurgeryPresentation | dict | str | Iterable) -> SurgeryPresentation:
    if isinstance(obj, SurgeryPresentation):
        return obj
    return SurgeryPresentation.from_json(obj)
