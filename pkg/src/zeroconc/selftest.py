"""Fast consistency checks runnable from the command line."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import knots
from .engine import POINCARE_KNOT, profile, signature_check, signature_factor
from .invariants import d_lens, mu_manifold, spin_label
from .manifolds import Lens, conjugate_label, manifold, spin_structures
from .plumbing import d_lattice_oracle, e8_tree, lens_covector, lens_presentation


def _lens_anchor():
    return all(d_lens(p, 1, spin_label(p, 1)) == Fraction(p - 1, 4) for p in range(3, 200, 2))


def _oracle(limit=20):
    for p in range(2, limit + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            pres = lens_presentation(p, q)
            for i in range(p):
                if d_lattice_oracle(pres, lens_covector(p, q, i)) != d_lens(p, q, i):
                    return False
    return True


def _conjugation(limit=40):
    return all(
        d_lens(p, q, i) == d_lens(p, q, conjugate_label(p, q, i))
        for p in range(2, limit + 1)
        for q in range(1, p)
        if gcd(p, q) == 1
        for i in range(p)
    )


def _poincare():
    prof = profile(POINCARE_KNOT)
    return prof.d_bar == 2 and prof.mu == 8 and d_lattice_oracle(e8_tree(-2), (0,) * 8) == 2


def _rochlin():
    y = manifold(Lens(2, 1))
    return sorted(mu_manifold(y, s) for s in spin_structures(y)) == [1, 15]


def _signature_relation():
    for p in range(3, 32, 2):
        r = signature_check(knots.torus(2, p))
        if not (r.signature == -(p - 1) == knots.signature(knots.twobridge(p, 1)) and r.relation_holds and r.obstructed):
            return False
    return True


CHECKS = [
    ("lens anchor d(L(p,1)) = (p-1)/4, odd p < 200", _lens_anchor),
    ("lattice oracle = recursion, p <= 20", _oracle),
    ("conjugation symmetry of d, p <= 40", _conjugation),
    ("Poincare sphere d = 2, mu = 8", _poincare),
    ("Rochlin invariants of L(2,1) are {1, 15}", _rochlin),
    ("signature = c * d on torus(2,p), p <= 31", _signature_relation),
]


def run_selftest(out=print) -> bool:
    out("orientation: lens(p,q) bounds the positive-definite linear plumbing of p/q")
    out("orientation: brieskorn(2,3,5) bounds the negative-definite E8 plumbing")
    out(f"signature factor c = {signature_factor()} (sigma = c * d)")
    ok = True
    for name, fn in CHECKS:
        passed = bool(fn())
        ok &= passed
        out(f"[{'PASS' if passed else 'FAIL'}] {name}")
    return ok
