"""Text syntax for 2-knot, knot and 3-manifold expressions.

::

    expr     := term ('#' term)*
    term     := 'unknot2' | 'twistspin' '(' int ',' knot ')' | 'ribbon' '(' int ')'
              | 'rev' '(' expr ')' | 'seifert' '(' manifold [',' 'spin' '=' int] ')'
    knot     := 'torus' '(' int ',' int ')' | 'twobridge' '(' int ',' int ')'
              | 'mirror' '(' knot ')' | 'unknot'
    manifold := prime ('#' prime)*
    prime    := 'lens' '(' int ',' int ')' | 'brieskorn' '(' int ',' int ',' int ')'
              | 's1s2' | 's3' | 'raw' '(' '[' ints ']' ',' '[' edges ']' ')' | '-' prime

Whitespace is ignored.  ``parse`` returns normalized expressions and
``to_text`` prints them so that ``parse(to_text(e)) == normalize(e)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import knots
from .errors import ExprSyntaxError, SemanticError
from .manifolds import (
    S3,
    Brieskorn,
    Lens,
    Raw,
    S1xS2,
    ThreeManifold,
    connected_sum,
    manifold,
)
from .plumbing import SurgeryPresentation
from .two_knots import (
    AssertedSeifert,
    ConnSum,
    Reverse,
    Ribbon,
    TwistSpin,
    TwoKnotExpr,
    UnknotS2,
    normalize,
)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),#\-=\[\]]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(f"unexpected {found}", t.pos, expected)

    def accept(self, text: str) -> bool:
        if self.tok.kind != "int" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            self.fail([text])

    def integer(self) -> int:
        neg = self.accept("-")
        if self.tok.kind != "int":
            self.fail(["integer"])
        value = int(self.tok.text)
        self.i += 1
        return -value if neg else value

    def int_args(self, count: int) -> list[int]:
        self.expect("(")
        vals = [self.integer()]
        for _ in range(count - 1):
            self.expect(",")
            vals.append(self.integer())
        self.expect(")")
        return vals

    def finish(self):
        if self.tok.kind != "end":
            self.fail(["#", "end of input"])

    # 2-knots

    def expr(self) -> TwoKnotExpr:
        terms = [self.term()]
        while self.accept("#"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else ConnSum(tuple(terms))

    def term(self) -> TwoKnotExpr:
        t = self.tok
        starts = ["unknot2", "twistspin", "ribbon", "rev", "seifert"]
        if t.kind == "name" and t.text in ("torus", "twobridge", "mirror", "unknot"):
            # validate the knot first so constraint violations are reported as such
            self.knot()
            raise ExprSyntaxError(f"{t.text}(...) is a classical knot, not a 2-knot", t.pos, starts)
        if t.kind != "name" or t.text not in starts:
            self.fail(starts)
        self.i += 1
        if t.text == "unknot2":
            return UnknotS2()
        if t.text == "twistspin":
            self.expect("(")
            n = self.integer()
            self.expect(",")
            k = self.knot()
            self.expect(")")
            return TwistSpin(n, k)
        if t.text == "ribbon":
            (n,) = self.int_args(1)
            return Ribbon(n)
        if t.text == "rev":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Reverse(inner)
        self.expect("(")
        y = self.manifold()
        spin = None
        if self.accept(","):
            self.expect("spin")
            self.expect("=")
            spin = self.integer()
        self.expect(")")
        return AssertedSeifert(y, spin)

    # knots

    def knot(self) -> knots.KnotExpr:
        t = self.tok
        starts = ["torus", "twobridge", "mirror", "unknot"]
        if t.kind != "name" or t.text not in starts:
            self.fail(starts)
        self.i += 1
        if t.text == "unknot":
            return knots.Unknot()
        if t.text == "mirror":
            self.expect("(")
            inner = self.knot()
            self.expect(")")
            return knots.mirror(inner)
        p, q = self.int_args(2)
        if t.text == "torus":
            return knots.torus(p, q)
        return knots.twobridge(p, q)

    # 3-manifolds

    def manifold(self) -> ThreeManifold:
        parts = [self.prime()]
        while self.accept("#"):
            parts.append(self.prime())
        return connected_sum(*parts)

    def prime(self) -> ThreeManifold:
        if self.accept("-"):
            inner = self.prime()
            return ThreeManifold(tuple(s.reversed() for s in inner.summands))
        t = self.tok
        starts = ["lens", "brieskorn", "s1s2", "s3", "raw", "-"]
        if t.kind != "name" or t.text not in starts:
            self.fail(starts)
        self.i += 1
        if t.text == "s1s2":
            return manifold(S1xS2())
        if t.text == "s3":
            return S3
        if t.text == "lens":
            p, q = self.int_args(2)
            if (p, q) == (1, 1):
                return S3
            return manifold(Lens(p, q))
        if t.text == "brieskorn":
            a, b, c = sorted(self.int_args(3))
            return manifold(Brieskorn(a, b, c))
        self.expect("(")
        framings = self.int_list()
        self.expect(",")
        self.expect("[")
        edges = []
        if not self.accept("]"):
            edges.append(tuple(self.bracketed_ints()))
            while self.accept(","):
                edges.append(tuple(self.bracketed_ints()))
            self.expect("]")
        self.expect(")")
        try:
            pres = SurgeryPresentation(tuple(framings), tuple(edges))
        except ValueError as exc:
            raise SemanticError(str(exc), "acyclic plumbing") from exc
        return manifold(Raw(pres))

    def int_list(self) -> list[int]:
        self.expect("[")
        vals = []
        if not self.accept("]"):
            vals.append(self.integer())
            while self.accept(","):
                vals.append(self.integer())
            self.expect("]")
        return vals

    def bracketed_ints(self) -> list[int]:
        vals = self.int_list()
        if len(vals) != 2:
            raise SemanticError("edges are pairs [i,j]", "edge arity")
        return vals


def parse(text: str) -> TwoKnotExpr:
    """Parse a 2-knot expression; raises ExprSyntaxError or SemanticError."""
    p = _Parser(text)
    e = p.expr()
    p.finish()
    return normalize(e)


def parse_knot(text: str) -> knots.KnotExpr:
    p = _Parser(text)
    k = p.knot()
    p.finish()
    return k


def parse_manifold(text: str) -> ThreeManifold:
    p = _Parser(text)
    y = p.manifold()
    p.finish()
    return y


def knot_text(k: knots.KnotExpr) -> str:
    if isinstance(k, knots.Unknot):
        return "unknot"
    if isinstance(k, knots.Torus):
        return f"torus({k.p},{k.q})"
    if isinstance(k, knots.TwoBridge):
        return f"twobridge({k.p},{k.q})"
    if isinstance(k, knots.Mirror):
        return f"mirror({knot_text(k.inner)})"
    raise ValueError(f"{k!r} has no text form")


def _prime_text(s) -> str:
    if isinstance(s, Lens):
        return f"lens({s.p},{s.q})"
    if isinstance(s, Brieskorn):
        body = f"brieskorn({s.a},{s.b},{s.c})"
        return body if s.orientation == 1 else "-" + body
    if isinstance(s, S1xS2):
        return "s1s2"
    framings = ",".join(map(str, s.pres.framings))
    edges = ",".join(f"[{i},{j}]" for i, j in s.pres.edges)
    return f"raw([{framings}],[{edges}])"


def manifold_text(y: ThreeManifold) -> str:
    if not y.summands:
        return "s3"
    return " # ".join(_prime_text(s) for s in y.summands)


def to_text(e: TwoKnotExpr) -> str:
    if isinstance(e, UnknotS2):
        return "unknot2"
    if isinstance(e, TwistSpin):
        return f"twistspin({e.n},{knot_text(e.k)})"
    if isinstance(e, Ribbon):
        return f"ribbon({e.spheres})"
    if isinstance(e, Reverse):
        return f"rev({to_text(e.inner)})"
    if isinstance(e, ConnSum):
        return " # ".join(to_text(p) for p in e.parts)
    if isinstance(e, AssertedSeifert):
        spin = "" if e.spin is None else f",spin={e.spin}"
        return f"seifert({manifold_text(e.Y)}{spin})"
    raise TypeError(f"not a 2-knot expression: {e!r}")
