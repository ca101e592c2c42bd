"""Polynomial literal syntax.

Grammar (whitespace-insensitive)::

    operand  := expr [ '@' grade ]
    grade    := INT { ',' INT }
    expr     := [sign] term { sign term }
    term     := factor { '*' factor }
    factor   := coeff | var [ '^' [ '-' ] INT ]
    coeff    := INT [ '/' INT ]
    var      := ('x' | 'z') [ '[' INT ',' INT ']' ]

``x[i,a]`` is slot ``a`` (1-based) of vertex ``i`` (0-based); bare ``x`` means
``x[0,1]``.  ``z`` variables build Laurent polynomials and may carry negative
exponents.  Without ``@`` the grade is the zero vector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .symfun import LaurentPoly, MultiPoly, VarSpec, _add_into


class LiteralError(ValueError):
    """Malformed literal; carries 1-based line and column."""

    def __init__(self, msg: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.column = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([xz])|(.))")


@dataclass
class _Tok:
    kind: str
    value: object
    pos: int


def _tokens(text: str) -> List[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(_Tok("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(_Tok("var", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^[],@":
                raise LiteralError(f"unexpected character {ch!r}", text, m.start(3))
            out.append(_Tok(ch, ch, m.start(3)))
        pos = m.end()
    out.append(_Tok("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.k = 0

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def take(self, kind: Optional[str] = None) -> _Tok:
        t = self.toks[self.k]
        if kind is not None and t.kind != kind:
            want = "integer" if kind == "int" else repr(kind)
            got = "end of input" if t.kind == "end" else repr(t.value)
            raise LiteralError(f"expected {want}, found {got}", self.text, t.pos)
        self.k += 1
        return t

    def operand(self):
        terms = self.expr()
        grade = None
        if self.peek().kind == "@":
            self.take("@")
            grade = [self.take("int").value]
            while self.peek().kind == ",":
                self.take(",")
                grade.append(self.take("int").value)
        t = self.peek()
        if t.kind != "end":
            raise LiteralError(f"unexpected {t.value!r}", self.text, t.pos)
        return terms, grade

    def expr(self):
        terms = []
        sign = 1
        if self.peek().kind in "+-":
            sign = -1 if self.take().kind == "-" else 1
        terms.append(self.term(sign))
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
            terms.append(self.term(sign))
        return terms

    def term(self, sign):
        box = [Fraction(sign)]
        mono = {}
        self.factor(mono, box)
        while self.peek().kind == "*":
            self.take("*")
            self.factor(mono, box)
        return box[0], mono

    def factor(self, mono, box):
        t = self.peek()
        if t.kind == "int":
            self.take()
            num = t.value
            den = 1
            if self.peek().kind == "/":
                self.take("/")
                d = self.take("int")
                if d.value == 0:
                    raise LiteralError("division by zero", self.text, d.pos)
                den = d.value
            box[0] *= Fraction(num, den)
            return
        if t.kind == "var":
            self.take()
            i, a = 0, 1
            if self.peek().kind == "[":
                self.take("[")
                i = self.take("int").value
                self.take(",")
                at = self.take("int")
                if at.value < 1:
                    raise LiteralError("slot index is 1-based", self.text, at.pos)
                a = at.value
                self.take("]")
            e = 1
            if self.peek().kind == "^":
                self.take("^")
                neg = False
                if self.peek().kind == "-":
                    self.take("-")
                    neg = True
                e = self.take("int").value * (-1 if neg else 1)
            key = (t.value, i, a)
            mono[key] = mono.get(key, 0) + e
            mono.setdefault("_pos", t.pos)
            return
        got = "end of input" if t.kind == "end" else repr(t.value)
        raise LiteralError(f"expected a coefficient or variable, found {got}", self.text, t.pos)


def _norm(c: Fraction):
    return c.numerator if c.denominator == 1 else c


def parse_poly(text: str, gamma: Optional[Sequence[int]] = None, n_vertices: Optional[int] = None):
    """Parse a literal; returns ``(poly, grade)`` with ``poly`` a MultiPoly or LaurentPoly.

    ``gamma`` is used when the literal carries no ``@`` annotation; otherwise
    the annotation wins.  Without either the grade is the zero vector of
    length ``n_vertices`` (default 1).
    """
    terms, grade = _Parser(text).operand()
    if grade is None:
        grade = list(gamma) if gamma is not None else [0] * (n_vertices or 1)
    grade = tuple(grade)
    if n_vertices is not None and len(grade) != n_vertices:
        raise LiteralError(f"grade {grade} has {len(grade)} entries, quiver has {n_vertices} vertices", text,
                           text.find("@") if "@" in text else 0)
    spec = VarSpec(grade)
    letters = {k[0] for _, mono in terms for k in mono if k != "_pos"}
    if len(letters) > 1:
        raise LiteralError("cannot mix x and z variables", text, 0)
    laurent = letters == {"z"}
    out = {}
    for c, mono in terms:
        e = [0] * spec.nvars
        for key, k in mono.items():
            if key == "_pos":
                continue
            _, i, a = key
            if i >= len(grade) or a > grade[i]:
                raise LiteralError(f"variable [{i},{a}] is outside grade {grade}", text, mono["_pos"])
            e[spec.index(i, a - 1)] += k
        if not laurent and any(x < 0 for x in e):
            raise LiteralError("negative exponents need z variables", text, mono.get("_pos", 0))
        _add_into(out, tuple(e), _norm(c))
    cls = LaurentPoly if laurent else MultiPoly
    return cls(spec, out), grade


def format_grade(g: Sequence[int]) -> str:
    return ",".join(str(x) for x in g)
