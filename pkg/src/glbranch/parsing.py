"""Text syntax for cuspidals, segments, series and multisegments.

::

    exponent    := ['-'|'+'] INT ['/' INT]
    cuspidal    := 'nu(' exponent ')' ['*' 'rho(' NAME ',' INT [',' NAME] ')']
    segment     := cuspidal ['..' cuspidal] | '[' cuspidal ['..' cuspidal] ']'
    factor      := cuspidal | 'Q[' segment ']' | 'Z[' segment ']'
    series      := factor ('x' factor)*
    multiseg    := 'Z(' segment (';' segment)* ')'
    generic     := 'Q(' segment (';' segment)* ')'

``nu(e)`` alone lives on the trivial character line. ``rho(NAME,SIZE)`` names
a line of cuspidals of ``G_SIZE``; its dual is ``NAME~`` unless a third
argument names it. Whitespace is insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    TRIVIAL,
    TRIVIAL_LINE_ID,
    CuspidalLine,
    CuspidalRep,
    Multisegment,
    Segment,
    default_dual_id,
    normalize_multisegment,
)
from .errors import DomainError, ParseError, SemanticError
from .series import GenericRep, PrincipalSeries, Qseg, Zseg, make_factor

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<dots>\.\.)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*~?)
  | (?P<times>×)
  | (?P<punct>[()\[\];,*/+\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(src: str) -> list:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "times" or kind == "name" and text == "x":
            kind = "x"
        elif kind == "punct":
            kind = text
        if kind != "ws":
            tokens.append(Token(kind, text, line, col))
        for ch in text:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0
        self.lines = {}

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, expected, tok=None):
        tok = tok or self.tok
        found = repr(tok.text) if tok.kind != "end" else "end of input"
        return ParseError(f"unexpected {found}", tok.line, tok.column, expected)

    def accept(self, kind, text=None):
        if self.tok.kind == kind and (text is None or self.tok.text == text):
            tok = self.tok
            self.i += 1
            return tok
        return None

    def expect(self, kind, text=None, what=None):
        tok = self.accept(kind, text)
        if tok is None:
            raise self.error(what or repr(text or kind))
        return tok

    # -- pieces -----------------------------------------------------------

    def exponent(self) -> Fraction:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        num = int(self.expect("int", what="an integer exponent").text)
        den = 1
        if self.accept("/"):
            tok = self.expect("int", what="a denominator")
            den = int(tok.text)
            if den == 0:
                raise SemanticError("zero denominator", tok.line, tok.column)
        return sign * Fraction(num, den)

    def line_decl(self) -> CuspidalLine:
        start = self.expect("name", "rho", "'rho'")
        self.expect("(", what="'('")
        tok = self.tok
        if tok.kind not in ("name", "int", "x"):
            raise self.error("a line name")
        self.i += 1
        name = tok.text
        self.expect(",", what="','")
        size_tok = self.expect("int", what="a line size")
        size = int(size_tok.text)
        dual = None
        if self.accept(","):
            dtok = self.tok
            if dtok.kind not in ("name", "int", "x"):
                raise self.error("a dual line name")
            self.i += 1
            dual = dtok.text
        self.expect(")", what="')'")
        try:
            line = CuspidalLine(name, size, dual)
        except DomainError as exc:
            raise SemanticError(str(exc), start.line, start.column) from None
        known = self.lines.setdefault(name, line)
        if known != line:
            raise SemanticError(
                f"line {name!r} declared inconsistently", start.line, start.column
            )
        return line

    def cuspidal(self) -> CuspidalRep:
        self.expect("name", "nu", "'nu('")
        self.expect("(", what="'('")
        e = self.exponent()
        self.expect(")", what="')'")
        line = TRIVIAL
        if self.accept("*"):
            line = self.line_decl()
        return CuspidalRep(line, e)

    def segment_body(self) -> Segment:
        first = self.tok
        lo = self.cuspidal()
        if not self.accept("dots"):
            return Segment(lo, 1)
        return self._make_segment(lo, self.cuspidal(), first)

    def segment(self) -> Segment:
        if self.accept("["):
            d = self.segment_body()
            self.expect("]", what="']'")
            return d
        return self.segment_body()

    def segment_list(self) -> list:
        segs = [self.segment()]
        while self.accept(";"):
            segs.append(self.segment())
        return segs

    def factor(self):
        tok = self.tok
        if tok.kind == "name" and tok.text in ("Q", "Z") and self.peek().kind == "[":
            self.i += 2
            d = self.segment_body()
            self.expect("]", what="']'")
            return make_factor(Qseg(d) if tok.text == "Q" else Zseg(d))
        if tok.kind == "name" and tok.text == "nu":
            return self.cuspidal()
        raise self.error("a factor: nu(...), Q[...] or Z[...]")

    def series_rest(self, first) -> PrincipalSeries:
        facs = [first]
        while self.accept("x"):
            facs.append(self.factor())
        return PrincipalSeries(tuple(facs))

    # -- entry points ---------------------------------------------------

    def finish(self, value):
        if self.tok.kind != "end":
            raise self.error("end of input")
        return value

    def expression(self):
        tok = self.tok
        if tok.kind == "name" and tok.text in ("Q", "Z") and self.peek().kind == "(":
            return self.finish(self.bracketed_list())
        if tok.kind == "[":
            return self.finish(self.segment())
        if tok.kind == "name" and tok.text == "nu":
            first = self.cuspidal()
            if self.accept("dots"):
                return self.finish(self._make_segment(first, self.cuspidal(), tok))
            return self.finish(self.series_rest(first))
        return self.finish(self.series_rest(self.factor()))

    def _make_segment(self, lo, hi, tok):
        if lo.line != hi.line:
            raise SemanticError("segment ends lie on different lines", tok.line, tok.column)
        m = lo.offset(hi)
        if m is None:
            raise SemanticError(
                "segment ends are not an integer distance apart", tok.line, tok.column
            )
        if m < 0:
            raise SemanticError("segment end precedes its start", tok.line, tok.column)
        return Segment(lo, m + 1)

    def bracketed_list(self):
        head = self.tok
        self.i += 2
        segs = self.segment_list()
        self.expect(")", what="')' or ';'")
        if head.text == "Z":
            return normalize_multisegment(segs)
        try:
            return GenericRep(tuple(segs))
        except DomainError as exc:
            raise SemanticError(str(exc), head.line, head.column) from None


def parse_expression(src: str):
    """Parse text into a :class:`PrincipalSeries`, :class:`Segment`,
    :class:`Multisegment` or :class:`GenericRep`."""
    return _Parser(src).expression()


def _typed(src, kind, label):
    value = parse_expression(src)
    if isinstance(value, kind):
        return value
    raise SemanticError(f"expected {label}, got {type(value).__name__}", 1, 1)


def parse_series(src: str) -> PrincipalSeries:
    return _typed(src, PrincipalSeries, "a series")


def parse_segment(src: str) -> Segment:
    value = parse_expression(src)
    if isinstance(value, PrincipalSeries) and len(value) == 1 and isinstance(value[0], CuspidalRep):
        return Segment(value[0], 1)
    if isinstance(value, Segment):
        return value
    raise SemanticError(f"expected a segment, got {type(value).__name__}", 1, 1)


def parse_multisegment(src: str) -> Multisegment:
    return _typed(src, Multisegment, "a multisegment Z(...)")


def parse_generic(src: str) -> GenericRep:
    value = parse_expression(src)
    if isinstance(value, GenericRep):
        return value
    return GenericRep((parse_segment(src),))


# -- printing -------------------------------------------------------------------

def format_rep(r: CuspidalRep) -> str:
    core = f"nu({r.exponent})"
    if r.line.id == TRIVIAL_LINE_ID:
        return core
    line = r.line
    extra = "" if line.dual_id == default_dual_id(line.id) else f",{line.dual_id}"
    return f"{core}*rho({line.id},{line.size}{extra})"


def format_segment(d: Segment) -> str:
    return f"{format_rep(d.start)}..{format_rep(d.end)}"


def format_factor(f) -> str:
    if isinstance(f, CuspidalRep):
        return format_rep(f)
    tag = "Q" if isinstance(f, Qseg) else "Z"
    return f"{tag}[{format_segment(f.segment)}]"


def format_expression(x) -> str:
    if isinstance(x, CuspidalRep):
        return format_rep(x)
    if isinstance(x, Segment):
        return format_segment(x)
    if isinstance(x, (Qseg, Zseg)):
        return format_factor(x)
    if isinstance(x, PrincipalSeries):
        return " x ".join(format_factor(f) for f in x.factors)
    if isinstance(x, Multisegment):
        return "Z(" + "; ".join(format_segment(d) for d in x.segments) + ")"
    if isinstance(x, GenericRep):
        return "Q(" + "; ".join(format_segment(d) for d in x.segments) + ")"
    if isinstance(x, (list, tuple)):
        return " x ".join(format_factor(f) for f in x) if x else "1"
    raise TypeError(f"cannot format {x!r}")
