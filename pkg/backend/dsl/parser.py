"""Tokenizer and recursive-descent parser for operator expressions.

    expr := term { "(+)" term }
    term := atom [ "^" mult ] | "adj" "(" expr ")"
    atom := "ushift" [ "(" gq "," gq ")" ] | "bshift" [ "(" gq "," gq ")" ]
          | "diag" "{" gq ":" mult { "," gq ":" mult } "}"
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from ..models.numeric import GQ, ExtNat, INF
from ..utils.errors import DslSemanticError, DslSyntaxError

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<dsum>\(\+\))
  | (?P<nat>[0-9]+)
  | (?P<word>[A-Za-z_]+)
  | (?P<punct>[()\[\]{}^,:/+\-])
""", re.VERBOSE)

KEYWORDS = ("ushift", "bshift", "diag", "adj", "inf", "i")
TERM_START = ("ushift", "bshift", "diag", "adj")
EOF = "end of input"
MAX_NESTING = 64


@dataclass(frozen=True)
class Span:
    line: int
    column: int


@dataclass(frozen=True)
class Token:
    kind: str  # dsum | nat | word | punct | eof
    text: str
    span: Span

    def describe(self) -> str:
        return EOF if self.kind == "eof" else repr(self.text)


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        span = Span(line, pos - line_start + 1)
        if match is None:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", span.line, span.column,
                                 ["(+)", "number", "keyword", "punctuation"])
        kind = match.lastgroup
        value = match.group()
        if kind == "ws":
            for offset, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + offset + 1
        else:
            tokens.append(Token(kind, value.lower() if kind == "word" else value, span))
        pos = match.end()
    tokens.append(Token("eof", "", Span(line, pos - line_start + 1)))
    return tokens


# ------------------------------------------------------------------- AST


@dataclass(frozen=True)
class GqNode:
    value: GQ
    span: Span


@dataclass(frozen=True)
class MultNode:
    value: ExtNat
    span: Span


@dataclass(frozen=True)
class ShiftNode:
    kind: str  # ushift | bshift
    a: Optional[GqNode]
    b: Optional[GqNode]
    span: Span


@dataclass(frozen=True)
class DiagNode:
    entries: Tuple[Tuple[GqNode, MultNode], ...]
    span: Span


@dataclass(frozen=True)
class PowerNode:
    atom: Union[ShiftNode, DiagNode]
    mult: Optional[MultNode]
    span: Span


@dataclass(frozen=True)
class AdjNode:
    expr: "SumNode"
    span: Span


@dataclass(frozen=True)
class SumNode:
    terms: Tuple[Union[PowerNode, AdjNode], ...]
    span: Span


Ast = SumNode


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "eof":
            self.pos += 1
        return token

    def _fail(self, expected: Iterable[str]):
        token = self.current
        raise DslSyntaxError(f"unexpected {token.describe()}", token.span.line, token.span.column,
                             expected)

    def _at(self, text: str) -> bool:
        token = self.current
        return token.kind in ("punct", "word", "dsum") and token.text == text

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            self._fail([text])
        return self._advance()

    def parse_expr(self) -> SumNode:
        start = self.current.span
        terms = [self.parse_term()]
        while self.current.kind == "dsum":
            self._advance()
            terms.append(self.parse_term())
        return SumNode(tuple(terms), start)

    def parse_term(self):
        token = self.current
        if token.kind != "word" or token.text not in TERM_START:
            self._fail(TERM_START)
        if token.text == "adj":
            if self.depth >= MAX_NESTING:
                raise DslSyntaxError(f"adj nested deeper than {MAX_NESTING} levels",
                                     token.span.line, token.span.column)
            self._advance()
            self._expect("(")
            self.depth += 1
            inner = self.parse_expr()
            self.depth -= 1
            self._expect(")")
            return AdjNode(inner, token.span)
        atom = self.parse_atom()
        mult = None
        if self._at("^"):
            self._advance()
            mult = self.parse_mult()
        return PowerNode(atom, mult, token.span)

    def parse_atom(self):
        token = self._advance()
        if token.text in ("ushift", "bshift"):
            a = b = None
            if self._at("("):
                self._advance()
                a = self.parse_gq()
                self._expect(",")
                b = self.parse_gq()
                self._expect(")")
            return ShiftNode(token.text, a, b, token.span)
        self._expect("{")
        entries = [self._diag_entry()]
        while self._at(","):
            self._advance()
            entries.append(self._diag_entry())
        if not self._at("}"):
            self._fail([",", "}"])
        self._advance()
        return DiagNode(tuple(entries), token.span)

    def _diag_entry(self) -> Tuple[GqNode, MultNode]:
        value = self.parse_gq()
        self._expect(":")
        return value, self.parse_mult()

    def parse_mult(self) -> MultNode:
        token = self.current
        if token.kind == "nat":
            self._advance()
            return MultNode(ExtNat(int(token.text)), token.span)
        if token.kind == "word" and token.text == "inf":
            self._advance()
            return MultNode(INF, token.span)
        self._fail(["natural number", "inf"])

    def _rat(self, signed: bool) -> Fraction:
        negative = False
        if signed and self._at("-"):
            self._advance()
            negative = True
        token = self.current
        if token.kind != "nat":
            self._fail(["natural number"] + (["-"] if signed and not negative else []))
        self._advance()
        num, den = int(token.text), 1
        if self._at("/"):
            self._advance()
            den_token = self.current
            if den_token.kind != "nat":
                self._fail(["natural number"])
            self._advance()
            den = int(den_token.text)
            if den == 0:
                raise DslSemanticError("zero denominator", den_token.span.line, den_token.span.column)
        value = Fraction(num, den)
        return -value if negative else value

    def parse_gq(self) -> GqNode:
        start = self.current.span
        first = self._rat(signed=True)
        if self._at("i"):
            self._advance()
            return GqNode(GQ(Fraction(0), first), start)
        if self._at("+") or self._at("-"):
            sign = -1 if self._advance().text == "-" else 1
            second = self._rat(signed=False)
            self._expect("i")
            return GqNode(GQ(first, sign * second), start)
        return GqNode(GQ(first), start)

    def finish(self):
        if self.current.kind != "eof":
            self._fail([EOF])


def parse(text: str) -> Ast:
    parser = Parser(text)
    ast = parser.parse_expr()
    parser.finish()
    logger.debug("parsed %d terms", len(ast.terms))
    return ast


def parse_gq(text: str) -> GQ:
    """A single Gaussian rational such as ``1/2-3i``."""
    parser = Parser(text)
    node = parser.parse_gq()
    parser.finish()
    return node.value
