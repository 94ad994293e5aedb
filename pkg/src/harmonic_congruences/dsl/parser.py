"""Recursive-descent parser for the congruence language.

    congruence := id '|' 'p' '>' INT '|' body '(' 'mod' 'p' ['^' INT] ')'
    body       := 'forall' '(' VAR '=' iexpr '..' iexpr ',' expr '===' expr ')'
                | expr '===' expr
    The forall form may also carry its modulus clause before the closing ')'.
    expr  := term (('+'|'-') term)*       iexpr  := iterm (('+'|'-') iterm)*
    term  := unary (('*'|'/') unary)*     iterm  := iunary (('*'|'/') iunary)*
    unary := ['-'] power                  iunary := ['-'] ipower
    power := atom ['^' iunary]            ipower := iatom ['^' iunary]
    atom  := INT | '(' INT '/' INT ')' | 'p' | 'q2' | VAR
           | 'B' '(' iexpr ')' | 'H' '(' iexpr [',' INT] ')'
           | 'binom' '(' iexpr ',' iexpr ')'
           | 'sum' '(' VAR '=' iexpr '..' iexpr ',' expr ')' | '(' expr ')'
    iatom := INT | 'p' | VAR | '(' iexpr ')'
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from ..errors import ParseError
from .nodes import (
    Add,
    Bernoulli,
    Binomial,
    CongruenceSpec,
    Const,
    Div,
    FermatQuotient,
    Forall,
    Harmonic,
    Mul,
    Neg,
    Pow,
    Prime,
    Sub,
    Sum,
    Var,
)

RESERVED = frozenset({"p", "q2", "B", "H", "binom", "sum", "forall", "mod"})
_ID_RE = re.compile(r"[A-Za-z0-9_.\-]+\Z")
_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>===|\.\.|[|>()=,+\-*/^])"
)


class Token(NamedTuple):
    kind: str  # "int", "ident", "op" or "eof"
    text: str
    line: int
    column: int


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def tokenize(text: str, start: int = 0, line: int = 1) -> list[Token]:
    tokens = []
    pos = start
    line_start = text.rfind("\n", 0, start) + 1
    line += text.count("\n", 0, start)
    while pos < len(text):
        mo = _TOKEN_RE.match(text, pos)
        if mo is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = mo.lastgroup
        if kind == "ws":
            chunk = mo.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = pos + chunk.rfind("\n") + 1
        else:
            tokens.append(Token(kind, mo.group(), line, pos - line_start + 1))
        pos = mo.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.scope: list[str] = []

    # -- token helpers -------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "ident") and self.tok.text == text

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, expected=(), tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column, expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}, found {_describe(self.tok)}", [repr(text)])
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.fail(f"expected an integer, found {_describe(self.tok)}", ["integer"])
        return int(self.advance().text)

    def expect_new_var(self) -> str:
        tok = self.tok
        if tok.kind != "ident":
            self.fail(f"expected a variable name, found {_describe(tok)}", ["variable"])
        if tok.text in RESERVED:
            self.fail(f"{tok.text!r} is reserved and cannot be a variable", ["variable"])
        return self.advance().text

    def expect_eof(self):
        if self.tok.kind != "eof":
            self.fail(f"unexpected {_describe(self.tok)} after end of statement", ["end of input"])

    # -- statements ----------------------------------------------------

    def congruence(self, ident: str) -> CongruenceSpec:
        self.expect("|")
        self.expect("p")
        self.expect(">")
        min_prime = self.expect_int()
        self.expect("|")
        forall = None
        if self.at("forall") and self.peek().text == "(":
            self.advance()
            self.expect("(")
            var = self.expect_new_var()
            self.expect("=")
            lo = self.iexpr()
            self.expect("..")
            hi = self.iexpr()
            self.expect(",")
            self.scope.append(var)
            lhs = self.expr()
            self.expect("===")
            rhs = self.expr()
            self.scope.pop()
            forall = Forall(var, lo, hi)
            if self.at("(") and self.peek().text == "mod":
                # modulus written inside the quantifier's parentheses
                exponent = self.mod_clause()
                self.expect(")")
                self.expect_eof()
                return CongruenceSpec(ident, lhs, rhs, exponent, min_prime, forall)
            self.expect(")")
        else:
            lhs = self.expr()
            self.expect("===")
            rhs = self.expr()
        exponent = self.mod_clause()
        self.expect_eof()
        return CongruenceSpec(ident, lhs, rhs, exponent, min_prime, forall)

    def mod_clause(self) -> int:
        self.expect("(")
        self.expect("mod")
        self.expect("p")
        exponent = 1
        expected = ["'^'", "')'"]
        if self.at("^"):
            self.advance()
            tok = self.tok
            exponent = self.expect_int()
            if exponent not in (1, 2, 3):
                self.fail(f"modulus exponent must be 1, 2 or 3, got {exponent}", ["1", "2", "3"], tok)
            expected = ["')'"]
        if not self.at(")"):
            self.fail(f"unclosed modulus clause, found {_describe(self.tok)}", expected)
        self.advance()
        return exponent

    # -- value expressions --------------------------------------------

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            right = self.unary()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def unary(self):
        if self.at("-"):
            self.advance()
            return Neg(self.power())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.advance()
            return Pow(base, self.iunary())
        return base

    def _rational_literal(self) -> bool:
        t = self.tokens
        i = self.pos
        return (
            i + 4 < len(t)
            and t[i].text == "("
            and t[i + 1].kind == "int"
            and t[i + 2].text == "/"
            and t[i + 3].kind == "int"
            and t[i + 4].text == ")"
        )

    def atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return Const(Fraction(int(tok.text)))
        if self.at("("):
            if self._rational_literal():
                self.advance()
                num = int(self.advance().text)
                self.advance()
                den_tok = self.advance()
                if int(den_tok.text) == 0:
                    self.fail("zero denominator in rational literal", (), den_tok)
                self.advance()
                return Const(Fraction(num, int(den_tok.text)))
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            name = tok.text
            if name == "p":
                self.advance()
                return Prime()
            if name == "q2":
                self.advance()
                return FermatQuotient()
            if name == "B":
                self.advance()
                self.expect("(")
                index = self.iexpr()
                self.expect(")")
                return Bernoulli(index)
            if name == "H":
                self.advance()
                self.expect("(")
                arg = self.iexpr()
                order = 1
                if self.at(","):
                    self.advance()
                    order_tok = self.tok
                    order = self.expect_int()
                    if order < 1:
                        self.fail("harmonic order must be positive", ["positive integer"], order_tok)
                self.expect(")")
                return Harmonic(arg, order)
            if name == "binom":
                self.advance()
                self.expect("(")
                top = self.iexpr()
                self.expect(",")
                bottom = self.iexpr()
                self.expect(")")
                return Binomial(top, bottom)
            if name == "sum":
                self.advance()
                self.expect("(")
                var = self.expect_new_var()
                self.expect("=")
                lo = self.iexpr()
                self.expect("..")
                hi = self.iexpr()
                self.expect(",")
                self.scope.append(var)
                body = self.expr()
                self.scope.pop()
                self.expect(")")
                return Sum(var, lo, hi, body)
            return self.variable()
        self.fail(
            f"expected an operand, found {_describe(tok)}",
            ["integer", "'('", "'p'", "'q2'", "'B'", "'H'", "'binom'", "'sum'", "variable"],
        )

    def variable(self) -> Var:
        tok = self.tok
        if tok.text in RESERVED:
            self.fail(f"{tok.text!r} cannot be used here", ["operand"])
        if tok.text not in self.scope:
            self.fail(f"unbound variable {tok.text!r}", ["bound variable"])
        self.advance()
        return Var(tok.text)

    # -- index expressions --------------------------------------------

    def iexpr(self):
        node = self.iterm()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.iterm()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def iterm(self):
        node = self.iunary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            right = self.iunary()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def iunary(self):
        if self.at("-"):
            self.advance()
            return Neg(self.ipower())
        return self.ipower()

    def ipower(self):
        base = self.iatom()
        if self.at("^"):
            self.advance()
            return Pow(base, self.iunary())
        return base

    def iatom(self):
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return Const(Fraction(int(tok.text)))
        if self.at("p"):
            self.advance()
            return Prime()
        if self.at("("):
            self.advance()
            node = self.iexpr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            return self.variable()
        self.fail(
            f"expected an index operand, found {_describe(tok)}",
            ["integer", "'p'", "'('", "variable"],
        )


def _split_id(text: str, line: int) -> tuple[str, int]:
    bar = text.find("|")
    if bar < 0:
        end_line = line + text.count("\n")
        col = len(text) - (text.rfind("\n") + 1) + 1
        raise ParseError("missing '|' after congruence id", end_line, col, ["'|'"])
    ident = text[:bar].strip()
    if not _ID_RE.match(ident):
        lead = len(text[:bar]) - len(text[:bar].lstrip())
        raise ParseError(f"invalid congruence id {ident!r}", line, lead + 1, ["identifier"])
    return ident, bar


def parse_congruence(text: str, line: int = 1) -> CongruenceSpec:
    """Parse one statement, e.g. ``c1 | p>5 | H(p-1) === 0 (mod p^2)``.

    ``line`` offsets reported positions when the text comes from a file.
    """
    ident, bar = _split_id(text, line)
    return Parser(tokenize(text, bar, line)).congruence(ident)


def parse_expr(text: str, bound: tuple[str, ...] = ()) -> object:
    """Parse a standalone value expression; ``bound`` names variables supplied at evaluation."""
    parser = Parser(tokenize(text))
    parser.scope.extend(bound)
    node = parser.expr()
    parser.expect_eof()
    return node


def parse_catalog(text: str) -> list[CongruenceSpec]:
    """Parse catalog text: one statement per line, ``#`` comments, blank lines ignored."""
    specs = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        spec = parse_congruence(content, lineno)
        if spec.id in seen:
            raise ParseError(f"duplicate id {spec.id!r} (first defined on line {seen[spec.id]})", lineno, 1)
        seen[spec.id] = lineno
        specs.append(spec)
    return specs
