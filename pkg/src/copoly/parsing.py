"""Small expression parser for polynomials in ``x``.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | IDENT | '(' expr ')'

Rationals are spelled as a division of integers (``3/2``); more generally
``/`` is accepted whenever the divisor works out to a nonzero constant.
Exponents must be nonnegative integer literals; ``**`` is accepted as a
spelling of ``^``.  The identifier ``x`` is the
variable; any other identifier is looked up in a parameter mapping and
substituted as a constant, so family patterns like
``(beta - alpha) - (alpha + beta + 2)*x`` parse directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple

from .errors import ExprSyntaxError, UnknownIdentifier
from .poly import Poly, as_rational


class _Token(NamedTuple):
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
        elif ch == "*" and i + 1 < n and text[i + 1] == "*":
            tokens.append(_Token("op", "^", i))
            i += 2
        elif ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
        else:
            raise ExprSyntaxError(i, f"unexpected character {ch!r}")
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], params: Mapping[str, Fraction]):
        self.tokens = tokens
        self.pos = 0
        self.params = params

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in ops

    def expr(self) -> Poly:
        acc = self.term()
        while self.at_op("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op.text == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.at_op("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op.text == "*":
                acc = acc * rhs
            else:
                if rhs.degree > 0:
                    raise ExprSyntaxError(op.pos, "divisor must be a constant")
                if rhs.is_zero:
                    raise ExprSyntaxError(op.pos, "division by zero")
                acc = acc / rhs.coefficient(0)
        return acc

    def factor(self) -> Poly:
        if self.at_op("+", "-"):
            op = self.take()
            inner = self.factor()
            return inner if op.text == "+" else -inner
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.at_op("^"):
            caret = self.take()
            tok = self.peek()
            if tok.kind != "int":
                raise ExprSyntaxError(caret.pos, "exponent must be a nonnegative integer")
            self.take()
            return base ** int(tok.text)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok.kind == "int":
            return Poly.constant(int(tok.text))
        if tok.kind == "ident":
            if tok.text == "x":
                return Poly.x()
            if tok.text in self.params:
                return Poly.constant(self.params[tok.text])
            raise UnknownIdentifier(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            closing = self.take()
            if not (closing.kind == "op" and closing.text == ")"):
                raise ExprSyntaxError(closing.pos, "expected ')'")
            return inner
        raise ExprSyntaxError(tok.pos, f"unexpected {tok.text!r}" if tok.text
                              else "unexpected end of expression")


def parse_poly_expr(text: str,
                    params: Mapping[str, int | str | Fraction] | None = None) -> Poly:
    """Parse an expression into a ``Poly``, substituting named parameters."""
    resolved = {name: as_rational(value) for name, value in (params or {}).items()}
    parser = _Parser(_tokenize(text), resolved)
    result = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ExprSyntaxError(trailing.pos, f"unexpected {trailing.text!r}")
    return result
