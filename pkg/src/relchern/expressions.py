"""Parsing, rendering and evaluation of class expressions.

Grammar (an optional leading sign is accepted so that canonically rendered
classes such as ``-6*L + 36*L^2`` read back in)::

    expr   := ('+' | '-')? term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' uint)?
    base   := uint | symbol | '(' expr ')'

There is no implicit multiplication: ``12*L`` parses, ``12L`` does not.
Evaluation is generic over any value type supporting the ring operators, so
the same trees evaluate to base classes or to classes on a projectivization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import ChowError, SymbolError


class ParseError(ChowError):
    """Syntax error with position information."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("INT", int(text[start:i]), line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("NAME", text[start:i], line, col))
            col += i - start
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("EOF", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2], tok[3])
        self.pos += 1
        return tok

    def expr(self):
        kind = self.peek()[0]
        negate = False
        if kind in "+-":
            negate = self.take()[0] == "-"
        node = self.term()
        if negate:
            node = Neg(node)
        while self.peek()[0] in "+-":
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in "*/":
            op = self.take()[0]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("INT")
            node = Pow(node, tok[1])
        return node

    def base(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return Num(tok[1])
        if tok[0] == "NAME":
            self.take()
            return Sym(tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"expected a value, found {tok[1]!r}", tok[2], tok[3])


def parse_class_expr(text):
    """Parse an expression into its tree; malformed input raises
    :class:`ParseError` with line and column."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    tok = parser.peek()
    if tok[0] != "EOF":
        raise ParseError(f"unexpected trailing {tok[1]!r}", tok[2], tok[3])
    return node


_PREC_ADD, _PREC_MUL, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4


def _render(node):
    if isinstance(node, Num):
        return str(node.value), _PREC_ATOM
    if isinstance(node, Sym):
        return node.name, _PREC_ATOM
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _PREC_MUL), _PREC_ADD
    if isinstance(node, Pow):
        return _wrap(node.base, _PREC_ATOM) + f"^{node.exponent}", _PREC_POW
    if isinstance(node, BinOp):
        if node.op in "+-":
            mine = _PREC_ADD
            left = _wrap(node.left, mine)
            right = _wrap(node.right, mine + 1)
        else:
            mine = _PREC_MUL
            left = _wrap(node.left, mine)
            right = _wrap(node.right, mine + 1)
        return f"{left} {node.op} {right}", mine
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node, minimum):
    text, prec = _render(node)
    return f"({text})" if prec < minimum else text


def render_expr(node):
    """Canonical text for a tree; ``parse(render(t)) == t`` structurally."""
    return _render(node)[0]


def evaluate(node, env, const):
    """Evaluate a tree: symbols through ``env``, integer literals through
    ``const``.  Value semantics (truncation, division rules) are whatever
    the value type implements."""
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Sym):
        try:
            return env[node.name]
        except KeyError:
            raise SymbolError(f"unknown symbol {node.name!r}") from None
    if isinstance(node, Neg):
        return -evaluate(node.operand, env, const)
    if isinstance(node, Pow):
        return evaluate(node.base, env, const) ** node.exponent
    if isinstance(node, BinOp):
        left = evaluate(node.left, env, const)
        right = evaluate(node.right, env, const)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left / right
    raise TypeError(f"not an expression node: {node!r}")
