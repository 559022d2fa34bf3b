"""Tokenizer, recursive-descent parser and evaluators for curve formulas.

Grammar (EBNF):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := number | 'e' | 'pi' | 't' | fn '(' expr ')' | '(' expr ')'

Numbers are decimal literals with optional fraction and exponent.  The
one free variable is ``t`` (a positive real); the function set is fixed
to exp, log, sin, cos, tan, sec, sqrt.  Expressions denote ordinary
positive-valued functions; the multiplicative structure is applied by
the calculus and curve modules, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    EvalDomainError,
    EvalOverflow,
    LexError,
    ParseError,
    UnknownFunction,
    UnknownIdentifier,
)
from .jets import (
    LogJet,
    Series,
    s_cos,
    s_exp,
    s_log,
    s_pow,
    s_sec,
    s_sin,
    s_sqrt,
    s_tan,
)

FUNCTIONS = ("exp", "log", "sin", "cos", "tan", "sec", "sqrt")
CONSTANTS = {"e": math.e, "pi": math.pi}


# --------------------------------------------------------------------------
# tokens
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str      # number | identifier | operator | lparen | rparen | comma
    text: str
    position: int  # byte offset into the source


_OPERATORS = "+-*/^"


def tokenize(source: str) -> list[Token]:
    """Split a formula into tokens; raises LexError on illegal characters."""
    tokens: list[Token] = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            start = i
            while i < n and source[i].isdigit():
                i += 1
            if i < n and source[i] == ".":
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j < n and source[j].isdigit():
                    i = j
                    while i < n and source[i].isdigit():
                        i += 1
            tokens.append(Token("number", source[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(Token("identifier", source[start:i], start))
            continue
        if ch in _OPERATORS:
            tokens.append(Token("operator", ch, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(Token("lparen", ch, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(Token("rparen", ch, i))
            i += 1
            continue
        if ch == ",":
            tokens.append(Token("comma", ch, i))
            i += 1
            continue
        raise LexError(f"illegal character {ch!r}", i)
    return tokens


# --------------------------------------------------------------------------
# AST
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Constant:
    value: float


@dataclass(frozen=True)
class Var:
    """The single free variable t."""


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Binary:
    op: str  # one of + - * / ^
    lhs: "ExprAst"
    rhs: "ExprAst"


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "ExprAst"


ExprAst = Union[Constant, Var, Neg, Binary, Call]

T = Var()


class _Parser:
    def __init__(self, tokens: list[Token], source_len: int):
        self.tokens = tokens
        self.pos = 0
        self.end = source_len

    def _peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _offset(self) -> int:
        tok = self._peek()
        return tok.position if tok is not None else self.end

    def _advance(self) -> Token:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end)
        self.pos += 1
        return tok

    def _expect(self, kind: str, text: str | None = None) -> Token:
        tok = self._peek()
        want = text if text is not None else kind
        if tok is None:
            raise ParseError("unexpected end of input", self.end, expected=want)
        if tok.kind != kind or (text is not None and tok.text != text):
            raise ParseError(f"unexpected token {tok.text!r}", tok.position, expected=want)
        self.pos += 1
        return tok

    def parse(self) -> ExprAst:
        node = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok.text!r}", tok.position, expected="end of input")
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while True:
            tok = self._peek()
            if tok is not None and tok.kind == "operator" and tok.text in "+-":
                self._advance()
                node = Binary(tok.text, node, self.term())
            else:
                return node

    def term(self) -> ExprAst:
        node = self.factor()
        while True:
            tok = self._peek()
            if tok is not None and tok.kind == "operator" and tok.text in "*/":
                self._advance()
                node = Binary(tok.text, node, self.factor())
            else:
                return node

    def factor(self) -> ExprAst:
        tok = self._peek()
        if tok is not None and tok.kind == "operator" and tok.text == "-":
            self._advance()
            return Neg(self.factor())
        return self.power()

    def power(self) -> ExprAst:
        node = self.atom()
        tok = self._peek()
        if tok is not None and tok.kind == "operator" and tok.text == "^":
            self._advance()
            return Binary("^", node, self.factor())
        return node

    def atom(self) -> ExprAst:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end, expected="an operand")
        if tok.kind == "number":
            self._advance()
            return Constant(float(tok.text))
        if tok.kind == "lparen":
            self._advance()
            node = self.expr()
            self._expect("rparen", ")")
            return node
        if tok.kind == "identifier":
            self._advance()
            nxt = self._peek()
            if nxt is not None and nxt.kind == "lparen":
                if tok.text not in FUNCTIONS:
                    raise UnknownFunction(f"unknown function {tok.text!r}", tok.position,
                                          expected="one of " + ", ".join(FUNCTIONS))
                self._advance()
                arg = self.expr()
                self._expect("rparen", ")")
                return Call(tok.text, arg)
            if tok.text == "t":
                return T
            if tok.text in CONSTANTS:
                return Constant(CONSTANTS[tok.text])
            raise UnknownIdentifier(f"unknown identifier {tok.text!r}", tok.position,
                                    expected="t, e, pi or a function name")
        raise ParseError(f"unexpected token {tok.text!r}", tok.position, expected="an operand")


def parse(source_or_tokens) -> ExprAst:
    """Parse a source string or a token list into an AST."""
    if isinstance(source_or_tokens, str):
        tokens = tokenize(source_or_tokens)
        end = len(source_or_tokens)
    else:
        tokens = list(source_or_tokens)
        end = tokens[-1].position + len(tokens[-1].text) if tokens else 0
    if not tokens:
        raise ParseError("empty expression", 0, expected="an operand")
    return _Parser(tokens, end).parse()


def pretty_print(ast: ExprAst) -> str:
    """Fully parenthesized source; parse(pretty_print(a)) == a."""
    if isinstance(ast, Constant):
        return repr(ast.value)
    if isinstance(ast, Var):
        return "t"
    if isinstance(ast, Neg):
        return f"(-{pretty_print(ast.operand)})"
    if isinstance(ast, Binary):
        return f"({pretty_print(ast.lhs)}{ast.op}{pretty_print(ast.rhs)})"
    if isinstance(ast, Call):
        return f"{ast.fn}({pretty_print(ast.arg)})"
    raise TypeError(f"not an AST node: {ast!r}")


def substitute(ast: ExprAst, replacement: ExprAst) -> ExprAst:
    """Replace every occurrence of the variable t by another expression."""
    if isinstance(ast, Var):
        return replacement
    if isinstance(ast, Neg):
        return Neg(substitute(ast.operand, replacement))
    if isinstance(ast, Binary):
        return Binary(ast.op, substitute(ast.lhs, replacement), substitute(ast.rhs, replacement))
    if isinstance(ast, Call):
        return Call(ast.fn, substitute(ast.arg, replacement))
    return ast


# --------------------------------------------------------------------------
# classical evaluation
# --------------------------------------------------------------------------

def _check_finite(x, what: str):
    arr = np.asarray(x)
    if not np.all(np.isfinite(arr)):
        if np.any(np.isnan(arr)):
            raise EvalDomainError(f"{what} produced NaN")
        raise EvalOverflow(f"{what} overflowed")
    return x


def _eval(ast: ExprAst, t):
    if isinstance(ast, Constant):
        return ast.value
    if isinstance(ast, Var):
        return t
    if isinstance(ast, Neg):
        return -_eval(ast.operand, t)
    if isinstance(ast, Binary):
        a = _eval(ast.lhs, t)
        b = _eval(ast.rhs, t)
        if ast.op == "+":
            return a + b
        if ast.op == "-":
            return a - b
        if ast.op == "*":
            return _check_finite(a * b, "multiplication")
        if ast.op == "/":
            if np.any(np.asarray(b) == 0.0):
                raise EvalDomainError("division by zero")
            return _check_finite(a / b, "division")
        with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
            return _check_finite(np.power(a, b), "power")
    if isinstance(ast, Call):
        arg = _eval(ast.arg, t)
        if ast.fn == "exp":
            with np.errstate(over="ignore"):
                return _check_finite(np.exp(arg), "exp")
        if ast.fn == "log":
            if np.any(np.asarray(arg) <= 0.0):
                raise EvalDomainError("log of a nonpositive value")
            return np.log(arg)
        if ast.fn == "sin":
            return np.sin(arg)
        if ast.fn == "cos":
            return np.cos(arg)
        if ast.fn == "tan":
            if np.any(np.cos(arg) == 0.0):
                raise EvalDomainError("tan at a cosine zero")
            return _check_finite(np.tan(arg), "tan")
        if ast.fn == "sec":
            c = np.cos(arg)
            if np.any(np.asarray(c) == 0.0):
                raise EvalDomainError("sec at a cosine zero")
            return _check_finite(1.0 / c, "sec")
        if ast.fn == "sqrt":
            if np.any(np.asarray(arg) < 0.0):
                raise EvalDomainError("sqrt of a negative value")
            return np.sqrt(arg)
    raise TypeError(f"not an AST node: {ast!r}")


def evaluate(ast: ExprAst, t):
    """Classical real evaluation at t > 0 (scalar or numpy array)."""
    scalar = np.isscalar(t) or (isinstance(t, np.ndarray) and t.ndim == 0)
    if np.any(np.asarray(t) <= 0.0):
        raise EvalDomainError("the variable t must be positive")
    out = _eval(ast, np.float64(t) if scalar else np.asarray(t, dtype=float))
    return float(out) if scalar else np.asarray(out, dtype=float)


# --------------------------------------------------------------------------
# jet evaluation
# --------------------------------------------------------------------------

def _eval_series(ast: ExprAst, t_series: Series) -> Series:
    if isinstance(ast, Constant):
        return Series.constant(t_series.c[0] * 0.0 + ast.value, len(t_series))
    if isinstance(ast, Var):
        return t_series
    if isinstance(ast, Neg):
        return -_eval_series(ast.operand, t_series)
    if isinstance(ast, Binary):
        a = _eval_series(ast.lhs, t_series)
        b = _eval_series(ast.rhs, t_series)
        if ast.op == "+":
            return a + b
        if ast.op == "-":
            return a - b
        if ast.op == "*":
            return a * b
        if ast.op == "/":
            return a / b
        return s_pow(a, b)
    if isinstance(ast, Call):
        arg = _eval_series(ast.arg, t_series)
        fn = {"exp": s_exp, "log": s_log, "sin": s_sin, "cos": s_cos,
              "tan": s_tan, "sec": s_sec, "sqrt": s_sqrt}[ast.fn]
        return fn(arg)
    raise TypeError(f"not an AST node: {ast!r}")


def evaluate_jet(ast: ExprAst, u0, order: int) -> LogJet:
    """Taylor coefficients of u -> log(ast(e^u)) at u0, through ``order``.

    u0 may be a float or a numpy array (one jet per entry).  The whole
    computation runs in truncated series arithmetic over the AST.
    """
    if not 1 <= order <= 6:
        raise ValueError("jet order must lie in 1..6")
    u_series = Series.variable(u0 + 0.0, order + 1)
    t_series = s_exp(u_series)
    value_series = _eval_series(ast, t_series)
    log_series = s_log(value_series)
    return LogJet(basepoint=u0, coeffs=tuple(log_series.c))
