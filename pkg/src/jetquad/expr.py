"""Integrand expressions: parsing, rendering and evaluation.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'
    ident  := exp | sin | cos | ln | atan | recip

Binary operators are left-associative.  ``-x^2`` is ``-(x^2)``.
Expressions evaluate over floats (:func:`eval_real`) and over jets
(:func:`eval_jet`); the real part of the jet result equals the float result
bit for bit.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import List, NamedTuple

from jetquad import elementary
from jetquad.elementary import ElemFn
from jetquad.errors import DomainError, ParseError, PoleError
from jetquad.jet import Jet, ipow, jet_recip

__all__ = [
    "Expr",
    "Constant",
    "Variable",
    "Negate",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "PowInt",
    "Apply",
    "parse",
    "render",
    "eval_real",
    "eval_jet",
    "FUNCTION_NAMES",
]

FUNCTION_NAMES = ("exp", "sin", "cos", "ln", "atan", "recip")


class Expr:
    """Base class of expression nodes.

    Nodes are immutable and compare structurally.  Calling a node evaluates
    it on a float or a jet.
    """

    __slots__ = ()

    def __call__(self, x):
        if isinstance(x, Jet):
            return eval_jet(self, x)
        return eval_real(self, x)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Constant(Expr):
    value: float


@dataclass(frozen=True)
class Variable(Expr):
    pass


@dataclass(frozen=True)
class Negate(Expr):
    arg: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class PowInt(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("PowInt exponent must be non-negative")


@dataclass(frozen=True)
class Apply(Expr):
    fn: ElemFn
    arg: Expr


_BINARY = {"+": Add, "-": Sub, "*": Mul, "/": Div}
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


# -- lexer ------------------------------------------------------------------

class _Tok(NamedTuple):
    kind: str  # "num", "ident", "op", "end"
    text: str
    offset: int  # 1-based column


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def _tokenize(src: str) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos + 1))
        pos = m.end()
    toks.append(_Tok("end", "", len(src) + 1))
    return toks


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in ops

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.text == ")":
                raise ParseError("unbalanced parentheses: unexpected ')'", tok.offset)
            raise ParseError(f"unexpected {tok.text!r}", tok.offset)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            left = _BINARY[op](left, self.term())
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.at_op("*", "/"):
            op = self.advance().text
            left = _BINARY[op](left, self.factor())
        return left

    def factor(self) -> Expr:
        if self.at_op("-"):
            self.advance()
            return Negate(self.factor())
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            return PowInt(base, self.exponent())
        return base

    def exponent(self) -> int:
        tok = self.peek()
        if tok.kind == "num":
            if not tok.text.isdigit():
                raise ParseError(f"exponent must be an unsigned integer, got {tok.text!r}", tok.offset)
            self.advance()
            return int(tok.text)
        if tok.kind == "op" and tok.text == "-":
            raise ParseError("negative exponents are not supported", tok.offset)
        raise ParseError("expected an unsigned integer exponent after '^'", tok.offset)

    def atom(self) -> Expr:
        tok = self.advance()
        if tok.kind == "num":
            return Constant(float(tok.text))
        if tok.kind == "ident":
            if tok.text == "x":
                return Variable()
            if tok.text not in FUNCTION_NAMES:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.offset)
            if not self.at_op("("):
                raise ParseError(f"expected '(' after {tok.text!r}", self.peek().offset)
            self.advance()
            arg = self.expr()
            self.close(tok)
            return Apply(elementary.by_name(tok.text), arg)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.close(tok)
            return inner
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.offset)
        if tok.text == ")":
            raise ParseError("unbalanced parentheses: unexpected ')'", tok.offset)
        raise ParseError(f"unexpected {tok.text!r}", tok.offset)

    def close(self, opener: _Tok) -> None:
        tok = self.peek()
        if tok.kind == "op" and tok.text == ")":
            self.advance()
            return
        if tok.kind == "end":
            raise ParseError(
                f"unbalanced parentheses: '(' opened at offset {opener.offset} is never closed",
                tok.offset,
            )
        raise ParseError(f"expected ')', got {tok.text!r}", tok.offset)


def parse(src: str) -> Expr:
    """Parse an integrand in the variable ``x``; raises :class:`ParseError`."""
    return _Parser(src).parse()


# -- rendering --------------------------------------------------------------

def _prec(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return 1
    if isinstance(e, (Mul, Div)):
        return 2
    if isinstance(e, Negate):
        return 3
    if isinstance(e, PowInt):
        return 4
    return 5


def _fn_name(fn: ElemFn) -> str:
    return "atan" if fn.tag == "arctan" else fn.tag


def render(e: Expr) -> str:
    """Source text that parses back to the same tree."""
    if isinstance(e, Constant):
        return repr(e.value)
    if isinstance(e, Variable):
        return "x"
    if isinstance(e, Negate):
        inner = render(e.arg)
        return "-" + (f"({inner})" if _prec(e.arg) < 3 else inner)
    if isinstance(e, PowInt):
        base = render(e.base)
        if _prec(e.base) < 5:
            base = f"({base})"
        return f"{base}^{e.exponent}"
    if isinstance(e, Apply):
        return f"{_fn_name(e.fn)}({render(e.arg)})"
    p = _prec(e)
    left, right = render(e.left), render(e.right)
    if _prec(e.left) < p:
        left = f"({left})"
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(e)]} {right}"


# -- evaluation -------------------------------------------------------------

def eval_real(e: Expr, x: float) -> float:
    """Evaluate at the real point ``x``; raises :class:`DomainError`."""
    v = _real(e, float(x))
    if not math.isfinite(v):
        raise DomainError(f"{render(e)} is not finite at x={x!r}", where=render(e))
    return v


def _real(e: Expr, x: float) -> float:
    if isinstance(e, Constant):
        return e.value
    if isinstance(e, Variable):
        return x
    if isinstance(e, Negate):
        return -_real(e.arg, x)
    if isinstance(e, Add):
        return _real(e.left, x) + _real(e.right, x)
    if isinstance(e, Sub):
        return _real(e.left, x) - _real(e.right, x)
    if isinstance(e, Mul):
        return _real(e.left, x) * _real(e.right, x)
    if isinstance(e, Div):
        num = _real(e.left, x)
        den = _real(e.right, x)
        if den == 0.0:
            raise PoleError(f"division by zero in {render(e)}", where=render(e))
        # mirrors the jet path, which multiplies by the reciprocal
        return num * (1.0 / den)
    if isinstance(e, PowInt):
        return ipow(_real(e.base, x), e.exponent)
    if isinstance(e, Apply):
        arg = _real(e.arg, x)
        try:
            return elementary.derivs(e.fn, arg, 0)[0]
        except DomainError as exc:
            raise type(exc)(f"{exc} in {render(e)}", where=render(e)) from exc
    raise TypeError(f"not an expression node: {e!r}")


def eval_jet(e: Expr, u: Jet) -> Jet:
    """Evaluate on the jet ``u``, i.e. Taylor-expand the integrand about ``u.real``."""
    if isinstance(e, Constant):
        return Jet.constant(e.value, u.order)
    if isinstance(e, Variable):
        return u
    if isinstance(e, Negate):
        return -eval_jet(e.arg, u)
    try:
        if isinstance(e, Add):
            return eval_jet(e.left, u) + eval_jet(e.right, u)
        if isinstance(e, Sub):
            return eval_jet(e.left, u) - eval_jet(e.right, u)
        if isinstance(e, Mul):
            return eval_jet(e.left, u) * eval_jet(e.right, u)
        if isinstance(e, Div):
            num = eval_jet(e.left, u)
            den = eval_jet(e.right, u)
            try:
                inv = jet_recip(den)
            except PoleError as exc:
                raise PoleError(
                    f"division by a jet with zero real part in {render(e)}", where=render(e)
                ) from exc
            return num * inv
        if isinstance(e, PowInt):
            return ipow(eval_jet(e.base, u), e.exponent)
        if isinstance(e, Apply):
            arg = eval_jet(e.arg, u)
            try:
                return elementary.extend(e.fn, arg)
            except DomainError as exc:
                raise type(exc)(f"{exc} in {render(e)}", where=render(e)) from exc
    except DomainError as exc:
        if exc.where is None:
            raise DomainError(f"{exc} in {render(e)}", where=render(e)) from exc
        raise
    raise TypeError(f"not an expression node: {e!r}")

