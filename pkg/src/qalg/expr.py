"""A small expression language over the models.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := literal | scalar | '(' expr ')' | '-' factor

Literals: ``[a,b]`` intervals, ``{a}`` points, ``{a,b,...}`` finite point
sets, ``u(...)`` unions, ``d(c,r)`` disks, ``m([[a,b],[c,d]],...)`` matrix
sets, ``f(e1,...,en)`` tuples of literals and ``r(q)`` plain reals.  Scalars
are integers, ``p/q`` or decimals, converted exactly.

``[a,b]`` and ``{a}`` fit both the interval and the union model; the
elaborator picks the interval model unless another leaf forces unions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from gmpy2 import mpq

from .core import QAError, UsageError
from .exact import Scalar, parse_scalar
from .instances import (
    FuncInstance,
    FuncTuple,
    Interval,
    Matrix2,
    MatrixSet,
    Real,
    RealDisk,
    get_instance,
    normalize_union,
)


class ParseError(UsageError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at byte {offset}: {message}")
        self.offset = offset


class ExprTypeError(UsageError):
    def __init__(self, left: str, right: str):
        super().__init__(f"type error: cannot combine {left} with {right}")
        self.tags = (left, right)


# -- lexer --------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?)
  | (?P<name>[a-z]+)
  | (?P<op>[-+*(),\[\]{}])
""", re.VERBOSE)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int  # byte offset


def tokenize(text: str) -> list:
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", _byte(text, i))
        if m.lastgroup != "ws":
            toks.append(Tok(m.lastgroup, m.group(), _byte(text, i)))
        i = m.end()
    toks.append(Tok("end", "", _byte(text, len(text))))
    return toks


def _byte(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


# -- syntax tree ----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Scalar
    pos: int


@dataclass(frozen=True)
class Lit:
    """A literal; ``kind`` is one of interval, points, union, disk, matrix, func, real."""

    kind: str
    data: tuple
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int


@dataclass(frozen=True)
class Bin:
    op: str
    left: object
    right: object
    pos: int


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def take(self, text: Optional[str] = None, kind: Optional[str] = None) -> Tok:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "end" else "end of input"
            raise ParseError(f"expected {want}, got {got}", t.pos)
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind == "op"

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self):
        e = self.term()
        while self.at("+") or self.at("-"):
            t = self.take()
            e = Bin(t.text, e, self.term(), t.pos)
        return e

    def term(self):
        e = self.factor()
        while self.at("*"):
            t = self.take()
            e = Bin("*", e, self.factor(), t.pos)
        return e

    def factor(self):
        t = self.tok
        if self.at("-"):
            self.take()
            return Neg(self.factor(), t.pos)
        if self.at("("):
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if t.kind == "num":
            self.take()
            return Num(self._scalar(t), t.pos)
        return self.literal()

    # -- literals ---------------------------------------------------------------
    def _scalar(self, t: Tok) -> Scalar:
        try:
            return parse_scalar(t.text)
        except (ValueError, ZeroDivisionError, QAError):
            raise ParseError(f"bad number {t.text!r}", t.pos) from None

    def signed(self) -> Scalar:
        sign = 1
        while self.at("-") or self.at("+"):
            if self.take().text == "-":
                sign = -sign
        t = self.take(kind="num")
        return sign * self._scalar(t)

    def scalars(self, close: str) -> list:
        vals = [self.signed()]
        while self.at(","):
            self.take()
            vals.append(self.signed())
        self.take(close)
        return vals

    def literal(self):
        t = self.tok
        if self.at("["):
            self.take()
            vals = self.scalars("]")
            if len(vals) != 2:
                raise ParseError("an interval has two endpoints", t.pos)
            if vals[0] > vals[1]:
                raise ParseError("interval endpoints out of order", t.pos)
            return Lit("interval", tuple(vals), t.pos)
        if self.at("{"):
            self.take()
            vals = self.scalars("}")
            return Lit("points", tuple(vals), t.pos)
        if t.kind == "name":
            return self.constructor()
        got = repr(t.text) if t.kind != "end" else "end of input"
        raise ParseError(f"expected a literal, number or '(', got {got}", t.pos)

    def constructor(self):
        t = self.take(kind="name")
        name = t.text
        if name not in ("u", "d", "m", "f", "r"):
            raise ParseError(f"unknown constructor {name!r}", t.pos)
        self.take("(")
        if name == "u":
            parts = [self.literal()]
            while self.at(","):
                self.take()
                parts.append(self.literal())
            self.take(")")
            for p in parts:
                if p.kind not in ("interval", "points"):
                    raise ParseError("u(...) takes intervals and points", p.pos)
            return Lit("union", tuple(parts), t.pos)
        if name == "d":
            vals = self.scalars(")")
            if len(vals) != 2 or vals[1] < 0:
                raise ParseError("d(c,r) needs a centre and a radius >= 0", t.pos)
            return Lit("disk", tuple(vals), t.pos)
        if name == "m":
            mats = [self.matrix()]
            while self.at(","):
                self.take()
                mats.append(self.matrix())
            self.take(")")
            return Lit("matrix", tuple(mats), t.pos)
        if name == "f":
            items = [self.literal()]
            while self.at(","):
                self.take()
                items.append(self.literal())
            self.take(")")
            return Lit("func", tuple(items), t.pos)
        vals = self.scalars(")")
        if len(vals) != 1:
            raise ParseError("r(q) takes one number", t.pos)
        return Lit("real", tuple(vals), t.pos)

    def matrix(self):
        t = self.take("[")
        rows = [self.row()]
        while self.at(","):
            self.take()
            rows.append(self.row())
        self.take("]")
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ParseError("matrices are 2x2", t.pos)
        return tuple(v for r in rows for v in r)

    def row(self):
        self.take("[")
        return self.scalars("]")


def parse_expr(text: str):
    return _Parser(text).parse()


# -- elaboration ------------------------------------------------------------------

SCALAR_T = "scalar"
_PREFERENCE = ("interval", "union")


def _leaf_tags(node: Lit) -> frozenset:
    k = node.kind
    if k == "interval":
        return frozenset(("interval", "union"))
    if k == "points":
        return frozenset(("interval", "union")) if len(set(node.data)) == 1 else frozenset(("union",))
    if k in ("union", "disk", "matrix", "real"):
        return frozenset((k,))
    if k == "func":
        common = None
        for item in node.data:
            tags = _leaf_tags(item)
            common = tags if common is None else _unify(common, tags)
        return frozenset(f"func:{b}:{len(node.data)}" for b in common)
    raise AssertionError(k)


def _name(tags: frozenset) -> str:
    for p in _PREFERENCE:
        if p in tags:
            return p
    return sorted(tags)[0]


def _unify(a: frozenset, b: frozenset) -> frozenset:
    both = a & b
    if not both:
        raise ExprTypeError(_name(a), _name(b))
    return both


def infer(node):
    """Candidate tags of ``node``: a frozenset, or ``SCALAR_T`` for pure numbers."""
    if isinstance(node, Num):
        return SCALAR_T
    if isinstance(node, Lit):
        return _leaf_tags(node)
    if isinstance(node, Neg):
        return infer(node.arg)
    l, r = infer(node.left), infer(node.right)
    if l == SCALAR_T and r == SCALAR_T:
        return SCALAR_T
    if node.op == "*":
        if l == SCALAR_T:
            return r
        if r == SCALAR_T:
            return l
        return _unify(l, r)
    if SCALAR_T in (l, r):
        other = r if l == SCALAR_T else l
        raise ExprTypeError(SCALAR_T, _name(other))
    return _unify(l, r)


def elaborate(node) -> str:
    """The tag every leaf of ``node`` will be built in."""
    tags = infer(node)
    return SCALAR_T if tags == SCALAR_T else _name(tags)


# -- evaluation ---------------------------------------------------------------------

def _build(node: Lit, tag: str):
    k = node.kind
    if tag == "interval":
        if k == "interval":
            return Interval(*node.data)
        return Interval.point(node.data[0])
    if tag == "union":
        if k == "interval":
            return normalize_union([node.data])
        if k == "points":
            return normalize_union([(p, p) for p in node.data])
        pairs = []
        for part in node.data:
            if part.kind == "interval":
                pairs.append(part.data)
            else:
                pairs.extend((p, p) for p in part.data)
        return normalize_union(pairs)
    if tag == "disk":
        return RealDisk(*node.data)
    if tag == "matrix":
        return MatrixSet(tuple(Matrix2(m) for m in node.data))
    if tag == "real":
        return Real(node.data[0])
    if tag.startswith("func:"):
        base = tag.split(":")[1]
        return FuncTuple(tuple(_build(item, base) for item in node.data))
    raise AssertionError(tag)


def _eval(node, tag: str, inst):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Lit):
        return _build(node, tag)
    if isinstance(node, Neg):
        v = _eval(node.arg, tag, inst)
        return -v if isinstance(v, Scalar) else inst.scale(mpq(-1), v)
    a = _eval(node.left, tag, inst)
    b = _eval(node.right, tag, inst)
    sa, sb = isinstance(a, Scalar), isinstance(b, Scalar)
    if node.op == "*":
        if sa and sb:
            return a * b
        if sa:
            return inst.scale(a, b)
        if sb:
            return inst.scale(b, a)
        return inst.mul(a, b)
    if sa and sb:
        return a + b if node.op == "+" else a - b
    if node.op == "-":
        b = inst.scale(mpq(-1), b)
    return inst.add(a, b)


def instance_for(tag: str):
    if tag.startswith("func:"):
        _, base, n = tag.split(":")
        return FuncInstance(get_instance(base), int(n))
    return get_instance(tag)


def eval_expr(node):
    """Evaluate an expression; returns ``(value, instance)`` (instance ``None`` for scalars)."""
    tag = elaborate(node)
    if tag == SCALAR_T:
        return _eval(node, tag, None), None
    inst = instance_for(tag)
    return _eval(node, tag, inst), inst


def evaluate(text: str):
    return eval_expr(parse_expr(text))


def serialize(x) -> str:
    """Text that parses and evaluates back to ``x``."""
    from .serial import to_text
    return to_text(x)
