"""The quasi-algebra contract and the operations every model shares.

A model is a :class:`QAInstance`: an immutable bundle of order, sum,
scalar multiple, product, norm and directed distance for one kind of
element.  The module-level functions check instance tags and delegate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .exact import ONE, ZERO, Q, Scalar


class QAError(Exception):
    """Base class for library errors."""


class UsageError(QAError, ValueError):
    """A precondition was violated."""


class TagMismatch(UsageError):
    def __init__(self, expected: str, got: Any):
        self.expected = expected
        self.got = got
        super().__init__(f"element {got!s} does not belong to instance {expected!r}")


class Unsupported(QAError):
    """The operation does not apply to this model."""


Elem = Any


class QAInstance:
    """Operation table of one concrete quasi-algebra.

    Subclasses implement the underscored hooks; callers normally go through
    the checked module functions (:func:`leq`, :func:`add`, ...).
    """

    tag: str = "abstract"
    has_identity: bool = True
    #: False only for models where every element is regular (plain reals).
    is_set_model: bool = True

    # -- structure ---------------------------------------------------------
    def accepts(self, x: Elem) -> bool:
        raise NotImplementedError

    @property
    def zero(self) -> Elem:
        raise NotImplementedError

    @property
    def identity(self) -> Elem | None:
        return None

    def leq(self, x: Elem, y: Elem) -> bool:
        raise NotImplementedError

    def add(self, x: Elem, y: Elem) -> Elem:
        raise NotImplementedError

    def scale(self, a: Scalar, x: Elem) -> Elem:
        raise NotImplementedError

    def mul(self, x: Elem, y: Elem) -> Elem:
        raise NotImplementedError

    def norm(self, x: Elem):
        raise NotImplementedError

    def excess(self, x: Elem, y: Elem):
        """Least ``r`` with ``x <= y + ball(r)``."""
        raise NotImplementedError

    def ball(self, r: Scalar) -> Elem:
        """A symmetric element of norm at most ``r`` containing zero."""
        raise NotImplementedError

    def unit_ball(self) -> Elem:
        return self.ball(ONE)

    def equal(self, x: Elem, y: Elem) -> bool:
        return x == y

    # -- regular part and units -------------------------------------------
    def is_regular(self, x: Elem) -> bool:
        return self.add(x, self.scale(-ONE, x)) == self.zero

    def inverse(self, x: Elem) -> Elem | None:
        """Product inverse of ``x`` or ``None`` when ``x`` is not a unit."""
        raise Unsupported(f"{self.tag} has no group of units")

    # -- generation and shrinking -----------------------------------------
    def generate(self, rng: random.Random, size: int = 4) -> Elem:
        raise NotImplementedError

    def generate_regular(self, rng: random.Random) -> Elem:
        raise NotImplementedError

    def generate_symmetric(self, rng: random.Random, size: int = 4) -> Elem:
        x = self.generate(rng, size)
        return self.add(x, self.scale(-ONE, x))

    def generate_above_zero(self, rng: random.Random, size: int = 2) -> Elem:
        """An element ``w`` with ``zero <= w``."""
        return self.generate_symmetric(rng, size)

    def generate_above(self, x: Elem, rng: random.Random) -> Elem:
        """A random ``y`` with ``x <= y``."""
        return self.add(x, self.generate_above_zero(rng))

    def generate_below(self, x: Elem, rng: random.Random) -> Elem:
        """A random ``y`` with ``y <= x``; defaults to a regular minorant or ``x``."""
        return x

    def generate_unit(self, rng: random.Random) -> Elem:
        raise Unsupported(f"{self.tag} has no group of units")

    def shrink(self, x: Elem) -> Iterator[Elem]:
        """Candidate simplifications of ``x``, simplest first."""
        return iter(())

    def complexity(self, x: Elem) -> int:
        """Number of components in the description of ``x``."""
        return 1

    def compact_chain(self, x: Elem, n: int):
        """A closed-form chain report for starts whose links cannot be stored, else ``None``."""
        return None

    # -- text --------------------------------------------------------------
    def __repr__(self):
        return f"<{type(self).__name__} {self.tag}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.tag == other.tag

    def __hash__(self):
        return hash((type(self).__name__, self.tag))


def _check(inst: QAInstance, *elems: Elem) -> None:
    for e in elems:
        if not inst.accepts(e):
            raise TagMismatch(inst.tag, e)


def leq(inst: QAInstance, x: Elem, y: Elem) -> bool:
    _check(inst, x, y)
    return inst.leq(x, y)


def add(inst: QAInstance, x: Elem, y: Elem) -> Elem:
    _check(inst, x, y)
    return inst.add(x, y)


def scale(inst: QAInstance, a, x: Elem) -> Elem:
    _check(inst, x)
    return inst.scale(Q(a), x)


def neg(inst: QAInstance, x: Elem) -> Elem:
    return scale(inst, -ONE, x)


def sub(inst: QAInstance, x: Elem, y: Elem) -> Elem:
    """``x - y``, i.e. ``x + (-1)·y``; not an additive inverse in general."""
    _check(inst, x, y)
    return inst.add(x, inst.scale(-ONE, y))


def mul(inst: QAInstance, x: Elem, y: Elem) -> Elem:
    _check(inst, x, y)
    return inst.mul(x, y)


def is_regular(inst: QAInstance, x: Elem) -> bool:
    _check(inst, x)
    return inst.is_regular(x)


def is_symmetric(inst: QAInstance, x: Elem) -> bool:
    _check(inst, x)
    return inst.scale(-ONE, x) == x


def strictly_below(inst: QAInstance, x: Elem, y: Elem) -> bool:
    return leq(inst, x, y) and x != y


def singular_above(inst: QAInstance, x: Elem) -> Elem:
    """A singular element above ``x``: ``x`` plus the model's unit ball."""
    _check(inst, x)
    if not inst.is_set_model:
        raise Unsupported(f"{inst.tag} is an algebra; it has no singular elements")
    return inst.add(x, inst.unit_ball())


@dataclass(frozen=True)
class ChainReport:
    start: Elem
    links: tuple
    strict: tuple

    def __post_init__(self):
        if len(self.links) != len(self.strict):
            raise ValueError("one strictness flag per link")

    @property
    def all_strict(self) -> bool:
        return all(self.strict)


def singular_chain(inst: QAInstance, x: Elem, n: int) -> ChainReport:
    """First ``n`` links of a strictly increasing chain above ``x``.

    A singular start grows by ``x -> x + x - x``; a regular start is first
    lifted with :func:`singular_above`.
    """
    _check(inst, x)
    if not inst.is_set_model:
        raise Unsupported(f"{inst.tag} is an algebra; singular chains do not exist")
    if n < 1:
        raise UsageError("chain length must be at least 1")
    compact = inst.compact_chain(x, n)
    if compact is not None:
        return compact
    links = []
    strict = []
    prev = x
    cur = x if not inst.is_regular(x) else None
    for i in range(n):
        if cur is None:
            nxt = singular_above(inst, prev)
        else:
            nxt = inst.add(cur, inst.add(cur, inst.scale(-ONE, cur)))
        strict.append(inst.leq(prev, nxt) and prev != nxt)
        links.append(nxt)
        prev = cur = nxt
    return ChainReport(start=x, links=tuple(links), strict=tuple(strict))


def l_member(inst: QAInstance, s: Elem, S: Sequence[Elem]) -> bool:
    _check(inst, s, *S)
    return any(inst.leq(s, r) for r in S)


def g_member(inst: QAInstance, s: Elem, S: Sequence[Elem]) -> bool:
    _check(inst, s, *S)
    return any(inst.leq(r, s) for r in S)


def l_subset(inst: QAInstance, T: Sequence[Elem], S: Sequence[Elem]) -> bool:
    return all(l_member(inst, t, S) for t in T)


def g_subset(inst: QAInstance, T: Sequence[Elem], S: Sequence[Elem]) -> bool:
    return all(g_member(inst, t, S) for t in T)


__all__ = [
    "QAError", "UsageError", "TagMismatch", "Unsupported", "QAInstance",
    "ChainReport", "leq", "add", "scale", "neg", "sub", "mul", "is_regular",
    "is_symmetric", "strictly_below", "singular_above", "singular_chain",
    "l_member", "g_member", "l_subset", "g_subset", "ZERO", "ONE",
]
