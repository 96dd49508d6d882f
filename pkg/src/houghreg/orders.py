"""Term orderings on exponent vectors.

An ordering is represented by a small frozen object exposing ``key``, which
maps an exponent tuple to a sort key so that comparing keys with Python's
tuple comparison realizes the ordering.  All orderings here are total,
multiplicative term orderings with 1 as the minimal element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError

LESS, EQUAL, GREATER = -1, 0, 1


def _degrevlex_key(exp):
    total = 0
    rev = []
    for e in reversed(exp):
        total += e
        rev.append(-e)
    return (total, tuple(rev))


@dataclass(frozen=True)
class TermOrder:
    """A term ordering: ``lex``, ``deglex``, ``degrevlex`` or ``blockelim``.

    ``blockelim`` eliminates the first ``block`` indeterminates: it compares
    the two blocks lexicographically, using DegRevLex inside each block.
    """

    kind: str
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "deglex", "degrevlex", "blockelim"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.kind == "blockelim" and self.block < 1:
            raise ValueError("blockelim needs a positive block size")

    @property
    def degree_compatible(self) -> bool:
        return self.kind in ("deglex", "degrevlex")

    def key(self, exp):
        kind = self.kind
        if kind == "degrevlex":
            return _degrevlex_key(exp)
        if kind == "deglex":
            return (sum(exp), exp)
        if kind == "lex":
            return exp
        k = self.block
        return (_degrevlex_key(exp[:k]), _degrevlex_key(exp[k:]))

    def compare(self, u, v) -> int:
        """Three-way comparison of exponent vectors; raises on length mismatch."""
        if len(u) != len(v):
            raise DimensionError(f"exponent lengths differ: {len(u)} vs {len(v)}")
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return LESS
        if ku > kv:
            return GREATER
        return EQUAL


LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")
DEGREVLEX = TermOrder("degrevlex")


def block_elim(k: int) -> TermOrder:
    """Elimination order killing the first ``k`` indeterminates."""
    return TermOrder("blockelim", k)


ORDER_NAMES = {"lex": LEX, "deglex": DEGLEX, "degrevlex": DEGREVLEX}
