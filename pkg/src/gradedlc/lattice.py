"""Degree lattice, sign-pattern blocks, and c-monomial ideals.

A multidegree is a plain tuple of ints.  Over the base field K the tuple
has one entry per X-variable; over the graded PID K[Y] the tuple is
prefixed by the Y-degree, so the full coordinate space has d+1 entries
and coordinate 0 is the Y-axis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal

FIELD = "field"
GRADED_PID = "graded_pid"

Base = Literal["field", "graded_pid"]

MultiDegree = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SignPattern:
    """A block of Z^d: membership[i] is True where coordinates are >= 0.

    The corner has 0 on member axes and -1 elsewhere; the block is the
    set of degrees with u_i >= 0 on member axes and u_i <= -1 off them.
    """

    membership: tuple[bool, ...]

    @property
    def d(self) -> int:
        return len(self.membership)

    @property
    def corner(self) -> MultiDegree:
        return tuple(0 if m else -1 for m in self.membership)

    @property
    def members(self) -> frozenset[int]:
        # 1-based axis indices, matching the usual {1,...,d} convention
        return frozenset(i + 1 for i, m in enumerate(self.membership) if m)

    def contains(self, u: MultiDegree) -> bool:
        if len(u) != self.d:
            raise DimensionMismatch(f"degree has {len(u)} coordinates, block has {self.d}")
        return all((x >= 0) == m for x, m in zip(u, self.membership))

    def label(self) -> str:
        return "".join("+" if m else "-" for m in self.membership)


def block_of(u: MultiDegree) -> SignPattern:
    """The unique sign-pattern block containing u."""
    if not u:
        raise DimensionMismatch("empty degree")
    return SignPattern(tuple(x >= 0 for x in u))


def enumerate_blocks(d: int) -> list[SignPattern]:
    """All 2^d blocks, ordered lexicographically on the membership vector
    (False < True), so reports are byte-for-byte reproducible."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return [SignPattern(bits) for bits in itertools.product((False, True), repeat=d)]


@dataclass(frozen=True)
class CMonomial:
    """A generator Y^c * X^w.  c = 0 over a field base."""

    y_pow: int
    x_exps: tuple[int, ...]

    def __post_init__(self):
        if self.y_pow < 0 or any(e < 0 for e in self.x_exps):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "x_exps", tuple(self.x_exps))

    @property
    def is_unit(self) -> bool:
        return self.y_pow == 0 and not any(self.x_exps)


@dataclass(frozen=True)
class CMonomialIdeal:
    """An ideal of A[X_1..X_d] generated by monomials Y^c X^w.

    Generators are deduplicated and sorted on construction, so equal
    ideals compare equal and hash identically.
    """

    d: int
    base: Base
    gens: tuple[CMonomial, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("need at least one X-variable")
        if self.base not in (FIELD, GRADED_PID):
            raise ValueError(f"unknown base {self.base!r}")
        gens = tuple(sorted(set(self.gens), key=lambda g: (g.y_pow, g.x_exps)))
        if not gens:
            raise ValueError("ideal needs at least one generator")
        for g in gens:
            if len(g.x_exps) != self.d:
                raise DimensionMismatch("generator arity does not match d")
            if self.base == FIELD and g.y_pow:
                raise ValueError("field base forbids Y in generators")
        object.__setattr__(self, "gens", gens)

    # -- coordinate bookkeeping ---------------------------------------------

    @property
    def t(self) -> int:
        return len(self.gens)

    @property
    def nvars(self) -> int:
        """Size of the full coordinate space (Y-axis included for K[Y])."""
        return self.d + 1 if self.base == GRADED_PID else self.d

    @property
    def is_usual(self) -> bool:
        return all(g.y_pow == 0 for g in self.gens)

    def coord_of_axis(self, axis: int) -> int:
        """Map an axis (1..d for X, 0 for Y over K[Y]) to a coordinate index."""
        if 1 <= axis <= self.d:
            return axis if self.base == GRADED_PID else axis - 1
        if axis == 0 and self.base == GRADED_PID:
            return 0
        raise IndexError(f"axis {axis} out of range")

    def axes(self) -> list[int]:
        return ([0] if self.base == GRADED_PID else []) + list(range(1, self.d + 1))

    def gen_supports(self) -> tuple[frozenset[int], ...]:
        """Per generator: the coordinate indices with positive exponent."""
        sups = []
        for g in self.gens:
            s = {i for i, e in enumerate(g.x_exps) if e > 0}
            if self.base == GRADED_PID:
                s = {i + 1 for i in s}
                if g.y_pow > 0:
                    s.add(0)
            sups.append(frozenset(s))
        return tuple(sups)

    def check_degree(self, u: Iterable[int]) -> MultiDegree:
        u = tuple(int(x) for x in u)
        if len(u) != self.nvars:
            raise DimensionMismatch(
                f"degree has {len(u)} coordinates, ideal grades over {self.nvars}"
            )
        return u

    # -- derived ideals ------------------------------------------------------

    def over_field(self) -> "CMonomialIdeal":
        """The same X-generators over the base field (Y mapped to a unit)."""
        return CMonomialIdeal(
            self.d, FIELD, tuple(CMonomial(0, g.x_exps) for g in self.gens)
        )

    def meets_base(self) -> bool:
        """Whether the ideal contains a nonzero element of A = K[Y],
        i.e. a pure Y-power (for a monomial ideal this is a generator
        with trivial X-part)."""
        return any(not any(g.x_exps) for g in self.gens)
