"""Normal-form arithmetic in the Weyl algebra over Q.

Elements are finite rational combinations of ordered monomials
Y^a dY^b X^v d^w (the Y / dY pair only when `with_base` is set).  The
normal order puts all polynomial variables left of all derivations
within each commuting pair; two elements are equal iff their term maps
are equal.  The only nontrivial relations are d_i X_i = X_i d_i + 1 and
dY Y = Y dY + 1; all other generator pairs commute.

The order filtration counts total derivation degree |b| + |w|; its
associated graded ring is commutative, with the principal symbol map
implemented on `CommutativePoly`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

# term key: (y_exp, dy_exp, x_exps, d_exps)
Key = tuple[int, int, tuple[int, ...], tuple[int, ...]]


def _zero_key(d: int) -> Key:
    return (0, 0, (0,) * d, (0,) * d)


class WeylElement:
    """Immutable normal-form element of the Weyl algebra."""

    __slots__ = ("d", "with_base", "terms")

    def __init__(self, d: int, terms=None, with_base: bool = False):
        clean: dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if not c:
                continue
            a, b, v, w = key
            if not with_base and (a or b):
                raise ValueError("Y/dY require with_base")
            if len(v) != d or len(w) != d:
                raise ValueError("arity mismatch in term key")
            clean[(a, b, tuple(v), tuple(w))] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "with_base", with_base)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("WeylElement is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, d, with_base=False):
        return cls(d, {}, with_base)

    @classmethod
    def const(cls, c, d, with_base=False):
        return cls(d, {_zero_key(d): Fraction(c)}, with_base)

    @classmethod
    def x(cls, i, d, with_base=False):
        _check_axis(i, d)
        v = tuple(1 if k == i - 1 else 0 for k in range(d))
        return cls(d, {(0, 0, v, (0,) * d): Fraction(1)}, with_base)

    @classmethod
    def partial(cls, i, d, with_base=False):
        _check_axis(i, d)
        w = tuple(1 if k == i - 1 else 0 for k in range(d))
        return cls(d, {(0, 0, (0,) * d, w): Fraction(1)}, with_base)

    @classmethod
    def y(cls, d):
        return cls(d, {(1, 0, (0,) * d, (0,) * d): Fraction(1)}, True)

    @classmethod
    def delta(cls, d):
        return cls(d, {(0, 1, (0,) * d, (0,) * d): Fraction(1)}, True)

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, WeylElement):
            if other.d != self.d or other.with_base != self.with_base:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return WeylElement.const(other, self.d, self.with_base)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return WeylElement(self.d, terms, self.with_base)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(
            self.d, {k: -c for k, c in self.terms.items()}, self.with_base
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return WeylElement(
                self.d, {k: c * v for k, v in self.terms.items()}, self.with_base
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Key, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                for key, c in _term_product(self.d, k1, k2):
                    acc[key] = acc.get(key, Fraction(0)) + c1 * c2 * c
        return WeylElement(self.d, acc, self.with_base)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers do not exist in the Weyl algebra")
        out = WeylElement.const(1, self.d, self.with_base)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylElement.const(other, self.d, self.with_base)
        return (
            isinstance(other, WeylElement)
            and self.d == other.d
            and self.with_base == other.with_base
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.d, self.with_base, frozenset(self.terms.items())))

    @property
    def is_zero(self):
        return not self.terms

    # -- grading and filtration ---------------------------------------------

    def multidegree(self) -> tuple[int, ...] | None:
        """The common Z^d-degree v - w of all terms, or None if the
        element is not multihomogeneous.  Y and dY have degree 0."""
        degs = {tuple(x - y for x, y in zip(v, w)) for (_, _, v, w) in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def order(self) -> int:
        """Least level of the derivation-order filtration containing the
        element: max over terms of dy_exp + |d_exps|.  order(0) = 0."""
        if not self.terms:
            return 0
        return max(b + sum(w) for (_, b, _, w) in self.terms)

    def in_filtration_level(self, nu: int) -> bool:
        return all(b + sum(w) <= nu for (_, b, _, w) in self.terms)

    def principal_symbol(self) -> "CommutativePoly":
        """Image in the associated graded ring: the top-order terms with
        the derivations replaced by commuting symbol variables."""
        if not self.terms:
            return CommutativePoly(self.d, {})
        top = self.order()
        return CommutativePoly(
            self.d,
            {k: c for k, c in self.terms.items() if k[1] + sum(k[3]) == top},
        )

    # -- printing -----------------------------------------------------------

    def __repr__(self):
        return f"WeylElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_print_key):
            c = self.terms[key]
            mono = _format_monomial(key)
            if mono == "1":
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _check_axis(i, d):
    if not 1 <= i <= d:
        raise IndexError(f"axis {i} out of range 1..{d}")


def _print_key(key: Key):
    # highest total degree first, then a stable tie-break
    a, b, v, w = key
    return (-(a + b + sum(v) + sum(w)), a, b, v, w)


def _format_monomial(key: Key) -> str:
    a, b, v, w = key
    parts = []
    if a:
        parts.append("Y" if a == 1 else f"Y^{a}")
    if b:
        parts.append("dY" if b == 1 else f"dY^{b}")
    for i, e in enumerate(v, start=1):
        if e:
            parts.append(f"X{i}" if e == 1 else f"X{i}^{e}")
    for i, e in enumerate(w, start=1):
        if e:
            parts.append(f"D{i}" if e == 1 else f"D{i}^{e}")
    return "*".join(parts) if parts else "1"


def _pair_reorder(m: int, n: int):
    """d^m x^n = sum_k C(m,k) C(n,k) k! x^{n-k} d^{m-k} for one
    canonically conjugate pair."""
    for k in range(min(m, n) + 1):
        yield k, math.comb(m, k) * math.comb(n, k) * math.factorial(k)


def _term_product(d: int, k1: Key, k2: Key):
    """Normal-form expansion of the product of two ordered monomials."""
    a1, b1, v1, w1 = k1
    a2, b2, v2, w2 = k2
    y_moves = list(_pair_reorder(b1, a2))
    x_moves = [list(_pair_reorder(w1[i], v2[i])) for i in range(d)]
    for (ky, cy), *per_axis in itertools.product(y_moves, *x_moves):
        coeff = cy
        v = list(v1)
        w = list(w2)
        for i, (k, c) in enumerate(per_axis):
            coeff *= c
            v[i] += v2[i] - k
            w[i] += w1[i] - k
        yield (a1 + a2 - ky, b1 + b2 - ky, tuple(v), tuple(w)), Fraction(coeff)


def euler(i: int, d: int, with_base: bool = False) -> WeylElement:
    """The i-th Euler operator X_i d_i."""
    return WeylElement.x(i, d, with_base) * WeylElement.partial(i, d, with_base)


class CommutativePoly:
    """Element of the associated graded ring: a commutative polynomial in
    Y, the X's, and the symbol images of dY and the d's."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms):
        self.d = d
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    def __eq__(self, other):
        return (
            isinstance(other, CommutativePoly)
            and self.d == other.d
            and self.terms == other.terms
        )

    def __mul__(self, other):
        if not isinstance(other, CommutativePoly) or other.d != self.d:
            raise ValueError("arity mismatch")
        acc: dict[Key, Fraction] = {}
        for (a1, b1, v1, w1), c1 in self.terms.items():
            for (a2, b2, v2, w2), c2 in other.terms.items():
                key = (
                    a1 + a2,
                    b1 + b2,
                    tuple(x + y for x, y in zip(v1, v2)),
                    tuple(x + y for x, y in zip(w1, w2)),
                )
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return CommutativePoly(self.d, acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, Fraction(0)) - c
        return CommutativePoly(self.d, acc)

    @property
    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"CommutativePoly({self.terms})"


# ---------------------------------------------------------------------------
# identity verifiers
# ---------------------------------------------------------------------------


def verify_X_e(i: int, j: int, d: int) -> bool:
    """X_i^j E_i = (E_i - j) X_i^j."""
    e = euler(i, d)
    xj = WeylElement.x(i, d) ** j
    return xj * e == (e - j) * xj


def verify_partial_e(i: int, j: int, d: int) -> bool:
    """E_i d_i^j = d_i^j (E_i - j)."""
    e = euler(i, d)
    pj = WeylElement.partial(i, d) ** j
    return e * pj == pj * (e - j)


def euler_word(w, d: int, shifts=None, with_base: bool = False) -> WeylElement:
    """prod_i (E_i + shift_i)^{w_i}; the factors commute."""
    shifts = shifts or (0,) * d
    out = WeylElement.const(1, d, with_base)
    for i in range(d):
        out = out * (euler(i + 1, d, with_base) + shifts[i]) ** w[i]
    return out


def verify_e_shift_multi(w, i: int, u: int, sign: str, d: int) -> bool:
    """E^w X_i^u = X_i^u * (E with E_i shifted by +u)^w, and the
    derivation version with shift -u."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    shift = [0] * d
    if sign == "+":
        gen = WeylElement.x(i, d) ** u
        shift[i - 1] = u
    else:
        gen = WeylElement.partial(i, d) ** u
        shift[i - 1] = -u
    return euler_word(w, d) * gen == gen * euler_word(w, d, tuple(shift))


def poly_in_euler(coeffs: dict, d: int, shifts=None) -> WeylElement:
    """f(E_1 + s_1, ..., E_d + s_d) for f given by exponent -> coefficient."""
    out = WeylElement.zero(d)
    for exps, c in coeffs.items():
        out = out + euler_word(exps, d, shifts) * Fraction(c)
    return out


def monomial_xd(a, d: int) -> tuple[WeylElement, WeylElement, WeylElement]:
    """(x_a^+, x_a^-, x_a) for a in Z^d: the positive X-part, the negative
    derivation part, and their (commuting) product."""
    plus = WeylElement.const(1, d)
    minus = WeylElement.const(1, d)
    for i, ai in enumerate(a, start=1):
        if ai > 0:
            plus = plus * WeylElement.x(i, d) ** ai
        elif ai < 0:
            minus = minus * WeylElement.partial(i, d) ** (-ai)
    return plus, minus, plus * minus


def verify_D0_factorization(a, f: dict, d: int) -> bool:
    """x_a^+ f(E) x_a^- equals both f(E') x_a and x_a f(E''), where E'
    shifts E_i by -a_i on the positive axes and E'' shifts it by a_i on
    the negative ones."""
    a = tuple(a)
    plus, minus, xa = monomial_xd(a, d)
    middle = plus * poly_in_euler(f, d) * minus
    left_shift = tuple(-ai if ai > 0 else 0 for ai in a)
    right_shift = tuple(ai if ai < 0 else 0 for ai in a)
    left = poly_in_euler(f, d, left_shift) * xa
    right = xa * poly_in_euler(f, d, right_shift)
    return middle == left and middle == right


def verify_filtration_inclusion(p: WeylElement, q: WeylElement) -> bool:
    """Multihomogeneous p, q: the product stays within the sum of the
    filtration levels and the multidegrees add (strict order drop is
    allowed; the filtration inclusion is not an equality)."""
    du, dv = p.multidegree(), q.multidegree()
    if du is None or dv is None:
        raise ValueError("inputs must be multihomogeneous")
    pq = p * q
    if pq.is_zero:
        return True
    if pq.order() > p.order() + q.order():
        return False
    return pq.multidegree() == tuple(x + y for x, y in zip(du, dv))


def verify_symbol_multiplicative(p: WeylElement, q: WeylElement) -> bool:
    """Symbols commute, and sigma(pq) = sigma(p) sigma(q) whenever the
    orders add."""
    sp, sq = p.principal_symbol(), q.principal_symbol()
    if not (sp * sq - sq * sp).is_zero:
        return False
    pq = p * q
    if not pq.is_zero and pq.order() == p.order() + q.order():
        return pq.principal_symbol() == sp * sq
    return True
