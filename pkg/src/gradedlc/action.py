"""Faithful action of Weyl-algebra elements on polynomials.

Independent of the normal-form rewriter: a term Y^a dY^b X^v d^w acts on
a polynomial in K[Y, X_1..X_d] by differentiating first (falling
factorials on the exponents) and multiplying afterwards.  Agreement of
`apply(p * q, f)` with `apply(p, apply(q, f))` is the external witness
that the rewriter's product is the true operator composition.
"""

from __future__ import annotations

from fractions import Fraction

from .weyl import WeylElement

# polynomial: dict mapping (y_exp, x_exps tuple) -> coefficient
Poly = dict[tuple[int, tuple[int, ...]], Fraction]


def poly_clean(p: Poly) -> Poly:
    return {k: Fraction(c) for k, c in p.items() if c}


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, Fraction(0)) + c
    return poly_clean(out)


def poly_eq(p: Poly, q: Poly) -> bool:
    return poly_clean(p) == poly_clean(q)


def _falling(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= n - j
    return out


def apply(op: WeylElement, poly: Poly) -> Poly:
    """op acting on the polynomial, term by term."""
    out: Poly = {}
    for (a, b, v, w), coeff in op.terms.items():
        for (ye, xe), c in poly.items():
            if b > ye:
                continue  # dY^b kills Y^ye
            fall = _falling(ye, b)
            new_c = c * coeff * fall
            xs = list(xe)
            dead = False
            for i in range(op.d):
                if w[i] > xs[i]:
                    dead = True
                    break
                new_c *= _falling(xs[i], w[i])
                xs[i] -= w[i]
            if dead or not new_c:
                continue
            key = (ye - b + a, tuple(x + v[i] for i, x in enumerate(xs)))
            out[key] = out.get(key, Fraction(0)) + new_c
    return poly_clean(out)
