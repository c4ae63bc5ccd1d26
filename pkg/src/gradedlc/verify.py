"""Verification suites over single ideals or a seeded corpus.

Each suite returns a list of CheckReport; the CLI flattens these into a
JSON report with one entry per check.  All randomness is owned by
explicit seeds so reruns are byte-identical.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import weyl
from .action import apply as weyl_apply, poly_eq
from .cech import euler_action_check, slice_dims
from .corpus import generate_corpus
from .lattice import CMonomialIdeal, FIELD, GRADED_PID, block_of, enumerate_blocks
from .rigidity import (
    CheckReport,
    box,
    check_partial_iso,
    check_straightness,
    corner_dims,
    scan_rigidity,
)
from .structure import (
    bass_table,
    check_free_components,
    check_nonfg,
    generic_fiber_dim,
    socle_dim,
    structure_triple,
    y_profile,
)

MAP_RADIUS = 2  # box radius for suites that build chain maps (costlier than dims)


def rigidity_suite(ideals, radius: int = 6) -> list[CheckReport]:
    return [scan_rigidity(I, radius) for I in ideals]


def straightness_suite(ideals, radius: int = MAP_RADIUS) -> list[CheckReport]:
    reports = []
    for I in ideals:
        if I.base != FIELD:
            continue
        samples = list(box(I.nvars, radius))
        for i in range(I.t + 1):
            reports.append(check_straightness(I, i, samples))
            reports.append(check_partial_iso(I, i, samples))
    return reports


def eulerian_suite(ideals, radius: int = MAP_RADIUS) -> list[CheckReport]:
    reports = []
    for I in ideals:
        rep = CheckReport("eulerian", True, 0)
        for i in range(I.t + 1):
            for u in box(I.nvars, radius):
                rep.record(euler_action_check(I, i, u), (i, u))
        reports.append(rep)
    return reports


def multiplicity_suite(ideals, radius: int = 4) -> list[CheckReport]:
    """m=0 multiplicity (= dimension) is constant on every block."""
    reports = []
    for I in ideals:
        if I.base != FIELD:
            continue
        rep = CheckReport("multiplicity-m0", True, 0)
        corners = corner_dims(I)
        for u in box(I.nvars, radius):
            expected = corners[block_of(u)]
            rep.record(slice_dims(I, u) == expected, u)
        reports.append(rep)
    return reports


def structure_suite(ideals) -> list[CheckReport]:
    """Per graded-PID ideal: Bass-table consistency, socle cross-check,
    generic-fiber rank identity, free components, non-finite-generation."""
    reports = []
    for I in ideals:
        if I.base != GRADED_PID:
            continue
        corners = [pat.corner for pat in enumerate_blocks(I.d)]
        rep = CheckReport("bass-consistency", True, 0)
        for i in range(I.t + 1):
            for u in corners:
                t = structure_triple(I, i, u)
                b = bass_table(t)
                ok = (
                    b.mu0_m == t.s
                    and b.mu1_m == t.r
                    and b.mu0_zero == t.v + t.r
                    and b.mu1_zero == 0
                    and b.injdim <= b.dim_supp
                    and socle_dim(I, i, u) == t.s
                    and generic_fiber_dim(I, i, u) == t.v + t.r
                )
                rep.record(ok, (i, u, t, b))
        reports.append(rep)
        if I.is_usual:
            for i in range(I.t + 1):
                reports.append(check_free_components(I, i, corners))
        for i in range(I.t + 1):
            reports.append(check_nonfg(I, i, corners))
    return reports


# ---------------------------------------------------------------------------
# Weyl identity suite
# ---------------------------------------------------------------------------

MAX_WEYL_EXP = 6
MAX_COEF = 100


def _random_fraction(rng):
    return Fraction(rng.randint(-MAX_COEF, MAX_COEF), rng.randint(1, MAX_COEF))


def _random_element(rng, d, with_base, nterms=3, max_exp=2):
    terms = {}
    for _ in range(nterms):
        key = (
            rng.randint(0, max_exp) if with_base else 0,
            rng.randint(0, max_exp) if with_base else 0,
            tuple(rng.randint(0, max_exp) for _ in range(d)),
            tuple(rng.randint(0, max_exp) for _ in range(d)),
        )
        terms[key] = _random_fraction(rng)
    return weyl.WeylElement(d, terms, with_base)


def _random_poly(rng, d, nterms=4, max_exp=6):
    return {
        (rng.randint(0, max_exp), tuple(rng.randint(0, max_exp) for _ in range(d))):
            _random_fraction(rng)
        for _ in range(nterms)
    }


def _random_euler_poly(rng, d, max_deg=2, nterms=2):
    return {
        tuple(rng.randint(0, max_deg) for _ in range(d)): _random_fraction(rng)
        for _ in range(nterms)
    }


def weyl_suite(seed: int, n: int = 1000) -> list[CheckReport]:
    """Randomized verification of the commutation identities, the
    monomial factorization of the degree-a part, the filtration
    inclusion, and symbol multiplicativity, each cross-checked against
    the polynomial action oracle."""
    rng = random.Random(seed)
    reports = []

    rep = CheckReport("X-euler-commutation", True, 0)
    for _ in range(n):
        d = rng.randint(1, 3)
        i, j = rng.randint(1, d), rng.randint(0, MAX_WEYL_EXP)
        rep.record(weyl.verify_X_e(i, j, d), (d, i, j))
    reports.append(rep)

    rep = CheckReport("partial-euler-commutation", True, 0)
    for _ in range(n):
        d = rng.randint(1, 3)
        i, j = rng.randint(1, d), rng.randint(0, MAX_WEYL_EXP)
        rep.record(weyl.verify_partial_e(i, j, d), (d, i, j))
    reports.append(rep)

    for sign, name in (("+", "euler-shift-X"), ("-", "euler-shift-partial")):
        rep = CheckReport(name, True, 0)
        for _ in range(n):
            d = rng.randint(1, 3)
            i = rng.randint(1, d)
            w = tuple(rng.randint(0, 3) for _ in range(d))
            u = rng.randint(1, MAX_WEYL_EXP)
            rep.record(weyl.verify_e_shift_multi(w, i, u, sign, d), (d, w, i, u))
        reports.append(rep)

    rep = CheckReport("degree-part-factorization", True, 0)
    for _ in range(n):
        d = rng.randint(1, 3)
        a = tuple(rng.randint(-3, 3) for _ in range(d))
        f = _random_euler_poly(rng, d)
        rep.record(weyl.verify_D0_factorization(a, f, d), (d, a, f))
    reports.append(rep)

    rep = CheckReport("filtration-inclusion", True, 0)
    for _ in range(n):
        d = rng.randint(1, 3)
        with_base = rng.random() < 0.5
        p = _random_homogeneous(rng, d, with_base)
        q = _random_homogeneous(rng, d, with_base)
        rep.record(weyl.verify_filtration_inclusion(p, q), (d,))
    reports.append(rep)

    rep = CheckReport("symbol-multiplicativity", True, 0)
    for _ in range(n):
        d = rng.randint(1, 3)
        with_base = rng.random() < 0.5
        p = _random_element(rng, d, with_base)
        q = _random_element(rng, d, with_base)
        rep.record(weyl.verify_symbol_multiplicative(p, q), (d,))
    reports.append(rep)

    rep = CheckReport("action-oracle", True, 0)
    for _ in range(n):
        d = rng.randint(1, 3)
        with_base = rng.random() < 0.5
        p = _random_element(rng, d, with_base)
        q = _random_element(rng, d, with_base)
        f = _random_poly(rng, d)
        ok = poly_eq(weyl_apply(p * q, f), weyl_apply(p, weyl_apply(q, f)))
        rep.record(ok, (d,))
    reports.append(rep)

    return reports


def _random_homogeneous(rng, d, with_base, max_exp=3):
    """A multihomogeneous element: all terms share the same v - w."""
    deg = tuple(rng.randint(-max_exp, max_exp) for _ in range(d))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        w = tuple(rng.randint(max(0, -deg[i]), max_exp) for i in range(d))
        v = tuple(w[i] + deg[i] for i in range(d))
        key = (
            rng.randint(0, 2) if with_base else 0,
            rng.randint(0, 2) if with_base else 0,
            v,
            w,
        )
        terms[key] = _random_fraction(rng)
    el = weyl.WeylElement(d, terms, with_base)
    if el.is_zero:
        key = (0, 0, tuple(max(x, 0) for x in deg), tuple(max(-x, 0) for x in deg))
        el = weyl.WeylElement(d, {key: Fraction(1)}, with_base)
    return el


SUITES = {
    "rigidity": lambda ideals, seed: rigidity_suite(ideals),
    "straight": lambda ideals, seed: straightness_suite(ideals),
    "eulerian": lambda ideals, seed: eulerian_suite(ideals),
    "structure": lambda ideals, seed: structure_suite(ideals),
    "weyl": lambda ideals, seed: weyl_suite(seed),
}


def run_suite(name: str, ideals, seed: int = 0) -> list[CheckReport]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return suite(ideals, seed)
