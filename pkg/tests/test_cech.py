import itertools

from gradedlc import (
    CMonomial,
    CMonomialIdeal,
    FIELD,
    build_slice,
    cohomology,
    euler_action_check,
    partial_chain_map,
    slice_dims,
    x_chain_map,
)

from oracles import brute_force_slice_dims


def box(n, radius):
    return itertools.product(range(-radius, radius + 1), repeat=n)


def test_axes_ideal_top_cohomology(axes_ideal):
    # single nonzero component class: both coordinates negative
    assert cohomology(axes_ideal, 2, (-1, -1)).dim == 1
    assert cohomology(axes_ideal, 2, (-4, -2)).dim == 1
    assert cohomology(axes_ideal, 2, (0, -1)).dim == 0
    assert cohomology(axes_ideal, 2, (0, 0)).dim == 0
    for i in (0, 1):
        for u in box(2, 2):
            assert cohomology(axes_ideal, i, u).dim == 0


def test_product_ideal_first_cohomology(product_ideal):
    assert cohomology(product_ideal, 1, (-3, 4)).dim == 1
    assert cohomology(product_ideal, 1, (-1, -1)).dim == 1
    assert cohomology(product_ideal, 1, (0, 0)).dim == 0
    assert cohomology(product_ideal, 0, (-1, 2)).dim == 0


def test_slice_dims_matches_cohomology(axes_ideal, product_ideal):
    for I in (axes_ideal, product_ideal):
        for u in box(2, 2):
            dims = slice_dims(I, u)
            assert dims == [cohomology(I, i, u).dim for i in range(I.t + 1)]


def test_complex_is_a_complex(corpus):
    # build_slice asserts d(k+1) . d(k) = 0 internally
    for I in corpus[:10]:
        for u in box(I.nvars, 1):
            build_slice(I, u)


def test_representatives_are_cocycles(product_ideal, axes_ideal):
    for I, i, u in (
        (product_ideal, 1, (-2, 3)),
        (axes_ideal, 2, (-1, -1)),
    ):
        rep = cohomology(I, i, u)
        assert rep.representatives.cols == rep.dim
        d = rep.slice.differential(i)
        assert (d * rep.representatives).is_zero()


def test_x_chain_map_values(axes_ideal):
    m = x_chain_map(axes_ideal, 2, (-2, -1), axis=1)
    assert m.rows == m.cols == 1 and m.is_invertible()
    # multiplication into a vanishing component
    m = x_chain_map(axes_ideal, 2, (-1, -1), axis=1)
    assert m.rows == 0


def test_partial_chain_map_values(axes_ideal):
    # differentiation scales by the exponent and lowers the degree
    m = partial_chain_map(axes_ideal, 2, (-1, -1), axis=1)
    assert m.rows == m.cols == 1
    assert m.entries[0][0] == -1
    # exponent 0 kills the class
    m = partial_chain_map(axes_ideal, 2, (-3, -1), axis=1)
    assert m.entries[0][0] == -3


def test_euler_action(axes_ideal, product_ideal):
    for I in (axes_ideal, product_ideal):
        for i in range(I.t + 1):
            for u in box(2, 2):
                assert euler_action_check(I, i, u)


def test_against_brute_force_oracle(corpus):
    checked = 0
    for I in corpus:
        if I.d > 2 or I.t > 3:
            continue
        checked += 1
        for u in box(I.nvars, 2):
            assert slice_dims(I, u) == brute_force_slice_dims(I, u), (I, u)
        if checked >= 12:
            break
    assert checked >= 5


def test_oracle_on_handpicked():
    # non-squarefree, mixed-support generators
    I = CMonomialIdeal(
        2, FIELD, (CMonomial(0, (2, 1)), CMonomial(0, (0, 3)), CMonomial(0, (1, 0)))
    )
    for u in box(2, 3):
        assert slice_dims(I, u) == brute_force_slice_dims(I, u), u
