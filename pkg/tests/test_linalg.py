from fractions import Fraction

from hypothesis import given, settings, strategies as st

from gradedlc.linalg import RationalMatrix

fractions = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=10),
)


@st.composite
def matrices(draw, max_dim=5):
    rows = draw(st.integers(min_value=1, max_value=max_dim))
    cols = draw(st.integers(min_value=1, max_value=max_dim))
    entries = [[draw(fractions) for _ in range(cols)] for _ in range(rows)]
    return RationalMatrix(entries, cols=cols)


def test_identity_rank():
    assert RationalMatrix.identity(4).rank() == 4
    assert RationalMatrix.identity(4).is_invertible()


def test_zero_matrix():
    z = RationalMatrix.zero(3, 2)
    assert z.rank() == 0
    assert z.is_zero()
    assert z.kernel_basis().cols == 2


def test_known_kernel():
    m = RationalMatrix([[1, 2, 3], [2, 4, 6]])
    assert m.rank() == 1
    assert m.kernel_basis().cols == 2


def test_solve():
    m = RationalMatrix([[2, 0], [0, 3]])
    assert m.solve([4, 9]) == (Fraction(2), Fraction(3))
    singular = RationalMatrix([[1, 1], [1, 1]])
    assert singular.solve([1, 2]) is None


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_transpose_invariant(m):
    assert m.rank() == m.transpose().rank()


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    assert m.rank() + m.kernel_basis().cols == m.cols


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_kernel_annihilated(m):
    ker = m.kernel_basis()
    prod = m * ker
    assert prod.is_zero()
    # kernel basis vectors are independent
    assert ker.rank() == ker.cols


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_column_space(m):
    basis = m.column_space_basis()
    assert basis.cols == m.rank()
    assert basis.rank() == basis.cols


@given(matrices(), st.integers(min_value=1, max_value=9))
@settings(max_examples=60, deadline=None)
def test_rank_scaling_invariant(m, c):
    scaled = m.scale(Fraction(c, 7))
    assert scaled.rank() == m.rank()


@given(matrices())
@settings(max_examples=40, deadline=None)
def test_rref_idempotent(m):
    r1, piv1 = m.rref()
    r2, piv2 = r1.rref()
    assert r1 == r2 and piv1 == piv2
    assert r1.rank() == m.rank()
