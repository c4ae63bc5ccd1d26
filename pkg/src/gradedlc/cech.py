"""Degree slices of the Cech complex and their cohomology.

For a c-monomial ideal I = (g_1, ..., g_t) the Cech complex on the
generators has C^k = sum over k-subsets sigma of the localizations
R[1/g_sigma].  Fixing a multidegree u, each localization contributes at
most a one-dimensional K-vector space, spanned by the unique monomial of
degree u; it is nonzero exactly when every coordinate outside the
support of g_sigma is nonnegative.  The slice is therefore a finite
complex of Q-vector spaces whose differentials have entries 0, +1, -1
(the standard alternating Cech signs), and multiplication by X_i, Y, or
the derivations act cell-by-cell on the spanning monomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .lattice import CMonomialIdeal, GRADED_PID, MultiDegree
from .linalg import RationalMatrix, _int_rank


def _supports(I: CMonomialIdeal):
    return I.gen_supports()


def _active_cells(I: CMonomialIdeal, u: MultiDegree):
    """Per level k = 0..t: sorted list of active cells (tuples of generator
    indices).  A cell is active iff the union of its generators' supports
    covers every negative coordinate of u."""
    sups = _supports(I)
    neg = frozenset(i for i, x in enumerate(u) if x < 0)
    t = I.t
    levels = []
    for k in range(t + 1):
        cells = []
        for sigma in itertools.combinations(range(t), k):
            cover = frozenset().union(*(sups[j] for j in sigma)) if sigma else frozenset()
            if neg <= cover:
                cells.append(sigma)
        levels.append(cells)
    return levels


def _raw_differentials(levels, t):
    """Signed incidence matrices d^k: level k -> level k+1, as int rows."""
    diffs = []
    for k in range(t):
        src = levels[k]
        tgt = levels[k + 1]
        tgt_index = {c: i for i, c in enumerate(tgt)}
        mat = [[0] * len(src) for _ in range(len(tgt))]
        for j, sigma in enumerate(src):
            for g in range(t):
                if g in sigma:
                    continue
                tau = tuple(sorted(sigma + (g,)))
                i = tgt_index.get(tau)
                if i is None:
                    continue  # cannot happen: supersets of active cells are active
                sign = (-1) ** sum(1 for s in sigma if s < g)
                mat[i][j] = sign
        diffs.append(mat)
    return diffs


@dataclass(frozen=True)
class DegreeSlice:
    """The multidegree-u slice of the Cech complex."""

    u: MultiDegree
    levels: tuple[tuple[tuple[int, ...], ...], ...]
    differentials: tuple[RationalMatrix, ...]

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def dim(self, k: int) -> int:
        if 0 <= k < len(self.levels):
            return len(self.levels[k])
        return 0

    def differential(self, k: int) -> RationalMatrix:
        """d^k as a matrix acting on column vectors; zero map outside 0..t-1."""
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        if k == self.length:
            return RationalMatrix.zero(0, self.dim(k))
        return RationalMatrix.zero(self.dim(k + 1), self.dim(k))

    def cell_index(self, k: int, sigma: tuple[int, ...]) -> int | None:
        try:
            return self.levels[k].index(sigma)
        except ValueError:
            return None


def build_slice(I: CMonomialIdeal, u) -> DegreeSlice:
    """Build the slice complex at degree u; d o d = 0 is asserted."""
    u = I.check_degree(u)
    levels = _active_cells(I, u)
    raw = _raw_differentials(levels, I.t)
    diffs = tuple(RationalMatrix(m, cols=len(levels[k])) for k, m in enumerate(raw))
    for k in range(len(diffs) - 1):
        if not (diffs[k + 1] * diffs[k]).is_zero():
            raise AssertionError("d o d != 0: broken sign convention")
    return DegreeSlice(u, tuple(tuple(lv) for lv in levels), diffs)


def slice_dims(I: CMonomialIdeal, u) -> list[int]:
    """Cohomology dimensions at u for every i = 0..t at once.

    Fast path used by the block/rigidity scans: raw int matrices and
    fraction-free ranks, no representative bases.
    """
    u = I.check_degree(u)
    levels = _active_cells(I, u)
    raw = _raw_differentials(levels, I.t)
    ranks = [_int_rank([row[:] for row in m]) if m else 0 for m in raw]
    t = I.t
    dims = []
    for i in range(t + 1):
        r_out = ranks[i] if i < t else 0
        r_in = ranks[i - 1] if i >= 1 else 0
        dims.append(len(levels[i]) - r_out - r_in)
    return dims


@dataclass(frozen=True)
class CohomologyReport:
    """H^i_I(R)_u: dimension plus deterministic representative bases.

    `representatives` are kernel vectors of d^i reduced against the
    reduced-echelon image basis of d^{i-1}; their classes form a basis of
    the cohomology.  All three matrices store vectors as columns in the
    active-cell coordinates of level i.
    """

    i: int
    u: MultiDegree
    dim: int
    representatives: RationalMatrix
    kernel: RationalMatrix
    image: RationalMatrix
    slice: DegreeSlice

    def basis_size(self) -> int:
        return self.representatives.cols


def _quotient_representatives(kernel: RationalMatrix, image: RationalMatrix) -> RationalMatrix:
    """Kernel columns reduced mod the image, echelon-normalized; the
    nonzero remainders represent a basis of kernel/image."""
    n = kernel.rows
    work: list[list[Fraction]] = [list(c) for c in image.columns()]
    reps = []
    for col in kernel.columns():
        v = list(col)
        for w in work:
            lead = next((j for j, x in enumerate(w) if x), None)
            if lead is not None and v[lead]:
                q = v[lead] / w[lead]
                v = [a - q * b for a, b in zip(v, w)]
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = Fraction(1) / v[lead]
        v = [a * inv for a in v]
        # keep the working set fully reduced so reps come out echelonized
        for idx, w in enumerate(work):
            if w[lead]:
                work[idx] = [a - w[lead] * b for a, b in zip(w, v)]
        work.append(v)
        reps.append(tuple(v))
    return RationalMatrix.from_columns(reps, rows=n)


def cohomology(I: CMonomialIdeal, i: int, u) -> CohomologyReport:
    """Exact cohomology of the degree-u slice at homological position i."""
    u = I.check_degree(u)
    if i < 0:
        raise ValueError("cohomological index must be nonnegative")
    sl = build_slice(I, u)
    if i > I.t:
        # localization complex has length t; higher positions vanish
        empty = RationalMatrix.zero(0, 0)
        return CohomologyReport(i, u, 0, empty, empty, empty, sl)
    d_out = sl.differential(i)
    d_in = sl.differential(i - 1) if i >= 1 else RationalMatrix.zero(sl.dim(0), 0)
    kernel = d_out.kernel_basis()
    image = d_in.column_space_basis() if i >= 1 else RationalMatrix.zero(sl.dim(0), 0)
    reps = _quotient_representatives(kernel, image)
    dim = kernel.cols - image.cols
    if dim != reps.cols:
        raise AssertionError("image not contained in kernel")
    return CohomologyReport(i, u, dim, reps, kernel, image, sl)


# ---------------------------------------------------------------------------
# chain maps induced on cohomology
# ---------------------------------------------------------------------------


def _cell_level_map(src: DegreeSlice, tgt: DegreeSlice, i: int, scalar) -> RationalMatrix:
    """Matrix of the cell-diagonal map C^i_u -> C^i_u' sending the spanning
    monomial of each cell to `scalar` times the target's, or 0 where the
    target cell is inactive."""
    rows = tgt.dim(i)
    cols = src.dim(i)
    mat = [[0] * cols for _ in range(rows)]
    if scalar:
        tgt_index = {c: r for r, c in enumerate(tgt.levels[i])} if i < len(tgt.levels) else {}
        for j, sigma in enumerate(src.levels[i] if i < len(src.levels) else ()):
            r = tgt_index.get(sigma)
            if r is not None:
                mat[r][j] = scalar
    return RationalMatrix(mat, cols=cols)


def _induced_map(I, i, u, target_u, scalar) -> RationalMatrix:
    src = cohomology(I, i, u)
    tgt = cohomology(I, i, target_u)
    out_cols = []
    if src.dim and tgt.dim:
        F = _cell_level_map(src.slice, tgt.slice, i, scalar)
        # solve [reps | image] x = F r; the reps-part gives the class
        basis = RationalMatrix.from_columns(
            tgt.representatives.columns() + tgt.image.columns(), rows=tgt.slice.dim(i)
        )
        for r in src.representatives.columns():
            y = F.mul_vec(r)
            x = basis.solve(y)
            if x is None:
                raise AssertionError("chain map image escapes the kernel: not a chain map")
            out_cols.append(x[: tgt.dim])
    return RationalMatrix.from_columns(out_cols, rows=tgt.dim) if out_cols else RationalMatrix.zero(tgt.dim, src.dim)


def x_chain_map(I: CMonomialIdeal, i: int, u, axis: int) -> RationalMatrix:
    """Matrix of multiplication by X_axis (or Y when axis = 0 over K[Y]):
    H^i_u -> H^i_{u+e_axis}."""
    u = I.check_degree(u)
    c = I.coord_of_axis(axis)
    target = tuple(x + 1 if k == c else x for k, x in enumerate(u))
    return _induced_map(I, i, u, target, 1)


def partial_chain_map(I: CMonomialIdeal, i: int, u, axis: int) -> RationalMatrix:
    """Matrix of the derivation along `axis` (d/dY for axis = 0 over K[Y]):
    H^i_u -> H^i_{u-e_axis}.  On a spanning monomial it multiplies by the
    exponent u_axis."""
    u = I.check_degree(u)
    c = I.coord_of_axis(axis)
    target = tuple(x - 1 if k == c else x for k, x in enumerate(u))
    return _induced_map(I, i, u, target, u[c])


def euler_action_check(I: CMonomialIdeal, i: int, u) -> bool:
    """Whether each Euler operator X_axis d_axis acts on H^i_u as the
    scalar u_axis, i.e. the slice is Eulerian with exponent 1.

    Checked through the actual chain maps: the composite of the
    derivation out of u with multiplication back into u must equal
    u_axis times the identity.  Empty slices pass vacuously.
    """
    u = I.check_degree(u)
    h = cohomology(I, i, u)
    if h.dim == 0:
        return True
    ident = RationalMatrix.identity(h.dim)
    for axis in I.axes():
        c = I.coord_of_axis(axis)
        down = partial_chain_map(I, i, u, axis)
        lower = tuple(x - 1 if k == c else x for k, x in enumerate(u))
        up = x_chain_map(I, i, lower, axis)
        if up * down != ident.scale(u[c]):
            return False
    return True
