import itertools

from gradedlc import (
    CMonomial,
    CMonomialIdeal,
    GRADED_PID,
    bass_table,
    block_structure,
    slice_dims,
    structure_triple,
    y_profile,
)
from gradedlc.structure import generic_fiber_dim, socle_dim


def triples_by_label(I, i):
    return {pat.label(): tuple(t) for pat, _c, t, _b in block_structure(I, i)}


def test_yx_structure(yx_ideal):
    # component is the injective hull E for u >= 0 and the full ring of
    # fractions Q(A) for u <= -1 (the extension of E by A does not split)
    assert triples_by_label(yx_ideal, 1) == {"+": (1, 0, 0), "-": (0, 1, 0)}


def test_yx_component_dims(yx_ideal):
    # cross-check against raw slice dimensions in the (Y, X)-grading:
    # E has dim 1 in Y-degrees <= -1 and 0 above; Q(A) has dim 1 everywhere
    for j in range(-3, 3):
        assert slice_dims(yx_ideal, (j, 2))[1] == (1 if j <= -1 else 0)
        assert slice_dims(yx_ideal, (j, -2))[1] == 1


def test_yx1_x2_structure(yx1_x2_ideal):
    assert triples_by_label(yx1_x2_ideal, 2) == {
        "--": (0, 1, 0),
        "-+": (0, 0, 0),
        "+-": (1, 0, 0),
        "++": (0, 0, 0),
    }


def test_yx1_x2_nonfg(yx1_x2_ideal):
    # wherever the Y-torsion-free part is nonzero it is not finitely
    # generated: r = 0 everywhere and some block has v >= 1
    triples = triples_by_label(yx1_x2_ideal, 2)
    assert all(t[2] == 0 for t in triples.values())
    assert any(t[1] >= 1 for t in triples.values())


def test_usual_ideal_free_components():
    I = CMonomialIdeal(1, GRADED_PID, (CMonomial(0, (1,)),))
    assert tuple(structure_triple(I, 1, (-1,))) == (0, 0, 1)
    assert tuple(structure_triple(I, 1, (0,))) == (0, 0, 0)


def test_bass_tables():
    b = bass_table(structure_triple_like(0, 1, 0))
    assert (b.mu0_m, b.mu1_m, b.mu0_zero, b.mu1_zero) == (0, 0, 1, 0)
    assert b.injdim == 0 and b.dim_supp == 1
    b = bass_table(structure_triple_like(1, 0, 0))
    assert (b.mu0_m, b.mu1_m, b.mu0_zero, b.mu1_zero) == (1, 0, 0, 0)
    assert b.injdim == 0 and b.dim_supp == 0
    b = bass_table(structure_triple_like(0, 0, 2))
    assert (b.mu0_m, b.mu1_m, b.mu0_zero, b.mu1_zero) == (0, 2, 2, 0)
    assert b.injdim == 1 and b.dim_supp == 1


def structure_triple_like(s, v, r):
    from gradedlc import StructureTriple

    return StructureTriple(s, v, r)


def test_socle_and_fiber_cross_checks(yx_ideal, yx1_x2_ideal):
    for I in (yx_ideal, yx1_x2_ideal):
        for i in range(I.t + 1):
            for u in itertools.product((-1, 0), repeat=I.d):
                t = structure_triple(I, i, u)
                assert socle_dim(I, i, u) == t.s
                assert generic_fiber_dim(I, i, u) == t.v + t.r


def test_y_profile_fields(yx_ideal):
    p = y_profile(yx_ideal, 1, (0,))
    # E: one socle dimension below zero, nothing at or above
    assert (p.delta_minus, p.delta_plus, p.rho) == (1, 0, 0)
    p = y_profile(yx_ideal, 1, (-1,))
    # Q(A): one dimension everywhere, Y acts bijectively
    assert (p.delta_minus, p.delta_plus, p.rho) == (1, 1, 1)


def test_corpus_bass_consistency(corpus):
    from gradedlc import enumerate_blocks

    seen = 0
    for I in corpus:
        if I.base != GRADED_PID:
            continue
        seen += 1
        for i in range(I.t + 1):
            for pat in enumerate_blocks(I.d):
                t = structure_triple(I, i, pat.corner)
                b = bass_table(t)
                assert b.mu0_m == t.s and b.mu1_m == t.r
                assert b.mu0_zero == t.v + t.r and b.mu1_zero == 0
                assert b.injdim <= b.dim_supp
        if seen >= 10:
            break
    assert seen >= 5
