#!/usr/bin/env python3
"""Reproduce the two worked examples from the module docstrings.

Example A: I = (YX) in K[Y][X].  The degree-u component of H^1 is the
injective hull E(K[Y]/(Y)) for u >= 0 and the field of fractions
K[Y, Y^-1] for u <= -1 (a non-split extension of E by K[Y]).

Example B: I = (YX1, X2) in K[Y][X1, X2].  The i = 2 components have no
free summands; on the all-negative block the component is K[Y, Y^-1],
so the Y-torsion-free part is nowhere finitely generated.
"""

import argparse

from gradedlc import (
    CMonomial,
    CMonomialIdeal,
    GRADED_PID,
    block_structure,
    slice_dims,
)


def show(I, i, title):
    print(f"== {title}: i = {i}")
    for pat, corner, triple, bass in block_structure(I, i):
        s, v, r = triple
        print(
            f"  block {pat.label():<3} corner {str(corner):<10} "
            f"(s, v, r) = ({s}, {v}, {r})   "
            f"mu0(m)={bass.mu0_m} mu1(m)={bass.mu1_m} mu0(0)={bass.mu0_zero} "
            f"injdim={bass.injdim} dim={bass.dim_supp}"
        )


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()

    a = CMonomialIdeal(1, GRADED_PID, (CMonomial(1, (1,)),))
    show(a, 1, "I = (YX)")
    print("  Y-graded dims of H^1 at X-degree  2:",
          [slice_dims(a, (j, 2))[1] for j in range(-3, 3)], "(j = -3..2, this is E)")
    print("  Y-graded dims of H^1 at X-degree -2:",
          [slice_dims(a, (j, -2))[1] for j in range(-3, 3)], "(j = -3..2, this is Q(A))")
    print()

    b = CMonomialIdeal(2, GRADED_PID, (CMonomial(1, (1, 0)), CMonomial(0, (0, 1))))
    show(b, 2, "I = (YX1, X2)")


if __name__ == "__main__":
    main()
