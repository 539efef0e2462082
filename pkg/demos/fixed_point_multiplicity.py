"""Compute the multiplicity of a Richardson variety at a torus-fixed
point by counting nonintersecting lattice-path families, and show the
families themselves on the grid."""

from grassmult.grassmannian import beta_grid, build_bound_multisets, length
from grassmult.multiplicity import (
    count_families,
    enumerate_families,
    multiplicity,
    render_family,
)

ALPHA = (1, 2, 3, 5)
BETA = (1, 5, 6, 8)
GAMMA = (3, 6, 8, 9)
N, D = 9, 4

if __name__ == "__main__":
    grid = beta_grid(BETA, N)
    Ttil, Wtil = build_bound_multisets(ALPHA, GAMMA, grid)
    print("alpha=%s  beta=%s  gamma=%s  in the Grassmannian of %d-planes in %d-space"
          % (ALPHA, BETA, GAMMA, D, N))
    print("lower anchors:", " ".join("%d,%d" % p for p in Ttil))
    print("upper anchors:", " ".join("%d,%d" % p for p in Wtil))
    print("codimension difference:", length(GAMMA) - length(ALPHA))
    print()
    families = enumerate_families(Ttil, Wtil, grid)
    for k, fam in enumerate(families, 1):
        print("family %d:" % k)
        print(render_family(fam, grid))
    print("count:", count_families(Ttil, Wtil, grid))
    print()
    # The count factors through the two one-sided degenerations.
    schubert = multiplicity(tuple(range(1, D + 1)), BETA, GAMMA, N, D)
    opposite = multiplicity(ALPHA, BETA, tuple(range(N - D + 1, N + 1)), N, D)
    print("Schubert part %d x opposite part %d = %d"
          % (schubert, opposite, multiplicity(ALPHA, BETA, GAMMA, N, D)))
