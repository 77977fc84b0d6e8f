#!/usr/bin/env python3
"""Mesh hierarchy and the finite-element spaces built on it.

Uniform refinement of the two-triangle unit square, the dof counts of the
four spaces used by the solvers, and a look at what the prolongation
matrices do to simple coefficient vectors.
"""

import numpy as np

from vcres.mesh import (
    build_unit_square_hierarchy,
    mesh_report,
    p0_prolongation,
    p1_prolongation,
    rt0_prolongation,
)

hier = build_unit_square_hierarchy(4)
print(mesh_report(hier))

# Each refinement splits every triangle into four; the Euler relation
# V - E + T = 1 holds on every level.
for lvl in hier.levels:
    print(f"level {lvl.level}: V - E + T = {lvl.n_vertices - lvl.n_edges + lvl.n_triangles}")

# Prolongations map coarse coefficients to fine ones without changing the
# function. Constants stay constant for the nodal spaces.
P1 = p1_prolongation(hier, 3)
print("\nP1 prolongation 2 -> 3:", P1.shape, "nnz", P1.nnz)
print("constant preserved:", np.allclose(P1 @ np.ones(P1.shape[1]), 1.0))

# A linear function is represented exactly on every level.
coarse, fine = hier[2], hier[3]
lin = 2 * coarse.vertices[:, 0] - coarse.vertices[:, 1]
print("linear preserved:", np.allclose(P1 @ lin, 2 * fine.vertices[:, 0] - fine.vertices[:, 1]))

# The Raviart-Thomas embedding commutes with the divergence: the fine
# divergence of a prolonged flux is the coarse divergence, copied to children.
R = rt0_prolongation(hier, 3)
P0 = p0_prolongation(hier, 3)
c = np.random.default_rng(0).standard_normal(coarse.n_edges)


def divergence(level, w):
    return (level.edge_signs() * w[level.tri_edges]).sum(axis=1) / level.area


gap = np.abs(divergence(fine, R @ c) - P0 @ divergence(coarse, c)).max()
print(f"RT0: max |div(R c) - P0 div(c)| = {gap:.2e}")
