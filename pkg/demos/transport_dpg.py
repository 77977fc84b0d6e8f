#!/usr/bin/env python3
"""DPG solutions of the transport equation against the exact solution.

A constant unit velocity at angle pi*p carries the indicator of a small
square. The exact solution is the length of the backward ray inside that
square, so we can compare the computable DPG residual with the true L2
error of the piecewise-constant field.
"""

import numpy as np

from vcres.mesh import build_unit_square_hierarchy
from vcres.transport import AngleField, TransportDpg, characteristics_oracle, field_l2_error

p = np.array([0.2])
hier = build_unit_square_hierarchy(6)

print("level  dofs   residual  L2 error  ratio")
for J in range(3, 7):
    problem = TransportDpg(hier, J, AngleField())
    w = problem.solve(p)
    res = problem.relative_residual(p, w)
    err = field_l2_error(hier[J], w[: problem.layout.n_field], lambda x: characteristics_oracle(x, p))
    print(f"{J:5d}  {problem.n_dofs:5d}  {res:.4f}    {err:.4f}    {err / res:.3f}")

# Both columns fall together and the ratio stays within a factor of two,
# which is what makes the residual usable as an error certificate. The
# residual measures the error in a norm that also sees the skeleton trace,
# so it decays more slowly than the L2 error of the field alone.
x = np.array([[0.45, 0.4], [0.9, 0.6], [0.2, 0.9]])
print("\nexact values at", x.tolist(), "->", np.round(characteristics_oracle(x, p), 4))
