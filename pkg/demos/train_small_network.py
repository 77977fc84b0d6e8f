#!/usr/bin/env python3
"""Train a small multilevel network on the diffusion problem.

A reduced version of the level-3 experiment: fewer samples, a lower rank
and a short iteration budget, enough to see the loss fall, the insertions
leave the loss unchanged, and the prediction error approach the
reference error of the finite-element solutions.
"""

from vcres.pipeline import ProblemSpec, train

spec = ProblemSpec(kind="elliptic", level=3, rank=10, layers=6, n_train=100, n_test=50, max_iters=600)
print(f"{spec.n_groups} layer groups, {spec.n_stages} stages of about {spec.max_iters // spec.n_stages} iterations")

net, report = train(spec, log=print)

print("\ninsertions:")
for ins in report.insertions:
    print(f"  after iteration {ins['iteration']}: group {ins['group']} "
          f"(loss {ins['loss_before']:.6e} -> {ins['loss_after']:.6e})")

print(f"\nparameters: {report.n_params}")
print(f"eps_ref  {report.eps_ref:.4f}  (FE solutions on the test samples)")
print(f"eps_pred {report.eps_pred:.4f}  (network prediction)")
print(f"ratio    {report.ratio:.3f}")
