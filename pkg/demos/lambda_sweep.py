"""Sweep the shrinkage parameter on noisy samples and print the error table."""

from tikbary.basis import BasisSpec
from tikbary.metrics import default_lambda_grid, lambda_sweep
from tikbary.quadrature import gauss_rule
from tikbary.signals import NoiseSpec, f1

rule = gauss_rule(BasisSpec.chebyshev1(), 101)
noise = NoiseSpec("additive-white-snr", seed=2024, snr_db=5.0)
result = lambda_sweep(rule, 100, f1, default_lambda_grid(), noise=noise)

print("lambda      uniform      l2")
for r in result:
    print(f"{r.lam:<10.5f}  {r.uniform_error:<10.5f}  {r.l2_error:.5f}")
print()
print("argmin uniform:", result.best_lambda["uniform_error"])
print("argmin l2:     ", result.best_lambda["l2_error"])
