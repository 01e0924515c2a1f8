import numpy as np

from tikbary.basis import BasisSpec
from tikbary.metrics import LAMBDA_STAR, l2_error, uniform_error
from tikbary.quadrature import gauss_rule
from tikbary.regularized_fit import fit
from tikbary.signals import NoiseSpec, add_noise, f1

# 201-point Chebyshev rule, degree-200 fit of f1 from 5 dB noisy samples
rule = gauss_rule(BasisSpec.chebyshev1(), 201)
clean = f1(rule.nodes)
noisy = add_noise(clean, NoiseSpec("additive-white-snr", seed=12345, snr_db=5.0))

grid = np.linspace(-1.0, 1.0, 2001)
for lam, label in ((0.0, "classical"), (LAMBDA_STAR, "tikhonov")):
    approx = fit(rule, 200, lam, noisy)
    print(f"{label:10s} lambda={lam:.4f}  "
          f"L2 error {l2_error(f1, approx, rule):.4f}  "
          f"uniform error {uniform_error(f1, approx, grid):.4f}")
