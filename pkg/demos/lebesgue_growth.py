"""Lebesgue constants: logarithmic growth in N and exact 1/(1+lambda) scaling."""

from tikbary.basis import BasisSpec
from tikbary.quadrature import gauss_rule
from tikbary.regularized_fit import lebesgue_constant

spec = BasisSpec.chebyshev1()

print("N     Lebesgue constant (lambda = 0)")
previous = None
for n in (8, 16, 32, 64, 128):
    value = lebesgue_constant(gauss_rule(spec, n + 1), n, 0.0)
    step = "" if previous is None else f"   (+{value - previous:.4f})"
    print(f"{n:<5d} {value:.6f}{step}")
    previous = value
print("the increments approach (2/pi) ln 2 = 0.4413 per doubling")
print()

rule = gauss_rule(spec, 33)
base = lebesgue_constant(rule, 32, 0.0)
print("lambda    constant     constant*(1+lambda)")
for lam in (0.0, 1e-2, 10.0**-0.7, 1.0):
    value = lebesgue_constant(rule, 32, lam)
    print(f"{lam:<8.4f}  {value:<10.6f}  {value * (1.0 + lam):.6f}")
