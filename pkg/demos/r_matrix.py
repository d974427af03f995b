"""The fundamental trigonometric R-matrix of type A."""

from qaffine import rmatrix

R = rmatrix.fundamental_r(1)
print("entries for l = 1 (x is the spectral parameter):")
for line in R.text_lines():
    print(" ", line)

for l in (1, 2, 3):
    u = rmatrix.check_unitarity(l)
    print(f"l={l}: YBE exact {rmatrix.check_ybe(l, 'exact')}, "
          f"sampled {rmatrix.check_ybe(l, 'sampled')}, "
          f"R(1) = P {rmatrix.check_regularity(l)}, unitary up to {u.factor}")
