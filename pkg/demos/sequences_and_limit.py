"""q-Fibonacci and q-Lucas terms, Binet forms, and the classical limit."""
from fractions import Fraction

from qbicomplex import QParams, bf, bf_binet, bl, bl_binet, binet_constants, classical_params

p = QParams(Fraction(3, 2), Fraction(-1, 3))
c = binet_constants(p)
print("gamma_hat =", [str(v) for v in c.gamma_hat])
print("delta_hat =", [str(v) for v in c.delta_hat])

for n in range(4):
    print(n, [str(v) for v in bf(n, p)], bf(n, p) == bf_binet(n, p), bl(n, p) == bl_binet(n, p))

# golden-ratio parameters turn q-integers into ordinary Fibonacci numbers
cp = classical_params()
print("\nn  BF_n coefficients      BL_n coefficients")
for n in range(0, 13, 3):
    print(f"{n:2d}", [str(v) for v in bf(n, cp)], [str(v) for v in bl(n, cp)])
