"""Products, conjugations, norms and the 4x4 matrix form."""
from fractions import Fraction

from qbicomplex import IJ, ONE, Bicomplex, ConjKind, I, J, bc_conjugate, bc_from_vec, bc_matrix, bc_norm_product, bc_vec


def show(z):
    return [str(c) for c in z]


x = Bicomplex(1, 2, 3, 4)
y = Bicomplex(Fraction(1, 2), -1, 0, 2)

print("i*j       =", show(I * J))
print("ij*ij     =", show(IJ * IJ))
print("x*y       =", show(x * y))
print("y*x       =", show(y * x))

# commutative, but with zero divisors
print("(1+ij)(1-ij) =", show((ONE + IJ) * (ONE - IJ)))

for kind in ConjKind:
    print(kind.name, "conj:", show(bc_conjugate(x, kind)), " norm product:", show(bc_norm_product(x, kind)))

m = bc_matrix(x)
for row in m:
    print("  ", [str(v) for v in row])
print("M(x) vec(y) =", show(bc_from_vec(m @ bc_vec(y))))
print("same as x*y:", bc_from_vec(m @ bc_vec(y)) == x * y)
