"""Exact arithmetic in Q(sqrt5) and correctly rounded conversion."""
from fractions import Fraction

from qbicomplex import QuadExt, format_scalar, parse_scalar, to_bigfloat

phi = QuadExt(Fraction(1, 2), Fraction(1, 2))  # (1+sqrt5)/2
print("phi        =", format_scalar(phi))
print("phi^2      =", format_scalar(phi * phi))  # phi + 1
print("1/phi      =", format_scalar(phi.inverse()))  # phi - 1
print("phi^20     =", format_scalar(phi**20))
print("norm(phi)  =", phi.norm())

# the parser reads the same text the CLI accepts
q = parse_scalar("-3/2+1/2*sqrt5")
print("alpha*q    =", format_scalar(phi * q))  # -1/phi

for bits in (64, 128, 256):
    print(f"phi @ {bits:3d} bits:", format_scalar(to_bigfloat(phi, bits)))
