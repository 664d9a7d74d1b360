"""Partial sums of the exponential generating function against its closed form."""
from fractions import Fraction

from qbicomplex import QParams
from qbicomplex.sequences import egf_closed, egf_error_bound, egf_partial

p = QParams(1, Fraction(1, 2))
t = Fraction(1, 2)
closed = egf_closed(t, p, 256)

print(" N   max |partial - closed|   bound")
for N in (2, 5, 10, 20, 40, 80):
    partial = egf_partial(N, t, p).to_bigfloat(256)
    diff = max(abs(a - b) for a, b in zip(partial, closed))
    print(f"{N:3d}   {float(diff):.3e}            {float(egf_error_bound(N, t, p, 256)):.3e}")
