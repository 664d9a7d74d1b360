"""Check the four identities on a small parameter grid."""
from collections import Counter
from fractions import Fraction

from qbicomplex import QParams, check_identity, IdentityName, verify_grid
from qbicomplex.identities import summarize

grid = [QParams(a, q) for a in (1, Fraction(3, 2)) for q in (2, Fraction(-1, 3), 0)]
reports = verify_grid(grid, 6, 6)
print(summarize(reports))
print(Counter((r.name.value, r.verdict.value) for r in reports))

# a single report, as the CLI would print it
rep = check_identity(IdentityName.CASSINI, (1,), QParams(1, 2))
print(rep.to_json())
