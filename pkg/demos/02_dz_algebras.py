"""
z, dz, and ldz
==============

Which point sets X of S(A) make (A, X) dense, clopen-complete, or open.
The set of all principal characters of FC(nat) is the standard example of a
pair that is z but not dz.
"""

from stonedual import PointSet, cofin, dz_algebra, fc_algebra, fin, validate
from stonedual.stone import FCPoints

N = fc_algebra()

full = PointSet.full(N)
for level in ("z", "dz", "ldz"):
    print(f"(FC, S(FC)) {level}:", bool(validate(N, full, level)))

principals = PointSet(N, (FCPoints(cofin(), False),))
for level in ("z", "dz", "ldz"):
    print(f"(FC, principals) {level}:", bool(validate(N, principals, level)))

# the dz failure comes with a clopen of X that no element cuts out
w = validate(N, principals, "dz").witness
print(w.describe())
for a in [N.element(fin(0, 2, 4)), N.element(cofin(1, 3)), N.top()]:
    y = w.distinguish(a)
    print(f"  {a!r} disagrees with the evens at {y!r}")

# validated objects are what the functors accept
d = dz_algebra(N, None, "ldz")
print(d)
