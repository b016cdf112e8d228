"""
Characters and Stone sets
=========================

A finite algebra and the finite-cofinite algebra on the naturals, their
points, and how elements become clopen sets of points.
"""

from stonedual import characters, cofin, fc_algebra, fin, finite_algebra, stone_set
from stonedual import PointSet, closure, is_compact, is_dense, is_open
from stonedual.stone import FCPoints

# the powerset of {p, q, r}: three characters, one per atom
A = finite_algebra("pqr")
for x in characters(A):
    print(x)

a = A.element(frozenset("pq"))
print("s(a) =", sorted(map(repr, stone_set(a).points())))

# FC(nat) has a principal character per index and one free character at infinity
N = fc_algebra()
print(list(characters(N, 3)))

# a cofinite element lives near infinity, so its Stone set contains the free point
b = N.element(cofin(0, 1))
print("s(cofin{0,1}) =", stone_set(b))

# the principal points alone: open and dense but not compact
P = PointSet(N, (FCPoints(cofin(), False),))
print("open:", is_open(P), " dense:", is_dense(P), " compact:", is_compact(P))
print("closure adds the free point:", closure(P) == PointSet.full(N))

# finite elements are compact-open: their Stone sets avoid infinity
print(stone_set(N.element(fin(2, 5))))
