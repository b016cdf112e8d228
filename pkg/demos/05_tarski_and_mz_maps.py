"""
Powersets, atoms, and mz-maps
=============================

P and At between finite sets and complete atomic algebras, then the map
a -> s_A^X(a) from a dz-algebra into the powerset of its points.
"""

from stonedual import (At_mor, At_obj, Fp_obj, Gp_obj, P_mor, P_obj, check_GpFp_iso, dz_algebra,
                       fc_algebra, finite_algebra, mz_from_table, validate_map_levels)

B = P_obj({1, 2})
print("At(P({1,2})) =", At_obj(B))

f = {"a": 2, "b": 1, "c": 2}
sigma = P_mor(f, {"a", "b", "c"}, {1, 2})
print("At(P(f)) =", {repr(k): repr(v) for k, v in At_mor(sigma).items()})

# the Stone map of a finite algebra is an lmz-map
PQ = finite_algebra("pq")
m = Fp_obj(dz_algebra(PQ, None, "ldz"))
print({k: bool(v) for k, v in validate_map_levels(m).items()})

# a non-injective table is not even a z-map
tbl = {a: frozenset({1}) if "p" in a.parts[0] else frozenset() for a in PQ.elements()}
bad = mz_from_table(PQ, {1}, tbl)
lv = validate_map_levels(bad)
print({k: bool(v) for k, v in lv.items()}, "--", lv["z-map"].note)

# G'F' gives back an isomorphic dz-algebra, not an equal one
d = dz_algebra(fc_algebra(), None, "ldz")
print(Gp_obj(Fp_obj(d)), "iso:", bool(check_GpFp_iso(d)))
