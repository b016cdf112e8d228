"""
Local Boolean algebras and the E / E' round trip
================================================

An ideal I of A makes (A, I) local when it is dense.  Among those, the
ZLBAs are the ones every simple sub-ideal of which has a join.  The
finite-support ideal of FC(nat) is local but not a ZLBA.
"""

from stonedual import (E_obj, Ep_obj, check_EEp, check_EpE, cofin, dz_algebra, fc_algebra,
                       finite_support, full_ideal, is_lba, is_zlba, lba_pair, zlba_by_joins)

N = fc_algebra()
FS = finite_support(N)
print("finite-support LBA:", bool(is_lba(FS)), " ZLBA:", bool(is_zlba(FS)))

w = is_zlba(FS).witness
print("no join for:", w.describe())

# every upper bound can be shrunk by removing an odd index it still contains
u = N.element(cofin(1, 3, 5))
v = w.refute(u)
print(f"{u!r} -> {v!r}  (still an upper bound: {w.is_upper_bound(v)})")
print("candidates defeated:", w.validate(5))

# the join-based decision agrees with the trace-based one
print("routes agree:", bool(zlba_by_joins(FS)) == bool(is_zlba(FS)))

# E sends an ldz-algebra to a ZLBA, E' comes back, and nothing changes
d = dz_algebra(N, None, "ldz")
p = E_obj(d)
print(p, "->", Ep_obj(p))
print("E'E = Id:", bool(check_EpE(d)), " EE' = Id:", bool(check_EEp(lba_pair(full_ideal(N)))))
