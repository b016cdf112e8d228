"""
Spaces, clopen algebras, and coherence
======================================

A presented space X has a clopen algebra CO(X) and an ideal KO(X) of
compact clopens.  Going through the algebra side (F then E) lands on the
same local Boolean algebra as going directly (theta-t).
"""

from stonedual import (E_obj, F_obj, SpacePresentation, check_EF_equals_theta_t, co_algebra,
                       coproduct, finite_space, hat_image, k_omega, ko_ideal, theta_a, theta_t)
from stonedual.errors import UnrepresentableCO
from stonedual.spaces import DiscreteCountable

X = k_omega()
print("CO(X) =", co_algebra(X))
print("KO(X) =", ko_ideal(X))
print("hat image is all of S(CO(X)):", hat_image(X))

print("E(F(X))  =", E_obj(F_obj(X)))
print("theta(X) =", theta_t(X))
print("back to a space:", theta_a(theta_t(X)))

for Y in [finite_space(3), coproduct(k_omega(), finite_space(2))]:
    print(Y, "coherent:", bool(check_EF_equals_theta_t(Y)))

# the discrete countable space has the full powerset as clopen algebra
try:
    co_algebra(SpacePresentation((DiscreteCountable(),)))
except UnrepresentableCO as e:
    print("unrepresentable:", e)
