import random

import pytest

from stonedual.algebra import fc_algebra, finite_algebra
from stonedual.catalog import default_catalog
from stonedual.errors import DomainMismatch, FiniteBackendOnly
from stonedual.functors import dz_algebra, dz_identity, dz_morphism, validate
from stonedual.homs import all_homomorphisms, hom_identity
from stonedual.mbool import (At_mor, At_obj, Fp_mor, Fp_obj, Gp_mor, Gp_obj, MBoolMorphism, P_mor,
                             P_obj, check_GpFp_iso, check_mbool_morphism, f_sigma, mbool_identity,
                             mz_from_table, validate_map_levels)
from stonedual.pointmap import PointMap
from stonedual.stone import is_open

N = fc_algebra()
PQ = finite_algebra("pq")


def test_Fp_of_finite_full_is_lmz():
    m = Fp_obj(dz_algebra(PQ, None, "ldz"))
    levels = validate_map_levels(m)
    assert all(levels.values())
    for a in PQ.elements():
        assert len(m(a)) == len(a.parts[0])


def test_Fp_of_fc_full_is_lmz():
    m = Fp_obj(dz_algebra(N, None, "ldz"))
    assert m.alpha is None
    assert all(validate_map_levels(m).values())
    with pytest.raises(FiniteBackendOnly):
        m.labels()


def test_atom_meet_condition_fails_for_overlapping_images():
    # alpha: P{p,q} -> P{1}, a -> {1} iff p in a.  Not injective, so not a z-map.
    tbl = {a: (frozenset({1}) if "p" in a.parts[0] else frozenset()) for a in PQ.elements()}
    m = mz_from_table(PQ, {1}, tbl)
    lv = validate_map_levels(m)
    assert not lv["z-map"] and not lv["mz-map"] and not lv["lmz-map"]
    a, b = lv["z-map"].witness
    assert m(a) == m(b) and a != b
    # X_alpha is a single point of the two-point Stone space, so not dense either
    assert len(m.points) == 1
    assert not validate(PQ, m.points, "z")


def test_non_injective_tables_are_never_z_maps():
    A = finite_algebra("pqr")
    for phi in all_homomorphisms(A, finite_algebra("uv")):
        tbl = {a: frozenset(phi(a).parts[0]) for a in A.elements()}
        m = mz_from_table(A, ["u", "v"], tbl)
        assert not validate_map_levels(m)["z-map"]


def test_non_homomorphic_table_rejected():
    with pytest.raises(DomainMismatch):
        mz_from_table(PQ, {1}, {a: frozenset({1}) for a in PQ.elements()})


def test_Gp_Fp_iso_examples():
    for A in [finite_algebra(""), finite_algebra("p"), PQ, finite_algebra("pqr"), N]:
        assert check_GpFp_iso(dz_algebra(A, None, "ldz"))


def test_Gp_of_identity():
    m = Fp_obj(dz_algebra(PQ))
    g = Gp_mor(mbool_identity(m))
    assert g == dz_identity(Gp_obj(m))


def test_Fp_mor_commutes():
    for phi in all_homomorphisms(PQ, finite_algebra("pqr")):
        d, e = dz_algebra(PQ), dz_algebra(finite_algebra("pqr"))
        mor = Fp_mor(dz_morphism(d, e, phi))
        assert check_mbool_morphism(mor)


def test_mbool_composition_matches_sigma_composition():
    A, B, C = PQ, finite_algebra("pqr"), finite_algebra("pq")
    rng = random.Random(3)
    phis = list(all_homomorphisms(A, B))
    psis = list(all_homomorphisms(B, C))
    for _ in range(10):
        phi, psi = rng.choice(phis), rng.choice(psis)
        m1 = Fp_mor(dz_morphism(dz_algebra(A), dz_algebra(B), phi))
        m2 = Fp_mor(dz_morphism(dz_algebra(B), dz_algebra(C), psi))
        comp = m1.then(m2)
        assert check_mbool_morphism(comp)
        assert f_sigma(comp) == f_sigma(m2).then(f_sigma(m1))


# -- Tarski -----------------------------------------------------------------------------------

def test_At_of_powerset():
    B = P_obj({1, 2})
    assert len(At_obj(B)) == 2
    with pytest.raises(FiniteBackendOnly):
        At_obj(N)


def test_At_P_is_identity_on_small_map():
    f = {"a": 2}
    sigma = P_mor(f, {"a"}, {1, 2})
    at = At_mor(sigma)
    (xp, x), = at.items()
    assert xp.parts[0] == frozenset({"a"}) and x.parts[0] == frozenset({2})


def test_P_mor_is_preimage():
    f = {1: "u", 2: "u", 3: "v"}
    sigma = P_mor(f, {1, 2, 3}, {"u", "v"})
    PY = P_obj({"u", "v"})
    for M in PY.elements():
        assert sigma(M).parts[0] == frozenset(x for x in f if f[x] in M.parts[0])


def test_P_mor_needs_total_map():
    with pytest.raises(DomainMismatch):
        P_mor({1: "u"}, {1, 2}, {"u"})


def test_At_needs_materialised_powersets():
    with pytest.raises(FiniteBackendOnly):
        At_mor(hom_identity(N))


def test_sigma_identity_gives_identity_point_map():
    m = Fp_obj(dz_algebra(PQ))
    ident = MBoolMorphism(m, m, hom_identity(PQ), hom_identity(m.codomain))
    assert f_sigma(ident) == PointMap.identity(m.points)


def test_ldz_catalog_objects_give_lmz_maps():
    for e in default_catalog().dz_objects:
        d = e.obj
        if not validate(d.algebra, d.points, "ldz"):
            continue
        m = Fp_obj(dz_algebra(d.algebra, d.points, "ldz"))
        assert validate_map_levels(m)["lmz-map"], e.name
        assert is_open(m.points)
        assert check_GpFp_iso(d), e.name
