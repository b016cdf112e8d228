import pytest
from hypothesis import given
from hypothesis import strategies as st

from stonedual.algebra import FCSet, cofin, fc_algebra, fin, finite_algebra, product_algebra
from stonedual.catalog import default_catalog
from stonedual.errors import LbaConditionFailed, NotValidated, NotZlba, UnrepresentableCO
from stonedual.functors import (DzAlgebra, DzMorphism, E_mor, E_obj, Ep_mor, Ep_obj, F_mor, F_obj,
                                G_mor, G_obj, G_space, check_EEp, check_EF_equals_theta_t, check_EpE,
                                check_GEp_equals_theta_a, dz_algebra, dz_identity, dz_morphism,
                                dz_morphism_check, ko_from_hats, lba_morphism, theta_a, theta_t,
                                validate)
from stonedual.homs import Homomorphism, all_homomorphisms, hom_identity
from stonedual.ideals import L_set, finite_support, full_ideal, iota, is_zlba, lba_pair, principal
from stonedual.pointmap import PointMap, rule
from stonedual.spaces import (DiscreteCountable, SpaceMap, SpacePresentation, co_algebra, finite_space,
                              hat_image, k_omega)
from stonedual.stone import (FREE, PRINCIPAL, Character, FCPoints, PointSet, UnrealizedClopen, is_dense,
                             is_open, trace)

N = fc_algebra()
PQ = finite_algebra("pq")
ALL_PRINCIPALS = PointSet(N, (FCPoints(cofin(), False),))


# -- validation -----------------------------------------------------------------------------

def test_fc_full_space_is_ldz():
    assert validate(N, PointSet.full(N), "ldz")


def test_all_principals_z_not_dz():
    assert validate(N, ALL_PRINCIPALS, "z")
    v = validate(N, ALL_PRINCIPALS, "dz")
    assert not v and isinstance(v.witness, UnrealizedClopen)
    evens = v.witness
    samples = [N.element(fin(0, 2, 4)), N.element(cofin(1, 3)), N.element(cofin()),
               N.element(cofin(0)), N.element(fin(*range(0, 40, 2)))]
    for a in samples:
        y = evens.distinguish(a)
        assert (y in evens) != bool(y(a))
        assert y in trace(ALL_PRINCIPALS, a) or y in evens


def test_finite_full_space_is_ldz():
    assert validate(PQ, PointSet.full(PQ), "ldz")


point_sets = st.builds(
    lambda cof, s, free: PointSet(N, (FCPoints(FCSet(cof, frozenset(s)), free),)),
    st.booleans(), st.sets(st.integers(0, 7), max_size=3), st.booleans())


@given(point_sets)
def test_levels_are_nested(X):
    z, dz, ldz = (validate(N, X, l) for l in ("z", "dz", "ldz"))
    assert bool(z) == is_dense(X)
    if ldz:
        assert dz and is_open(X)
    if dz:
        assert z


def test_dz_algebra_refuses_invalid():
    with pytest.raises(NotValidated):
        dz_algebra(N, ALL_PRINCIPALS, "dz")
    assert dz_algebra(N, ALL_PRINCIPALS, "z").level == "z"


# -- F and G ------------------------------------------------------------------------------------

def test_F_of_two_points():
    d = F_obj(finite_space(2))
    assert d.algebra == finite_algebra(range(2))
    assert len(d.points) == 2 and d.level == "ldz"


def test_F_of_k_omega():
    d = F_obj(k_omega())
    assert d.algebra == N and d.points == PointSet.full(N)


def test_F_identity():
    X = k_omega()
    assert F_mor(SpaceMap.identity(X)) == dz_identity(F_obj(X))


def test_F_rejects_discrete_countable():
    with pytest.raises(UnrepresentableCO):
        F_obj(SpacePresentation((DiscreteCountable(),)))


def test_G_examples():
    for e in default_catalog().spaces:
        assert G_space(F_obj(e.obj)) == e.obj
    assert G_space(dz_algebra(N)) == k_omega()
    d = dz_algebra(PQ)
    assert G_mor(dz_identity(d)) == PointMap.identity(d.points)
    with pytest.raises(NotValidated):
        dz_algebra(PQ, PointSet.empty(PQ), "z")
    assert G_obj(d) == PointSet.full(PQ)


# -- DZA morphisms -------------------------------------------------------------------------

def test_dz_morphism_condition_detects_mutant():
    d = dz_algebra(PQ)
    swap = next(h for h in all_homomorphisms(PQ, PQ)
                if h(PQ.element(frozenset("p"))) == PQ.element(frozenset("q")))
    bad = DzMorphism(d, d, hom_identity(PQ), swap.dual)
    v = dz_morphism_check(bad.hom, bad.points)
    assert not v and v.witness in d.points
    with pytest.raises(NotValidated):
        dz_morphism(d, d, hom_identity(PQ), swap.dual)


def test_dz_morphism_condition_on_fc():
    d = dz_algebra(N)
    phi = Homomorphism.from_dual(N, N, [rule(Character(N, 0, FREE), {0: Character(N, 0, PRINCIPAL, 1)})])
    assert dz_morphism_check(phi, phi.dual)
    # same hom, point map differs at x' = P0
    mutant = PointMap.build(d.points, d.points, [rule(Character(N, 0, FREE), {0: Character(N, 0, PRINCIPAL, 2)})])
    v = dz_morphism_check(phi, mutant)
    assert not v and v.witness == Character(N, 0, PRINCIPAL, 0)


# -- E and E' ------------------------------------------------------------------------------------

def test_E_examples():
    assert E_obj(dz_algebra(N, None, "ldz")) == lba_pair(full_ideal(N))
    assert E_obj(dz_algebra(PQ, None, "ldz")) == lba_pair(full_ideal(PQ))


def test_E_produces_zlbas_on_catalog():
    for e in default_catalog().dz_objects:
        assert is_zlba(E_obj(e.obj).ideal)


def test_Ep_examples():
    assert Ep_obj(lba_pair(full_ideal(N))) == DzAlgebra(N, PointSet.full(N))
    assert Ep_obj(lba_pair(full_ideal(PQ))) == DzAlgebra(PQ, PointSet.full(PQ))


def test_Ep_points_equal_L_on_catalog():
    for e in default_catalog().lba_pairs:
        if e.obj.zlba:
            assert Ep_obj(e.obj).points == L_set(e.obj.ideal) == iota(e.obj.ideal)


def test_Ep_refuses_non_zlba():
    with pytest.raises(NotZlba):
        Ep_obj(lba_pair(finite_support(N)))


def test_Ep_mor_refuses_failed_lba_condition():
    p = principal(PQ.element(frozenset("p")))
    from stonedual.functors import LbaMorphism
    bad = LbaMorphism(lba_pair(p), lba_pair(full_ideal(PQ)), hom_identity(PQ))
    with pytest.raises(LbaConditionFailed):
        Ep_mor(bad)
    with pytest.raises(LbaConditionFailed):
        lba_morphism(lba_pair(p), lba_pair(full_ideal(PQ)), hom_identity(PQ))


def test_roundtrips_examples():
    assert check_EpE(dz_algebra(N, None, "ldz"))
    assert check_EEp(lba_pair(full_ideal(PQ)))


@pytest.mark.parametrize("n", range(4))
def test_roundtrips_exhaustive_finite(n):
    A = finite_algebra("pqr"[:n])
    assert check_EpE(dz_algebra(A, None, "ldz"))
    assert check_EEp(lba_pair(full_ideal(A)))


# -- Theta and coherence ----------------------------------------------------------------------

def test_theta_examples():
    assert theta_t(k_omega()) == lba_pair(full_ideal(N))
    assert theta_a(lba_pair(full_ideal(N))) == k_omega()
    with pytest.raises(UnrepresentableCO):
        theta_t(SpacePresentation((DiscreteCountable(),)))
    with pytest.raises(NotZlba):
        theta_a(lba_pair(finite_support(N)))


def test_coherence_examples():
    v = check_EF_equals_theta_t(k_omega())
    assert v
    assert ko_from_hats(k_omega()) == full_ideal(N)
    assert check_EF_equals_theta_t(finite_space(3))
    assert check_GEp_equals_theta_a(lba_pair(full_ideal(PQ)))


def test_hat_image_of_catalog_spaces_is_ldz():
    for e in default_catalog().spaces:
        X = e.obj
        assert validate(co_algebra(X), hat_image(X), "ldz")
