import json
import random

import pytest

from stonedual.algebra import cofin, fc_algebra, fin, finite_algebra, product_algebra
from stonedual.catalog import default_catalog
from stonedual.errors import ParseError, ValidationError
from stonedual.functors import dz_algebra, dz_identity, lba_identity
from stonedual.homs import all_homomorphisms
from stonedual.ideals import finite_support, full_ideal, lba_pair, principal
from stonedual.laws import random_hom, random_point_map
from stonedual.mbool import Fp_obj, mz_from_table
from stonedual.serialize import from_json, parse_object, render, to_json
from stonedual.spaces import SpaceMap, k_omega
from stonedual.stone import FREE, PRINCIPAL, Character, PointSet

N = fc_algebra()


def roundtrip(o):
    return parse_object(render(o))


def test_fc_algebra_literal():
    assert parse_object('{"kind":"fc","universe":"nat"}') == N
    assert parse_object('{"kind":"finite","atoms":["p","q"]}') == finite_algebra("pq")


def test_duplicate_atom_is_validation_error():
    with pytest.raises(ValidationError) as e:
        parse_object('{"kind":"finite","atoms":["p","p"]}')
    assert e.value.which


def test_finite_support_on_finite_block_is_validation_error():
    text = json.dumps({"algebra": {"kind": "finite", "atoms": ["p"]},
                       "ideal": {"kind": "finite-support", "block": 0}})
    with pytest.raises(ValidationError) as e:
        parse_object(text)
    assert e.value.which == "FiniteSupportOnNonFcBlock"


def test_parse_error_is_positioned():
    with pytest.raises(ParseError) as e:
        parse_object('{"kind": "fc",\n  "universe" "nat"}')
    assert (e.value.line, e.value.column) == (2, 14)


def test_missing_field_is_schema_error():
    with pytest.raises(ValidationError) as e:
        parse_object('{"type": "ideal", "ideal": {"kind": "full"}}')
    assert e.value.which == "schema"


def test_untyped_documents_are_guessed():
    d = {"algebra": {"kind": "fc", "universe": "nat"}, "ideal": {"kind": "finite-support", "block": 0}}
    assert from_json(d) == lba_pair(finite_support(N))


@pytest.mark.parametrize("section", ["algebras", "dz_objects", "dz_negatives", "lba_pairs", "spaces"])
def test_catalog_objects_roundtrip(section):
    for e in getattr(default_catalog(), section):
        assert roundtrip(e.obj) == e.obj, e.name


def test_elements_points_and_ideals_roundtrip():
    P = product_algebra(N, finite_algebra("pq"))
    objs = [N.element(fin(1, 2)), N.element(cofin(0)), P.top(), Character(N, 0, FREE),
            Character(N, 0, PRINCIPAL, 7), PointSet.full(P), finite_support(P, 0),
            principal(P.element(cofin(3), frozenset("p")))]
    for o in objs:
        assert roundtrip(o) == o


@pytest.mark.parametrize("seed", range(20))
def test_random_morphisms_roundtrip(seed):
    rng = random.Random(seed)
    pool = [N, fc_algebra(3), finite_algebra("pq"), product_algebra(N, finite_algebra("p"))]
    A, B = rng.choice(pool), rng.choice(pool)
    phi = random_hom(A, B, rng)
    assert roundtrip(phi) == phi
    pm = random_point_map(A, B, rng)
    assert roundtrip(pm) == pm


def test_morphisms_roundtrip():
    d = dz_algebra(N)
    assert roundtrip(dz_identity(d)) == dz_identity(d)
    p = lba_pair(full_ideal(finite_algebra("pq")))
    assert roundtrip(lba_identity(p)) == lba_identity(p)
    X = k_omega()
    assert roundtrip(SpaceMap.identity(X)) == SpaceMap.identity(X)


def test_mz_maps_roundtrip():
    PQ = finite_algebra("pq")
    m = Fp_obj(dz_algebra(PQ))
    assert roundtrip(m).points == m.points
    tbl = {a: frozenset({1}) if "p" in a.parts[0] else frozenset() for a in PQ.elements()}
    t = mz_from_table(PQ, {1}, tbl)
    back = roundtrip(t)
    assert all(back(a) == t(a) for a in PQ.elements())
    f = Fp_obj(dz_algebra(N))
    assert roundtrip(f) == f


def test_render_is_stable_json():
    for phi in all_homomorphisms(finite_algebra("pq"), finite_algebra("pqr")):
        s = render(phi)
        assert render(parse_object(s)) == s
        assert to_json(phi)["type"] == "hom"
