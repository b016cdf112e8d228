import json
import random

from stonedual.algebra import fc_algebra, finite_algebra
from stonedual.catalog import default_catalog, empty_catalog
from stonedual.functors import DzMorphism, dz_algebra
from stonedual.homs import hom_identity
from stonedual.laws import (Report, composition_checks, fc_functor_laws, finite_functor_laws,
                            law_suite, random_hom, shrink, tarski_laws)
from stonedual.pointmap import Constant, IdentityLike, PointMap, Rule
from stonedual.stone import FREE, PRINCIPAL, Character, PointSet

N = fc_algebra()


def test_small_finite_suite_passes():
    rep = finite_functor_laws(max_atoms=2)
    assert rep.passed and rep.count() > 100
    assert rep.count("functor-Gp") > 0 and rep.count("dz-morphism") > 0


def test_fc_suite_passes():
    rep = fc_functor_laws(seed=1, n=30)
    assert rep.passed, rep.failures()[:3]


def test_tarski_suite_passes():
    rep = tarski_laws(seed=2, n=50)
    assert rep.passed and rep.count() == 100


def test_random_homs_are_dz_morphisms():
    rng = random.Random(5)
    pool = [N, fc_algebra(3), finite_algebra("pq")]
    for _ in range(20):
        A, B, C = (rng.choice(pool) for _ in range(3))
        res = composition_checks(A, B, C, random_hom(A, B, rng), random_hom(B, C, rng))
        assert all(w is None for w in res.values())


def test_mutant_is_reported_with_violating_point():
    d = dz_algebra(N)
    S = d.points
    mutant = PointMap.build(S, S, [Rule(frozenset({(3, Character(N, 0, PRINCIPAL, 4))}),
                                        IdentityLike(0))])
    bad = DzMorphism(d, d, hom_identity(N), mutant)
    rep = law_suite(catalog=empty_catalog(), extra_morphisms=[bad])
    assert not rep.vacuous and not rep.passed
    (rec,) = rep.failures()
    assert rec["law"] == "dz-morphism"
    assert rec["witness"] == repr(Character(N, 0, PRINCIPAL, 3))


def test_empty_catalog_is_vacuous():
    rep = law_suite(catalog=empty_catalog())
    assert rep.vacuous and rep.count() == 0


def test_shrink_drops_irrelevant_exceptions():
    S = PointSet.full(N)
    rel = (2, Character(N, 0, FREE))
    noise = {(i, Character(N, 0, PRINCIPAL, i + 1)) for i in (0, 5, 6)}
    pm = PointMap.build(S, S, [Rule(frozenset(noise | {rel}), Constant(Character(N, 0, PRINCIPAL, 0)))])

    def failing(maps):
        return maps[0](Character(N, 0, PRINCIPAL, 2)) == Character(N, 0, FREE)

    (small,) = shrink((pm,), failing)
    assert failing((small,))
    assert small.parts[0].exceptions == frozenset({rel})


def test_jsonl_records_and_merge():
    a = tarski_laws(seed=0, n=3)
    b = tarski_laws(seed=1, n=3)
    merged = a.merge(b)
    lines = merged.to_jsonl().splitlines()
    assert len(lines) == 12
    recs = [json.loads(l) for l in lines]
    assert set(recs[0]) == {"law", "case", "pass", "witness"}
    assert [(r["law"], r["case"]) for r in recs] == sorted((r["law"], r["case"]) for r in recs)
    # merging is order independent
    assert b.merge(a).records == merged.records


def test_report_is_deterministic_in_seed():
    assert fc_functor_laws(seed=4, n=10).records == fc_functor_laws(seed=4, n=10).records


def test_default_catalog_counts():
    cat = default_catalog()
    assert len(cat.dz_objects) >= 5 and len(cat.lba_pairs) >= 10 and cat.spaces
    assert not cat.is_empty() and empty_catalog().is_empty()
