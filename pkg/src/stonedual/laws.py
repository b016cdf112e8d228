"""Randomized and exhaustive law checking, reported as JSON lines.

Each check yields one record ``{"law", "case", "pass", "witness"}``.  Case
identifiers are deterministic in the seed, so reports from separate runs
(or shards) merge by sorting on ``(law, case)``.  Failing FC cases are
shrunk by dropping exception-table entries while the failure persists.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from .algebra import Algebra, FiniteFactor, fin
from .catalog import Catalog, default_catalog, fc_algebras, finite_algebras
from .errors import StoneError
from .functors import (DzAlgebra, DzMorphism, E_mor, Ep_mor, F_mor, F_obj, G_mor, check_EEp,
                       check_EpE, check_EF_equals_theta_t, check_GEp_equals_theta_a, dz_identity,
                       dz_morphism_check, lba_identity, theta_a_mor, theta_t, theta_t_mor,
                       validate)
from .homs import Homomorphism, all_homomorphisms
from .ideals import full_ideal, is_zlba, lba_pair, zlba_by_joins
from .mbool import (At_mor, At_obj, Fp_mor, Fp_obj, Gp_mor, Gp_obj, P_mor, P_obj, check_GpFp_iso,
                    check_mbool_morphism, mbool_identity)
from .pointmap import Constant, IdentityLike, PointMap, Rule, Table
from .spaces import SpaceMap, SpacePresentation, coproduct, finite_space, hat_image, k_omega
from .stone import ATOM, FREE, PRINCIPAL, Character, PointSet, characters

FUNCTORS = ("F", "G", "E", "Ep", "Fp", "Gp", "theta-t", "theta-a")


@dataclass
class Report:
    records: list = field(default_factory=list)
    vacuous: bool = False

    def add(self, law: str, case: str, ok: bool, witness=None) -> None:
        self.records.append({"law": law, "case": case, "pass": bool(ok),
                             "witness": None if ok or witness is None else repr(witness)})

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if not r["pass"]]

    def count(self, law: str | None = None) -> int:
        return sum(1 for r in self.records if law is None or r["law"] == law)

    def merge(self, other: "Report") -> "Report":
        recs = sorted(self.records + other.records, key=lambda r: (r["law"], r["case"]))
        return Report(recs, self.vacuous and other.vacuous)

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.records)


# -- random continuous maps -----------------------------------------------------------------

def random_point(A: Algebra, rng: random.Random, spread: int = 6) -> Character:
    k = rng.randrange(len(A.factors))
    f = A.factors[k]
    if isinstance(f, FiniteFactor):
        return Character(A, k, ATOM, rng.choice(f.atoms))
    if f.is_infinite and rng.random() < 0.3:
        return Character(A, k, FREE)
    n = spread if f.is_infinite else f.size
    return Character(A, k, PRINCIPAL, rng.randrange(n))


def random_point_map(S: Algebra, T: Algebra, rng: random.Random, max_exceptions: int = 3) -> PointMap:
    """A continuous S(S) -> S(T) from the exception-table class."""
    parts = []
    fc_targets = [k for k, f in enumerate(T.factors) if f.is_infinite]
    for k, f in enumerate(S.factors):
        if not f.is_infinite:
            if isinstance(f, FiniteFactor):
                pts = [Character(S, k, ATOM, t) for t in f.atoms]
            else:
                pts = [Character(S, k, PRINCIPAL, i) for i in range(f.size)]
            parts.append({y: random_point(T, rng) for y in pts})
            continue
        exc = {rng.randrange(8): random_point(T, rng) for _ in range(rng.randrange(max_exceptions + 1))}
        if fc_targets and rng.random() < 0.4 and T.factors[fc_targets[0]].size == f.size:
            default = IdentityLike(rng.choice(fc_targets))
        else:
            default = Constant(random_point(T, rng))
        parts.append(Rule(frozenset(exc.items()), default))
    return PointMap.build(PointSet.full(S), PointSet.full(T), parts)


def random_hom(A: Algebra, B: Algebra, rng: random.Random) -> Homomorphism:
    """A random homomorphism A -> B, generated on the dual side."""
    return Homomorphism(A, B, random_point_map(B, A, rng))


def shrink(maps: tuple, failing: Callable[[tuple], bool]) -> tuple:
    """Drop exception entries from ``maps`` while ``failing`` stays true."""
    maps = tuple(maps)
    improved = True
    while improved:
        improved = False
        for mi, pm in enumerate(maps):
            for pi, part in enumerate(pm.parts):
                if not isinstance(part, Rule):
                    continue
                for e in sorted(part.exceptions, key=lambda e: e[0]):
                    smaller = Rule(part.exceptions - {e}, part.default)
                    parts = pm.parts[:pi] + (smaller,) + pm.parts[pi + 1:]
                    try:
                        cand = PointMap.build(pm.source, pm.target, parts)
                        trial = maps[:mi] + (cand,) + maps[mi + 1:]
                        still = failing(trial)
                    except (StoneError, ValueError):
                        continue
                    if still:
                        maps, improved = trial, True
                        break
                if improved:
                    break
            if improved:
                break
    return maps


# -- functor laws on generated morphisms ---------------------------------------------------

def _dz(A: Algebra) -> DzAlgebra:
    return DzAlgebra(A, PointSet.full(A), "ldz")


def _lba(A: Algebra):
    return lba_pair(full_ideal(A))


def _space_of(A: Algebra) -> SpacePresentation:
    blocks = []
    for f in A.factors:
        if isinstance(f, FiniteFactor) or not f.is_infinite:
            blocks.append(finite_space(len(f.atoms) if isinstance(f, FiniteFactor) else f.size).blocks[0])
        else:
            blocks.append(k_omega().blocks[0])
    return SpacePresentation(tuple(blocks))


def _space_map(X, Y, pm: PointMap) -> SpaceMap:
    return SpaceMap(X, Y, pm)


def _identity_laws(rep: Report, tag: str, A: Algebra) -> None:
    d, p, X = _dz(A), _lba(A), _space_of(A)
    idd, idl = dz_identity(d), lba_identity(p)
    idX = SpaceMap.identity(X)
    rep.add("functor-F", f"{tag}:id", F_mor(idX) == dz_identity(F_obj(X)))
    rep.add("functor-G", f"{tag}:id", G_mor(idd) == PointMap.identity(d.points))
    rep.add("functor-E", f"{tag}:id", E_mor(idd) == idl)
    rep.add("functor-Ep", f"{tag}:id", Ep_mor(idl) == idd)
    rep.add("functor-Fp", f"{tag}:id", Fp_mor(idd) == mbool_identity(Fp_obj(d)))
    rep.add("functor-Gp", f"{tag}:id", Gp_mor(mbool_identity(Fp_obj(d))) == dz_identity(Gp_obj(Fp_obj(d))))
    rep.add("functor-theta-t", f"{tag}:id", theta_t_mor(idX) == lba_identity(theta_t(X)))
    rep.add("functor-theta-a", f"{tag}:id", theta_a_mor(idl) == PointMap.identity(d.points))


def composition_checks(A: Algebra, B: Algebra, C: Algebra, phi: Homomorphism,
                       psi: Homomorphism) -> dict[str, object]:
    """Composition laws for one composable pair phi: A -> B, psi: B -> C.

    Returns law -> witness (None when the law holds).
    """
    out: dict[str, object] = {}
    dA, dB, dC = _dz(A), _dz(B), _dz(C)
    m1 = DzMorphism(dA, dB, phi, phi.dual)
    m2 = DzMorphism(dB, dC, psi, psi.dual)
    for m in (m1, m2):
        v = dz_morphism_check(m.hom, m.points)
        if not v:
            out["dz-morphism"] = v.witness
    m12 = m1.then(m2)
    v = dz_morphism_check(m12.hom, m12.points)
    if not v:
        out["dz-morphism"] = v.witness

    def law(name, ok, witness):
        out.setdefault(name, None if ok else witness)

    law("functor-G", G_mor(m12) == G_mor(m2).then(G_mor(m1)), m12)
    l1, l2 = E_mor(m1), E_mor(m2)
    law("functor-E", E_mor(m12) == l1.then(l2), m12)
    law("functor-Ep", Ep_mor(l1.then(l2)) == Ep_mor(l1).then(Ep_mor(l2)), m12)
    law("functor-theta-a", theta_a_mor(l1.then(l2)) == theta_a_mor(l2).then(theta_a_mor(l1)), m12)
    f1, f2 = Fp_mor(m1), Fp_mor(m2)
    ok = check_mbool_morphism(f1) and check_mbool_morphism(f2)
    law("functor-Fp", ok and Fp_mor(m12) == f1.then(f2), m12)
    law("functor-Gp", Gp_mor(f1.then(f2)) == Gp_mor(f1).then(Gp_mor(f2)), m12)
    # spaces: the same dual maps read as continuous maps X_C -> X_B -> X_A
    XA, XB, XC = _space_of(A), _space_of(B), _space_of(C)
    g = _space_map(XC, XB, _hat(psi.dual, XC, XB))
    f = _space_map(XB, XA, _hat(phi.dual, XB, XA))
    law("functor-F", F_mor(g.then(f)) == F_mor(f).then(F_mor(g)), (f, g))
    law("functor-theta-t", theta_t_mor(g.then(f)) == theta_t_mor(f).then(theta_t_mor(g)), (f, g))
    return out


def _hat(pm: PointMap, X: SpacePresentation, Y: SpacePresentation) -> PointMap:
    """Carry a point map between Stone spaces to the hat coordinates of X and Y."""
    from .spaces import stone_iso
    src = stone_iso(pm.source)
    tgt = stone_iso(pm.target)
    out = src.then(pm).then(tgt.inverse())
    if out.source != hat_image(X) or out.target != hat_image(Y):
        raise AssertionError("hat coordinates do not match the presented spaces")
    return out


def _record(rep: Report, case: str, result: dict, laws: Iterable[str]) -> None:
    for name in laws:
        w = result.get(name)
        rep.add(name, case, w is None, w)


_ALL_LAWS = tuple(f"functor-{n}" for n in FUNCTORS) + ("dz-morphism",)


def finite_functor_laws(max_atoms: int = 3, rep: Report | None = None) -> Report:
    """Identities and composition over every hom pair among finite algebras."""
    rep = Report() if rep is None else rep
    algs = finite_algebras(max_atoms)
    homs = {(i, j): list(all_homomorphisms(A, B)) for i, A in enumerate(algs) for j, B in enumerate(algs)}
    for i, A in enumerate(algs):
        _identity_laws(rep, f"finite:{i}", A)
    for i, j, k in product(range(len(algs)), repeat=3):
        for a, phi in enumerate(homs[i, j]):
            for b, psi in enumerate(homs[j, k]):
                res = composition_checks(algs[i], algs[j], algs[k], phi, psi)
                _record(rep, f"finite:{i}->{j}->{k}#{a}.{b}", res, _ALL_LAWS)
    return rep


def fc_functor_laws(seed: int = 0, n: int = 200, rep: Report | None = None,
                    pool: list[Algebra] | None = None) -> Report:
    """Identities and composition on ``n`` random exception-table morphism pairs."""
    rep = Report() if rep is None else rep
    rng = random.Random(seed)
    pool = fc_algebras() + finite_algebras(2)[1:] if pool is None else pool
    for i, A in enumerate(pool):
        _identity_laws(rep, f"fc:{seed}:id{i}", A)
    for t in range(n):
        A, B, C = (rng.choice(pool) for _ in range(3))
        phi, psi = random_hom(A, B, rng), random_hom(B, C, rng)
        res = composition_checks(A, B, C, phi, psi)
        case = f"fc:{seed}:{t}"
        for name in _ALL_LAWS:
            w = res.get(name)
            if w is not None:
                def failing(maps, name=name):
                    p = Homomorphism(A, B, maps[0])
                    q = Homomorphism(B, C, maps[1])
                    return composition_checks(A, B, C, p, q).get(name) is not None
                small = shrink((phi.dual, psi.dual), failing)
                w = {"phi-dual": small[0], "psi-dual": small[1], "detail": w}
            rep.add(name, case, w is None, w)
    return rep


# -- catalog-level laws ------------------------------------------------------------------------

def catalog_laws(cat: Catalog, rep: Report | None = None) -> Report:
    rep = Report() if rep is None else rep
    for e in cat.dz_objects:
        rep.add("roundtrip-EpE", e.name, check_EpE(e.obj))
        v = check_GpFp_iso(e.obj)
        rep.add("GpFp-iso", e.name, v, v.witness)
        lv = validate(e.obj.algebra, e.obj.points, "ldz")
        rep.add("ldz-valid", e.name, lv, lv.witness)
    for e in cat.dz_negatives:
        v = validate(e.obj.algebra, e.obj.points, "ldz")
        rep.add("ldz-rejected", e.name, not v, None if not v else e.obj)
    for e in cat.lba_pairs:
        p = e.obj
        a, b = is_zlba(p.ideal), zlba_by_joins(p.ideal)
        rep.add("zlba-routes", e.name, bool(a) == bool(b), (a, b))
        if a:
            rep.add("roundtrip-EEp", e.name, check_EEp(p))
            v = check_GEp_equals_theta_a(p)
            rep.add("coherence-GEp", e.name, v, v.witness)
    for e in cat.spaces:
        v = check_EF_equals_theta_t(e.obj)
        rep.add("coherence-EF", e.name, v, v.witness)
    return rep


def tarski_laws(seed: int = 0, n: int = 500, max_size: int = 6, rep: Report | None = None) -> Report:
    """At(P(X)) <-> X and At(P(f)) = f on random functions between small sets."""
    rep = Report() if rep is None else rep
    rng = random.Random(seed)
    for t in range(n):
        m, k = rng.randint(0, max_size), rng.randint(1, max_size)
        X, Y = list(range(m)), [f"y{i}" for i in range(k)]
        f = {x: rng.choice(Y) for x in X}
        atoms = {next(iter(a.parts[0])) for a in At_obj(P_obj(Y))}
        rep.add("tarski-AtP-obj", f"tarski:{seed}:{t}", atoms == set(Y), (Y, atoms))
        at = At_mor(P_mor(f, X, Y))
        got = {next(iter(xa.parts[0])): next(iter(ya.parts[0])) for xa, ya in at.items()}
        rep.add("tarski-AtP-mor", f"tarski:{seed}:{t}", got == f, (f, got))
    return rep


def law_suite(seed: int = 0, max_atoms: int = 3, n_random: int = 200,
              catalog: Catalog | None = None,
              extra_morphisms: Iterable[DzMorphism] = ()) -> Report:
    """Run every suite; an empty catalog with nothing else to check is vacuous."""
    cat = default_catalog(max_atoms) if catalog is None else catalog
    extras = list(extra_morphisms)
    if cat.is_empty() and not extras:
        return Report([], vacuous=True)
    rep = Report()
    for t, m in enumerate(extras):
        v = dz_morphism_check(m.hom, m.points)
        rep.add("dz-morphism", f"extra:{t}", v, v.witness)
    if not cat.is_empty():
        catalog_laws(cat, rep)
        finite_functor_laws(max_atoms, rep)
        fc_functor_laws(seed, n_random, rep)
        tarski_laws(seed, rep=rep)
    return rep
