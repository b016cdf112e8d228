"""Built-in worked examples, shipped as data so checks need no authoring.

Positive entries satisfy their category's validation; negative entries are
kept alongside, each with the verdict it is expected to fail.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .algebra import Algebra, cofin, fc_algebra, fin, finite_algebra, product_algebra
from .functors import DzAlgebra, validate
from .ideals import LbaPair, all_ideals, finite_support, full_ideal, lba_pair, principal
from .spaces import DiscreteCountable, SpacePresentation, coproduct, finite_space, k_omega
from .stone import FCPoints, PointSet, characters

CATALOG_VERSION = "1"
LABELS = "pqrstuvw"


@dataclass(frozen=True)
class Entry:
    name: str
    obj: object
    note: str = ""


@dataclass(frozen=True)
class Catalog:
    algebras: tuple = ()
    dz_objects: tuple = ()      # ldz-valid (A, X)
    dz_negatives: tuple = ()    # pairs failing some level; note names the first failing one
    lba_pairs: tuple = ()       # every pair, positive and negative
    spaces: tuple = ()          # representable presented spaces
    bad_spaces: tuple = ()      # spaces with unrepresentable clopen algebra
    version: str = CATALOG_VERSION

    def is_empty(self) -> bool:
        return not any((self.algebras, self.dz_objects, self.dz_negatives, self.lba_pairs,
                        self.spaces, self.bad_spaces))

    def sections(self):
        return {
            "algebras": self.algebras,
            "dz-objects": self.dz_objects,
            "dz-negatives": self.dz_negatives,
            "lba-pairs": self.lba_pairs,
            "spaces": self.spaces,
            "bad-spaces": self.bad_spaces,
        }


def finite_algebras(max_atoms: int) -> list[Algebra]:
    return [finite_algebra(LABELS[:n]) for n in range(max_atoms + 1)]


def fc_algebras() -> list[Algebra]:
    N = fc_algebra()
    return [N, fc_algebra(3), product_algebra(N, finite_algebra("p")), product_algebra(N, N)]


def _all_point_sets(A: Algebra):
    pts = list(characters(A))
    for r in range(len(pts) + 1):
        for sub in combinations(pts, r):
            yield PointSet.of(A, sub)


def _first_failure(A, X) -> str:
    for level in ("z", "dz", "ldz"):
        v = validate(A, X, level)
        if not v:
            return f"not {level}: {v.note}"
    return ""


def _name(A: Algebra) -> str:
    return repr(A)


@lru_cache(maxsize=None)
def default_catalog(max_atoms: int = 3) -> Catalog:
    finite = finite_algebras(max_atoms)
    fcs = fc_algebras()
    algebras = tuple(Entry(_name(A), A) for A in finite_algebras(max(max_atoms, 4)) + fcs)

    dz, neg = [], []
    for A in finite:
        for X in _all_point_sets(A):
            why = _first_failure(A, X)
            (neg if why else dz).append(Entry(f"({_name(A)}, {X!r})", DzAlgebra(A, X, "ldz"), why))
    for A in fcs:
        dz.append(Entry(f"({_name(A)}, S(A))", DzAlgebra(A, PointSet.full(A), "ldz")))
    N = fcs[0]
    for X, label in [
        (PointSet(N, (FCPoints(cofin(), False),)), "all principals"),
        (PointSet(N, (FCPoints(fin(0, 1), True),)), "two principals and the free point"),
        (PointSet(N, (FCPoints(cofin(0), True),)), "punctured at principal 0"),
        (PointSet(N, (FCPoints(fin(), True),)), "free point only"),
    ]:
        neg.append(Entry(f"(FC(nat), {label})", DzAlgebra(N, X, "z"), _first_failure(N, X)))

    pairs = []
    for A in finite:
        for I in all_ideals(A):
            pairs.append(Entry(f"({_name(A)}, {I!r})", lba_pair(I)))
    for A in fcs:
        pairs.append(Entry(f"({_name(A)}, Full)", lba_pair(full_ideal(A))))
    pairs.append(Entry("(FC(nat), finite-support)", lba_pair(finite_support(N)),
                       "LBA but not ZLBA"))
    pairs.append(Entry("(FC(nat), Principal(cofin{0}))", lba_pair(principal(N.element(cofin(0)))),
                       "not dense"))
    pairs.append(Entry("(FC(nat), Principal(fin{0,1}))", lba_pair(principal(N.element(fin(0, 1)))),
                       "not dense"))
    NP, NN = fcs[2], fcs[3]
    pairs.append(Entry(f"({_name(NP)}, finite-support on block 0)", lba_pair(finite_support(NP, 0)),
                       "LBA but not ZLBA"))
    pairs.append(Entry(f"({_name(NN)}, finite-support on block 1)", lba_pair(finite_support(NN, 1)),
                       "LBA but not ZLBA"))

    spaces = [finite_space(n) for n in range(max_atoms + 1)]
    spaces += [k_omega(), coproduct(k_omega(), finite_space(2)), coproduct(k_omega(), k_omega())]
    bad = [SpacePresentation((DiscreteCountable(),)),
           coproduct(k_omega(), SpacePresentation((DiscreteCountable(),)))]
    return Catalog(
        algebras=algebras,
        dz_objects=tuple(dz),
        dz_negatives=tuple(neg),
        lba_pairs=tuple(pairs),
        spaces=tuple(Entry(repr(X), X) for X in spaces),
        bad_spaces=tuple(Entry(repr(X), X, "CO(X) is a full powerset") for X in bad),
    )


def empty_catalog() -> Catalog:
    return Catalog()
