"""Categories of z/dz/ldz-algebras and local Boolean algebras, and the functors between them.

Objects are validated eagerly: constructing a ``DzAlgebra`` at level
``"dz"`` fails unless the point set really is dense with all clopens
realised as traces, and every functor refuses unvalidated input.

Variance follows the text: F, G, Θᵗ, Θᵃ are contravariant; E and E′ are
covariant (and mutually inverse).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, Element, fin
from .errors import DomainMismatch, LbaConditionFailed, NotValidated, NotZlba
from .homs import Homomorphism, hom_compose, hom_identity
from .ideals import Ideal, LbaPair, L_set, iota, iota_inv, is_zlba, lba_condition, lba_pair
from .pointmap import PointMap
from .spaces import (SpaceMap, SpacePresentation, classify, co_algebra, co_map, hat_image,
                     is_compact_clopen, ko_ideal)
from .stone import (FREE, PRINCIPAL, Character, PointSet, UnrealizedClopen, is_dense, is_open,
                    trace, trace_gap)
from .verdict import Verdict

LEVELS = ("z", "dz", "ldz")


def validate(A: Algebra, X: PointSet, level: str = "dz") -> Verdict:
    """Is (A, X) a z-, dz- or ldz-algebra?"""
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    if X.algebra != A:
        raise DomainMismatch("point set lives in a different Stone space")
    if not is_dense(X):
        return Verdict(False, _undetected(X), "X is not dense: some nonzero element vanishes on X")
    if level == "z":
        return Verdict(True)
    k = trace_gap(X)
    if k is not None:
        return Verdict(False, UnrealizedClopen(X, k),
                       f"block {k} of X is infinite discrete: CO(X) exceeds the traces")
    if level == "dz":
        return Verdict(True)
    if not is_open(X):
        return Verdict(False, None, "X is not open in S(A)")
    return Verdict(True)


def _undetected(X: PointSet) -> Element:
    """A nonzero element with X ∩ s_A(a) empty (X not dense)."""
    A = X.algebra
    for k, (f, b) in enumerate(zip(A.factors, X.blocks)):
        if isinstance(b, frozenset):
            missing = [t for t in f.atoms if t not in b]
            if missing:
                return A.embed(k, {missing[0]})
        else:
            full = f.top()
            gap = f.meet(full, f.complement(b.principal))
            if gap != f.bottom():
                if not gap.cofinite:
                    return A.embed(k, fin(min(gap.support)))
                i = next(i for i in range(len(gap.support) + 1) if i not in gap.support)
                return A.embed(k, fin(i))
    raise AssertionError("X is dense")


@dataclass(frozen=True)
class DzAlgebra:
    algebra: Algebra
    points: PointSet
    level: str = field(default="dz", compare=False)

    def __repr__(self) -> str:
        return f"DZ[{self.level}]({self.algebra!r}, {self.points!r})"


def dz_algebra(A: Algebra, X: PointSet | None = None, level: str = "dz") -> DzAlgebra:
    X = PointSet.full(A) if X is None else X
    v = validate(A, X, level)
    if not v:
        raise NotValidated(f"({A!r}, {X!r}) is not a {level}-algebra: {v.note}", v)
    return DzAlgebra(A, X, level)


def _require(d: DzAlgebra, level: str) -> None:
    if LEVELS.index(d.level) < LEVELS.index(level):
        v = validate(d.algebra, d.points, level)
        if not v:
            raise NotValidated(f"{d!r} is not a {level}-algebra: {v.note}", v)


# -- morphisms -------------------------------------------------------------------------

def dz_morphism_check(phi: Homomorphism, f: PointMap, margin: int = 4) -> Verdict:
    """Pointwise check of x′∘φ = f(x′) on every sampled x′ of f's source.

    Both sides are compared as functions on a probe family of A covering
    every index the representations mention.  The witness is the first
    violating x′.
    """
    A = phi.domain
    if f.target.algebra != A or f.source.algebra != phi.codomain:
        raise DomainMismatch("point map does not run between the right Stone spaces")
    idx = f.explicit_indices() | phi.dual.explicit_indices()
    bound = max(idx, default=-1) + 1 + margin
    probes = list(A.atoms(bound)) + [A.embed(k, g.top()) for k, g in enumerate(A.factors)]
    probes += [A.embed(k, g.complement(fin(*range(bound)))) for k, g in enumerate(A.factors) if g.is_infinite]
    images = [phi(a) for a in probes]
    for x in f.source.points(bound) if not f.source.is_finite() else f.source.points():
        fx = f(x)
        for a, pa in zip(probes, images):
            if x(pa) != fx(a):
                return Verdict(False, x, f"x′∘φ and f(x′) differ on {a!r} at x′ = {x!r}")
    return Verdict(True)


@dataclass(frozen=True)
class DzMorphism:
    """(φ, f): (A, X) -> (A′, X′) with φ: A -> A′ and f: X′ -> X."""

    source: DzAlgebra
    target: DzAlgebra
    hom: Homomorphism
    points: PointMap

    def __post_init__(self):
        if self.hom.domain != self.source.algebra or self.hom.codomain != self.target.algebra:
            raise DomainMismatch("homomorphism does not match the objects")
        if self.points.source != self.target.points or self.points.target != self.source.points:
            raise DomainMismatch("point map must run X′ -> X")

    def then(self, other: "DzMorphism") -> "DzMorphism":
        """``other ∘ self``."""
        if self.target != other.source:
            raise DomainMismatch("morphisms are not composable")
        return DzMorphism(self.source, other.target, hom_compose(other.hom, self.hom),
                          other.points.then(self.points))


def dz_morphism(source: DzAlgebra, target: DzAlgebra, phi: Homomorphism,
                f: PointMap | None = None) -> DzMorphism:
    """Validated DZA morphism; ``f`` defaults to the restricted dual of φ."""
    if f is None:
        f = phi.dual.restrict(target.points, source.points)
    m = DzMorphism(source, target, phi, f)
    v = dz_morphism_check(phi, f)
    if not v:
        raise NotValidated(v.note, v)
    return m


def dz_identity(d: DzAlgebra) -> DzMorphism:
    return DzMorphism(d, d, hom_identity(d.algebra), PointMap.identity(d.points))


@dataclass(frozen=True)
class LbaMorphism:
    source: LbaPair
    target: LbaPair
    hom: Homomorphism

    def __post_init__(self):
        if self.hom.domain != self.source.algebra or self.hom.codomain != self.target.algebra:
            raise DomainMismatch("homomorphism does not match the pairs")

    def then(self, other: "LbaMorphism") -> "LbaMorphism":
        if self.target != other.source:
            raise DomainMismatch("morphisms are not composable")
        return LbaMorphism(self.source, other.target, hom_compose(other.hom, self.hom))


def lba_morphism(source: LbaPair, target: LbaPair, phi: Homomorphism) -> LbaMorphism:
    m = LbaMorphism(source, target, phi)
    v = lba_condition(phi, source.ideal, target.ideal)
    if not v:
        raise LbaConditionFailed(v.note, v.witness)
    return m


def lba_identity(p: LbaPair) -> LbaMorphism:
    return LbaMorphism(p, p, hom_identity(p.algebra))


# -- F and G ----------------------------------------------------------------------------------

def F_obj(X: SpacePresentation) -> DzAlgebra:
    """F(X) = (CO(X), X̂)."""
    A = co_algebra(X)
    return dz_algebra(A, hat_image(X), "ldz")


def F_mor(f: SpaceMap) -> DzMorphism:
    """F(f) = (CO(f), f̂): F(Y) -> F(X) for f: X -> Y."""
    return DzMorphism(F_obj(f.target), F_obj(f.source), co_map(f), f.hat)


def G_obj(d: DzAlgebra) -> PointSet:
    """G(A, X) = X as a subspace of S(A)."""
    _require(d, "z")
    return d.points


def G_space(d: DzAlgebra) -> SpacePresentation:
    return classify(G_obj(d)).space


def G_mor(m: DzMorphism) -> PointMap:
    _require(m.source, "z")
    _require(m.target, "z")
    return m.points


# -- E and E′ ------------------------------------------------------------------------------------

def E_obj(d: DzAlgebra) -> LbaPair:
    """E(A, X) = (A, I_X) with I_X = {a : s_A(a) ⊆ X}."""
    _require(d, "ldz")
    p = lba_pair(iota_inv(d.points))
    if not p.zlba:
        raise AssertionError(f"E produced a non-ZLBA from {d!r}")
    return p


def E_mor(m: DzMorphism) -> LbaMorphism:
    return lba_morphism(E_obj(m.source), E_obj(m.target), m.hom)


def Ep_obj(p: LbaPair) -> DzAlgebra:
    """E′(A, I) = (A, X_I) with X_I = ι(I)."""
    v = p.zlba
    if not v:
        raise NotZlba(f"{p!r} is not a ZLBA: {v.note}", v)
    return dz_algebra(p.algebra, iota(p.ideal), "ldz")


def Ep_mor(m: LbaMorphism) -> DzMorphism:
    """E′(φ) = (φ, f_φ) with f_φ(x′) = x′∘φ on X_J."""
    v = lba_condition(m.hom, m.source.ideal, m.target.ideal)
    if not v:
        raise LbaConditionFailed(v.note, v.witness)
    src, tgt = Ep_obj(m.source), Ep_obj(m.target)
    f = m.hom.dual.restrict(tgt.points, src.points)
    return DzMorphism(src, tgt, m.hom, f)


def check_EEp(p: LbaPair) -> bool:
    return E_obj(Ep_obj(p)) == p


def check_EpE(d: DzAlgebra) -> bool:
    return Ep_obj(E_obj(d)) == d


def check_EEp_mor(m: LbaMorphism) -> bool:
    return E_mor(Ep_mor(m)) == m


def check_EpE_mor(m: DzMorphism) -> bool:
    return Ep_mor(E_mor(m)) == m


# -- the Θ functors ------------------------------------------------------------------------

def theta_t(X: SpacePresentation) -> LbaPair:
    """Θᵗ(X) = (CO(X), KO(X))."""
    return lba_pair(ko_ideal(X))


def theta_t_mor(f: SpaceMap) -> LbaMorphism:
    return lba_morphism(theta_t(f.target), theta_t(f.source), co_map(f))


def theta_a_points(p: LbaPair) -> PointSet:
    v = p.zlba
    if not v:
        raise NotZlba(f"{p!r} is not a ZLBA: {v.note}", v)
    return L_set(p.ideal)


def theta_a(p: LbaPair) -> SpacePresentation:
    """Θᵃ(A, I) = L_I^A, read back as a presented space."""
    return classify(theta_a_points(p)).space


def theta_a_mor(m: LbaMorphism) -> PointMap:
    """Θᵃ(φ): L_J^B -> L_I^A, x′ -> x′∘φ."""
    return m.hom.dual.restrict(theta_a_points(m.target), theta_a_points(m.source))


# -- coherence with the Stone-type dualities ----------------------------------------

def ko_from_hats(X: SpacePresentation) -> Ideal:
    """I_X̂ = {U : s(U) ⊆ X̂}, the ideal E reads off F(X)."""
    return iota_inv(hat_image(X))


def check_EF_equals_theta_t(X: SpacePresentation, bound: int = 6) -> Verdict:
    lhs = E_obj(F_obj(X))
    rhs = theta_t(X)
    if lhs != rhs:
        return Verdict(False, (lhs, rhs), "E(F(X)) differs from Θᵗ(X)")
    # I_X̂ = KO(X), member by member on a probe family of clopens
    I_hat = ko_from_hats(X)
    A = co_algebra(X)
    probes = list(A.atoms(bound)) + [A.top(), A.bottom()] + [~a for a in A.atoms(bound)]
    if A.is_finite:
        probes = list(A.elements())
    for U in probes:
        if (U in I_hat) != is_compact_clopen(X, U):
            return Verdict(False, U, "I_X̂ and KO(X) disagree")
    return Verdict(True)


def check_GEp_equals_theta_a(p: LbaPair) -> Verdict:
    lhs = G_obj(Ep_obj(p))
    rhs = theta_a_points(p)
    if lhs != rhs:
        return Verdict(False, (lhs, rhs), "G(E′(p)) differs from Θᵃ(p)")
    if classify(lhs).space != theta_a(p):
        return Verdict(False, None, "presented spaces differ")
    return Verdict(True)


def check_EF_mor(f: SpaceMap) -> bool:
    return E_mor(F_mor(f)).hom == theta_t_mor(f).hom


def check_GEp_mor(m: LbaMorphism) -> bool:
    return G_mor(Ep_mor(m)) == theta_a_mor(m)
