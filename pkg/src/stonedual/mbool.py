"""Monomorphisms into complete atomic algebras, and the Tarski functors.

An ``MzMap`` is a monomorphism alpha: A -> P(Y).  When Y is finite the
powerset algebra is materialised as a ``Finite`` algebra on the labels of Y
and alpha is an ordinary ``Homomorphism``.  When Y is infinite the codomain
stays implicit and everything is decided through the point set
X_alpha = {alpha_y} inside S(A).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Mapping

from .algebra import Algebra, Element, FiniteFactor, finite_algebra
from .errors import DomainMismatch, FiniteBackendOnly, ForeignElement, NotValidated
from .functors import (DzAlgebra, DzMorphism, F_mor, F_obj, dz_algebra, dz_morphism_check,
                       validate)
from .homs import Homomorphism, check_table, hom_compose, hom_identity
from .pointmap import PointMap
from .spaces import SpaceMap, classify, stone_iso
from .stone import ATOM, Character, PointSet, characters, trace
from .verdict import Verdict

MAP_LEVELS = ("z-map", "mz-map", "lmz-map")
_DZ_LEVEL = {"z-map": "z", "mz-map": "dz", "lmz-map": "ldz"}


# -- Tarski --------------------------------------------------------------------------------

def P_obj(X) -> Algebra:
    """P(X) for a finite set, as the finite algebra on its elements."""
    return finite_algebra(sorted(X, key=repr) if isinstance(X, (set, frozenset)) else X)


def _atom_char(B: Algebra, label) -> Character:
    return Character(B, 0, ATOM, label)


def P_mor(f: Mapping, source, target) -> Homomorphism:
    """P(f): P(target) -> P(source), M -> f⁻¹(M), for f: source -> target."""
    PX, PY = P_obj(source), P_obj(target)
    if set(f) != set(PX.factors[0].atoms):
        raise DomainMismatch("f must be defined on every element of its source")
    table = {_atom_char(PX, x): _atom_char(PY, f[x]) for x in PX.factors[0].atoms}
    return Homomorphism.from_dual(PY, PX, [table])


def _require_powerset(B: Algebra) -> None:
    if not B.is_finite or len(B.factors) != 1 or not isinstance(B.factors[0], FiniteFactor):
        raise FiniteBackendOnly(f"{B!r} is not a materialised finite powerset algebra")


def At_obj(B: Algebra) -> list[Element]:
    _require_powerset(B)
    return list(B.atoms())


def At_mor(sigma: Homomorphism) -> dict:
    """At(σ): At(B′) -> At(B), x′ -> ⋀{b ∈ B : x′ ≤ σ(b)}, evaluated literally."""
    B, Bp = sigma.domain, sigma.codomain
    _require_powerset(B)
    _require_powerset(Bp)
    elems = list(B.elements())
    images = [(b, sigma(b)) for b in elems]
    out = {}
    for xp in Bp.atoms():
        m = B.meet_all(b for b, sb in images if xp <= sb)
        if m not in set(B.atoms()):
            raise DomainMismatch(f"σ is not complete at {xp!r}: the meet {m!r} is not an atom")
        out[xp] = m
    return out


def _label(a: Element):
    (t,) = a.parts[0]
    return t


# -- mz-maps ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class MzMap:
    """alpha: A -> P(Y), with X_alpha ⊆ S(A) and (when Y is finite) the materialised map."""

    algebra: Algebra
    points: PointSet
    alpha: Homomorphism | None = None

    @property
    def codomain(self) -> Algebra | None:
        return None if self.alpha is None else self.alpha.codomain

    def h_alpha(self, y) -> Character:
        """h_alpha(y) = alpha_y, the character a -> [y ∈ alpha(a)]."""
        if self.alpha is None:
            if y not in self.points:
                raise ForeignElement(f"{y!r} is not in X_alpha")
            return y
        return self.alpha.dual(_atom_char(self.alpha.codomain, y))

    def labels(self) -> list:
        if self.alpha is None:
            raise FiniteBackendOnly("the codomain of this map is implicit")
        return list(self.alpha.codomain.factors[0].atoms)

    def __call__(self, a: Element):
        """alpha(a): a subset of Y, or the trace s_A^X(a) when Y is implicit."""
        if self.alpha is None:
            return trace(self.points, a)
        return frozenset(self.alpha(a).parts[0])

    def __repr__(self) -> str:
        cod = "implicit" if self.alpha is None else f"P({self.labels()})"
        return f"Mz({self.algebra!r} -> {cod}, X_alpha={self.points!r})"


def mz_from_table(A: Algebra, Y, table: Mapping[Element, frozenset]) -> MzMap:
    """A user-supplied alpha: A -> P(Y) as a full value table on a finite A."""
    if not A.is_finite:
        raise FiniteBackendOnly("alpha tables need a finite domain")
    B = P_obj(Y)
    vt = {a: B.element(frozenset(v)) for a, v in table.items()}
    ok, why = check_table(A, B, vt)
    if not ok:
        raise DomainMismatch(f"alpha is not a homomorphism: {why}")
    alpha = Homomorphism.from_table(A, B, vt)
    pts = PointSet.of(A, (alpha.dual(y) for y in characters(B)))
    return MzMap(A, pts, alpha)


def _is_injective(m: MzMap) -> Verdict:
    if m.alpha is None:
        return Verdict(True) if validate(m.algebra, m.points, "z") else Verdict(False, None, "X_alpha not dense")
    seen = {}
    for a in m.algebra.elements():
        v = m.alpha(a)
        if v in seen:
            return Verdict(False, (seen[v], a), f"alpha({seen[v]!r}) = alpha({a!r})")
        seen[v] = a
    return Verdict(True)


def _atoms_are_meets(m: MzMap) -> Verdict:
    """Every atom of P(Y) is a meet of elements of alpha(A)."""
    if m.alpha is None:
        # implicit codomain: characters separate points, so each {x} is the meet of the traces through x
        return Verdict(True)
    B = m.alpha.codomain
    images = [m.alpha(a) for a in m.algebra.elements()]
    for t in B.atoms():
        if B.meet_all(b for b in images if t <= b) != t:
            return Verdict(False, t, f"atom {t!r} is not a meet of values of alpha")
    return Verdict(True)


def validate_map_levels(m: MzMap) -> dict[str, Verdict]:
    return dict(_map_levels(m))


@lru_cache(maxsize=4096)
def _map_levels(m: MzMap) -> tuple:
    inj = _is_injective(m)
    meets = _atoms_are_meets(m)
    z = inj if not inj else meets
    out = {"z-map": z}
    for level in MAP_LEVELS[1:]:
        if not z:
            out[level] = Verdict(False, z.witness, "not a z-map: " + z.note)
        else:
            out[level] = validate(m.algebra, m.points, _DZ_LEVEL[level])
    return tuple(out.items())


def _require_level(m: MzMap, level: str) -> None:
    v = validate_map_levels(m)[level]
    if not v:
        raise NotValidated(f"{m!r} is not an {level}: {v.note}", v)


# -- MBool morphisms ---------------------------------------------------------------------

@dataclass(frozen=True)
class MBoolMorphism:
    """(φ, σ) from alpha: A -> B to alpha′: A′ -> B′ with alpha′∘φ = σ∘alpha.

    ``sigma`` is a ``Homomorphism`` B -> B′ when both codomains are
    materialised, otherwise its Tarski dual: a point map X′_alpha -> X_alpha.
    """

    source: MzMap
    target: MzMap
    hom: Homomorphism
    sigma: Homomorphism | PointMap

    def sigma_dual(self) -> PointMap:
        """At(σ) carried to the X_alpha sets, i.e. f_σ."""
        return f_sigma(self)

    def then(self, other: "MBoolMorphism") -> "MBoolMorphism":
        if self.target != other.source:
            raise DomainMismatch("morphisms are not composable")
        if isinstance(self.sigma, Homomorphism) and isinstance(other.sigma, Homomorphism):
            sig = hom_compose(other.sigma, self.sigma)
        else:
            sig = f_sigma(other).then(f_sigma(self))
            if self.source.alpha is not None and other.target.alpha is not None:
                sig = _sigma_from_points(self.source, other.target, sig)
        return MBoolMorphism(self.source, other.target, hom_compose(other.hom, self.hom), sig)


def check_mbool_morphism(m: MBoolMorphism) -> Verdict:
    if isinstance(m.sigma, Homomorphism):
        A = m.source.algebra
        if not A.is_finite:
            raise FiniteBackendOnly("exhaustive check needs a finite domain")
        for a in A.elements():
            lhs = m.target.alpha(m.hom(a))
            rhs = m.sigma(m.source.alpha(a))
            if lhs != rhs:
                return Verdict(False, a, f"alpha′(φ(a)) = {lhs!r} but σ(alpha(a)) = {rhs!r}")
        return Verdict(True)
    return dz_morphism_check(m.hom, m.sigma)


def mbool_identity(m: MzMap) -> MBoolMorphism:
    sig = hom_identity(m.codomain) if m.alpha is not None else PointMap.identity(m.points)
    return MBoolMorphism(m, m, hom_identity(m.algebra), sig)


def f_sigma(m: MBoolMorphism) -> PointMap:
    """f_σ: X′_alpha′ -> X_alpha, alpha′_{x′} -> alpha_{At(σ)(x′)}."""
    if isinstance(m.sigma, PointMap):
        return m.sigma
    at = At_mor(m.sigma)
    table = {m.target.h_alpha(_label(xp)): m.source.h_alpha(_label(x)) for xp, x in at.items()}
    return PointMap.from_function(m.target.points, m.source.points, table.__getitem__)


def _sigma_from_points(src: MzMap, tgt: MzMap, f: PointMap) -> Homomorphism:
    """The complete homomorphism P(Y) -> P(Y′) whose Tarski dual is f, read through h_alpha."""
    B, Bp = src.codomain, tgt.codomain
    label = {src.h_alpha(y): y for y in src.labels()}
    table = {_atom_char(Bp, yp): _atom_char(B, label[f(tgt.h_alpha(yp))]) for yp in tgt.labels()}
    return Homomorphism.from_dual(B, Bp, [table])


# -- F′ and G′ ----------------------------------------------------------------------------------

def Fp_obj(d: DzAlgebra) -> MzMap:
    """F′(A, X) = s_A^X, into P(X) materialised when X is finite."""
    return _fp_obj(d.algebra, d.points, d.level)


@lru_cache(maxsize=4096)
def _fp_obj(A: Algebra, X: PointSet, level: str) -> MzMap:
    d = DzAlgebra(A, X, level)
    v = validate(d.algebra, d.points, "dz")
    if not v:
        raise NotValidated(f"{d!r} is not a dz-algebra: {v.note}", v)
    X = d.points
    if X.is_finite():
        pts = list(X.points())
        B = finite_algebra(pts)
        alpha = Homomorphism.from_dual(d.algebra, B, [{_atom_char(B, x): x for x in pts}])
        m = MzMap(d.algebra, X, alpha)
    else:
        m = MzMap(d.algebra, X)
    _require_level(m, "lmz-map" if d.level == "ldz" else "mz-map")
    return m


def Fp_mor(m: DzMorphism) -> MBoolMorphism:
    """F′(φ, f) = (φ, P(f))."""
    src, tgt = Fp_obj(m.source), Fp_obj(m.target)
    if src.alpha is not None and tgt.alpha is not None:
        sigma = _sigma_from_points(src, tgt, m.points)
    else:
        sigma = m.points
    return MBoolMorphism(src, tgt, m.hom, sigma)


def _xalpha_space(m: MzMap):
    return classify(m.points)


def Gp_obj(m: MzMap) -> DzAlgebra:
    """G′(alpha) = (CO(X_alpha), X̂_alpha)."""
    _require_level(m, "mz-map")
    return F_obj(_xalpha_space(m).space)


def Gp_mor(m: MBoolMorphism) -> DzMorphism:
    """G′(φ, σ) = (CO(f_σ), f̂_σ)."""
    _require_level(m.source, "mz-map")
    _require_level(m.target, "mz-map")
    f = f_sigma(m)
    src, tgt = stone_iso(m.target.points), stone_iso(m.source.points)
    hat = src.then(f).then(tgt.inverse())
    sm = SpaceMap(_xalpha_space(m.target).space, _xalpha_space(m.source).space, hat)
    return F_mor(sm)


def stone_identification(d: DzAlgebra) -> DzMorphism:
    """The DZA isomorphism d -> G′(F′(d)) built from the Stone map a -> s_A^X(a)."""
    g = Gp_obj(Fp_obj(d))
    iso = stone_iso(d.points)
    phi = Homomorphism(d.algebra, g.algebra, iso.restrict(target=PointSet.full(d.algebra)))
    f = iso.restrict(g.points)
    return DzMorphism(d, g, phi, f)


def check_GpFp_iso(d: DzAlgebra) -> Verdict:
    """G′(F′(d)) ≅ d, through a constructed isomorphism (not equality)."""
    m = stone_identification(d)
    if not m.points.is_bijective() or not m.hom.dual.is_bijective():
        return Verdict(False, m, "Stone identification is not bijective")
    return dz_morphism_check(m.hom, m.points)
