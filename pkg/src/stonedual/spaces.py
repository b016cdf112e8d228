"""Presented Boolean spaces and the hat constructions.

A ``SpacePresentation`` is a finite coproduct of blocks: finite discrete
spaces, one-point compactifications of a countable discrete set (points
0, 1, 2, ... and ``INF``), and countable discrete spaces.  The last kind is
accepted so that the representability boundary can be shown: its clopen
algebra is a full powerset.

Clopen sets of a presented space are elements of ``co_algebra(X)``; a
point ``x`` lies in ``U`` per ``member``.  ``hat_char`` turns a point into
the character ``U -> [x in U]`` of that algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Callable, Iterator

from .algebra import Algebra, Element, FCFactor, FiniteFactor, cofin, fc_algebra, fin, finite_algebra, product_algebra
from .errors import DomainMismatch, ForeignElement, UnrepresentableCO
from .homs import Homomorphism
from .ideals import Ideal
from .pointmap import Constant, IdentityLike, PointMap, Rule
from .stone import ATOM, FREE, PRINCIPAL, Character, FCPoints, PointSet, is_compact, trace

INF = "inf"


@dataclass(frozen=True)
class FiniteDiscrete:
    n: int
    kind = "finite"


@dataclass(frozen=True)
class OnePointCompactification:
    kind = "k-omega"


@dataclass(frozen=True)
class DiscreteCountable:
    kind = "discrete-omega"


@dataclass(frozen=True)
class SpacePoint:
    block: int
    id: int | str

    def __repr__(self) -> str:
        return f"<{self.block}:{self.id}>"


@dataclass(frozen=True)
class SpacePresentation:
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for b in self.blocks:
            if not isinstance(b, (FiniteDiscrete, OnePointCompactification, DiscreteCountable)):
                raise ForeignElement(f"unknown space block {b!r}")
            if isinstance(b, FiniteDiscrete) and (not isinstance(b.n, int) or b.n < 0):
                raise ForeignElement(f"finite block size must be a natural number: {b.n!r}")

    def __contains__(self, x) -> bool:
        if not isinstance(x, SpacePoint) or not 0 <= x.block < len(self.blocks):
            return False
        b = self.blocks[x.block]
        if isinstance(b, FiniteDiscrete):
            return isinstance(x.id, int) and 0 <= x.id < b.n
        if x.id == INF:
            return isinstance(b, OnePointCompactification)
        return isinstance(x.id, int) and x.id >= 0

    def points(self, bound: int | None = None) -> Iterator[SpacePoint]:
        """All points; ``bound`` caps the indices of infinite blocks."""
        for k, b in enumerate(self.blocks):
            if isinstance(b, FiniteDiscrete):
                yield from (SpacePoint(k, i) for i in range(b.n))
            else:
                if bound is None:
                    raise ValueError("an infinite space needs a bound to enumerate")
                yield from (SpacePoint(k, i) for i in range(bound))
                if isinstance(b, OnePointCompactification):
                    yield SpacePoint(k, INF)

    @property
    def is_finite(self) -> bool:
        return all(isinstance(b, FiniteDiscrete) for b in self.blocks)

    @property
    def is_compact(self) -> bool:
        return not any(isinstance(b, DiscreteCountable) for b in self.blocks)

    def __repr__(self) -> str:
        def show(b):
            if isinstance(b, FiniteDiscrete):
                return f"D{b.n}"
            return "k-omega" if isinstance(b, OnePointCompactification) else "discrete-omega"
        return "Space(" + " + ".join(show(b) for b in self.blocks) + ")"


def finite_space(n: int) -> SpacePresentation:
    return SpacePresentation((FiniteDiscrete(n),))


def k_omega() -> SpacePresentation:
    return SpacePresentation((OnePointCompactification(),))


def coproduct(*spaces: SpacePresentation) -> SpacePresentation:
    return SpacePresentation(tuple(b for s in spaces for b in s.blocks))


# -- clopen and compact-open algebras -------------------------------------------

def co_algebra(X: SpacePresentation) -> Algebra:
    """CO(X): Finite on finite blocks, FC(nat) on compactified blocks, a product for coproducts."""
    factors = []
    for k, b in enumerate(X.blocks):
        if isinstance(b, DiscreteCountable):
            raise UnrepresentableCO(
                f"block {k} is countable discrete: its clopen algebra is a full powerset, "
                "outside the finite/finite-cofinite backends")
        factors.append(finite_algebra(range(b.n)) if isinstance(b, FiniteDiscrete) else fc_algebra())
    if not factors:
        return finite_algebra([])
    return factors[0] if len(factors) == 1 else product_algebra(*factors)


def member(x: SpacePoint, U: Element) -> bool:
    """Is the point ``x`` in the clopen set ``U``?"""
    part = U.parts[x.block]
    if x.id == INF:
        return part.cofinite
    return x.id in part


def is_compact_clopen(X: SpacePresentation, U: Element) -> bool:
    """Compactness of a clopen, decided on its hat image inside S(CO(X))."""
    return is_compact(trace(hat_image(X), U))


def ko_ideal(X: SpacePresentation) -> Ideal:
    """KO(X): compact clopens.  A compact block contributes all of its clopens."""
    A = co_algebra(X)
    parts = []
    for f, b in zip(A.factors, X.blocks or (FiniteDiscrete(0),)):
        if isinstance(b, DiscreteCountable):
            raise UnrepresentableCO("countable discrete block")
        parts.append(f.top())
    return Ideal(A, tuple(parts))


# -- hats ----------------------------------------------------------------------------------

def hat_char(X, x) -> Character:
    """x̂ : CO(X) -> 2.  ``X`` may be a presentation or a point set of some S(A)."""
    if isinstance(X, PointSet):
        c = classify(X)
        return hat_char(c.space, c.to_space(x))
    if x not in X:
        raise ForeignElement(f"{x!r} is not a point of {X!r}")
    A = co_algebra(X)
    b = X.blocks[x.block]
    if isinstance(b, FiniteDiscrete):
        (i,) = [i for i in range(b.n) if member(x, A.embed(x.block, {i}))]
        return Character(A, x.block, ATOM, i)
    if x.id == INF:
        return Character(A, x.block, FREE)
    return Character(A, x.block, PRINCIPAL, x.id)


def unhat(X: SpacePresentation, c: Character) -> SpacePoint:
    """Inverse of ĥ_X on the presented spaces."""
    if c.algebra != co_algebra(X):
        raise ForeignElement(f"{c!r} is not a character of CO({X!r})")
    return SpacePoint(c.block, INF if c.kind == FREE else c.id)


def hat_image(X: SpacePresentation) -> PointSet:
    """X̂ ⊆ S(CO(X))."""
    A = co_algebra(X)
    if not X.blocks:
        return PointSet.empty(A)
    blocks = []
    for k, b in enumerate(X.blocks):
        if isinstance(b, FiniteDiscrete):
            blocks.append(frozenset(hat_char(X, SpacePoint(k, i)).id for i in range(b.n)))
        else:
            # every index i is hit by the point i, and the limit point by INF
            assert hat_char(X, SpacePoint(k, INF)).kind == FREE
            blocks.append(FCPoints(cofin(), True))
    return PointSet(A, tuple(blocks))


def t0_separates(X: SpacePresentation, bound: int = 6) -> bool:
    """Do the clopens separate the sampled points (singletons and their complements as probes)?"""
    A = co_algebra(X)
    pts = list(X.points(bound))
    probes = list(A.atoms(bound)) + [A.embed(k, f.top()) for k, f in enumerate(A.factors)]
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if not any(member(x, U) != member(y, U) for U in probes):
                return False
    return True


@dataclass(frozen=True)
class HatMap:
    space: SpacePresentation
    t0_separation: bool

    def __call__(self, x: SpacePoint) -> Character:
        return hat_char(self.space, x)

    def inverse(self, c: Character) -> SpacePoint:
        return unhat(self.space, c)

    @property
    def image(self) -> PointSet:
        return hat_image(self.space)

    @property
    def bijective(self) -> bool:
        return self.t0_separation

    def is_open_onto_image(self, bound: int = 6) -> bool:
        """ĥ(U) = X̂ ∩ s(U) for every probe clopen U, checked on points up to ``bound``.

        Clopens form a base, so this makes ĥ open onto its image.
        """
        X = self.space
        A = co_algebra(X)
        probes = list(A.elements()) if A.is_finite else (
            list(A.atoms(bound)) + [~a for a in A.atoms(bound)] + [A.top(), A.bottom()])
        image = self.image
        for U in probes:
            inside = trace(image, U)
            for p in X.points(bound):
                c = self(p)
                if unhat(X, c) != p or member(p, U) != (c in inside):
                    return False
        return True


def hat_map(X) -> HatMap:
    if isinstance(X, PointSet):
        X = classify(X).space
    return HatMap(X, t0_separates(X))


# -- continuous maps between presented spaces ----------------------------------------

@dataclass(frozen=True)
class SpaceMap:
    """A continuous map, stored in hat coordinates as a point map S(CO(source)) -> S(CO(target))."""

    source: SpacePresentation
    target: SpacePresentation
    hat: PointMap

    @classmethod
    def build(cls, source: SpacePresentation, target: SpacePresentation, parts) -> "SpaceMap":
        """``parts`` per source block: a dict of points, or a ``Rule`` whose values are target points."""
        S, T = co_algebra(source), co_algebra(target)

        def h(p):
            return hat_char(target, p)

        hat_parts = []
        for k, part in enumerate(parts):
            if isinstance(part, Rule):
                d = part.default
                d = Constant(h(d.point)) if isinstance(d, Constant) else d
                hat_parts.append(Rule(frozenset((i, h(v)) for i, v in part.exceptions), d))
            else:
                hat_parts.append({hat_char(source, x): h(v) for x, v in dict(part).items()})
        pm = PointMap.build(hat_image(source), hat_image(target), hat_parts)
        return cls(source, target, pm)

    @classmethod
    def from_function(cls, source: SpacePresentation, target: SpacePresentation,
                      fn: Callable[[SpacePoint], SpacePoint]) -> "SpaceMap":
        if not source.is_finite:
            raise DomainMismatch("from_function needs a finite source")
        parts = [{p: fn(p) for p in source.points() if p.block == k} for k in range(len(source.blocks))]
        return cls.build(source, target, parts)

    @classmethod
    def identity(cls, X: SpacePresentation) -> "SpaceMap":
        return cls(X, X, PointMap.identity(hat_image(X)))

    def __call__(self, x: SpacePoint) -> SpacePoint:
        return unhat(self.target, self.hat(hat_char(self.source, x)))

    def then(self, g: "SpaceMap") -> "SpaceMap":
        if self.target != g.source:
            raise DomainMismatch("maps are not composable")
        return SpaceMap(self.source, g.target, self.hat.then(g.hat))

    def preimage(self, U: Element) -> Element:
        """f⁻¹(U) for a clopen U of the target, as a clopen of the source."""
        from .stone import clopen_element, stone_set
        return clopen_element(self.hat.preimage(stone_set(U)))


def co_map(f: SpaceMap) -> Homomorphism:
    """CO(f): CO(Y) -> CO(X), U -> f⁻¹(U)."""
    S, T = co_algebra(f.source), co_algebra(f.target)
    return Homomorphism(T, S, f.hat.restrict(PointSet.full(S), PointSet.full(T)))


# -- reading a point set of S(A) as a presented space --------------------------------

@dataclass(frozen=True)
class Classified:
    points: PointSet
    space: SpacePresentation
    _labels: tuple  # per block: list of characters (finite) or excluded indices (infinite)

    def to_space(self, x: Character) -> SpacePoint:
        if x not in self.points:
            raise ForeignElement(f"{x!r} is not in {self.points!r}")
        lab = self._labels[x.block]
        if isinstance(lab, tuple):
            return SpacePoint(x.block, lab.index(x))
        if x.kind == FREE:
            return SpacePoint(x.block, INF)
        return SpacePoint(x.block, x.id - sum(1 for e in lab if e < x.id))

    def from_space(self, p: SpacePoint) -> Character:
        if p not in self.space:
            raise ForeignElement(f"{p!r} is not a point of {self.space!r}")
        lab = self._labels[p.block]
        if isinstance(lab, tuple):
            return lab[p.id]
        A = self.points.algebra
        if p.id == INF:
            return Character(A, p.block, FREE)
        j = p.id
        for i in count():
            if i in lab:
                continue
            if j == 0:
                return Character(A, p.block, PRINCIPAL, i)
            j -= 1


def classify(X: PointSet) -> Classified:
    """Block-wise homeomorphism type of a representable subspace of S(A)."""
    A = X.algebra
    blocks, labels = [], []
    for k, (f, b) in enumerate(zip(A.factors, X.blocks)):
        if isinstance(f, FiniteFactor):
            pts = tuple(Character(A, k, ATOM, t) for t in f.atoms if t in b)
        elif not b.principal.cofinite:
            pts = tuple(Character(A, k, PRINCIPAL, i) for i in sorted(b.principal.support))
            if b.free:
                pts += (Character(A, k, FREE),)
        else:
            blocks.append(OnePointCompactification() if b.free else DiscreteCountable())
            labels.append(frozenset(b.principal.support))
            continue
        blocks.append(FiniteDiscrete(len(pts)))
        labels.append(pts)
    return Classified(X, SpacePresentation(tuple(blocks)), tuple(labels))


def stone_iso(X: PointSet) -> PointMap:
    """The bijection S(CO(X)) -> X, read through the classification of X.

    Requires X open-dense-compactified blocks to be unpunctured, so that the
    relabelling of an infinite block is identity-like.
    """
    c = classify(X)
    CO = co_algebra(c.space)
    parts = []
    for k, (b, lab) in enumerate(zip(c.space.blocks, c._labels)):
        if isinstance(lab, tuple):
            parts.append({Character(CO, k, ATOM, j): x for j, x in enumerate(lab)})
        elif lab:
            raise DomainMismatch(f"block {k} misses principals {sorted(lab)}; relabelling is not identity-like")
        else:
            parts.append(Rule(frozenset(), IdentityLike(k)))
    if not c.space.blocks:
        parts = [{}]
    return PointMap.build(hat_image(c.space), X, parts)
