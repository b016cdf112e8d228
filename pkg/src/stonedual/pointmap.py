"""Continuous maps between representable point sets.

A ``PointMap`` is stored per source block.  Blocks with finitely many source
points get a ``Table``.  A block holding cofinitely many principals of an
infinite FC factor gets a ``Rule``: a finite exception table plus a default
for every other index, either ``Constant(point)`` or ``IdentityLike(k)``
(index i goes to principal i of target block k).  The free point of such a
block goes wherever the default sends the tail, so continuity at the limit
point holds by construction.

Maps are canonicalised on construction (exceptions outside the source or
equal to the default are dropped), so ``==`` is equality of functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Mapping

from .algebra import Algebra, FCFactor, FiniteFactor, cofin, fin
from .errors import DomainMismatch, ForeignElement, NotASubset
from .stone import ATOM, FREE, PRINCIPAL, Character, FCPoints, PointSet


@dataclass(frozen=True)
class Constant:
    point: Character


@dataclass(frozen=True)
class IdentityLike:
    block: int


@dataclass(frozen=True)
class Table:
    pairs: frozenset

    @cached_property
    def mapping(self) -> dict:
        return dict(self.pairs)


@dataclass(frozen=True)
class Rule:
    exceptions: frozenset
    default: Constant | IdentityLike

    @cached_property
    def mapping(self) -> dict:
        return dict(self.exceptions)


def rule(default, exceptions: Mapping[int, Character] | None = None) -> Rule:
    if not isinstance(default, (Constant, IdentityLike)):
        default = Constant(default)
    return Rule(frozenset((exceptions or {}).items()), default)


def _default_at(r: Rule, target: Algebra, i: int) -> Character:
    if isinstance(r.default, Constant):
        return r.default.point
    return Character(target, r.default.block, PRINCIPAL, i)


def _free_image(r: Rule, target: Algebra) -> Character:
    if isinstance(r.default, Constant):
        return r.default.point
    return Character(target, r.default.block, FREE)


def _rule_value(r: Rule, target: Algebra, x: Character) -> Character:
    if x.kind == FREE:
        return _free_image(r, target)
    hit = r.mapping.get(x.id)
    return hit if hit is not None else _default_at(r, target, x.id)


def _block_points_finite(f, b) -> bool:
    return isinstance(f, FiniteFactor) or not b.principal.cofinite


def _finite_block_points(A: Algebra, k: int, b):
    f = A.factors[k]
    if isinstance(f, FiniteFactor):
        return [Character(A, k, ATOM, t) for t in f.atoms if t in b]
    pts = [Character(A, k, PRINCIPAL, i) for i in sorted(b.principal.support)]
    if b.free:
        pts.append(Character(A, k, FREE))
    return pts


@dataclass(frozen=True)
class PointMap:
    source: PointSet
    target: PointSet
    parts: tuple

    @classmethod
    def build(cls, source: PointSet, target: PointSet, parts) -> "PointMap":
        """Validate and canonicalise.

        ``parts`` has one entry per source block: a mapping or ``Table`` keyed
        by characters for blocks with finitely many points, a ``Rule`` for
        blocks with cofinitely many principals.  A ``Rule`` is also accepted
        on a finite block and is expanded there.
        """
        S, T = source.algebra, target.algebra
        parts = tuple(parts)
        if len(parts) != len(S.factors):
            raise DomainMismatch(f"expected {len(S.factors)} block maps, got {len(parts)}")
        out = []
        for k, (f, b, part) in enumerate(zip(S.factors, source.blocks, parts)):
            if isinstance(part, Rule):
                _check_default(part, S, k, T)
            if _block_points_finite(f, b):
                pts = _finite_block_points(S, k, b)
                if isinstance(part, Rule):
                    table = {x: _rule_value(part, T, x) for x in pts}
                else:
                    lookup = part.mapping if isinstance(part, Table) else dict(part)
                    missing = [x for x in pts if x not in lookup]
                    if missing:
                        raise DomainMismatch(f"block map {k} is not defined at {missing[:3]!r}")
                    table = {x: lookup[x] for x in pts}
                out.append(Table(frozenset(table.items())))
            else:
                if not isinstance(part, Rule):
                    raise DomainMismatch(f"block {k} has infinitely many points and needs a Rule")
                kept = {i: v for i, v in part.exceptions
                        if i in b.principal and v != _default_at(part, T, i)}
                out.append(Rule(frozenset(kept.items()), part.default))
        pm = cls(source, target, tuple(out))
        pm._check_image()
        return pm

    @classmethod
    def from_function(cls, source: PointSet, target: PointSet, fn: Callable[[Character], Character]) -> "PointMap":
        if not source.is_finite():
            raise DomainMismatch("from_function needs a finite source; use build() with Rules")
        parts = [{x: fn(x) for x in _finite_block_points(source.algebra, k, b)}
                 for k, b in enumerate(source.blocks)]
        return cls.build(source, target, parts)

    @classmethod
    def identity(cls, X: PointSet) -> "PointMap":
        parts = []
        for k, (f, b) in enumerate(zip(X.algebra.factors, X.blocks)):
            if _block_points_finite(f, b):
                parts.append({x: x for x in _finite_block_points(X.algebra, k, b)})
            else:
                parts.append(Rule(frozenset(), IdentityLike(k)))
        return cls.build(X, X, parts)

    def _check_image(self) -> None:
        T = self.target.algebra
        for k, (b, part) in enumerate(zip(self.source.blocks, self.parts)):
            if isinstance(part, Table):
                bad = [v for _, v in part.pairs if v not in self.target]
            else:
                bad = [v for _, v in part.exceptions if v not in self.target]
                d = part.default
                if isinstance(d, Constant):
                    if d.point not in self.target:
                        bad.append(d.point)
                else:
                    tb = self.target.blocks[d.block]
                    tf = T.factors[d.block]
                    keys = fin(*self.parts[k].mapping)
                    tail = tf.meet(b.principal, tf.complement(keys))
                    if tf.meet(tail, tf.complement(tb.principal)) != tf.bottom():
                        bad.append(f"principals of block {d.block} outside the target")
                    if b.free and not tb.free:
                        bad.append(Character(T, d.block, FREE))
            if bad:
                raise NotASubset(f"image leaves the target set: {bad[:3]!r}")

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x: Character) -> Character:
        if x not in self.source:
            raise ForeignElement(f"{x!r} is not in the source {self.source!r}")
        part = self.parts[x.block]
        if isinstance(part, Table):
            return part.mapping[x]
        return _rule_value(part, self.target.algebra, x)

    def preimage(self, U: PointSet) -> PointSet:
        """f⁻¹(U) as a point set of the source."""
        if U.algebra != self.target.algebra:
            raise ForeignElement(f"{U!r} does not live in {self.target.algebra!r}")
        S, T = self.source.algebra, self.target.algebra
        blocks = []
        for k, (f, b, part) in enumerate(zip(S.factors, self.source.blocks, self.parts)):
            if isinstance(part, Table):
                hits = [x for x, v in part.pairs if v in U]
                if isinstance(f, FiniteFactor):
                    blocks.append(frozenset(x.id for x in hits))
                else:
                    blocks.append(FCPoints(fin(*(x.id for x in hits if x.kind == PRINCIPAL)),
                                           any(x.kind == FREE for x in hits)))
                continue
            keys = frozenset(i for i, _ in part.exceptions)
            good = [i for i, v in part.exceptions if v in U]
            d = part.default
            if isinstance(d, Constant):
                if d.point in U:
                    bad = keys - frozenset(good)
                    pre = FCPoints(cofin(*bad), True)
                else:
                    pre = FCPoints(fin(*good), False)
            else:
                ub = U.blocks[d.block]
                tail = f.meet(ub.principal, f.complement(fin(*keys)))
                pre = FCPoints(f.join(tail, fin(*good)), ub.free)
            blocks.append(FCPoints(f.meet(pre.principal, b.principal), pre.free and b.free))
        return PointSet(S, tuple(blocks))

    # -- categorical structure -------------------------------------------

    def then(self, g: "PointMap") -> "PointMap":
        """``g ∘ self``: apply ``self`` first."""
        if self.target != g.source:
            raise DomainMismatch(f"cannot compose: {self.target!r} is not {g.source!r}")
        T2 = g.target.algebra
        parts = []
        for part in self.parts:
            if isinstance(part, Table):
                parts.append({x: g(v) for x, v in part.pairs})
                continue
            exc = {i: g(v) for i, v in part.exceptions}
            d = part.default
            if isinstance(d, Constant):
                parts.append(Rule(frozenset(exc.items()), Constant(g(d.point))))
                continue
            inner = g.parts[d.block]
            if isinstance(inner, Table):
                # the tail lands in finitely many points, impossible after _check_image
                raise DomainMismatch("identity-like tail maps into a finite block")
            for i, v in inner.exceptions:
                exc.setdefault(i, v)
            parts.append(Rule(frozenset(exc.items()), inner.default))
        return PointMap.build(self.source, g.target, parts)

    def restrict(self, source: PointSet | None = None, target: PointSet | None = None) -> "PointMap":
        source = self.source if source is None else source
        target = self.target if target is None else target
        if not source <= self.source:
            raise NotASubset(f"{source!r} is not inside {self.source!r}")
        return PointMap.build(source, target, self.parts)

    def inverse(self) -> "PointMap":
        """Inverse of a bijection ``source -> target``."""
        S, T = self.source.algebra, self.target.algebra
        explicit: dict[Character, Character] = {}
        tails: dict[int, int] = {}
        for k, part in enumerate(self.parts):
            if isinstance(part, Table):
                pairs = part.pairs
            else:
                pairs = [(Character(S, k, PRINCIPAL, i), v) for i, v in part.exceptions]
                if isinstance(part.default, IdentityLike):
                    if part.default.block in tails:
                        raise ValueError("two blocks share an identity-like target: not injective")
                    tails[part.default.block] = k
                else:
                    raise ValueError("a constant tail is not injective")
            for x, v in pairs:
                if v in explicit:
                    raise ValueError(f"{v!r} has two preimages: not injective")
                explicit[v] = x
        parts = []
        for j, (f, b) in enumerate(zip(T.factors, self.target.blocks)):
            if _block_points_finite(f, b):
                pts = _finite_block_points(T, j, b)
                table = {}
                for y in pts:
                    if y in explicit:
                        table[y] = explicit[y]
                    elif j in tails and y.kind == PRINCIPAL:
                        table[y] = Character(S, tails[j], PRINCIPAL, y.id)
                    elif j in tails and y.kind == FREE:
                        table[y] = Character(S, tails[j], FREE)
                    else:
                        raise ValueError(f"{y!r} has no preimage: not surjective")
                parts.append(table)
            else:
                if j not in tails:
                    raise ValueError(f"block {j} of the target is not covered: not surjective")
                exc = {y.id: x for y, x in explicit.items() if y.block == j and y.kind == PRINCIPAL}
                parts.append(Rule(frozenset(exc.items()), IdentityLike(tails[j])))
        inv = PointMap.build(self.target, self.source, parts)
        if self.then(inv) != PointMap.identity(self.source) or inv.then(self) != PointMap.identity(self.target):
            raise ValueError("map is not a bijection")
        return inv

    def is_bijective(self) -> bool:
        try:
            self.inverse()
        except (ValueError, DomainMismatch, NotASubset):
            return False
        return True

    def explicit_indices(self) -> set[int]:
        """Every principal index mentioned anywhere in the representation."""
        out: set[int] = set()
        chars: list[Character] = []
        for part in self.parts:
            if isinstance(part, Table):
                for x, v in part.pairs:
                    chars += [x, v]
            else:
                out.update(i for i, _ in part.exceptions)
                chars += [v for _, v in part.exceptions]
                if isinstance(part.default, Constant):
                    chars.append(part.default.point)
        out.update(c.id for c in chars if c.kind == PRINCIPAL)
        for X in (self.source, self.target):
            for b in X.blocks:
                if isinstance(b, FCPoints):
                    out.update(b.principal.support)
        return out

    def sample_points(self, margin: int = 4) -> list[Character]:
        """Source points covering every exception plus ``margin`` tail indices."""
        if self.source.is_finite():
            return list(self.source.points())
        bound = max(self.explicit_indices(), default=-1) + 1 + margin
        return list(self.source.points(bound))


def _check_default(r: Rule, S: Algebra, k: int, T: Algebra) -> None:
    d = r.default
    if isinstance(d, IdentityLike):
        sf = S.factors[k]
        if not (0 <= d.block < len(T.factors)):
            raise DomainMismatch(f"identity-like default names missing block {d.block}")
        tf = T.factors[d.block]
        if not (isinstance(sf, FCFactor) and isinstance(tf, FCFactor) and sf.size == tf.size):
            raise DomainMismatch("identity-like defaults need FC blocks over the same universe")
    elif isinstance(d, Constant):
        if d.point.algebra != T:
            raise ForeignElement(f"{d.point!r} is not a character of {T!r}")
    else:
        raise DomainMismatch(f"unknown default {d!r}")
