"""Characters, representable point sets of S(A), and their topology.

A point of S(A) is a homomorphism ``A -> 2``.  On a finite block it is
"is atom t below a"; on an FC block it is either "is index i in a"
(principal) or, when the universe is infinite, "is a cofinite" (free).
Every character of a representable algebra has one of these forms.

Point sets are stored block-wise: a set of atom labels for a finite block,
and a finite/cofinite set of principal indices plus a flag for the free
point on an FC block.  In an infinite FC block the principals are isolated
and the free point is the limit of every infinite set of principals, which
is all the topology needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Hashable, Iterable, Iterator

from .algebra import Algebra, Element, FCFactor, FCSet, FiniteFactor, cofin, fin
from .errors import ForeignElement, NotASubset, NotClopen

ATOM = "atom"
PRINCIPAL = "principal"
FREE = "free"

_KIND_RANK = {ATOM: 0, PRINCIPAL: 1, FREE: 2}


@dataclass(frozen=True)
class Character:
    algebra: Algebra
    block: int
    kind: str
    id: Hashable = None

    def __post_init__(self):
        factors = self.algebra.factors
        if not 0 <= self.block < len(factors):
            raise ForeignElement(f"block {self.block} out of range for {self.algebra!r}")
        f = factors[self.block]
        if isinstance(f, FiniteFactor):
            ok = self.kind == ATOM and self.id in f.atoms
        elif self.kind == PRINCIPAL:
            ok = isinstance(self.id, int) and self.id >= 0 and (f.size is None or self.id < f.size)
        else:
            ok = self.kind == FREE and f.is_infinite and self.id is None
        if not ok:
            raise ForeignElement(f"no character {self.kind}:{self.id!r} on block {self.block} of {self.algebra!r}")

    def __call__(self, a: Element) -> int:
        return char_eval(self, a)

    def sort_key(self):
        return (self.block, _KIND_RANK[self.kind], repr(self.id))

    def __repr__(self) -> str:
        if self.kind == FREE:
            label = "free"
        elif self.kind == PRINCIPAL:
            label = f"P{self.id}"
        else:
            label = f"x_{self.id}"
        return f"{label}@{self.block}" if self.algebra.is_product else label


def char_eval(x: Character, a: Element) -> int:
    if not isinstance(a, Element) or a.algebra != x.algebra:
        raise ForeignElement(f"{a!r} is not an element of {x.algebra!r}")
    part = a.parts[x.block]
    if x.kind == ATOM:
        return int(x.id in part)
    if x.kind == PRINCIPAL:
        return int(x.id in part)
    return int(part.cofinite)


def characters(A: Algebra, bound: int | None = None) -> Iterator[Character]:
    """Enumerate Bool(A, 2).

    With ``bound`` the principals of an infinite FC block stop below it and
    the block's free character comes last.  Without it the stream is lazy:
    finite blocks and free characters first, then principals interleaved
    across the infinite blocks.
    """
    infinite = [k for k, f in enumerate(A.factors) if f.is_infinite]

    def finite_part():
        for k, f in enumerate(A.factors):
            if isinstance(f, FiniteFactor):
                for t in f.atoms:
                    yield Character(A, k, ATOM, t)
            elif not f.is_infinite:
                for i in range(f.size):
                    yield Character(A, k, PRINCIPAL, i)

    if bound is not None or not infinite:
        def bounded():
            for k, f in enumerate(A.factors):
                if isinstance(f, FiniteFactor):
                    yield from (Character(A, k, ATOM, t) for t in f.atoms)
                elif not f.is_infinite:
                    yield from (Character(A, k, PRINCIPAL, i) for i in range(f.size))
                else:
                    yield from (Character(A, k, PRINCIPAL, i) for i in range(bound))
                    yield Character(A, k, FREE)
        return bounded()

    def lazy():
        yield from finite_part()
        for k in infinite:
            yield Character(A, k, FREE)
        for i in count():
            for k in infinite:
                yield Character(A, k, PRINCIPAL, i)
    return lazy()


# -- point sets -----------------------------------------------------------------

@dataclass(frozen=True)
class FCPoints:
    """The part of a point set lying in one FC block."""

    principal: FCSet
    free: bool = False

    def __repr__(self) -> str:
        return f"{self.principal!r}{'+free' if self.free else ''}"


def _block_full(f):
    if isinstance(f, FiniteFactor):
        return frozenset(f.atoms)
    return FCPoints(f.top(), f.is_infinite)


def _block_empty(f):
    if isinstance(f, FiniteFactor):
        return frozenset()
    return FCPoints(fin(), False)


def _block_canonical(f, b):
    if isinstance(f, FiniteFactor):
        b = frozenset(b)
        if not b <= frozenset(f.atoms):
            raise ForeignElement(f"{set(b)!r} are not atoms of {f!r}")
        return b
    if not isinstance(b, FCPoints):
        raise ForeignElement(f"{b!r} is not an FC block point set")
    if b.free and not f.is_infinite:
        raise ForeignElement("a finite universe has no free character")
    return FCPoints(f.canonical(b.principal), bool(b.free))


def _block_union(f, x, y):
    if isinstance(f, FiniteFactor):
        return x | y
    return FCPoints(f.join(x.principal, y.principal), x.free or y.free)


def _block_inter(f, x, y):
    if isinstance(f, FiniteFactor):
        return x & y
    return FCPoints(f.meet(x.principal, y.principal), x.free and y.free)


def _block_compl(f, x):
    if isinstance(f, FiniteFactor):
        return frozenset(f.atoms) - x
    return FCPoints(f.complement(x.principal), f.is_infinite and not x.free)


@dataclass(frozen=True)
class PointSet:
    algebra: Algebra
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if len(blocks) != len(self.algebra.factors):
            raise ForeignElement(f"{self.algebra!r} has {len(self.algebra.factors)} blocks")
        object.__setattr__(self, "blocks", tuple(
            _block_canonical(f, b) for f, b in zip(self.algebra.factors, blocks)))

    @classmethod
    def full(cls, A: Algebra) -> "PointSet":
        return cls(A, tuple(_block_full(f) for f in A.factors))

    @classmethod
    def empty(cls, A: Algebra) -> "PointSet":
        return cls(A, tuple(_block_empty(f) for f in A.factors))

    @classmethod
    def of(cls, A: Algebra, points: Iterable[Character]) -> "PointSet":
        blocks = [set() for _ in A.factors]
        frees = [False] * len(A.factors)
        for x in points:
            if x.algebra != A:
                raise ForeignElement(f"{x!r} is not a character of {A!r}")
            if x.kind == FREE:
                frees[x.block] = True
            else:
                blocks[x.block].add(x.id)
        out = []
        for f, b, fr in zip(A.factors, blocks, frees):
            out.append(frozenset(b) if isinstance(f, FiniteFactor) else FCPoints(fin(*b), fr))
        return cls(A, tuple(out))

    def _same(self, other: "PointSet") -> None:
        if not isinstance(other, PointSet) or other.algebra != self.algebra:
            raise ForeignElement(f"{other!r} is not a point set of {self.algebra!r}")

    def __contains__(self, x: Character) -> bool:
        if not isinstance(x, Character) or x.algebra != self.algebra:
            return False
        b = self.blocks[x.block]
        if x.kind == ATOM:
            return x.id in b
        if x.kind == PRINCIPAL:
            return x.id in b.principal
        return b.free

    def __or__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.algebra, tuple(
            _block_union(f, x, y) for f, x, y in zip(self.algebra.factors, self.blocks, other.blocks)))

    def __and__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.algebra, tuple(
            _block_inter(f, x, y) for f, x, y in zip(self.algebra.factors, self.blocks, other.blocks)))

    def complement(self) -> "PointSet":
        return PointSet(self.algebra, tuple(
            _block_compl(f, x) for f, x in zip(self.algebra.factors, self.blocks)))

    def __sub__(self, other: "PointSet") -> "PointSet":
        return self & other.complement()

    def __le__(self, other: "PointSet") -> bool:
        self._same(other)
        return (self - other).is_empty()

    def __lt__(self, other: "PointSet") -> bool:
        return self <= other and self != other

    def is_empty(self) -> bool:
        return self == PointSet.empty(self.algebra)

    def is_finite(self) -> bool:
        return all(isinstance(b, frozenset) or not b.principal.cofinite for b in self.blocks)

    def points(self, bound: int | None = None) -> Iterator[Character]:
        """The characters in the set; ``bound`` caps principal indices in cofinite blocks."""
        return (x for x in characters(self.algebra, bound) if x in self) if bound is not None \
            else self._lazy_points()

    def _lazy_points(self) -> Iterator[Character]:
        if self.is_finite():
            pts = []
            for k, (f, b) in enumerate(zip(self.algebra.factors, self.blocks)):
                if isinstance(f, FiniteFactor):
                    pts.extend(Character(self.algebra, k, ATOM, t) for t in f.atoms if t in b)
                else:
                    pts.extend(Character(self.algebra, k, PRINCIPAL, i) for i in sorted(b.principal.support))
                    if b.free:
                        pts.append(Character(self.algebra, k, FREE))
            return iter(pts)
        return (x for x in characters(self.algebra) if x in self)

    def __len__(self) -> int:
        if not self.is_finite():
            raise ValueError("point set is infinite")
        return sum(len(b) if isinstance(b, frozenset) else len(b.principal.support) + b.free
                   for b in self.blocks)

    def __repr__(self) -> str:
        def show(b):
            return "{" + ",".join(sorted(map(str, b))) + "}" if isinstance(b, frozenset) else repr(b)
        return "PointSet[" + " | ".join(show(b) for b in self.blocks) + "]"


# -- the Stone maps ---------------------------------------------------------------

def stone_set(a: Element) -> PointSet:
    """s_A(a): the characters sending ``a`` to 1."""
    A = a.algebra
    blocks = []
    for f, part in zip(A.factors, a.parts):
        if isinstance(f, FiniteFactor):
            blocks.append(part)
        else:
            blocks.append(FCPoints(part, f.is_infinite and part.cofinite))
    return PointSet(A, tuple(blocks))


def trace(X: PointSet, a: Element) -> PointSet:
    """s_A^X(a) = X ∩ s_A(a)."""
    if a.algebra != X.algebra:
        raise ForeignElement(f"{a!r} is not an element of {X.algebra!r}")
    return X & stone_set(a)


def clopen_element(P: PointSet) -> Element:
    """Inverse of s_A: the element whose Stone set is the clopen ``P``."""
    A = P.algebra
    parts = []
    for f, b in zip(A.factors, P.blocks):
        if isinstance(f, FiniteFactor):
            parts.append(b)
        else:
            if f.is_infinite and b.free != b.principal.cofinite:
                raise NotClopen(f"{P!r} is not clopen in S(A)")
            parts.append(b.principal)
    return Element(A, tuple(parts))


# -- topology --------------------------------------------------------------------------

def _infinite_blocks(X: PointSet):
    for k, f in enumerate(X.algebra.factors):
        if isinstance(f, FCFactor) and f.is_infinite:
            yield k, X.blocks[k]


def is_open(X: PointSet) -> bool:
    return all(b.principal.cofinite or not b.free for _, b in _infinite_blocks(X))


def is_closed(X: PointSet) -> bool:
    return is_open(X.complement())


def is_compact(X: PointSet) -> bool:
    return all(b.free or not b.principal.cofinite for _, b in _infinite_blocks(X))


def closure(X: PointSet) -> PointSet:
    blocks = list(X.blocks)
    for k, b in _infinite_blocks(X):
        if b.principal.cofinite:
            blocks[k] = FCPoints(b.principal, True)
    return PointSet(X.algebra, tuple(blocks))


def interior(X: PointSet) -> PointSet:
    blocks = list(X.blocks)
    for k, b in _infinite_blocks(X):
        if not b.principal.cofinite:
            blocks[k] = FCPoints(b.principal, False)
    return PointSet(X.algebra, tuple(blocks))


def is_dense(X: PointSet) -> bool:
    return closure(X) == PointSet.full(X.algebra)


def is_clopen_in(X: PointSet, U: PointSet) -> bool:
    """Is ``U`` clopen in the subspace ``X`` of S(A)?"""
    if not U <= X:
        raise NotASubset(f"{U!r} is not contained in {X!r}")
    for k, xb in _infinite_blocks(X):
        if not xb.free:
            continue  # subspace block is discrete
        ub = U.blocks[k]
        rest = X.blocks[k].principal
        f = X.algebra.factors[k]
        if ub.free:
            leftover = f.meet(rest, f.complement(ub.principal))
        else:
            leftover = ub.principal
        if leftover.cofinite:
            return False
    return True


def trace_gap(X: PointSet) -> int | None:
    """A block on which CO(X) has clopens that are not traces of elements.

    Traces X ∩ s_A(a) are finite-or-cofinite on each block, so they exhaust
    CO(X) exactly when no block of X is an infinite discrete set, i.e. has
    cofinitely many principals but lacks the free point.
    """
    for k, b in _infinite_blocks(X):
        if b.principal.cofinite and not b.free:
            return k
    return None


@dataclass(frozen=True)
class ResidueClass:
    """Indices congruent to ``residue`` modulo ``modulus``: infinite and coinfinite."""

    modulus: int = 2
    residue: int = 0

    def __post_init__(self):
        if self.modulus < 2 or not 0 <= self.residue < self.modulus:
            raise ValueError("need modulus >= 2 and 0 <= residue < modulus")

    def __contains__(self, i: int) -> bool:
        return i % self.modulus == self.residue

    def describe(self) -> str:
        if (self.modulus, self.residue) == (2, 0):
            return "even indices"
        if (self.modulus, self.residue) == (2, 1):
            return "odd indices"
        return f"indices = {self.residue} mod {self.modulus}"


EVENS = ResidueClass(2, 0)


@dataclass(frozen=True)
class UnrealizedClopen:
    """Symbolic clopen of a subspace that no trace X ∩ s_A(a) equals.

    It is the set of principals of ``block`` in ``points`` whose index lies in
    ``indices``.  The block is infinite and discrete, so every subset of it is
    clopen; this one is infinite and coinfinite, so it cannot be a trace.
    """

    points: PointSet
    block: int
    indices: ResidueClass = EVENS

    def __contains__(self, x: Character) -> bool:
        return x in self.points and x.block == self.block and x.kind == PRINCIPAL and x.id in self.indices

    def describe(self) -> str:
        return (f"any infinite-coinfinite clopen of the trace; e.g. the principals of block "
                f"{self.block} at {self.indices.describe()}")

    def distinguish(self, a: Element) -> Character:
        """A point of the subspace on which this set and X ∩ s_A(a) disagree."""
        A = self.points.algebra
        excluded = self.points.blocks[self.block].principal.support
        part = a.parts[self.block]
        if part.cofinite:
            want_in = False
            start = 0
        else:
            want_in = True
            start = max(part.support, default=-1) + 1
        for i in count(start):
            if i in excluded or (i in self.indices) != want_in:
                continue
            if part.cofinite and i in part.support:
                continue
            x = Character(A, self.block, PRINCIPAL, i)
            assert (x in self) != (x in trace(self.points, a))
            return x
