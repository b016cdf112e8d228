"""Representable Boolean algebras and their elements.

Three backends are supported:

* ``FiniteFactor``: the powerset of a finite, ordered list of atom labels.
  The empty list gives the degenerate algebra in which ``0 == 1``.
* ``FCFactor``: finite and cofinite subsets of a countable index set, either
  the naturals (``size=None``) or ``range(size)``.
* flat products of the two.

Every algebra is an ``Algebra`` holding a tuple of factors; a non-product
algebra simply has one factor.  Elements carry their owning algebra and one
canonical part per factor, so structural equality is element equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, count, product
from typing import Hashable, Iterable, Iterator

from .errors import EnumerationUnsupported, ForeignElement, MalformedDescriptor


@dataclass(frozen=True)
class FCSet:
    """A finite (``cofinite=False``) or cofinite subset of an index set.

    ``support`` lists the members of a finite set, or the excluded indices of
    a cofinite one.
    """

    cofinite: bool
    support: frozenset

    def __contains__(self, i) -> bool:
        return (i not in self.support) if self.cofinite else (i in self.support)

    def __repr__(self) -> str:
        body = ",".join(str(i) for i in sorted(self.support))
        return f"{'cofin' if self.cofinite else 'fin'}{{{body}}}"


def fin(*indices: int) -> FCSet:
    return FCSet(False, frozenset(indices))


def cofin(*indices: int) -> FCSet:
    return FCSet(True, frozenset(indices))


def _powerset(items) -> Iterator[frozenset]:
    items = list(items)
    return (frozenset(c) for c in chain.from_iterable(
        combinations(items, r) for r in range(len(items) + 1)))


@dataclass(frozen=True)
class FiniteFactor:
    atoms: tuple

    kind = "finite"

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        try:
            distinct = len(set(self.atoms))
        except TypeError as exc:
            raise MalformedDescriptor(f"atom labels must be hashable: {exc}") from None
        if distinct != len(self.atoms):
            raise MalformedDescriptor(f"duplicate atom labels in {list(self.atoms)!r}")

    @property
    def is_infinite(self) -> bool:
        return False

    def top(self) -> frozenset:
        return frozenset(self.atoms)

    def bottom(self) -> frozenset:
        return frozenset()

    def canonical(self, part) -> frozenset:
        if isinstance(part, FCSet):
            raise ForeignElement(f"{part!r} is not a subset of atoms {list(self.atoms)!r}")
        try:
            part = frozenset(part)
        except TypeError:
            raise ForeignElement(f"{part!r} is not a set of atoms") from None
        if not part <= frozenset(self.atoms):
            raise ForeignElement(f"{set(part)!r} is not a subset of atoms {list(self.atoms)!r}")
        return part

    def meet(self, x, y):
        return x & y

    def join(self, x, y):
        return x | y

    def complement(self, x):
        return frozenset(self.atoms) - x

    def atom_parts(self, bound=None) -> Iterator[frozenset]:
        return (frozenset([t]) for t in self.atoms)

    def parts(self) -> Iterator[frozenset]:
        return _powerset(self.atoms)

    def is_finite_part(self, x) -> bool:
        return True


@dataclass(frozen=True)
class FCFactor:
    size: int | None = None

    kind = "fc"

    def __post_init__(self):
        if self.size is not None and (not isinstance(self.size, int) or self.size < 0):
            raise MalformedDescriptor(f"finite universe size must be a non-negative int, got {self.size!r}")

    @property
    def is_infinite(self) -> bool:
        return self.size is None

    def universe(self) -> frozenset:
        if self.size is None:
            raise EnumerationUnsupported("the universe of FC(nat) is infinite")
        return frozenset(range(self.size))

    def top(self) -> FCSet:
        return cofin() if self.size is None else FCSet(False, self.universe())

    def bottom(self) -> FCSet:
        return fin()

    def canonical(self, part) -> FCSet:
        if not isinstance(part, FCSet):
            if isinstance(part, tuple) and len(part) == 2 and part[0] in ("finite", "cofinite"):
                part = FCSet(part[0] == "cofinite", frozenset(part[1]))
            else:
                raise ForeignElement(f"{part!r} is not a finite/cofinite index set")
        support = frozenset(part.support)
        for i in support:
            if not isinstance(i, int) or isinstance(i, bool) or i < 0:
                raise ForeignElement(f"index {i!r} is not a natural number")
            if self.size is not None and i >= self.size:
                raise ForeignElement(f"index {i} outside universe of size {self.size}")
        if part.cofinite and self.size is not None:
            return FCSet(False, self.universe() - support)
        return FCSet(part.cofinite, support)

    def meet(self, x: FCSet, y: FCSet) -> FCSet:
        if not x.cofinite and not y.cofinite:
            return FCSet(False, x.support & y.support)
        if x.cofinite and y.cofinite:
            return FCSet(True, x.support | y.support)
        f, c = (x, y) if not x.cofinite else (y, x)
        return FCSet(False, f.support - c.support)

    def join(self, x: FCSet, y: FCSet) -> FCSet:
        return self.complement(self.meet(self.complement(x), self.complement(y)))

    def complement(self, x: FCSet) -> FCSet:
        if self.size is not None:
            return FCSet(False, self.universe() - x.support)
        return FCSet(not x.cofinite, x.support)

    def atom_parts(self, bound=None) -> Iterator[FCSet]:
        if self.size is not None:
            indices = range(self.size)
        elif bound is not None:
            indices = range(bound)
        else:
            indices = count()
        return (fin(i) for i in indices)

    def parts(self) -> Iterator[FCSet]:
        if self.size is None:
            raise EnumerationUnsupported("FC(nat) has infinitely many elements")
        return (FCSet(False, s) for s in _powerset(range(self.size)))

    def is_finite_part(self, x: FCSet) -> bool:
        return not x.cofinite


Factor = FiniteFactor | FCFactor


@dataclass(frozen=True)
class Algebra:
    """A validated representable Boolean algebra."""

    factors: tuple
    is_product: bool = False

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise MalformedDescriptor("an algebra needs at least one factor")
        if not self.is_product and len(self.factors) != 1:
            raise MalformedDescriptor("a non-product algebra has exactly one factor")
        for f in self.factors:
            if not isinstance(f, (FiniteFactor, FCFactor)):
                raise MalformedDescriptor(f"{f!r} is not a Finite or FiniteCofinite factor")

    def __repr__(self) -> str:
        def show(f):
            if isinstance(f, FiniteFactor):
                return "Finite[" + ",".join(map(str, f.atoms)) + "]"
            return "FC(nat)" if f.size is None else f"FC({f.size})"
        inner = " x ".join(show(f) for f in self.factors)
        return f"Product({inner})" if self.is_product else inner

    # -- elements ---------------------------------------------------------

    def element(self, *parts) -> "Element":
        if len(parts) != len(self.factors):
            raise ForeignElement(f"{self!r} expects {len(self.factors)} parts, got {len(parts)}")
        return Element(self, tuple(f.canonical(p) for f, p in zip(self.factors, parts)))

    def check(self, *elements: "Element") -> None:
        for e in elements:
            if not isinstance(e, Element) or e.algebra != self:
                raise ForeignElement(f"{e!r} is not an element of {self!r}")

    def top(self) -> "Element":
        return Element(self, tuple(f.top() for f in self.factors))

    def bottom(self) -> "Element":
        return Element(self, tuple(f.bottom() for f in self.factors))

    def meet(self, a: "Element", b: "Element") -> "Element":
        self.check(a, b)
        return Element(self, tuple(f.meet(x, y) for f, x, y in zip(self.factors, a.parts, b.parts)))

    def join(self, a: "Element", b: "Element") -> "Element":
        self.check(a, b)
        return Element(self, tuple(f.join(x, y) for f, x, y in zip(self.factors, a.parts, b.parts)))

    def complement(self, a: "Element") -> "Element":
        self.check(a)
        return Element(self, tuple(f.complement(x) for f, x in zip(self.factors, a.parts)))

    def leq(self, a: "Element", b: "Element") -> bool:
        return self.meet(a, b) == a

    def is_zero(self, a: "Element") -> bool:
        self.check(a)
        return a == self.bottom()

    def equal(self, a: "Element", b: "Element") -> bool:
        self.check(a, b)
        return a == b

    def join_all(self, elements: Iterable["Element"]) -> "Element":
        out = self.bottom()
        for e in elements:
            out = self.join(out, e)
        return out

    def meet_all(self, elements: Iterable["Element"]) -> "Element":
        out = self.top()
        for e in elements:
            out = self.meet(out, e)
        return out

    def embed(self, block: int, part) -> "Element":
        """The element that is ``part`` on ``block`` and zero elsewhere."""
        parts = [f.bottom() for f in self.factors]
        parts[block] = self.factors[block].canonical(part)
        return Element(self, tuple(parts))

    # -- enumeration ------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return not any(f.is_infinite for f in self.factors)

    @property
    def is_degenerate(self) -> bool:
        return self.top() == self.bottom()

    def atoms(self, bound: int | None = None) -> Iterator["Element"]:
        """Atoms, tagged by block.  Infinite FC blocks need ``bound`` to stop."""
        infinite = [k for k, f in enumerate(self.factors) if f.is_infinite]
        if bound is None and len(infinite) > 0:
            def stream():
                for k, f in enumerate(self.factors):
                    if not f.is_infinite:
                        for p in f.atom_parts():
                            yield self.embed(k, p)
                for i in count():
                    for k in infinite:
                        yield self.embed(k, fin(i))
            return stream()
        return (self.embed(k, p) for k, f in enumerate(self.factors) for p in f.atom_parts(bound))

    def elements(self) -> Iterator["Element"]:
        if not self.is_finite:
            raise EnumerationUnsupported(f"{self!r} has infinitely many elements")
        return (Element(self, parts) for parts in product(*(f.parts() for f in self.factors)))

    def __len__(self) -> int:
        if not self.is_finite:
            raise EnumerationUnsupported(f"{self!r} has infinitely many elements")
        n = 1
        for f in self.factors:
            n *= 2 ** (len(f.atoms) if isinstance(f, FiniteFactor) else f.size)
        return n


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    parts: tuple

    def __and__(self, other: "Element") -> "Element":
        return self.algebra.meet(self, other)

    def __or__(self, other: "Element") -> "Element":
        return self.algebra.join(self, other)

    def __invert__(self) -> "Element":
        return self.algebra.complement(self)

    def __le__(self, other: "Element") -> bool:
        return self.algebra.leq(self, other)

    def __repr__(self) -> str:
        def show(p):
            if isinstance(p, FCSet):
                return repr(p)
            return "{" + ",".join(sorted(map(str, p))) + "}"
        shown = [show(p) for p in self.parts]
        return f"({', '.join(shown)})" if self.algebra.is_product else shown[0]


# -- constructors -----------------------------------------------------------

def finite_algebra(atoms: Iterable[Hashable]) -> Algebra:
    return Algebra((FiniteFactor(tuple(atoms)),))


def fc_algebra(size: int | None = None) -> Algebra:
    return Algebra((FCFactor(size),))


def product_algebra(*algebras: Algebra) -> Algebra:
    if not algebras:
        raise MalformedDescriptor("a product needs at least one factor")
    for a in algebras:
        if not isinstance(a, Algebra):
            raise MalformedDescriptor(f"{a!r} is not an algebra")
        if a.is_product:
            raise MalformedDescriptor("nested products are not allowed; list the factors flat")
    return Algebra(tuple(a.factors[0] for a in algebras), is_product=True)


def make_algebra(d) -> Algebra:
    """Build an algebra from its JSON-style descriptor (a dict) or pass one through."""
    if isinstance(d, Algebra):
        return d
    if not isinstance(d, dict) or "kind" not in d:
        raise MalformedDescriptor(f"algebra descriptor must be an object with a 'kind': {d!r}")
    kind = d["kind"]
    if kind == "finite":
        atoms = d.get("atoms")
        if not isinstance(atoms, list):
            raise MalformedDescriptor("finite algebra needs an 'atoms' list")
        return finite_algebra(atoms)
    if kind == "fc":
        universe = d.get("universe", "nat")
        if universe == "nat":
            return fc_algebra()
        if isinstance(universe, int) and not isinstance(universe, bool):
            return fc_algebra(universe)
        raise MalformedDescriptor(f"unknown FC universe {universe!r}")
    if kind == "product":
        factors = d.get("factors")
        if not isinstance(factors, list) or not factors:
            raise MalformedDescriptor("product needs a nonempty 'factors' list")
        for f in factors:
            if isinstance(f, dict) and f.get("kind") == "product":
                raise MalformedDescriptor("nested products are not allowed")
        return product_algebra(*(make_algebra(f) for f in factors))
    raise MalformedDescriptor(f"unknown algebra kind {kind!r}")
