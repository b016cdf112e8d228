"""Boolean homomorphisms, stored by their dual point map.

A homomorphism ``phi: A -> B`` is kept as the continuous map
``S(B) -> S(A), y -> y∘phi``.  Applying it to ``a`` returns the element of
B whose Stone set is the preimage of ``s_A(a)``; composition is composition
of the dual maps in the opposite order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .algebra import Algebra, Element, FCFactor, FiniteFactor
from .errors import DomainMismatch, FiniteBackendOnly, ForeignElement
from .pointmap import Constant, PointMap, Rule
from .stone import ATOM, PRINCIPAL, Character, PointSet, characters, clopen_element, stone_set


@dataclass(frozen=True)
class Homomorphism:
    domain: Algebra
    codomain: Algebra
    dual: PointMap

    def __post_init__(self):
        if self.dual.source != PointSet.full(self.codomain) or self.dual.target != PointSet.full(self.domain):
            raise DomainMismatch("dual map must go from S(codomain) to S(domain)")

    def __call__(self, a: Element) -> Element:
        return hom_apply(self, a)

    def __matmul__(self, other: "Homomorphism") -> "Homomorphism":
        return hom_compose(self, other)

    @classmethod
    def from_dual(cls, domain: Algebra, codomain: Algebra, parts) -> "Homomorphism":
        pm = PointMap.build(PointSet.full(codomain), PointSet.full(domain), parts)
        return cls(domain, codomain, pm)

    @classmethod
    def from_table(cls, domain: Algebra, codomain: Algebra, table: Mapping[Element, Element]) -> "Homomorphism":
        """Recover the dual map from a full value table on a finite domain."""
        if not is_homomorphism(domain, codomain, table):
            raise DomainMismatch("table does not preserve the Boolean operations")
        atoms = list(domain.atoms())
        images = {t: table[t] for t in atoms}
        parts = []
        for k, f in enumerate(codomain.factors):
            if isinstance(f, FiniteFactor) or not f.is_infinite:
                pts = [y for y in characters(codomain) if y.block == k]
                parts.append({y: _atom_under(domain, images, y) for y in pts})
                continue
            # exactly one atom's image is cofinite on this block
            cof = [t for t in atoms if images[t].parts[k].cofinite]
            exc = {}
            for t in atoms:
                if not images[t].parts[k].cofinite:
                    for i in images[t].parts[k].support:
                        exc[i] = _char_of_atom(domain, t)
            parts.append(Rule(frozenset(exc.items()), Constant(_char_of_atom(domain, cof[0]))))
        return cls.from_dual(domain, codomain, parts)


def _char_of_atom(A: Algebra, t: Element) -> Character:
    for k, (f, part) in enumerate(zip(A.factors, t.parts)):
        if part and (isinstance(f, FiniteFactor) or part.support):
            if isinstance(f, FiniteFactor):
                (label,) = part
                return Character(A, k, ATOM, label)
            (i,) = part.support
            return Character(A, k, PRINCIPAL, i)
    raise ValueError(f"{t!r} is not an atom")


def _atom_under(A: Algebra, images: dict, y: Character) -> Character:
    hits = [t for t, img in images.items() if y(img)]
    if len(hits) != 1:
        raise DomainMismatch(f"{y!r} lies under {len(hits)} atom images")
    return _char_of_atom(A, hits[0])


def hom_apply(phi: Homomorphism, a: Element) -> Element:
    if not isinstance(a, Element) or a.algebra != phi.domain:
        raise ForeignElement(f"{a!r} is not an element of {phi.domain!r}")
    return clopen_element(phi.dual.preimage(stone_set(a)))


def hom_compose(psi: Homomorphism, phi: Homomorphism) -> Homomorphism:
    """``psi ∘ phi``."""
    if phi.codomain != psi.domain:
        raise DomainMismatch(f"codomain {phi.codomain!r} is not domain {psi.domain!r}")
    return Homomorphism(phi.domain, psi.codomain, psi.dual.then(phi.dual))


def hom_identity(A: Algebra) -> Homomorphism:
    return Homomorphism(A, A, PointMap.identity(PointSet.full(A)))


def dual_point_map(phi: Homomorphism) -> PointMap:
    return phi.dual


def hom_inverse(phi: Homomorphism) -> Homomorphism:
    return Homomorphism(phi.codomain, phi.domain, phi.dual.inverse())


def value_table(phi: Homomorphism) -> dict:
    if not phi.domain.is_finite:
        raise FiniteBackendOnly("value tables need a finite domain")
    return {a: phi(a) for a in phi.domain.elements()}


def check_table(A: Algebra, B: Algebra, table: Mapping) -> tuple[bool, str]:
    """Exhaustive check that ``table`` is a Boolean homomorphism, with a reason on failure."""
    if not A.is_finite:
        raise FiniteBackendOnly("homomorphism tables need a finite domain")
    elems = list(A.elements())
    for a in elems:
        if a not in table:
            return False, f"table undefined at {a!r}"
        v = table[a]
        if not isinstance(v, Element) or v.algebra != B:
            return False, f"value {v!r} at {a!r} is not in the codomain"
    if table[A.bottom()] != B.bottom():
        return False, "0 is not sent to 0"
    if table[A.top()] != B.top():
        return False, "1 is not sent to 1"
    for a in elems:
        if table[~a] != ~table[a]:
            return False, f"complement not preserved at {a!r}"
        for b in elems:
            if table[a & b] != table[a] & table[b]:
                return False, f"meet not preserved at ({a!r}, {b!r})"
            if table[a | b] != table[a] | table[b]:
                return False, f"join not preserved at ({a!r}, {b!r})"
    return True, ""


def is_homomorphism(A: Algebra, B: Algebra, table: Mapping) -> bool:
    return check_table(A, B, table)[0]


def all_homomorphisms(A: Algebra, B: Algebra) -> Iterator[Homomorphism]:
    """Every homomorphism between finite algebras, one per map S(B) -> S(A)."""
    if not (A.is_finite and B.is_finite):
        raise FiniteBackendOnly("enumeration of homomorphisms needs finite algebras")
    src = list(characters(B))
    tgt = list(characters(A))
    for images in product(tgt, repeat=len(src)):
        parts = [dict() for _ in B.factors]
        for y, x in zip(src, images):
            parts[y.block][y] = x
        yield Homomorphism.from_dual(A, B, parts)
