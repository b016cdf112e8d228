"""JSON forms of every object, with ``to_json``/``from_json`` round trips.

Typed documents carry a ``"type"`` tag.  Bare algebra and space descriptors
are also accepted, since their shape identifies them.
"""
from __future__ import annotations

import json

from .algebra import Algebra, Element, FCFactor, FCSet, FiniteFactor, make_algebra
from .errors import (DomainMismatch, FiniteSupportOnNonFcBlock, ForeignElement, MalformedDescriptor,
                     NotClopen, ParseError, StoneError, ValidationError)
from .functors import DzAlgebra, DzMorphism, LbaMorphism
from .homs import Homomorphism
from .ideals import FINITE_SUPPORT, Ideal, LbaPair, lba_pair
from .mbool import MzMap, mz_from_table
from .pointmap import Constant, IdentityLike, PointMap, Rule, Table
from .spaces import (INF, DiscreteCountable, FiniteDiscrete, OnePointCompactification, SpaceMap,
                     SpacePoint, SpacePresentation, hat_image)
from .stone import ATOM, FREE, PRINCIPAL, Character, FCPoints, PointSet


# -- algebra and elements ------------------------------------------------------------------

def algebra_json(A: Algebra) -> dict:
    def one(f):
        if isinstance(f, FiniteFactor):
            return {"kind": "finite", "atoms": list(f.atoms)}
        return {"kind": "fc", "universe": "nat" if f.size is None else f.size}
    if A.is_product:
        return {"kind": "product", "factors": [one(f) for f in A.factors]}
    return one(A.factors[0])


def _part_json(f, part):
    if isinstance(f, FiniteFactor):
        return {"atoms": [t for t in f.atoms if t in part]}
    return {"mode": "cofinite" if part.cofinite else "finite", "support": sorted(part.support)}


def _part_parse(f, d):
    if not isinstance(d, dict):
        raise MalformedDescriptor(f"element part must be an object, got {d!r}")
    if isinstance(f, FiniteFactor):
        if "atoms" not in d:
            raise MalformedDescriptor("finite element needs 'atoms'")
        return f.canonical(frozenset(d["atoms"]))
    if d.get("mode") not in ("finite", "cofinite") or not isinstance(d.get("support"), list):
        raise MalformedDescriptor("FC element needs 'mode' (finite|cofinite) and a 'support' list")
    return f.canonical((d["mode"], d["support"]))


def element_json(a: Element) -> dict:
    A = a.algebra
    if A.is_product:
        return {"tuple": [_part_json(f, p) for f, p in zip(A.factors, a.parts)]}
    return _part_json(A.factors[0], a.parts[0])


def element_parse(A: Algebra, d) -> Element:
    if A.is_product:
        if not isinstance(d, dict) or not isinstance(d.get("tuple"), list) or len(d["tuple"]) != len(A.factors):
            raise MalformedDescriptor(f"product element needs a 'tuple' of {len(A.factors)} parts")
        return Element(A, tuple(_part_parse(f, p) for f, p in zip(A.factors, d["tuple"])))
    return Element(A, (_part_parse(A.factors[0], d),))


# -- characters and point sets -------------------------------------------------------------

def character_json(x: Character) -> dict:
    return {"block": x.block, "kind": x.kind, "id": x.id}


def character_parse(A: Algebra, d) -> Character:
    if not isinstance(d, dict) or "block" not in d or "kind" not in d:
        raise MalformedDescriptor(f"character needs 'block' and 'kind': {d!r}")
    return Character(A, d["block"], d["kind"], d.get("id"))


def pointset_json(X: PointSet) -> dict:
    blocks = []
    for f, b in zip(X.algebra.factors, X.blocks):
        if isinstance(f, FiniteFactor):
            blocks.append({"mode": "finite", "set": [t for t in f.atoms if t in b], "free": False})
        else:
            p = b.principal
            blocks.append({"mode": "cofinite" if p.cofinite else "finite",
                           "set": sorted(p.support), "free": b.free})
    return {"blocks": blocks}


def pointset_parse(A: Algebra, d) -> PointSet:
    if not isinstance(d, dict) or not isinstance(d.get("blocks"), list) or len(d["blocks"]) != len(A.factors):
        raise MalformedDescriptor(f"point set needs 'blocks', one per factor of {A!r}")
    out = []
    for f, b in zip(A.factors, d["blocks"]):
        mode, pts, free = b.get("mode", "finite"), b.get("set", []), bool(b.get("free", False))
        if isinstance(f, FiniteFactor):
            if mode != "finite" or free:
                raise MalformedDescriptor("finite blocks hold a finite set of atoms and no free point")
            out.append(frozenset(f.canonical(frozenset(pts))))
        else:
            if free and not f.is_infinite:
                raise MalformedDescriptor("no free point over a finite universe")
            out.append(FCPoints(f.canonical((mode, pts)), free))
    return PointSet(A, tuple(out))


# -- ideals and spaces ---------------------------------------------------------------------

def ideal_json(I: Ideal) -> dict:
    A = I.algebra
    kind = I.kind
    if kind == "full":
        return {"kind": "full"}
    if kind == "principal":
        return {"kind": "principal", "gen": element_json(I.generator)}
    if kind == "finite-support":
        return {"kind": "finite-support", "block": [k for k, p in enumerate(I.parts) if p == FINITE_SUPPORT]}
    return {"kind": "product", "blocks": [
        {"kind": "finite-support"} if p == FINITE_SUPPORT else {"kind": "principal", "gen": _part_json(f, p)}
        for f, p in zip(A.factors, I.parts)]}


def ideal_parse(A: Algebra, d) -> Ideal:
    if not isinstance(d, dict) or "kind" not in d:
        raise MalformedDescriptor(f"ideal needs a 'kind': {d!r}")
    kind = d["kind"]
    if kind == "full":
        return Ideal(A, tuple(f.top() for f in A.factors))
    if kind == "principal":
        return Ideal(A, element_parse(A, d.get("gen")).parts)
    if kind == "finite-support":
        blocks = d.get("block", 0)
        blocks = {blocks} if isinstance(blocks, int) else set(blocks)
        for k in blocks:
            if not (isinstance(k, int) and 0 <= k < len(A.factors)):
                raise FiniteSupportOnNonFcBlock(f"block {k!r} does not exist in {A!r}")
        return Ideal(A, tuple(FINITE_SUPPORT if k in blocks else f.top() for k, f in enumerate(A.factors)))
    if kind == "product":
        bl = d.get("blocks")
        if not isinstance(bl, list) or len(bl) != len(A.factors):
            raise MalformedDescriptor("product ideal needs one entry per block")
        parts = []
        for f, b in zip(A.factors, bl):
            if b.get("kind") == "finite-support":
                parts.append(FINITE_SUPPORT)
            elif b.get("kind") == "full":
                parts.append(f.top())
            else:
                parts.append(_part_parse(f, b.get("gen")))
        return Ideal(A, tuple(parts))
    raise MalformedDescriptor(f"unknown ideal kind {kind!r}")


_SPACE_KINDS = {"finite": FiniteDiscrete, "k-omega": OnePointCompactification, "discrete-omega": DiscreteCountable}


def space_json(X: SpacePresentation) -> dict:
    out = []
    for b in X.blocks:
        if isinstance(b, FiniteDiscrete):
            out.append({"kind": "finite", "n": b.n})
        else:
            out.append({"kind": b.kind})
    return {"blocks": out}


def space_parse(d) -> SpacePresentation:
    if not isinstance(d, dict) or not isinstance(d.get("blocks"), list):
        raise MalformedDescriptor(f"space needs a 'blocks' list: {d!r}")
    out = []
    for b in d["blocks"]:
        kind = b.get("kind") if isinstance(b, dict) else None
        if kind == "finite":
            n = b.get("n")
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise MalformedDescriptor("finite space block needs a non-negative 'n'")
            out.append(FiniteDiscrete(n))
        elif kind in _SPACE_KINDS:
            out.append(_SPACE_KINDS[kind]())
        else:
            raise MalformedDescriptor(f"unknown space block {b!r}")
    return SpacePresentation(tuple(out))


def space_point_json(p: SpacePoint) -> dict:
    return {"block": p.block, "id": "inf" if p.id == INF else p.id}


# -- maps -------------------------------------------------------------------------------------

def pointmap_json(f: PointMap) -> dict:
    parts = []
    for part in f.parts:
        if isinstance(part, Table):
            pairs = sorted(part.pairs, key=lambda kv: kv[0].sort_key())
            parts.append({"table": [[character_json(x), character_json(y)] for x, y in pairs]})
        else:
            d = part.default
            default = ({"constant": character_json(d.point)} if isinstance(d, Constant)
                       else {"identity-like": d.block})
            exc = sorted(part.exceptions, key=lambda kv: kv[0])
            parts.append({"exceptions": [[i, character_json(y)] for i, y in exc], "default": default})
    return {"source": pointset_json(f.source), "target": pointset_json(f.target), "parts": parts}


def pointmap_parse(S: Algebra, T: Algebra, d) -> PointMap:
    src, tgt = pointset_parse(S, d["source"]), pointset_parse(T, d["target"])
    parts = []
    for p in d["parts"]:
        if "table" in p:
            parts.append({character_parse(S, x): character_parse(T, y) for x, y in p["table"]})
        else:
            dd = p["default"]
            default = (Constant(character_parse(T, dd["constant"])) if "constant" in dd
                       else IdentityLike(dd["identity-like"]))
            parts.append(Rule(frozenset((i, character_parse(T, y)) for i, y in p["exceptions"]), default))
    return PointMap.build(src, tgt, parts)


def hom_json(phi: Homomorphism) -> dict:
    return {"domain": algebra_json(phi.domain), "codomain": algebra_json(phi.codomain),
            "dual": pointmap_json(phi.dual)["parts"]}


def hom_parse(d) -> Homomorphism:
    A, B = make_algebra(d["domain"]), make_algebra(d["codomain"])
    pm = pointmap_parse(B, A, {"source": pointset_json(PointSet.full(B)),
                               "target": pointset_json(PointSet.full(A)), "parts": d["dual"]})
    return Homomorphism(A, B, pm)


def _label_json(y):
    return {"character": character_json(y)} if isinstance(y, Character) else y


def _label_parse(A: Algebra, y):
    return character_parse(A, y["character"]) if isinstance(y, dict) and "character" in y else y


# -- typed documents -----------------------------------------------------------------------

def to_json(obj) -> dict:
    if isinstance(obj, Algebra):
        return {"type": "algebra", **algebra_json(obj)}
    if isinstance(obj, Element):
        return {"type": "element", "algebra": algebra_json(obj.algebra), "element": element_json(obj)}
    if isinstance(obj, Character):
        return {"type": "character", "algebra": algebra_json(obj.algebra), **character_json(obj)}
    if isinstance(obj, PointSet):
        return {"type": "pointset", "algebra": algebra_json(obj.algebra), **pointset_json(obj)}
    if isinstance(obj, Ideal):
        return {"type": "ideal", "algebra": algebra_json(obj.algebra), "ideal": ideal_json(obj)}
    if isinstance(obj, LbaPair):
        return {"type": "lba", "algebra": algebra_json(obj.algebra), "ideal": ideal_json(obj.ideal)}
    if isinstance(obj, DzAlgebra):
        return {"type": "dz", "algebra": algebra_json(obj.algebra), "points": pointset_json(obj.points),
                "level": obj.level}
    if isinstance(obj, SpacePresentation):
        return {"type": "space", **space_json(obj)}
    if isinstance(obj, MzMap):
        if obj.alpha is None:
            return {"type": "mz", "algebra": algebra_json(obj.algebra), "points": pointset_json(obj.points)}
        labels = obj.labels()
        table = [[element_json(a), [y for y in labels if y in obj(a)]] for a in obj.algebra.elements()]
        return {"type": "mz", "algebra": algebra_json(obj.algebra), "labels": [_label_json(y) for y in labels],
                "table": [[a, [_label_json(y) for y in ys]] for a, ys in table]}
    if isinstance(obj, Homomorphism):
        return {"type": "hom", **hom_json(obj)}
    if isinstance(obj, PointMap):
        return {"type": "pointmap", "source-algebra": algebra_json(obj.source.algebra),
                "target-algebra": algebra_json(obj.target.algebra), **pointmap_json(obj)}
    if isinstance(obj, DzMorphism):
        return {"type": "dz-morphism", "source": to_json(obj.source), "target": to_json(obj.target),
                "hom": hom_json(obj.hom), "points": pointmap_json(obj.points)}
    if isinstance(obj, LbaMorphism):
        return {"type": "lba-morphism", "source": to_json(obj.source), "target": to_json(obj.target),
                "hom": hom_json(obj.hom)}
    if isinstance(obj, SpaceMap):
        return {"type": "space-map", "source": space_json(obj.source), "target": space_json(obj.target),
                "hat": pointmap_json(obj.hat)}
    if isinstance(obj, SpacePoint):
        return {"type": "space-point", **space_point_json(obj)}
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def _guess_type(d: dict) -> str:
    if "type" in d:
        return d["type"]
    if d.get("kind") in ("finite", "fc", "product"):
        return "algebra"
    if isinstance(d.get("blocks"), list) and all(isinstance(b, dict) and "kind" in b for b in d["blocks"]):
        return "space"
    if "algebra" in d and "ideal" in d:
        return "lba"
    if "algebra" in d and "points" in d:
        return "dz"
    if "domain" in d and "codomain" in d:
        return "hom"
    raise MalformedDescriptor("cannot tell what kind of object this is; add a 'type' field")


def from_json(d):
    """Typed object from a decoded JSON document."""
    if not isinstance(d, dict):
        raise MalformedDescriptor(f"expected a JSON object, got {type(d).__name__}")
    t = _guess_type(d)
    if t == "algebra":
        return make_algebra({k: v for k, v in d.items() if k != "type"})
    if t == "space":
        return space_parse(d)
    if t == "hom":
        return hom_parse(d)
    if t == "space-map":
        X, Y = space_parse(d["source"]), space_parse(d["target"])
        from .spaces import co_algebra
        return SpaceMap(X, Y, pointmap_parse(co_algebra(X), co_algebra(Y), d["hat"]))
    if t == "space-point":
        return SpacePoint(d["block"], INF if d["id"] == "inf" else d["id"])
    if t == "pointmap":
        return pointmap_parse(make_algebra(d["source-algebra"]), make_algebra(d["target-algebra"]), d)
    if t in ("dz-morphism", "lba-morphism"):
        src, tgt, phi = from_json(d["source"]), from_json(d["target"]), hom_parse(d["hom"])
        if t == "lba-morphism":
            return LbaMorphism(src, tgt, phi)
        return DzMorphism(src, tgt, phi, pointmap_parse(tgt.algebra, src.algebra, d["points"]))
    A = make_algebra(d["algebra"])
    if t == "element":
        return element_parse(A, d["element"])
    if t == "character":
        return character_parse(A, d)
    if t == "pointset":
        return pointset_parse(A, d)
    if t == "ideal":
        return ideal_parse(A, d["ideal"])
    if t == "lba":
        return lba_pair(ideal_parse(A, d["ideal"]))
    if t == "mz":
        if "table" not in d:
            return MzMap(A, pointset_parse(A, d["points"]))
        labels = [_label_parse(A, y) for y in d["labels"]]
        table = {element_parse(A, a): frozenset(_label_parse(A, y) for y in ys) for a, ys in d["table"]}
        return mz_from_table(A, labels, table)
    if t == "dz":
        return DzAlgebra(A, pointset_parse(A, d["points"]), d.get("level", "z"))
    raise MalformedDescriptor(f"unknown object type {t!r}")


def parse_object(text: str):
    """Parse JSON text into a typed object.

    Syntax errors raise ``ParseError`` with line and column; anything that
    decodes but breaks an invariant raises ``ValidationError`` naming it.
    """
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    try:
        return from_json(d)
    except ValidationError:
        raise
    except (StoneError, ValueError, KeyError, TypeError, AttributeError) as e:
        which = type(e).__name__ if isinstance(e, StoneError) else "schema"
        detail = f"missing field {e}" if isinstance(e, KeyError) else str(e)
        raise ValidationError(detail, which) from e


def render(obj) -> str:
    return json.dumps(to_json(obj), sort_keys=True)
