"""Command-line front end: ``python3 -m stonedual <verb> ...``.

Exit status: 0 when everything holds, 1 when a verdict is false or a law
fails, 2 for unreadable input or objects outside the representable
backends.  The status never depends on ``--format``.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import functors as fn
from . import mbool
from .catalog import default_catalog
from .errors import (EnumerationUnsupported, FiniteBackendOnly, LbaConditionFailed, NotValidated,
                     StoneError, UnrepresentableCO, UnrepresentableIdeal)
from .functors import DzAlgebra, DzMorphism, LbaMorphism
from .homs import Homomorphism
from .ideals import LbaPair, NoJoinWitness, is_lba, is_zlba, lba_condition, zlba_by_joins
from .laws import (FUNCTORS, Report, catalog_laws, fc_functor_laws, finite_functor_laws, law_suite,
                   tarski_laws)
from .mbool import MzMap
from .serialize import parse_object, render, to_json
from .spaces import SpaceMap, SpacePresentation, classify, co_algebra
from .stone import PointSet, UnrealizedClopen
from .verdict import Verdict

VERBS = ("dual", "check", "roundtrip", "catalog", "validate")
FUNCTOR_NAMES = ("F", "G", "E", "Ep", "Fp", "Gp", "theta-t", "theta-a", "P", "At")
PAIRS = ("E", "Fp", "theta", "json")
OBJECT_LAWS = ("z", "dz", "ldz", "lba", "zlba", "zlba-joins", "map-levels", "dz-morphism",
               "lba-condition", "roundtrip")
SUITE_LAWS = ("all", "catalog", "finite-functors", "fc-functors", "tarski")


class UsageError(StoneError):
    pass


@dataclass
class Command:
    verb: str
    functor: str | None = None
    law: str | None = None
    pair: str | None = None
    text: str | None = None
    fmt: str = "human"
    seed: int = 0
    max_atoms: int = 3
    n_random: int = 200


# -- rendering -----------------------------------------------------------------------------

def describe(w) -> object:
    """A JSON-friendly description of a witness."""
    if w is None:
        return None
    if isinstance(w, (NoJoinWitness, UnrealizedClopen)):
        return w.describe()
    try:
        return to_json(w)
    except TypeError:
        return repr(w)


def _verdict_record(name: str, v: Verdict) -> dict:
    return {"law": name, "pass": bool(v), "witness": describe(v.witness), "note": v.note}


def _show(obj) -> str:
    return repr(obj)


# -- verbs -----------------------------------------------------------------------------------

def _need(obj, types, what):
    if not isinstance(obj, types):
        raise UsageError(f"{what} needs {' or '.join(t.__name__ for t in types)} input, "
                         f"got {type(obj).__name__}")


def _dual(cmd: Command, obj):
    f = cmd.functor
    if f == "F":
        if isinstance(obj, SpaceMap):
            return fn.F_mor(obj)
        _need(obj, (SpacePresentation,), "F")
        return fn.F_obj(obj)
    if f == "G":
        if isinstance(obj, DzMorphism):
            return fn.G_mor(obj)
        _need(obj, (DzAlgebra,), "G")
        return fn.G_space(_revalidate(obj, "z"))
    if f == "E":
        if isinstance(obj, DzMorphism):
            return fn.E_mor(obj)
        _need(obj, (DzAlgebra,), "E")
        return fn.E_obj(_revalidate(obj, "ldz"))
    if f == "Ep":
        if isinstance(obj, LbaMorphism):
            return fn.Ep_mor(obj)
        _need(obj, (LbaPair,), "Ep")
        return fn.Ep_obj(obj)
    if f == "Fp":
        if isinstance(obj, DzMorphism):
            return mbool.Fp_mor(obj)
        _need(obj, (DzAlgebra,), "Fp")
        return mbool.Fp_obj(_revalidate(obj, "dz"))
    if f == "Gp":
        _need(obj, (MzMap,), "Gp")
        return mbool.Gp_obj(obj)
    if f == "theta-t":
        if isinstance(obj, SpaceMap):
            return fn.theta_t_mor(obj)
        _need(obj, (SpacePresentation,), "theta-t")
        return fn.theta_t(obj)
    if f == "theta-a":
        if isinstance(obj, LbaMorphism):
            return fn.theta_a_mor(obj)
        _need(obj, (LbaPair,), "theta-a")
        return fn.theta_a(obj)
    if f == "P":
        if isinstance(obj, SpacePresentation):
            if not obj.is_finite:
                raise FiniteBackendOnly("P needs a finite set")
            return mbool.P_obj([repr(p) for p in obj.points()])
        raise UsageError("P needs a finite space input")
    if f == "At":
        from .algebra import Algebra
        _need(obj, (Algebra,), "At")
        return mbool.At_obj(obj)
    raise UsageError(f"unknown functor {f!r}")


def _revalidate(d: DzAlgebra, level: str) -> DzAlgebra:
    return fn.dz_algebra(d.algebra, d.points, level)


def _check_object(cmd: Command, obj) -> list[dict]:
    law = cmd.law
    if law in ("z", "dz", "ldz"):
        _need(obj, (DzAlgebra,), law)
        return [_verdict_record(law, fn.validate(obj.algebra, obj.points, law))]
    if law in ("lba", "zlba", "zlba-joins"):
        _need(obj, (LbaPair,), law)
        f = {"lba": is_lba, "zlba": is_zlba, "zlba-joins": zlba_by_joins}[law]
        return [_verdict_record(law, f(obj.ideal))]
    if law == "map-levels":
        _need(obj, (MzMap,), law)
        return [_verdict_record(k, v) for k, v in mbool.validate_map_levels(obj).items()]
    if law == "dz-morphism":
        _need(obj, (DzMorphism,), law)
        return [_verdict_record(law, fn.dz_morphism_check(obj.hom, obj.points))]
    if law == "lba-condition":
        _need(obj, (LbaMorphism,), law)
        return [_verdict_record(law, lba_condition(obj.hom, obj.source.ideal, obj.target.ideal))]
    if law == "roundtrip":
        return _roundtrip_object(obj)
    raise UsageError(f"law {law!r} does not apply to a single object")


def _suite(cmd: Command) -> Report:
    law = cmd.law
    if law == "all":
        return law_suite(cmd.seed, cmd.max_atoms, cmd.n_random)
    if law == "catalog":
        return catalog_laws(default_catalog(cmd.max_atoms))
    if law == "finite-functors":
        return finite_functor_laws(cmd.max_atoms)
    if law == "fc-functors":
        return fc_functor_laws(cmd.seed, cmd.n_random)
    if law == "tarski":
        return tarski_laws(cmd.seed)
    if law.startswith("functor-") and law[len("functor-"):] in FUNCTORS:
        rep = finite_functor_laws(cmd.max_atoms)
        fc_functor_laws(cmd.seed, cmd.n_random, rep)
        return Report([r for r in rep.records if r["law"] == law])
    raise UsageError(f"unknown law {law!r}")


def _roundtrip_object(obj) -> list[dict]:
    if isinstance(obj, DzAlgebra):
        d = _revalidate(obj, "ldz")
        return [{"law": "roundtrip-EpE", "pass": fn.check_EpE(d), "witness": None, "note": ""},
                _verdict_record("GpFp-iso", mbool.check_GpFp_iso(d))]
    if isinstance(obj, LbaPair):
        return [{"law": "roundtrip-EEp", "pass": fn.check_EEp(obj), "witness": None, "note": ""},
                _verdict_record("coherence-GEp", fn.check_GEp_equals_theta_a(obj))]
    if isinstance(obj, SpacePresentation):
        return [_verdict_record("coherence-EF", fn.check_EF_equals_theta_t(obj))]
    raise UsageError(f"no round trip for {type(obj).__name__}")


def _roundtrip_catalog(cmd: Command) -> Report:
    cat = default_catalog(cmd.max_atoms)
    rep = Report()
    if cmd.pair == "E":
        for e in cat.dz_objects:
            rep.add("roundtrip-EpE", e.name, fn.check_EpE(e.obj))
        for e in cat.lba_pairs:
            if e.obj.zlba:
                rep.add("roundtrip-EEp", e.name, fn.check_EEp(e.obj))
    elif cmd.pair == "Fp":
        for e in cat.dz_objects:
            v = mbool.check_GpFp_iso(e.obj)
            rep.add("GpFp-iso", e.name, v, v.witness)
    elif cmd.pair == "theta":
        for e in cat.spaces:
            v = fn.check_EF_equals_theta_t(e.obj)
            rep.add("coherence-EF", e.name, v, v.witness)
        for e in cat.lba_pairs:
            if e.obj.zlba:
                v = fn.check_GEp_equals_theta_a(e.obj)
                rep.add("coherence-GEp", e.name, v, v.witness)
    elif cmd.pair == "json":
        for sec, entries in cat.sections().items():
            for e in entries:
                rep.add("json-roundtrip", f"{sec}:{e.name}", parse_object(render(e.obj)) == e.obj)
    else:
        raise UsageError(f"unknown pair {cmd.pair!r}; choose from {', '.join(PAIRS)}")
    return rep


def _validate(obj) -> list[dict]:
    if isinstance(obj, DzAlgebra):
        return [_verdict_record(l, fn.validate(obj.algebra, obj.points, l)) for l in fn.LEVELS]
    if isinstance(obj, LbaPair):
        return [_verdict_record("lba", obj.lba), _verdict_record("zlba", obj.zlba)]
    if isinstance(obj, MzMap):
        return [_verdict_record(k, v) for k, v in mbool.validate_map_levels(obj).items()]
    if isinstance(obj, SpacePresentation):
        co_algebra(obj)
        return [{"law": "representable", "pass": True, "witness": None, "note": repr(co_algebra(obj))}]
    if isinstance(obj, DzMorphism):
        return [_verdict_record("dz-morphism", fn.dz_morphism_check(obj.hom, obj.points))]
    if isinstance(obj, LbaMorphism):
        return [_verdict_record("lba-condition",
                                lba_condition(obj.hom, obj.source.ideal, obj.target.ideal))]
    return [{"law": "well-formed", "pass": True, "witness": None, "note": repr(obj)}]


def _catalog_lines(cmd: Command) -> list[dict]:
    cat = default_catalog(cmd.max_atoms)
    out = []
    for sec, entries in cat.sections().items():
        for e in entries:
            out.append({"section": sec, "name": e.name, "note": e.note, "object": to_json(e.obj)})
    return out


# -- dispatch ----------------------------------------------------------------------------------

def run(cmd: Command) -> tuple[int, str]:
    """Execute ``cmd``; returns (exit status, rendered output)."""
    try:
        return _run(cmd)
    except (UnrepresentableCO, UnrepresentableIdeal, FiniteBackendOnly, EnumerationUnsupported,
            NotValidated, LbaConditionFailed, UsageError, StoneError) as e:
        if cmd.fmt == "json":
            return 2, json.dumps({"error": type(e).__name__, "message": str(e),
                                  **({"line": e.line, "column": e.column} if hasattr(e, "line") else {}),
                                  **({"which": e.which} if getattr(e, "which", None) else {})})
        return 2, f"error: {type(e).__name__}: {e}"


def _records_out(cmd: Command, records: list[dict]) -> tuple[int, str]:
    status = 0 if all(r["pass"] for r in records) else 1
    if cmd.fmt == "json":
        return status, "\n".join(json.dumps(r, sort_keys=True) for r in records)
    lines = []
    for r in records:
        mark = "PASS" if r["pass"] else "FAIL"
        case = f" [{r['case']}]" if "case" in r else ""
        line = f"{mark} {r['law']}{case}"
        if not r["pass"] and r.get("witness") is not None:
            line += f"  witness: {r['witness']}"
        if r.get("note") and not r["pass"]:
            line += f"  ({r['note']})"
        lines.append(line)
    return status, "\n".join(lines)


def _report_out(cmd: Command, rep: Report) -> tuple[int, str]:
    if rep.vacuous and cmd.fmt != "json":
        return 0, "vacuous: no cases"
    if cmd.fmt == "json":
        return (0 if rep.passed else 1), rep.to_jsonl()
    fails = rep.failures()
    lines = [f"{len(rep.records)} cases, {len(fails)} failures"]
    lines += [f"FAIL {r['law']} [{r['case']}]  witness: {r['witness']}" for r in fails]
    return (0 if rep.passed else 1), "\n".join(lines)


def _run(cmd: Command) -> tuple[int, str]:
    if cmd.verb == "catalog":
        lines = _catalog_lines(cmd)
        if cmd.fmt == "json":
            return 0, "\n".join(json.dumps(l, sort_keys=True) for l in lines)
        return 0, "\n".join(f"{l['section']:<13} {l['name']}" + (f"  -- {l['note']}" if l["note"] else "")
                            for l in lines)
    if cmd.verb == "roundtrip" and cmd.text is None:
        if cmd.pair is None:
            raise UsageError("roundtrip needs --pair or an input object")
        return _report_out(cmd, _roundtrip_catalog(cmd))
    if cmd.verb == "check" and cmd.text is None:
        if cmd.law is None:
            raise UsageError("check needs --law")
        return _report_out(cmd, _suite(cmd))
    if cmd.text is None:
        raise UsageError(f"{cmd.verb} needs an input object (--input or --json)")
    obj = parse_object(cmd.text)
    if cmd.verb == "dual":
        if cmd.functor is None:
            raise UsageError("dual needs --functor")
        result = _dual(cmd, obj)
        if cmd.fmt == "json":
            try:
                body = to_json(result)
            except TypeError:
                body = [to_json(x) for x in result] if isinstance(result, list) else repr(result)
            return 0, json.dumps({"functor": cmd.functor, "result": body}, sort_keys=True)
        return 0, f"{cmd.functor}: {_show(result)}"
    if cmd.verb == "check":
        if cmd.law is None:
            raise UsageError("check needs --law")
        return _records_out(cmd, _check_object(cmd, obj))
    if cmd.verb == "roundtrip":
        return _records_out(cmd, _roundtrip_object(obj))
    if cmd.verb == "validate":
        return _records_out(cmd, _validate(obj))
    raise UsageError(f"unknown verb {cmd.verb!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stonedual", description="Stone-type dualities on representable objects.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--functor", choices=FUNCTOR_NAMES)
    p.add_argument("--law", help="object law (" + ", ".join(OBJECT_LAWS) + ") or suite ("
                   + ", ".join(SUITE_LAWS) + ", functor-<name>)")
    p.add_argument("--pair", choices=PAIRS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="path to a JSON object, or - for stdin")
    src.add_argument("--json", help="inline JSON object")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-atoms", type=int, default=3)
    p.add_argument("--n-random", type=int, default=200)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    text = args.json
    if args.input is not None:
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    cmd = Command(args.verb, args.functor, args.law, args.pair, text, args.format,
                  args.seed, args.max_atoms, args.n_random)
    status, out = run(cmd)
    if out:
        print(out)
    return status
