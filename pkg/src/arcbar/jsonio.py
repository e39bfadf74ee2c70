"""Canonical JSON schemas for the workbench: rationals as 'p/q' strings,
permutations as one-based image arrays, and dictionaries for the structured
values.  Parsing validates every invariant and names the violated one."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .barcalc import FinCmMonoid
from .circle import ArcSystem, SystemWithPerm
from .cyclic import CyclicPoint, CyclicWord, parse_word
from .groups import CyclicElem, Perm, WreathElem
from .operads import (COMPACT, LITTLE_DISKS, AssocElem, CompactElem,
                      DiskTuple, FramedOperad, FramedTuple, SignedGroup)
from .rational import InvariantViolation, Turn, parse_rat, rat_str


class SchemaError(ValueError):
    pass


def _need(obj: dict, key: str) -> Any:
    if key not in obj:
        raise SchemaError(f"missing field {key!r}")
    return obj[key]


# -- scalars ----------------------------------------------------------------

def turn_to_json(t: Turn) -> dict:
    return {"value": rat_str(t.value), "modulus": rat_str(t.modulus)}


def turn_from_json(obj: dict) -> Turn:
    return Turn(parse_rat(_need(obj, "value")), parse_rat(_need(obj, "modulus")))


# -- groups -----------------------------------------------------------------

def perm_to_json(p: Perm) -> list[int]:
    return p.one_based()


def perm_from_json(images: list[int]) -> Perm:
    try:
        return Perm.from_one_based(images)
    except InvariantViolation as exc:
        raise SchemaError(f"bad permutation: {exc}") from exc


def _member_to_json(x) -> Any:
    if isinstance(x, CyclicElem):
        return {"order": x.order, "exponent": x.exponent}
    return perm_to_json(x)


def _member_from_json(obj) -> Any:
    if isinstance(obj, dict):
        return CyclicElem(int(_need(obj, "order")), int(_need(obj, "exponent")))
    return perm_from_json(obj)


def wreath_to_json(w: WreathElem) -> dict:
    return {"perm": perm_to_json(w.perm),
            "members": [_member_to_json(h) for h in w.members]}


def wreath_from_json(obj: dict) -> WreathElem:
    return WreathElem(perm_from_json(_need(obj, "perm")),
                      tuple(_member_from_json(h) for h in _need(obj, "members")))


# -- arc systems ------------------------------------------------------------

def arc_system_to_json(x: ArcSystem) -> dict:
    out = {"m": x.m,
           "pairs": [{"zeta": rat_str(z.value), "r": rat_str(r)}
                     for z, r in x.pairs],
           "variant": x.variant}
    if x.phi is not None:
        out["phi"] = [rat_str(p) for p in x.phi]
    return out


def arc_system_from_json(obj: dict) -> ArcSystem:
    pairs = tuple((Turn(parse_rat(_need(p, "zeta"))), parse_rat(_need(p, "r")))
                  for p in _need(obj, "pairs"))
    phi = obj.get("phi")
    if phi is not None:
        phi = tuple(parse_rat(p) for p in phi)
    return ArcSystem(int(_need(obj, "m")), pairs, phi, _need(obj, "variant"))


def system_with_perm_to_json(x: SystemWithPerm) -> dict:
    return {"base": arc_system_to_json(x.base), "perm": perm_to_json(x.perm)}


def system_with_perm_from_json(obj: dict) -> SystemWithPerm:
    return SystemWithPerm(arc_system_from_json(_need(obj, "base")),
                          perm_from_json(_need(obj, "perm")))


# -- cyclic model -----------------------------------------------------------

def point_to_json(p: CyclicPoint) -> dict:
    return {"m": p.m, "rbar": rat_str(p.rbar.value),
            "simplex": [rat_str(t) for t in p.simplex]}


def point_from_json(obj: dict) -> CyclicPoint:
    m = int(_need(obj, "m"))
    return CyclicPoint(m, Turn(parse_rat(_need(obj, "rbar")), Fraction(m)),
                       tuple(parse_rat(t) for t in _need(obj, "simplex")))


def word_to_json(w: CyclicWord) -> dict:
    return {"m": w.m, "q": w.source, "word": str(w)}


def word_from_json(obj: dict) -> CyclicWord:
    return parse_word(_need(obj, "word"), int(_need(obj, "m")),
                      int(_need(obj, "q")))


# -- monoid tables ----------------------------------------------------------

def monoid_to_json(R: FinCmMonoid) -> dict:
    return {"name": R.name, "elements": list(R.elements), "base": R.base,
            "unit": R.unit, "m": R.m,
            "mul": [list(row) for row in R.mul_table],
            "sigma": list(R.sigma_table)}


def monoid_from_json(obj: dict) -> FinCmMonoid:
    return FinCmMonoid(obj.get("name", "monoid"),
                       tuple(_need(obj, "elements")),
                       obj.get("base", "*"), _need(obj, "unit"),
                       int(_need(obj, "m")),
                       tuple(tuple(row) for row in _need(obj, "mul")),
                       tuple(_need(obj, "sigma")))


# -- operad elements --------------------------------------------------------

def operad_elem_to_json(x) -> dict:
    if isinstance(x, AssocElem):
        return {"instance": "assoc", "perm": perm_to_json(x.perm)}
    if isinstance(x, DiskTuple):
        return {"instance": "dR",
                "pairs": [{"v": rat_str(v), "r": rat_str(r)} for v, r in x.pairs]}
    if isinstance(x, FramedTuple):
        return {"instance": f"framed-c{x.group.order}",
                "pairs": [{"v": rat_str(v), "r": rat_str(r),
                           "h": {"order": h.order, "exponent": h.exponent}}
                          for v, r, h in x.pairs]}
    if isinstance(x, CompactElem):
        return {"instance": "dc",
                "pairs": [{"v": rat_str(v), "r": rat_str(r)} for v, r in x.u_pairs],
                "perm": perm_to_json(x.perm)}
    raise SchemaError(f"unserializable operad element {type(x).__name__}")


def operad_elem_from_json(obj: dict):
    inst = _need(obj, "instance")
    if inst == "assoc":
        return AssocElem(perm_from_json(_need(obj, "perm")))
    if inst == "dR":
        pairs = tuple((parse_rat(_need(p, "v")), parse_rat(_need(p, "r")))
                      for p in _need(obj, "pairs"))
        x = DiskTuple(pairs)
        LITTLE_DISKS.validate(x)
        return x
    if inst.startswith("framed-c"):
        order = int(inst.removeprefix("framed-c"))
        group = SignedGroup(order, -1 if order % 2 == 0 else 1)
        pairs = tuple((parse_rat(_need(p, "v")), parse_rat(_need(p, "r")),
                       CyclicElem(order, int(_need(_need(p, "h"), "exponent"))))
                      for p in _need(obj, "pairs"))
        x = FramedTuple(pairs, group)
        FramedOperad(group).validate(x)
        return x
    if inst == "dc":
        pairs = tuple((parse_rat(_need(p, "v")), parse_rat(_need(p, "r")))
                      for p in _need(obj, "pairs"))
        x = CompactElem(pairs, perm_from_json(_need(obj, "perm")))
        COMPACT.validate(x)
        return x
    raise SchemaError(f"unknown operad instance {inst!r}")


# -- round trip -------------------------------------------------------------

_KINDS = {
    "rat": (lambda s: rat_str(parse_rat(s)),),
    "turn": (lambda o: turn_to_json(turn_from_json(o)),),
    "perm": (lambda o: perm_to_json(perm_from_json(o)),),
    "wreath": (lambda o: wreath_to_json(wreath_from_json(o)),),
    "arc-system": (lambda o: arc_system_to_json(arc_system_from_json(o)),),
    "system-with-perm": (
        lambda o: system_with_perm_to_json(system_with_perm_from_json(o)),),
    "cyclic-point": (lambda o: point_to_json(point_from_json(o)),),
    "cyclic-word": (lambda o: word_to_json(word_from_json(o)),),
    "monoid": (lambda o: monoid_to_json(monoid_from_json(o)),),
    "operad": (lambda o: operad_elem_to_json(operad_elem_from_json(o)),),
}


def _infer_kind(obj: Any) -> str:
    if isinstance(obj, str):
        return "rat"
    if isinstance(obj, list):
        return "perm"
    if isinstance(obj, dict):
        if "variant" in obj:
            return "arc-system"
        if "base" in obj and "perm" in obj:
            return "system-with-perm"
        if "members" in obj:
            return "wreath"
        if "rbar" in obj:
            return "cyclic-point"
        if "word" in obj:
            return "cyclic-word"
        if "mul" in obj:
            return "monoid"
        if "instance" in obj:
            return "operad"
        if "modulus" in obj:
            return "turn"
    raise SchemaError("cannot infer element kind")


def element_round_trip(obj: Any, kind: str | None = None) -> Any:
    """Parse, validate every invariant, and re-serialize canonically.

    Accepts either a bare element or a {"kind": ..., "value": ...} wrapper;
    rejects invalid elements with the violated invariant named.
    """
    wrapped = isinstance(obj, dict) and set(obj) == {"kind", "value"}
    if wrapped:
        kind, value = obj["kind"], obj["value"]
    else:
        value = obj
        kind = kind or _infer_kind(obj)
    if kind not in _KINDS:
        raise SchemaError(f"unknown element kind {kind!r}")
    try:
        out = _KINDS[kind][0](value)
    except SchemaError:
        raise
    except (InvariantViolation, ValueError, KeyError, TypeError) as exc:
        raise SchemaError(f"invalid {kind}: {exc}") from exc
    return {"kind": kind, "value": out} if wrapped else out
