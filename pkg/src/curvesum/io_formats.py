"""JSON file format for curves, bridges, and asserted invariant ledgers.

Coordinates are serialized as exact "num/den" strings; files round-trip
bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .curves import Bridge, CurveLocation, PolyCurve
from .errors import InconsistentInputs
from .geom import Point
from .invariants import InvariantLedger

FORMAT = "closed-curve-instance"
VERSION = 1


def rational_to_str(x: mpq) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def str_to_rational(s) -> mpq:
    if isinstance(s, int):
        return mpq(s)
    if not isinstance(s, str):
        raise InconsistentInputs(f"expected a rational string, got {type(s).__name__}")
    try:
        return mpq(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InconsistentInputs(f"bad rational literal {s!r}") from exc


def _point_to_json(p: Point) -> List[str]:
    return [rational_to_str(p[0]), rational_to_str(p[1])]


def _point_from_json(obj) -> Point:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise InconsistentInputs("a point must be a [x, y] pair")
    return (str_to_rational(obj[0]), str_to_rational(obj[1]))


def _ledger_to_json(ledger: InvariantLedger) -> dict:
    return {
        "j_plus": ledger.j_plus,
        "j_minus": ledger.j_minus,
        "st": ledger.st,
        "double_points": ledger.double_points,
        "provenance": list(ledger.provenance),
    }


def _ledger_from_json(obj) -> InvariantLedger:
    try:
        return InvariantLedger(
            j_plus=int(obj["j_plus"]),
            j_minus=int(obj["j_minus"]),
            st=int(obj["st"]),
            double_points=int(obj["double_points"]),
            provenance=tuple(obj.get("provenance", ("asserted",))),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InconsistentInputs(f"bad ledger object: {exc}") from exc


@dataclass(frozen=True)
class InstanceFile:
    """One or two curves, optional bridges, optional asserted ledgers."""

    curves: Tuple[PolyCurve, ...]
    curve_ids: Tuple[str, ...]
    ledgers: Tuple[Optional[InvariantLedger], ...]
    bridges: Tuple[Bridge, ...] = ()
    bridge_ids: Tuple[str, ...] = ()

    def curve(self, idx: int = 0) -> PolyCurve:
        return self.curves[idx]

    @property
    def bridge(self) -> Optional[Bridge]:
        return self.bridges[0] if self.bridges else None


def instance_to_json(inst: InstanceFile) -> dict:
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "curves": [],
        "bridges": [],
    }
    for cid, curve, ledger in zip(inst.curve_ids, inst.curves, inst.ledgers):
        entry: dict = {
            "id": cid,
            "vertices": [_point_to_json(v) for v in curve.vertices],
        }
        if ledger is not None:
            entry["ledger"] = _ledger_to_json(ledger)
        doc["curves"].append(entry)
    for bid, br in zip(inst.bridge_ids, inst.bridges):
        doc["bridges"].append(
            {
                "id": bid,
                "from": {
                    "curve": inst.curve_ids[0],
                    "edge": br.start.edge,
                    "t": rational_to_str(br.start.t),
                },
                "to": {
                    "curve": inst.curve_ids[-1],
                    "edge": br.end.edge,
                    "t": rational_to_str(br.end.t),
                },
                "interior": [_point_to_json(p) for p in br.interior],
            }
        )
    return doc


def instance_from_json(doc) -> InstanceFile:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise InconsistentInputs(f"not a {FORMAT} document")
    if doc.get("version") != VERSION:
        raise InconsistentInputs(f"unsupported version {doc.get('version')!r}")
    curves: List[PolyCurve] = []
    ids: List[str] = []
    ledgers: List[Optional[InvariantLedger]] = []
    for entry in doc.get("curves", []):
        ids.append(str(entry["id"]))
        curves.append(
            PolyCurve(tuple(_point_from_json(v) for v in entry["vertices"]))
        )
        ledgers.append(
            _ledger_from_json(entry["ledger"]) if "ledger" in entry else None
        )
    if not curves:
        raise InconsistentInputs("document contains no curves")
    bridges: List[Bridge] = []
    bids: List[str] = []
    for entry in doc.get("bridges", []):
        bids.append(str(entry.get("id", f"bridge-{len(bids)}")))
        bridges.append(
            Bridge(
                start=CurveLocation(
                    int(entry["from"]["edge"]), str_to_rational(entry["from"]["t"])
                ),
                end=CurveLocation(
                    int(entry["to"]["edge"]), str_to_rational(entry["to"]["t"])
                ),
                interior=tuple(
                    _point_from_json(p) for p in entry.get("interior", [])
                ),
            )
        )
    return InstanceFile(
        curves=tuple(curves),
        curve_ids=tuple(ids),
        ledgers=tuple(ledgers),
        bridges=tuple(bridges),
        bridge_ids=tuple(bids),
    )


def dumps(inst: InstanceFile) -> str:
    return json.dumps(instance_to_json(inst), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InconsistentInputs(f"invalid JSON: {exc}") from exc
    return instance_from_json(doc)


def write_instance(path: str, inst: InstanceFile) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(inst))


def read_instance(path: str) -> InstanceFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def single_curve(curve: PolyCurve, ledger: Optional[InvariantLedger] = None,
                 cid: str = "curve-0") -> InstanceFile:
    return InstanceFile((curve,), (cid,), (ledger,))


def pair_with_bridge(c0: PolyCurve, c1: PolyCurve,
                     bridge: Optional[Bridge] = None,
                     l0: Optional[InvariantLedger] = None,
                     l1: Optional[InvariantLedger] = None) -> InstanceFile:
    return InstanceFile(
        curves=(c0, c1),
        curve_ids=("curve-0", "curve-1"),
        ledgers=(l0, l1),
        bridges=(bridge,) if bridge is not None else (),
        bridge_ids=("bridge-0",) if bridge is not None else (),
    )
