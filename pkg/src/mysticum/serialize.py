"""JSON documents for built configurations and verification reports.

Every coordinate is written as a list of exact strings (``"3"``, ``"-7"``);
parameters use ``"p/q"`` or ``"inf"``. Elements are keyed by label text.
"""

from __future__ import annotations

import json

from .base import BaseMysticum, Sextuple
from .labels import parse_label
from .mutation import InterLayer, Layer, Multimysticum
from .projective import Line, Point, format_scalar

__all__ = ["SCHEMA", "multimysticum_to_dict", "multimysticum_from_dict",
           "report_document", "dumps", "loads"]

SCHEMA = "mysticum-report/1"

_FIXED_FAMILIES = ("steiner", "cayley", "plucker", "salmon", "meeting")


def _coords(el):
    return [str(c) for c in el.coords]


def _table(d):
    return {str(k): _coords(v) for k, v in d.items()}


def counts(m):
    return {
        "fixed": {f: len(getattr(m.base, f)) for f in _FIXED_FAMILIES},
        "layers": [
            {"height": l.height, "kirkman": len(l.kirkmans), "pascal": len(l.pascals)}
            for l in m.layers
        ],
        "interlayers": [
            {"lower": il.lower, "kind": il.kind, "count": len(il.elements)}
            for il in m.interlayers
        ],
    }


def multimysticum_to_dict(m):
    s = m.sextuple
    fixed = {
        "sextuple": {
            "params": [format_scalar(t) for t in s.params],
            "points": {c: _coords(p) for c, p in zip("abcdef", s.points)},
        },
    }
    for fam in _FIXED_FAMILIES:
        fixed[fam] = _table(getattr(m.base, fam))
    if m.height >= 2:
        fixed["ladd"] = _table(m.ladd_lines())
    if m.height >= 1:
        fixed["veronese"] = _table(m.veronese_nodes())
    return {
        "fixedPart": fixed,
        "layers": [
            {"height": l.height, "kirkmans": _table(l.kirkmans), "pascals": _table(l.pascals)}
            for l in m.layers
        ],
        "interlayers": [
            {
                "lower": il.lower,
                "kind": il.kind,
                "elements": {str(il.label(k)): _coords(v) for k, v in il.elements.items()},
            }
            for il in m.interlayers
        ],
    }


def _load_table(raw, cls):
    return {parse_label(k): cls(*(int(c) for c in v)) for k, v in raw.items()}


def multimysticum_from_dict(doc):
    """Rebuild a Multimysticum from stored coordinates, without recomputing.

    Stored elements are taken as given so that a tampered document is caught
    by the verifier rather than silently repaired.
    """
    fixed = doc["fixedPart"]
    s = Sextuple(fixed["sextuple"]["params"])
    layers = []
    for raw in doc["layers"]:
        layers.append(Layer(
            raw["height"],
            _load_table(raw["kirkmans"], Point),
            _load_table(raw["pascals"], Line),
        ))
    base = BaseMysticum(
        s,
        layers[0].pascals,
        layers[0].kirkmans,
        _load_table(fixed["steiner"], Point),
        _load_table(fixed["cayley"], Line),
        _load_table(fixed["plucker"], Line),
        _load_table(fixed["salmon"], Point),
        _load_table(fixed["meeting"], Point),
    )
    inters = []
    for raw in doc.get("interlayers", []):
        cls = Line if raw["lower"] % 2 == 0 else Point
        elements = {parse_label(k).split: cls(*(int(c) for c in v))
                    for k, v in raw["elements"].items()}
        inters.append(InterLayer(raw["lower"], elements))
    return Multimysticum(base, tuple(layers), tuple(inters))


def report_document(config, m, summary=None, witnesses=None, timing=None):
    """Assemble the top-level report; key order is fixed for determinism."""
    doc = {
        "schema": SCHEMA,
        "config": config,
        "counts": counts(m),
    }
    doc.update(multimysticum_to_dict(m))
    doc["ranges"] = [r.to_dict() for r in summary.reports] if summary else []
    doc["witnesses"] = [w.to_dict() for w in witnesses] if witnesses else []
    verdict = None
    if summary is not None or witnesses is not None:
        w_ok = sum(w.ok for w in witnesses or [])
        verdict = {
            "depth": summary.depth if summary else None,
            "ranges": str(summary) if summary else None,
            "byKind": summary.by_kind() if summary else None,
            "witnesses": f"{w_ok}/{len(witnesses or [])}",
            "ok": bool((summary is None or summary.ok)
                       and w_ok == len(witnesses or [])),
        }
    doc["verdict"] = verdict
    if timing is not None:
        doc["timing"] = timing
    return doc


def dumps(doc):
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def loads(text):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported document schema: {doc.get('schema')!r}")
    return doc
