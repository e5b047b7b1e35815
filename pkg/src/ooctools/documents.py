"""JSON interchange documents.

A family document is ``{"version": 1, "v": v, "codewords": [[...], ...],
"meta": {...}}`` with each codeword a sorted residue list. Packing and
code documents carry a ``"kind"`` key and otherwise follow the same style.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .conversions import ConstantWeightCode, CyclicPacking
from .core import Codeword, OocError, OocFamily

FORMAT_VERSION = 1


class DocumentError(OocError):
    """Malformed or unsupported document."""


def fraction_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _int(value, name) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{name} must be an integer, got {value!r}")
    return value


def _residue_lists(raw, v, name) -> list[list[int]]:
    if not isinstance(raw, list) or not raw:
        raise DocumentError(f"{name} must be a non-empty list of residue lists")
    out = []
    for cw in raw:
        if not isinstance(cw, list):
            raise DocumentError(f"each entry of {name} must be a list, got {cw!r}")
        res = [_int(r, "residue") for r in cw]
        if any(not 0 <= r < v for r in res):
            raise DocumentError(f"residue out of range [0, {v}) in {cw}")
        if len(set(res)) != len(res):
            raise DocumentError(f"repeated residue in {cw}")
        out.append(sorted(res))
    return out


def _check_version(doc) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")


def family_to_doc(f: OocFamily, meta: dict[str, Any] | None = None) -> dict[str, Any]:
    return {
        "version": FORMAT_VERSION,
        "v": f.v,
        "codewords": [list(c.support) for c in f.codewords],
        "meta": dict(meta or {}),
    }


def family_from_doc(doc: Any) -> tuple[OocFamily, dict[str, Any]]:
    _check_version(doc)
    v = _int(doc.get("v"), "v")
    if v < 2:
        raise DocumentError("v must be at least 2")
    supports = _residue_lists(doc.get("codewords"), v, "codewords")
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise DocumentError("meta must be an object")
    try:
        f = OocFamily(v, tuple(Codeword(v, tuple(s)) for s in supports))
    except OocError as exc:
        raise DocumentError(str(exc)) from exc
    return f, meta


def packing_to_doc(p: CyclicPacking) -> dict[str, Any]:
    return {
        "version": FORMAT_VERSION,
        "kind": "packing",
        "v": p.v,
        "w": p.w,
        "t": p.t,
        "lambda": p.lam,
        "blocks": [list(b) for b in p.blocks],
        "base_blocks": [list(b) for b in p.base_blocks],
        "full_orbits": p.full_orbits,
        "short_orbits": p.short_orbits,
    }


def packing_from_doc(doc: Any) -> CyclicPacking:
    _check_version(doc)
    if doc.get("kind") != "packing":
        raise DocumentError("not a packing document")
    v = _int(doc.get("v"), "v")
    blocks = _residue_lists(doc.get("blocks"), v, "blocks")
    w = _int(doc.get("w", len(blocks[0])), "w")
    t = _int(doc.get("t"), "t")
    lam = _int(doc.get("lambda", 1), "lambda")
    return CyclicPacking(v, w, t, lam, tuple(tuple(b) for b in blocks))


def code_to_doc(c: ConstantWeightCode) -> dict[str, Any]:
    return {
        "version": FORMAT_VERSION,
        "kind": "cwcpc" if c.cyclically_permutable else "constant_weight",
        "v": c.length,
        "w": c.weight,
        "codewords": [list(x.support) for x in c.codewords],
        "d_h": c.d_h,
        "d_c": c.d_c,
    }


def code_from_doc(doc: Any) -> ConstantWeightCode:
    _check_version(doc)
    if doc.get("kind") not in ("cwcpc", "constant_weight"):
        raise DocumentError("not a code document")
    v = _int(doc.get("v"), "v")
    supports = _residue_lists(doc.get("codewords"), v, "codewords")
    cws = tuple(Codeword(v, tuple(s)) for s in supports)
    return ConstantWeightCode(
        v, cws[0].w, cws, doc.get("d_h"), doc.get("d_c"), doc.get("kind") == "cwcpc"
    )


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=None, separators=(", ", ": "))
