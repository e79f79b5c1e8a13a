"""JSON input specs and reports.

``+inf``/``-inf`` serialise as the strings ``"inf"``/``"-inf"``; every other
number is an integer.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .analysis import Analysis
from .fdh import FdhFunction, SupportSeq, fdh_from_hilbert, fdh_from_presentation
from .sheaf_model import Certificate, resolution_pieces


class InputError(ValueError):
    """Malformed input; the message names the offending field."""


@dataclass(frozen=True)
class InputSpec:
    a: tuple[tuple[int, int], ...] | None = None
    b: tuple[tuple[int, int], ...] | None = None
    values: tuple[tuple[int, int], ...] | None = None

    @property
    def kind(self) -> str:
        return "hilbert" if self.values is not None else "presentation"

    def to_fdh(self) -> FdhFunction:
        if self.values is not None:
            return fdh_from_hilbert(self.values)
        return fdh_from_presentation(SupportSeq(self.a), SupportSeq(self.b))

    def to_json(self) -> dict[str, Any]:
        if self.values is not None:
            return {"values": [list(p) for p in self.values]}
        return {"a": [list(p) for p in self.a], "b": [list(p) for p in self.b]}


def _pairs(obj: Any, field: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(obj, list):
        raise InputError(f"{field}: expected a list of [n, value] pairs")
    seen = set()
    out = []
    for k, item in enumerate(obj):
        where = f"{field}[{k}]"
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise InputError(f"{where}: expected [n, value] with integer entries")
        n, v = item
        if v < 0:
            raise InputError(f"{where}: value {v} must be nonnegative")
        if n in seen:
            raise InputError(f"{where}: index {n} repeated")
        seen.add(n)
        out.append((n, v))
    return tuple(sorted(out))


def parse_input(obj: Any) -> InputSpec:
    """Validate a decoded JSON object: either ``{"a", "b"}`` or ``{"values"}``."""
    if not isinstance(obj, dict):
        raise InputError("input: expected a JSON object")
    unknown = set(obj) - {"a", "b", "values"}
    if unknown:
        raise InputError(f"{sorted(unknown)[0]}: unknown field")
    has_pres = "a" in obj or "b" in obj
    if has_pres and "values" in obj:
        raise InputError("values: give either a presentation (a, b) or Hilbert values, not both")
    if "values" in obj:
        vals = _pairs(obj["values"], "values")
        if not vals:
            raise InputError("values: empty Hilbert window")
        return InputSpec(values=vals)
    if not has_pres:
        raise InputError("a: missing presentation (a, b) or Hilbert values")
    return InputSpec(a=_pairs(obj.get("a", []), "a"), b=_pairs(obj.get("b", []), "b"))


def parse_input_text(text: str) -> InputSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_input(obj)


def ext(x: float) -> int | str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return int(x)


def seq_json(s: SupportSeq) -> list[list[int]]:
    return [[n, v] for n, v in s.items()]


def _cert(c: Certificate) -> dict[str, Any]:
    return {
        "kind": c.kind.value,
        "source": list(c.source),
        "target": list(c.target),
        "twist": c.twist,
        "nu_gap": c.nu_gap,
        "reason": None if c.reason is None else c.reason.value,
        "pass": c.passed,
    }


def model_json(an: Analysis) -> dict[str, Any]:
    per_group, total = an.restriction
    return {
        "description": an.model.describe(),
        "torsion": None if an.model.curve_degree is None else {"curve_degree": an.model.curve_degree},
        "groups": [{"nu": g.nu, "pieces": [{"twist": p.twist, "points": p.points} for p in g.pieces]}
                   for g in an.model.groups],
        "restriction": {"groups": [[list(e) for e in grp] for grp in per_group],
                        "total": [list(e) for e in total]},
    }


def report_json(an: Analysis, spec: InputSpec | None = None) -> dict[str, Any]:
    f = an.f
    c = an.classification
    res = resolution_pieces(f.a, f.b, an.whn.taus)
    pieces = []
    tors = an.graded.torsion
    pieces.append({
        "index": 0, "interval": [ext(tors.lower), ext(tors.upper)],
        "resolution": {"a": seq_json(res[0][0]), "b": seq_json(res[0][1])},
        "rank": tors.rho, "degree": tors.degree, "nu": None, "beta": None, "summands": [],
    })
    for p, summands in zip(an.graded.pieces, an.decomposed):
        ra, rb = res[p.index]
        pieces.append({
            "index": p.index, "interval": [ext(p.lower), ext(p.upper)],
            "resolution": {"a": seq_json(ra), "b": seq_json(rb)},
            "rank": p.rho, "degree": p.degree, "nu": p.nu, "beta": p.beta,
            "summands": [{"degree": s.degree, "deficiency": s.deficiency, "eta": s.eta, "zeta": s.zeta}
                         for s in summands],
        })
    w = an.whn
    return {
        "input": (spec.to_json() if spec is not None
                  else {"a": seq_json(f.a), "b": seq_json(f.b)}),
        "fdh": {
            "rank": f.rank, "degree": f.degree, "sigma": f.sigma, "deficiency": an.deficiency,
            "classification": {
                "torsion": c.is_torsion, "torsion_free": c.is_torsion_free,
                "locally_free": c.is_locally_free, "unfilterable": c.is_unfilterable,
                "description": None if c.chang_description is None else c.chang_description.name,
            },
        },
        "whn": {"taus": list(w.taus), "nus": list(w.nus), "rhos": list(w.rhos),
                "betas": list(w.betas), "torsion_constant": w.torsion_constant},
        "pieces": pieces,
        "model": model_json(an),
        "certificates": {
            "hom_vanishing": [_cert(x) for x in an.hom],
            "ext_restriction": [_cert(x) for x in an.ext1],
            "hn_compatibility": {"pass": an.hn.ok, "clauses": dict(an.hn.clauses),
                                 "failures": list(an.hn.failures)},
            "resolution_reassembly": _cert(an.resolution),
            "all_pass": an.certificates_pass,
        },
        "oracle_agreement": an.oracle_agreement,
    }


def render_text(obj: Any, indent: int = 0) -> str:
    """Indented plain-text dump of a JSON-like report (same content as the JSON)."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(val)}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)) and not _flat(val):
                lines.append(f"{pad}-")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(val)}")
    else:
        lines.append(f"{pad}{_inline(obj)}")
    return "\n".join(lines)


def _flat(val: Any) -> bool:
    if isinstance(val, list):
        return all(not isinstance(x, dict) and (not isinstance(x, list) or _flat(x)) for x in val)
    return False


def _inline(val: Any) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_inline(x) for x in val) + "]"
    if val is None:
        return "none"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, dict):
        return "{}"
    return str(val)
