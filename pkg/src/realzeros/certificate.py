"""JSON certificate documents.

Rationals are written as strings (``"3"``, ``"-1/2"``) and keys appear in
a fixed order, so a document serializes to the same bytes every time and
``dumps(loads(dumps(doc))) == dumps(doc)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .criterion import CriterionLevel, RealRootednessVerdict, criterion_poly
from .errors import ParseError
from .oprl import DiscreteMeasure, RecurrenceCoefficients
from .parsing import parse_coeffs, parse_polynomial
from .poly import Polynomial, evaluate
from .realroot import PointWitness, PositivityCertificate, count_distinct_real_roots

SCHEMA_VERSION = "1"


def rat(x: Fraction) -> str:
    return str(Fraction(x))


def coeff_strings(p: Polynomial) -> list[str]:
    return [rat(c) for c in p.coeffs]


def witness_record(w) -> Optional[dict]:
    if w is None:
        return None
    if isinstance(w, PointWitness):
        return {"point": rat(w.point), "value": rat(w.value)}
    return {"interval": {"lo": rat(w.lo), "hi": rat(w.hi)}, "sturm_count": w.count}


def positivity_record(cert: PositivityCertificate) -> dict:
    return {
        "verdict": cert.verdict.value,
        "reason": cert.reason.value,
        "witness": witness_record(cert.witness),
        "sturm_root_count": cert.sturm_root_count,
    }


def level_record(level: CriterionLevel) -> dict:
    return {
        "j": level.j,
        "q_coeffs": coeff_strings(level.q),
        "positivity": positivity_record(level.certificate),
    }


def oprl_record(rc: RecurrenceCoefficients, mu: DiscreteMeasure, residual: float) -> dict:
    return {
        "a": [rat(v) for v in rc.a],
        "b": [rat(v) for v in rc.b],
        "favard": all(v > 0 for v in rc.b),
        "precision": rat(mu.precision),
        "nodes": [
            {"lo": rat(iv.lo), "hi": rat(iv.hi), "approx": float(x)}
            for iv, x in zip(mu.nodes, mu.representatives)
        ],
        "weights": list(mu.weights),
        "residual": residual,
    }


def oprl_failure_record(exc) -> dict:
    return {
        "a": None,
        "b": None,
        "favard": False,
        "error": str(exc),
        "failed_level": getattr(exc, "level", None),
        "failed_b": None if getattr(exc, "b", None) is None else rat(exc.b),
    }


def build_document(input_echo: dict, P: Polynomial, verdict: Optional[RealRootednessVerdict],
                   method: str, oprl: Optional[dict] = None,
                   timings_ms: Optional[dict] = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": input_echo,
        "degree": P.degree,
        "method": method,
        "verdict": None if verdict is None else verdict.all_real_and_distinct,
        "disagreement": False if verdict is None else verdict.disagreement,
        "levels": [] if verdict is None else [level_record(lv) for lv in verdict.levels],
        "oracle": None,
        "oprl": oprl,
        "timings_ms": timings_ms or {},
    }
    if verdict is not None and verdict.oracle_root_count is not None:
        doc["oracle"] = {
            "distinct_real_roots": verdict.oracle_root_count,
            "squarefree": verdict.squarefree,
        }
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)


def input_polynomial(doc: dict) -> Polynomial:
    inp = doc["input"]
    if "expr" in inp:
        return parse_polynomial(inp["expr"])
    if "coeffs" in inp:
        return parse_coeffs(inp["coeffs"])
    raise ParseError("document input has neither 'expr' nor 'coeffs'")


def reverify(doc: dict) -> list[str]:
    """Re-check every level record of ``doc`` from scratch.

    Each ``q_coeffs`` must equal the level polynomial of the echoed input,
    every point witness must evaluate exactly to its stated value ``<= 0``,
    and every interval witness must contain at least one real zero by a
    fresh Sturm count. Returns a list of problems (empty when all hold).
    """
    problems = []
    P = input_polynomial(doc)
    for rec in doc.get("levels", []):
        j = rec["j"]
        q = parse_coeffs(rec["q_coeffs"])
        if q != criterion_poly(P, j):
            problems.append(f"level {j}: q_coeffs do not match the input")
        pos = rec["positivity"]
        if pos["verdict"] != "NotPositive":
            continue
        w = pos["witness"]
        if w is None:
            problems.append(f"level {j}: NotPositive without a witness")
        elif "point" in w:
            value = evaluate(q, Fraction(w["point"]))
            if value != Fraction(w["value"]) or value > 0:
                problems.append(f"level {j}: point witness does not re-evaluate to a value <= 0")
        else:
            lo = Fraction(w["interval"]["lo"])
            hi = Fraction(w["interval"]["hi"])
            if count_distinct_real_roots(q, lo, hi) < 1:
                problems.append(f"level {j}: interval witness holds no real zero")
    return problems
