"""Machine-readable report documents.

Field order is fixed at construction and json.dumps preserves it, so
identical invocations produce byte-identical output.  Timings are only
attached when explicitly requested.
"""

from __future__ import annotations

import json

from .graphs import Graph
from .monomials import Monomial
from .polynomials import GeneratorSet, TwoTermPoly
from .structure import ClassGroupReport, LexGBClassification, SurveyResult
from .suites import Check
from .variety import VarietyReport

SCHEMA_VERSION = 1


def mono_json(m: Monomial) -> dict:
    out = []
    for r, c, e in m.variables():
        out.extend([[r, c]] * e)
    return {"render": m.render(), "vars": out}


def poly_json(p: TwoTermPoly) -> dict:
    terms = []
    for mono, sign in p.terms():
        terms.append({"vars": mono_json(mono)["vars"], "sign": sign})
    return {"render": p.render(), "terms": terms}


def basis_json(gs: GeneratorSet) -> list[dict]:
    return [poly_json(p) for p in gs]


def graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[a, b] for a, b in g.edges]}


def class_group_json(rep: ClassGroupReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "degrees": list(rep.degrees),
        "minYCount": rep.min_y_count,
        "rank": rep.rank,
        "isConnected": rep.is_connected,
        "boundStatus": rep.bound_status,
    }


def classification_json(cls: LexGBClassification) -> dict:
    histogram: dict[str, int] = {}
    for p, _ in cls.tagged:
        histogram[str(p.degree)] = histogram.get(str(p.degree), 0) + 1
    return {
        "size": len(cls.tagged),
        "degreeHistogram": histogram,
        "elements": [
            {"degree": p.degree, "template": tag, **poly_json(p)} for p, tag in cls.tagged
        ],
        "unclassified": cls.unclassified_count,
    }


def variety_json(rep: VarietyReport) -> dict:
    return {
        "q": rep.q,
        "numVars": rep.num_vars,
        "lhsPoints": rep.lhs_points,
        "rhsPoints": rep.rhs_points,
        "equal": rep.equal,
        "evidence": "finite-field point-set equality, not a symbolic proof",
    }


def survey_json(res: SurveyResult) -> dict:
    return {
        "edges": res.m,
        "lowerBound": res.lower,
        "upperBound": res.upper,
        "rows": [
            {"graph": graph_json(g), "rank": rep.rank, "boundStatus": rep.bound_status}
            for g, rep in res.rows
        ],
        "achievableRanks": list(res.ranks),
    }


def checks_json(checks: list[Check]) -> list[dict]:
    return [
        {"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}
        for c in checks
    ]


def document(command: str, graph: Graph | None, results: dict, timings: dict | None = None) -> dict:
    from . import __version__

    doc: dict = {"schema": SCHEMA_VERSION, "toolVersion": __version__, "command": command}
    if graph is not None:
        doc["graph"] = graph_json(graph)
    doc["results"] = results
    if timings is not None:
        doc["timings"] = timings
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
