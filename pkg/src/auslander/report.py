"""Deterministic reports and replayable certificates.

A report is a JSON object::

    {"schema": 1, "command": [...], "verdict": "pass" | "fail" | "inconclusive",
     "stages": [...], "witnesses": {...}, "counterexample": ..., "certificates": [...]}

Certificates carry full matrices so that ``verify_report`` can recheck them
with linear algebra and module primitives only, without rerunning any search.
"""
from __future__ import annotations

from . import exactla as la
from .algebra import Algebra
from .errors import InputError
from .io import SCHEMA, Loader, algebra_to_json, matrix_from_json, matrix_to_json, module_from_json, module_to_json
from .modules import Module, ModuleMap, direct_sum, is_isomorphic
from .standard import standard_modules


def make_report(command, verdict: str, stages=None, witnesses=None, counterexample=None, certificates=None) -> dict:
    out = {
        "schema": SCHEMA,
        "command": list(command),
        "verdict": verdict,
        "stages": list(stages or []),
        "witnesses": witnesses or {},
    }
    if counterexample is not None:
        out["counterexample"] = counterexample
    if certificates:
        out["certificates"] = certificates
    return out


def _bare_module(x: Module) -> dict:
    d = module_to_json(x)
    d.pop("schema", None)
    d.pop("name", None)
    return d


def resolution_certificate(x: Module, steps, kind: str = "projective") -> dict:
    """Certificate for a (partial) minimal projective resolution or injective
    coresolution of x, as produced by ``min_proj_resolution`` / ``min_inj_coresolution``."""
    field = x.field
    return {
        "type": "resolution" if kind == "projective" else "coresolution",
        "algebra": algebra_to_json(x.algebra),
        "module": _bare_module(x),
        "terms": [_bare_module(s.object) for s in steps],
        "blocks": [list(s.blocks) for s in steps],
        "maps": [matrix_to_json(field, s.map.matrix) for s in steps],
        "complete": bool(not steps or (steps[-1].syzygy.dim == 0 if kind == "projective" else steps[-1].cosyzygy.dim == 0)),
    }


def algebra_iso_certificate_json(src: Algebra, dst: Algebra, phi) -> dict:
    return {
        "type": "algebra_iso",
        "source": algebra_to_json(src),
        "target": algebra_to_json(dst),
        "matrix": matrix_to_json(src.field, phi),
    }


def module_iso_certificate(x: Module, y: Module, iso) -> dict:
    return {
        "type": "module_iso",
        "algebra": algebra_to_json(x.algebra),
        "source": _bare_module(x),
        "target": _bare_module(y),
        "matrix": matrix_to_json(x.field, iso),
    }


# replay ---------------------------------------------------------------------


def _replay_resolution(cert: dict, loader: Loader) -> tuple[bool, str]:
    a = loader.algebra(cert["algebra"])
    field = a.field
    x = module_from_json(cert["module"], a)
    terms = [module_from_json(t, a) for t in cert["terms"]]
    blocks = cert["blocks"]
    projective = cert["type"] == "resolution"
    st = standard_modules(a)
    pool = [p.module for p in st.projectives] if projective else list(st.injectives)
    maps = []
    for k, raw in enumerate(cert["maps"]):
        if projective:
            src, tgt = terms[k], (x if k == 0 else terms[k - 1])
        else:
            src, tgt = (x if k == 0 else terms[k - 1]), terms[k]
        f = ModuleMap(src, tgt, matrix_from_json(field, raw, src.dim, tgt.dim))
        if not f.is_homomorphism():
            return False, f"map {k} is not a homomorphism"
        maps.append(f)
    for k, t in enumerate(terms):
        if any(not isinstance(b, int) or not 0 <= b < len(pool) for b in blocks[k]):
            return False, f"term {k} names an unknown indecomposable"
        model, _, _ = direct_sum([pool[b] for b in blocks[k]], a)
        if not is_isomorphic(t, model):
            return False, f"term {k} is not the stated sum of indecomposable {'projectives' if projective else 'injectives'}"
    for k in range(1, len(maps)):
        comp = maps[k].matrix * maps[k - 1].matrix if projective else maps[k - 1].matrix * maps[k].matrix
        if not la.is_zero_matrix(comp):
            return False, f"maps {k - 1} and {k} do not compose to zero"
    # exactness by rank bookkeeping
    ranks = [f.rank() for f in maps]
    if maps:
        if projective and ranks[0] != x.dim:
            return False, "augmentation is not surjective"
        if not projective and ranks[0] != x.dim:
            return False, "coaugmentation is not injective"
    for k in range(1, len(maps)):
        mid = terms[k - 1].dim
        if ranks[k] != mid - ranks[k - 1]:
            return False, f"not exact at term {k - 1}"
    if cert.get("complete"):
        if not maps:
            if x.dim:
                return False, "empty resolution of a nonzero module"
        elif ranks[-1] != terms[-1].dim:
            return False, "last term does not end the sequence"
    return True, ""


def _replay_algebra_iso(cert: dict, loader: Loader) -> tuple[bool, str]:
    src = loader.algebra(cert["source"])
    dst = loader.algebra(cert["target"])
    if src.field != dst.field or src.dim != dst.dim:
        return False, "algebras differ in field or dimension"
    field = src.field
    phi = matrix_from_json(field, cert["matrix"], src.dim, dst.dim)
    if not la.is_invertible(phi):
        return False, "not bijective"
    if src.unit_vector() * phi != dst.unit_vector():
        return False, "not unital"
    rows = [la.submatrix(field, phi, [i], range(dst.dim)) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            if field.row(src.product_coords(i, j)) * phi != dst.multiply(rows[i], rows[j]):
                return False, f"not multiplicative on ({src.labels[i]}, {src.labels[j]})"
    return True, ""


def _replay_module_iso(cert: dict, loader: Loader) -> tuple[bool, str]:
    a = loader.algebra(cert["algebra"])
    x = module_from_json(cert["source"], a)
    y = module_from_json(cert["target"], a)
    if x.dim != y.dim:
        return False, "dimensions differ"
    f = ModuleMap(x, y, matrix_from_json(a.field, cert["matrix"], x.dim, y.dim))
    if not f.is_homomorphism():
        return False, "not a homomorphism"
    if not la.is_invertible(f.matrix) and x.dim:
        return False, "not invertible"
    return True, ""


_REPLAY = {
    "resolution": _replay_resolution,
    "coresolution": _replay_resolution,
    "algebra_iso": _replay_algebra_iso,
    "module_iso": _replay_module_iso,
}


def verify_report(report: dict) -> list[dict]:
    """Recheck every certificate; one result per certificate, in order."""
    if not isinstance(report, dict) or report.get("schema") != SCHEMA:
        raise InputError("not a schema-1 report")
    certs = report.get("certificates", [])
    if not isinstance(certs, list):
        raise InputError("certificates must be a list")
    loader = Loader()
    results = []
    for k, cert in enumerate(certs):
        if not isinstance(cert, dict) or cert.get("type") not in _REPLAY:
            raise InputError(f"certificate {k} has an unknown type")
        try:
            ok, why = _REPLAY[cert["type"]](cert, loader)
        except (KeyError, TypeError) as exc:
            raise InputError(f"certificate {k} is malformed: {exc}")
        results.append({"index": k, "type": cert["type"], "ok": ok, "reason": why})
    return results
