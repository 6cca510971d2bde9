"""JSON file formats: presentations, algebra dumps, modules, instances, complexes."""
from __future__ import annotations

import json
import os
from pathlib import Path

from . import exactla as la
from .algebra import Algebra, QuiverPresentation, algebra_from_presentation, check_algebra
from .errors import InputError
from .exactla import Field, FieldError
from .modules import Module, check_module

SCHEMA = 1
DEFAULT_MAX_DIM = 512


def max_dim() -> int:
    raw = os.environ.get("AUSLANDER_MAX_DIM", str(DEFAULT_MAX_DIM))
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"AUSLANDER_MAX_DIM must be an integer, got {raw!r}")
    if value < 1:
        raise InputError("AUSLANDER_MAX_DIM must be positive")
    return value


def _cap(dim: int, what: str) -> None:
    cap = max_dim()
    if dim > cap:
        raise InputError(f"{what} has dimension {dim}, above AUSLANDER_MAX_DIM={cap}")


def read_json(path) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})")
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}")


def write_json(path, obj) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _expect(cond, message):
    if not cond:
        raise InputError(message)


# fields and scalars ---------------------------------------------------------


def field_from_json(obj) -> Field:
    _expect(isinstance(obj, dict), "field must be an object")
    kind = obj.get("kind")
    try:
        if kind == "Q":
            return Field("Q")
        if kind == "Fp":
            p = obj.get("p")
            _expect(isinstance(p, int) and not isinstance(p, bool), "prime field needs an integer p")
            return Field("Fp", p)
    except FieldError as exc:
        raise InputError(str(exc))
    raise InputError(f"unknown field kind {kind!r}")


def field_to_json(field: Field) -> dict:
    return {"kind": "Q"} if field.kind == "Q" else {"kind": "Fp", "p": field.p}


def parse_scalar(field: Field, value):
    if isinstance(value, bool):
        raise InputError("booleans are not scalars")
    if isinstance(value, int):
        return field.scalar(value)
    if isinstance(value, str):
        try:
            return field.parse_scalar(value)
        except (FieldError, ValueError):
            raise InputError(f"bad scalar {value!r}")
    raise InputError(f"scalars must be strings or integers, got {type(value).__name__}")


def matrix_from_json(field: Field, rows, nrows: int, ncols: int):
    _expect(isinstance(rows, list) and len(rows) == nrows, f"expected {nrows} rows")
    flat = []
    for r in rows:
        _expect(isinstance(r, list) and len(r) == ncols, f"expected rows of length {ncols}")
        flat.extend(parse_scalar(field, x) for x in r)
    return field.from_flat(nrows, ncols, flat) if flat else field.zeros(nrows, ncols)


def matrix_to_json(field: Field, m) -> list:
    return [[field.format_scalar(x) for x in row] for row in la.rows_of(m)]


def vector_to_json(field: Field, v) -> list:
    return [field.format_scalar(x) for x in v.entries()]


# algebras -------------------------------------------------------------------


def presentation_from_json(obj, field_override: Field | None = None) -> QuiverPresentation:
    _expect(isinstance(obj, dict), "presentation must be an object")
    field = field_override or field_from_json(obj.get("field", {"kind": "Q"}))
    vertices = obj.get("vertices")
    _expect(isinstance(vertices, list) and vertices, "vertices must be a non-empty list")
    vertices = tuple(str(v) for v in vertices)
    arrows = []
    for a in obj.get("arrows", []):
        _expect(isinstance(a, dict) and {"name", "from", "to"} <= set(a), "arrows need name, from and to")
        arrows.append((str(a["name"]), str(a["from"]), str(a["to"])))
    relations = []
    for rel in obj.get("relations", []):
        _expect(isinstance(rel, list), "a relation is a list of terms")
        terms = []
        for t in rel:
            _expect(isinstance(t, dict) and "path" in t, "relation terms need a path")
            path = t["path"]
            _expect(isinstance(path, list) and all(isinstance(p, str) for p in path), "paths are lists of arrow names")
            terms.append((parse_scalar(field, t.get("coeff", "1")), tuple(path)))
        relations.append(tuple(terms))
    bound = obj.get("length_bound", 10)
    _expect(isinstance(bound, int) and not isinstance(bound, bool), "length_bound must be an integer")
    return QuiverPresentation(field, vertices, tuple(arrows), tuple(relations), bound)


def algebra_from_json(obj, field_override: Field | None = None) -> Algebra:
    _expect(isinstance(obj, dict), "algebra must be an object")
    if "vertices" in obj:
        alg = algebra_from_presentation(presentation_from_json(obj, field_override))
    elif "structure" in obj:
        field = field_override or field_from_json(obj.get("field", {"kind": "Q"}))
        dim = obj.get("dim")
        _expect(isinstance(dim, int) and dim >= 0, "dim must be a non-negative integer")
        _cap(dim, "algebra")
        labels = obj.get("basis", [f"b{i}" for i in range(dim)])
        _expect(isinstance(labels, list) and len(labels) == dim, "basis must list dim labels")
        structure = obj["structure"]
        _expect(isinstance(structure, list) and len(structure) == dim, "structure must be dim x dim x dim")
        table = []
        for row in structure:
            _expect(isinstance(row, list) and len(row) == dim, "structure must be dim x dim x dim")
            trow = []
            for vec in row:
                _expect(isinstance(vec, list) and len(vec) == dim, "structure must be dim x dim x dim")
                trow.append([parse_scalar(field, x) for x in vec])
            table.append(trow)
        idem = obj.get("idempotents")
        _expect(isinstance(idem, list) and idem, "idempotents must be a non-empty list of index lists")
        for s in idem:
            _expect(isinstance(s, list) and all(isinstance(i, int) and 0 <= i < dim for i in s), "bad idempotent indices")
        if "unit" in obj:
            unit = [parse_scalar(field, x) for x in obj["unit"]]
            _expect(len(unit) == dim, "unit must have dim entries")
        else:
            unit = [field.zero] * dim
            for s in idem:
                for i in s:
                    unit[i] = field.one
        vnames = obj.get("vertex_names") or [str(i) for i in range(len(idem))]
        alg = Algebra.from_structure(field, [str(x) for x in labels], table, unit, idem, vertex_names=tuple(vnames))
        check_algebra(alg)
    else:
        raise InputError("algebra file needs either vertices (presentation) or structure (dump)")
    _cap(alg.dim, "algebra")
    return alg


def algebra_to_json(a: Algebra) -> dict:
    out = {
        "schema": SCHEMA,
        "field": field_to_json(a.field),
        "dim": a.dim,
        "basis": list(a.labels),
        "structure": [[[a.field.format_scalar(x) for x in vec] for vec in row] for row in a.structure_table()],
        "idempotents": [list(s) for s in a.idempotents],
        "unit": [a.field.format_scalar(x) for x in a.unit],
        "vertex_names": list(a.vertex_names),
    }
    return out


def presentation_to_json(p: QuiverPresentation) -> dict:
    return {
        "schema": SCHEMA,
        "field": field_to_json(p.field),
        "vertices": list(p.vertices),
        "arrows": [{"name": n, "from": s, "to": t} for n, s, t in p.arrows],
        "relations": [[{"coeff": p.field.format_scalar(c), "path": list(path)} for c, path in rel] for rel in p.relations],
        "length_bound": p.length_bound,
    }


class Loader:
    """Resolves file references, sharing one Algebra object per algebra file."""

    def __init__(self, field_override: Field | None = None):
        self.field_override = field_override
        self._algebras: dict = {}

    def algebra(self, ref, base: Path | None = None) -> Algebra:
        if isinstance(ref, str):
            path = (base / ref) if base is not None and not os.path.isabs(ref) else Path(ref)
            key = str(path.resolve())
            if key not in self._algebras:
                self._algebras[key] = algebra_from_json(read_json(path), self.field_override)
            return self._algebras[key]
        return algebra_from_json(ref, self.field_override)

    def module(self, ref, algebra: Algebra | None = None, base: Path | None = None) -> Module:
        if isinstance(ref, str):
            path = (base / ref) if base is not None and not os.path.isabs(ref) else Path(ref)
            obj = read_json(path)
            base = path.parent
        else:
            obj = ref
        _expect(isinstance(obj, dict), "module must be an object")
        if algebra is None:
            _expect("algebra" in obj, "module file needs an algebra")
            algebra = self.algebra(obj["algebra"], base)
        return module_from_json(obj, algebra)


def module_from_json(obj, a: Algebra) -> Module:
    field = a.field
    dim = obj.get("dim")
    _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 0, "module dim must be a non-negative integer")
    _cap(dim, "module")
    action = obj.get("action", {})
    _expect(isinstance(action, dict), "action must map basis labels to matrices")
    index = {lab: i for i, lab in enumerate(a.labels)}
    for lab in action:
        _expect(lab in index, f"unknown basis label {lab!r}")
    mats: list = [None] * a.dim
    for lab, rows in action.items():
        mats[index[lab]] = matrix_from_json(field, rows, dim, dim)
    _fill_defaults(a, mats, dim)
    mod = Module(a, mats, check=False, name=obj.get("name"))
    check_module(mod)
    return mod


def _fill_defaults(a: Algebra, mats: list, dim: int) -> None:
    """Omitted labels: the unit acts as the identity, paths act as products
    of their arrows when those are given, everything else acts as zero."""
    field = a.field
    unit_idx = [i for i, c in enumerate(a.unit) if c != 0]
    if a.paths is not None:
        arrows = {}
        for i, (_, _, word) in enumerate(a.paths):
            if len(word) == 1:
                arrows[word[0]] = i
        for i, (_, _, word) in enumerate(a.paths):
            if mats[i] is not None:
                continue
            if len(word) == 0:
                if len(unit_idx) == 1 and unit_idx[0] == i:
                    mats[i] = field.identity(dim)
                continue
            if len(word) >= 2 and all(w in arrows and mats[arrows[w]] is not None for w in word):
                m = field.identity(dim)
                for w in word:
                    m = m * mats[arrows[w]]
                mats[i] = m
    elif len(unit_idx) == 1 and mats[unit_idx[0]] is None:
        mats[unit_idx[0]] = field.identity(dim)
    for i in range(a.dim):
        if mats[i] is None:
            mats[i] = field.zeros(dim, dim)


def module_to_json(x: Module, algebra_ref=None) -> dict:
    out = {
        "schema": SCHEMA,
        "dim": x.dim,
        "action": {lab: matrix_to_json(x.field, m) for lab, m in zip(x.algebra.labels, x.action)},
    }
    if x.name:
        out["name"] = x.name
    if algebra_ref is not None:
        out["algebra"] = algebra_ref
    return out


def instance_from_json(path, loader: Loader):
    from .correspondence import ClusterTiltingInstance

    path = Path(path)
    obj = read_json(path)
    _expect(isinstance(obj, dict), "instance must be an object")
    for key in ("algebra", "module", "d", "catalogue"):
        _expect(key in obj, f"instance needs {key!r}")
    d = obj["d"]
    _expect(isinstance(d, int) and not isinstance(d, bool) and d >= 1, "d must be a positive integer")
    base = path.parent
    a = loader.algebra(obj["algebra"], base)
    m = loader.module(obj["module"], a, base)
    cat_refs = obj["catalogue"]
    _expect(isinstance(cat_refs, list), "catalogue must be a list")
    cat = [loader.module(r, a, base) for r in cat_refs]
    labels = []
    for r, mod in zip(cat_refs, cat):
        labels.append(mod.name or (r if isinstance(r, str) else f"#{len(labels)}"))
    inst = ClusterTiltingInstance(a, m, d, cat, obj.get("name", path.stem))
    inst.validate()
    return inst, labels


# complexes ------------------------------------------------------------------


def complex_to_json(cat, x, labels: list[str]) -> dict:
    field = cat.field
    diffs = []
    for i, m in enumerate(x.maps):
        src, tgt = x.terms[i + 1], x.terms[i]
        blocks = cat.blocks(src, tgt, m)
        entries = []
        for (ti, sj), coeffs in sorted(blocks.items()):
            if any(c != 0 for c in coeffs):
                entries.append({"target": ti, "source": sj, "coords": [field.format_scalar(c) for c in coeffs]})
        diffs.append(entries)
    return {
        "schema": SCHEMA,
        "summands": list(labels),
        "terms": x.multiplicities(len(cat.reps)),
        "differentials": diffs,
    }


def complex_from_json(cat, obj):
    from .complexes import ComplexObject

    _expect(isinstance(obj, dict), "complex must be an object")
    terms_raw = obj.get("terms")
    _expect(isinstance(terms_raw, list) and len(terms_raw) >= 1, "terms must be a non-empty list")
    r = len(cat.reps)
    terms = []
    for mult in terms_raw:
        _expect(isinstance(mult, list) and len(mult) == r, f"each term lists {r} multiplicities")
        _expect(all(isinstance(k, int) and k >= 0 for k in mult), "multiplicities are non-negative integers")
        terms.append(tuple(c for c in range(r) for _ in range(mult[c])))
    diffs = obj.get("differentials", [])
    _expect(isinstance(diffs, list) and len(diffs) == len(terms) - 1, "need one differential per consecutive pair")
    maps = []
    for i, entries in enumerate(diffs):
        src, tgt = terms[i + 1], terms[i]
        blocks = {}
        for e in entries:
            ti, sj = e.get("target"), e.get("source")
            _expect(isinstance(ti, int) and 0 <= ti < len(tgt), "bad target position")
            _expect(isinstance(sj, int) and 0 <= sj < len(src), "bad source position")
            n = len(cat.local_basis(src[sj], tgt[ti]))
            coeffs = e.get("coords", [])
            _expect(isinstance(coeffs, list) and len(coeffs) == n, f"block needs {n} coordinates")
            blocks[(ti, sj)] = [parse_scalar(cat.field, c) for c in coeffs]
        maps.append(cat.from_blocks(src, tgt, blocks))
    return ComplexObject(terms, maps)
