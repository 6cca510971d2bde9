"""Projective covers, injective envelopes, resolutions, Ext and the
homological dimensions built on them."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import exactla as la
from .algebra import Algebra, opposite
from .errors import InputError
from .modules import (
    Module,
    ModuleMap,
    direct_sum,
    dualize,
    hom_space,
    indecomposable_iso,
    kernel,
    cokernel,
)
from .standard import standard_modules


@dataclass
class Cover:
    """``epi: P -> X`` with P a sum of indecomposable projectives.

    ``blocks`` lists the class index of each summand of P (in order), indices
    into ``standard_modules(A).projectives``.
    """

    module: Module
    map: ModuleMap
    blocks: list


@dataclass
class ResolutionStep:
    """One term of a minimal projective resolution.

    ``map`` is ``P_i -> P_{i-1}`` (the augmentation ``P_0 -> X`` for i = 0) and
    ``syzygy`` is its kernel, the next module to cover.
    """

    object: Module
    map: ModuleMap
    syzygy: Module
    syzygy_inclusion: ModuleMap
    blocks: list


@dataclass
class CoresolutionStep:
    """``map: I^{i-1} -> I^i`` (``X -> I^0`` for i = 0); ``cosyzygy`` is its cokernel."""

    object: Module
    map: ModuleMap
    cosyzygy: Module
    cosyzygy_projection: ModuleMap
    blocks: list


@dataclass
class DimensionResult:
    value: int | None
    exceeds: bool
    bound: int
    witnesses: dict = dc_field(default_factory=dict)

    def at_most(self, n: int) -> bool:
        return not self.exceeds and self.value is not None and self.value <= n

    def at_least(self, n: int) -> bool:
        return self.exceeds or (self.value is not None and self.value >= n)

    def display(self):
        return f">{self.bound}" if self.exceeds else self.value


def _module_radical_rows(x: Module):
    """Rows spanning X J."""
    a = x.algebra
    field = x.field
    st = standard_modules(a)
    J = st.radical_rows
    mats = []
    for r in range(J.nrows()):
        mats.append(x.act(la.submatrix(field, J, [r], range(a.dim))))
    if not mats or x.dim == 0:
        return field.zeros(0, x.dim)
    return la.vstack(field, mats, x.dim)


def top_dimension(x: Module) -> int:
    return x.dim - la.rank(_module_radical_rows(x))


def projective_cover(x: Module) -> Cover:
    """Minimal projective cover, assembled from a basis of the top ``X / X J``."""
    if "cover" in x._cache:
        return x._cache["cover"]
    a = x.algebra
    field = x.field
    st = standard_modules(a)
    span_rows = _module_radical_rows(x)
    span, piv = la.row_space(span_rows) if span_rows.nrows() else (field.zeros(0, x.dim), [])
    chosen = []  # (class index, vector)
    for i, p in enumerate(st.projectives):
        fx = x.act(p.idempotent)
        for r in range(fx.nrows()):
            if len(piv) == x.dim:
                break
            v = la.submatrix(field, fx, [r], range(x.dim))
            if la.in_row_space(span, piv, v):
                continue
            chosen.append((i, v))
            span, piv = la.row_space(la.vstack(field, [span, v], x.dim))
    parts = [st.projectives[i].module for i, _ in chosen]
    pmod, _, _ = direct_sum(parts, a)
    blocks = []
    for i, v in chosen:
        p = st.projectives[i]
        # basis element b of f A (an algebra vector) maps to v . b
        for r in range(p.basis.nrows()):
            blocks.append(v * x.act(la.submatrix(field, p.basis, [r], range(a.dim))))
    epi = la.vstack(field, blocks, x.dim) if blocks else field.zeros(0, x.dim)
    cov = Cover(pmod, ModuleMap(pmod, x, epi), [i for i, _ in chosen])
    x._cache["cover"] = cov
    return cov


def injective_envelope(x: Module) -> Cover:
    """Minimal injective envelope ``mono: X -> I`` via duality.

    ``blocks`` index ``standard_modules(A).injectives``.
    """
    if "envelope" in x._cache:
        return x._cache["envelope"]
    a = x.algebra
    dx = dualize(x)
    cov = projective_cover(dx)
    inj = dualize(cov.module)
    st = standard_modules(a)
    op_projs = standard_modules(opposite(a)).projectives
    # injectives[i] of A is D of some projective of A^op; match indices once
    key = "inj_index"
    if key not in a._cache:
        mapping = []
        for p in op_projs:
            dp = dualize(p.module)
            mapping.append(next(i for i, q in enumerate(st.injectives) if indecomposable_iso(q, dp) is not None))
        a._cache[key] = mapping
    mapping = a._cache[key]
    mono = ModuleMap(x, inj, cov.map.matrix.transpose())
    env = Cover(inj, mono, [mapping[b] for b in cov.blocks])
    x._cache["envelope"] = env
    return env


def min_proj_resolution(x: Module, length: int) -> list[ResolutionStep]:
    """Steps ``P_0, ..., P_k`` with k <= length, stopping when a syzygy vanishes."""
    if length < 0:
        raise InputError("length must be non-negative")
    steps = []
    cur = x
    prev_inclusion = None
    for i in range(length + 1):
        if cur.dim == 0:
            break
        cov = projective_cover(cur)
        syz, inc = kernel(cov.map)
        m = cov.map.matrix if prev_inclusion is None else cov.map.matrix * prev_inclusion.matrix
        target = x if prev_inclusion is None else steps[-1].object
        steps.append(ResolutionStep(cov.module, ModuleMap(cov.module, target, m), syz, inc, cov.blocks))
        prev_inclusion = inc
        cur = syz
    return steps


def min_inj_coresolution(x: Module, length: int) -> list[CoresolutionStep]:
    if length < 0:
        raise InputError("length must be non-negative")
    steps = []
    cur = x
    prev_projection = None
    for i in range(length + 1):
        if cur.dim == 0:
            break
        env = injective_envelope(cur)
        cosyz, proj = cokernel(env.map)
        m = env.map.matrix if prev_projection is None else prev_projection.matrix * env.map.matrix
        source = x if prev_projection is None else steps[-1].object
        steps.append(CoresolutionStep(env.module, ModuleMap(source, env.module, m), cosyz, proj, env.blocks))
        prev_projection = proj
        cur = cosyz
    return steps


def syzygy(x: Module) -> Module:
    return kernel(projective_cover(x).map)[0]


def _rank_of_maps(mats: list, nrows: int, ncols: int, field) -> int:
    if not mats or nrows * ncols == 0:
        return 0
    flat = [v for m in mats for v in m.entries()]
    return la.rank(field.from_flat(len(mats), nrows * ncols, flat))


def ext_dim(x: Module, y: Module, i: int) -> int:
    """dim Ext^i(X, Y) from ``Hom(P_., Y)`` for the minimal projective resolution of X."""
    if i < 0:
        raise InputError("degree must be non-negative")
    field = x.field
    steps = min_proj_resolution(x, i + 1)
    terms = [s.object for s in steps]
    if i >= len(terms):
        return 0
    hi = hom_space(terms[i], y)
    # delta_{i+1}: Hom(P_i, Y) -> Hom(P_{i+1}, Y), phi -> d_{i+1} phi
    if i + 1 < len(terms):
        d = steps[i + 1].map.matrix
        r_out = _rank_of_maps([d * phi for phi in hi.basis], terms[i + 1].dim, y.dim, field)
    else:
        r_out = 0
    if i >= 1:
        d = steps[i].map.matrix
        hprev = hom_space(terms[i - 1], y)
        r_in = _rank_of_maps([d * phi for phi in hprev.basis], terms[i].dim, y.dim, field)
    else:
        r_in = 0
    return hi.dim - r_out - r_in


def ext_dim_injective(x: Module, y: Module, i: int) -> int:
    """dim Ext^i(X, Y) from ``Hom(X, I^.)`` for the minimal injective coresolution of Y."""
    if i < 0:
        raise InputError("degree must be non-negative")
    field = x.field
    steps = min_inj_coresolution(y, i + 1)
    terms = [s.object for s in steps]
    if i >= len(terms):
        return 0
    hi = hom_space(x, terms[i])
    if i + 1 < len(terms):
        d = steps[i + 1].map.matrix
        r_out = _rank_of_maps([phi * d for phi in hi.basis], x.dim, terms[i + 1].dim, field)
    else:
        r_out = 0
    if i >= 1:
        d = steps[i].map.matrix
        hprev = hom_space(x, terms[i - 1])
        r_in = _rank_of_maps([phi * d for phi in hprev.basis], x.dim, terms[i].dim, field)
    else:
        r_in = 0
    return hi.dim - r_out - r_in


def _summary(steps) -> list:
    return [{"dim": s.object.dim, "blocks": list(s.blocks)} for s in steps]


def proj_dim(x: Module, bound: int) -> DimensionResult:
    steps = min_proj_resolution(x, bound)
    if steps and steps[-1].syzygy.dim != 0:
        return DimensionResult(None, True, bound, {"resolution": _summary(steps)})
    value = max(len(steps) - 1, 0)
    return DimensionResult(value, False, bound, {"resolution": _summary(steps)})


def inj_dim(x: Module, bound: int) -> DimensionResult:
    steps = min_inj_coresolution(x, bound)
    if steps and steps[-1].cosyzygy.dim != 0:
        return DimensionResult(None, True, bound, {"coresolution": _summary(steps)})
    value = max(len(steps) - 1, 0)
    return DimensionResult(value, False, bound, {"coresolution": _summary(steps)})


def global_dimension(a: Algebra, bound: int) -> DimensionResult:
    """Maximum projective dimension over the simples."""
    st = standard_modules(a)
    per = []
    best = 0
    exceeds = False
    for i, s in enumerate(st.simples):
        r = proj_dim(s, bound)
        per.append({"simple": i, "proj_dim": r.display(), "resolution": r.witnesses["resolution"]})
        if r.exceeds:
            exceeds = True
        else:
            best = max(best, r.value)
    return DimensionResult(None if exceeds else best, exceeds, bound, {"simples": per})


def projective_injective_classes(a: Algebra) -> list[tuple[int, int]]:
    """Pairs (projective index, injective index) of isomorphic indecomposables."""
    key = "proj_inj"
    if key not in a._cache:
        st = standard_modules(a)
        pairs = []
        for i, p in enumerate(st.projectives):
            for j, q in enumerate(st.injectives):
                if indecomposable_iso(p.module, q) is not None:
                    pairs.append((i, j))
                    break
        a._cache[key] = pairs
    return a._cache[key]


def dominant_dimension(a: Algebra, bound: int) -> DimensionResult:
    """Largest n < bound such that the first n terms of every minimal injective
    coresolution of an indecomposable projective are projective-injective.

    Exceeds when, for every projective, the first ``bound`` terms are
    projective-injective (this includes finite coresolutions made only of
    projective-injectives, i.e. infinite dominant dimension).
    """
    if bound < 1:
        raise InputError("bound must be at least 1")
    st = standard_modules(a)
    pi = {j for _, j in projective_injective_classes(a)}
    per = []
    overall = None
    for i, p in enumerate(st.projectives):
        steps = min_inj_coresolution(p.module, bound - 1)
        failing = next((k for k, s in enumerate(steps) if not all(b in pi for b in s.blocks)), None)
        ended = not steps or steps[-1].cosyzygy.dim == 0
        per.append(
            {
                "projective": i,
                "value": "exceeds" if failing is None else failing,
                "failing_term": failing,
                "finite_coresolution": ended,
                "coresolution": _summary(steps),
            }
        )
        if failing is not None:
            overall = failing if overall is None else min(overall, failing)
    if overall is None:
        return DimensionResult(None, True, bound, {"projectives": per})
    return DimensionResult(overall, False, bound, {"projectives": per})


def _hom_ranks_contravariant(xs: list[Module], ds: list, y: Module):
    """Hom dims and ranks of ``C(X^{k+1}, Y) -> C(X^k, Y)``, ``phi -> d^k phi``."""
    field = y.field
    dims = [hom_space(x, y).dim for x in xs]
    ranks = []
    for k, d in enumerate(ds):
        hs = hom_space(xs[k + 1], y)
        ranks.append(_rank_of_maps([d.matrix * phi for phi in hs.basis], xs[k].dim, y.dim, field))
    return dims, ranks


def _compositions_vanish(seq: list) -> bool:
    for f, g in zip(seq, seq[1:]):
        if not la.is_zero_matrix(f.matrix * g.matrix):
            return False
    return True


def is_n_cokernel(d0: ModuleMap, seq: list, tests: list) -> bool:
    """Whether ``0 -> C(X^{n+1},Y) -> ... -> C(X^1,Y) -> C(X^0,Y)`` is exact for all tested Y."""
    maps = [d0] + list(seq)
    if not _compositions_vanish(maps):
        return False
    xs = [d0.source] + [f.source for f in seq] + [seq[-1].target if seq else d0.target]
    n = len(seq)
    for y in tests:
        dims, ranks = _hom_ranks_contravariant(xs, maps, y)
        # injective at X^{n+1}
        if ranks[n] != dims[n + 1]:
            return False
        for k in range(1, n + 1):
            # kernel of C(X^k,Y) -> C(X^{k-1},Y) equals image of C(X^{k+1},Y)
            if dims[k] - ranks[k - 1] != ranks[k]:
                return False
    return True


def is_n_kernel(dn: ModuleMap, seq: list, tests: list) -> bool:
    """Dual: ``seq = (d^0, ..., d^{n-1})`` ending at the source of ``dn``;
    ``0 -> C(Y,X^0) -> ... -> C(Y,X^n) -> C(Y,X^{n+1})`` exact for all tested Y."""
    maps = list(seq) + [dn]
    if not _compositions_vanish(maps):
        return False
    xs = [f.source for f in maps] + [dn.target]
    n = len(seq)
    for y in tests:
        field = y.field
        dims = [hom_space(y, x).dim for x in xs]
        ranks = []
        for k, d in enumerate(maps):
            hs = hom_space(y, xs[k])
            ranks.append(_rank_of_maps([phi * d.matrix for phi in hs.basis], y.dim, xs[k + 1].dim, field))
        if ranks[0] != dims[0]:
            return False
        for k in range(1, n + 1):
            if dims[k] - ranks[k] != ranks[k - 1]:
                return False
    return True
