"""Finite-dimensional algebras given by structure constants.

Paths compose left to right: the product ``p*q`` means "first p, then q", so a
right module is the same thing as a representation of the quiver.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from typing import Sequence

from . import exactla as la
from .errors import FieldTooSmall, InputError, NotAdmissible
from .exactla import Field


@dataclass(frozen=True)
class QuiverPresentation:
    field: Field
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (name, source, target)
    relations: tuple[tuple[tuple[object, tuple[str, ...]], ...], ...]
    length_bound: int

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("duplicate arrow names")
        for name, src, tgt in self.arrows:
            if src not in vset or tgt not in vset:
                raise InputError(f"arrow {name} has an undeclared endpoint")
        if self.length_bound < 2:
            raise InputError("length_bound must be at least 2")
        ends = {a[0]: (a[1], a[2]) for a in self.arrows}
        for rel in self.relations:
            if not rel:
                raise InputError("empty relation")
            lengths = set()
            endpoints = set()
            for _, path in rel:
                if len(path) < 2:
                    raise InputError(f"relation path {path} has length < 2")
                for a in path:
                    if a not in ends:
                        raise InputError(f"unknown arrow {a} in relation")
                for a, b in zip(path, path[1:]):
                    if ends[a][1] != ends[b][0]:
                        raise InputError(f"relation path {'*'.join(path)} is not composable")
                lengths.add(len(path))
                endpoints.add((ends[path[0]][0], ends[path[-1]][1]))
            if len(lengths) != 1:
                raise InputError("only length-homogeneous relations are supported")
            if len(endpoints) != 1:
                raise InputError("relation mixes paths with different endpoints")


@dataclass(eq=False)
class Algebra:
    """Associative unital algebra with a basis adapted to a set of idempotents.

    ``right_mult[j]`` is the matrix of ``x -> x * b_j`` on row vectors, so
    ``right_mult[j][i, k]`` is the coefficient of ``b_k`` in ``b_i * b_j``.
    ``idempotents[v]`` lists the basis indices whose sum is ``e_v``.
    """

    field: Field
    labels: tuple[str, ...]
    right_mult: tuple
    unit: tuple
    idempotents: tuple[tuple[int, ...], ...]
    vertex_names: tuple[str, ...] = ()
    paths: tuple | None = None
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.vertex_names:
            self.vertex_names = tuple(str(i) for i in range(len(self.idempotents)))

    @classmethod
    def from_structure(cls, field: Field, labels, structure, unit, idempotents, **kw) -> "Algebra":
        """Build from ``structure[i][j]`` = coordinates of ``b_i * b_j``."""
        n = len(labels)
        mats = []
        for j in range(n):
            flat = [field.scalar(structure[i][j][k]) for i in range(n) for k in range(n)]
            mats.append(field.from_flat(n, n, flat))
        return cls(
            field,
            tuple(labels),
            tuple(mats),
            tuple(field.scalar(u) for u in unit),
            tuple(tuple(s) for s in idempotents),
            **kw,
        )

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, vertices={list(self.vertex_names)}, field={self.field})"

    # elements

    def basis_vector(self, i: int):
        v = self.field.zeros(1, self.dim)
        v[0, i] = 1
        return v

    def element(self, coords: Sequence):
        return self.field.from_flat(1, self.dim, coords)

    def unit_vector(self):
        return self.field.from_flat(1, self.dim, self.unit)

    def idempotent_vector(self, v: int):
        out = self.field.zeros(1, self.dim)
        for i in self.idempotents[v]:
            out[0, i] = 1
        return out

    def multiply(self, x, y):
        """Product of two row-vector elements."""
        out = self.field.zeros(1, self.dim)
        for j, c in enumerate(y.entries()):
            if c != 0:
                out += (x * self.right_mult[j]) * c
        return out

    def right_action(self, y):
        """Matrix of ``x -> x * y`` for an element ``y``."""
        return la.linear_combination(self.field, y.entries(), self.right_mult, self.dim, self.dim)

    def product_coords(self, i: int, j: int) -> list:
        n = self.dim
        flat = self.right_mult[j].entries()
        return flat[i * n : (i + 1) * n]

    @property
    def left_mult(self) -> tuple:
        """``left_mult[i]`` is the matrix of ``x -> b_i * x``."""
        if "left" not in self._cache:
            n = self.dim
            rows = [[self.product_coords(i, k) for k in range(n)] for i in range(n)]
            self._cache["left"] = tuple(self.field.matrix(rows[i]) if n else self.field.zeros(0, 0) for i in range(n))
        return self._cache["left"]

    @property
    def block_of(self) -> tuple[tuple[int, int], ...]:
        """For each basis element b, the unique (v, w) with e_v b e_w = b."""
        if "blocks" not in self._cache:
            self._cache["blocks"] = _compute_blocks(self)
        return self._cache["blocks"]

    @property
    def generators(self) -> tuple[int, ...]:
        """Basis indices that, together with the idempotents, generate the algebra."""
        if "gens" not in self._cache:
            self._cache["gens"] = _greedy_generators(self)
        return self._cache["gens"]

    def structure_table(self) -> list:
        n = self.dim
        return [[self.product_coords(i, j) for j in range(n)] for i in range(n)]


def _compute_blocks(a: Algebra):
    idem = [a.idempotent_vector(v) for v in range(len(a.idempotents))]
    blocks = []
    for i in range(a.dim):
        b = a.basis_vector(i)
        found = []
        for v, ev in enumerate(idem):
            left_part = a.multiply(ev, b)
            if left_part != b:
                if not la.is_zero_matrix(left_part):
                    break
                continue
            for w, ew in enumerate(idem):
                right_part = a.multiply(b, ew)
                if right_part == b:
                    found.append((v, w))
        if len(found) != 1:
            raise InputError(f"basis element {a.labels[i]} is not homogeneous for the idempotents")
        blocks.append(found[0])
    return tuple(blocks)


def _greedy_generators(a: Algebra) -> tuple[int, ...]:
    field = a.field
    n = a.dim
    chosen: list[int] = []
    idem = [a.idempotent_vector(v) for v in range(len(a.idempotents))]

    def closure(gens):
        vecs = idem + [a.basis_vector(g) for g in gens]
        span, piv = la.row_space(la.vstack(field, vecs, n))
        while True:
            new = [span]
            for g in gens:
                new.append(span * a.right_mult[g])
            grown, piv2 = la.row_space(la.vstack(field, new, n))
            if len(piv2) == len(piv):
                return span, piv
            span, piv = grown, piv2

    span, piv = closure(chosen)
    for i in range(n):
        if len(piv) == n:
            break
        if la.in_row_space(span, piv, a.basis_vector(i)):
            continue
        chosen.append(i)
        span, piv = closure(chosen)
    return tuple(chosen)


def check_algebra(a: Algebra) -> None:
    """Raise ``InputError`` unless associativity, unit and idempotent axioms hold."""
    n = a.dim
    field = a.field
    R = a.right_mult
    for j in range(n):
        for l in range(n):
            lhs = R[j] * R[l]
            rhs = la.linear_combination(field, a.product_coords(j, l), R, n, n)
            if lhs != rhs:
                raise InputError(f"associativity fails for ({a.labels[j]}, {a.labels[l]})")
    u = a.unit_vector()
    for i in range(n):
        b = a.basis_vector(i)
        if a.multiply(u, b) != b or a.multiply(b, u) != b:
            raise InputError("unit is not a two-sided identity")
    idem = [a.idempotent_vector(v) for v in range(len(a.idempotents))]
    total = field.zeros(1, n)
    for v, ev in enumerate(idem):
        total += ev
        for w, ew in enumerate(idem):
            prod = a.multiply(ev, ew)
            expected = ev if v == w else field.zeros(1, n)
            if prod != expected:
                raise InputError("idempotents are not orthogonal idempotents")
    if total != u:
        raise InputError("idempotents do not sum to the unit")
    seen = sorted(i for s in a.idempotents for i in s)
    if len(seen) != len(set(seen)):
        raise InputError("idempotent index sets overlap")
    a.block_of  # raises on inhomogeneous basis


# construction from a quiver with relations -------------------------------


def _paths_of_length(pres: QuiverPresentation, length: int):
    if length == 0:
        return [(v, v, ()) for v in pres.vertices]
    out = []
    prev = _paths_of_length(pres, length - 1)
    for src, tgt, arrows in prev:
        for name, s, t in pres.arrows:
            if s == tgt:
                out.append((src, t, arrows + (name,)))
    return out


def algebra_from_presentation(pres: QuiverPresentation) -> Algebra:
    """Quotient of the path algebra by the ideal generated by the relations.

    Reduction runs one path length at a time; relations are homogeneous so
    the ideal is spanned degreewise by the products ``u * r * w``.
    """
    field = pres.field
    ends = {a[0]: (a[1], a[2]) for a in pres.arrows}
    rels = [[(field.scalar(c), tuple(p)) for c, p in rel] for rel in pres.relations]

    basis: list[tuple] = []
    reducer: dict[int, dict] = {}
    by_length: list[list[tuple]] = []
    stop = None
    for length in range(pres.length_bound + 1):
        paths = _paths_of_length(pres, length)
        if not paths:
            stop = length
            break
        index = {p[2]: i for i, p in enumerate(paths)}
        if length < 2:
            normal = list(range(len(paths)))
            table = {p[2]: {p[2]: field.one} for p in paths}
        else:
            rows = []
            for rel in rels:
                rlen = len(rel[0][1])
                src, tgt = ends[rel[0][1][0]][0], ends[rel[0][1][-1]][1]
                for ulen in range(length - rlen + 1):
                    wlen = length - rlen - ulen
                    for u in _paths_of_length(pres, ulen):
                        if u[1] != src:
                            continue
                        for w in _paths_of_length(pres, wlen):
                            if w[0] != tgt:
                                continue
                            row = [field.zero] * len(paths)
                            for c, p in rel:
                                row[index[u[2] + p + w[2]]] += c
                            rows.append(row)
            if rows:
                r, pivots = la.rref(field.matrix(rows))
            else:
                r, pivots = field.zeros(0, len(paths)), []
            pset = set(pivots)
            normal = [j for j in range(len(paths)) if j not in pset]
            flat = r.entries()
            nc = len(paths)
            table = {}
            for j in normal:
                table[paths[j][2]] = {paths[j][2]: field.one}
            for i, pc in enumerate(pivots):
                expr = {}
                for j in normal:
                    x = flat[i * nc + j]
                    if x != 0:
                        expr[paths[j][2]] = -x
                table[paths[pc][2]] = expr
        if not normal:
            stop = length
            break
        if length == pres.length_bound:
            raise NotAdmissible(paths[normal[0]][2], pres.length_bound)
        by_length.append([paths[j] for j in normal])
        reducer[length] = table
        basis.extend(paths[j] for j in normal)
    if stop is None:
        stop = pres.length_bound

    pos = {p[2] if p[2] else ("e", p[0]): i for i, p in enumerate(basis)}

    def key(p):
        return p[2] if p[2] else ("e", p[0])

    n = len(basis)
    structure = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            if p[1] != q[0]:
                continue
            if not p[2]:
                structure[i][j][j] = field.one
                continue
            if not q[2]:
                structure[i][j][i] = field.one
                continue
            word = p[2] + q[2]
            if len(word) >= stop:
                continue
            for nf, c in reducer[len(word)][word].items():
                structure[i][j][pos[nf]] += c
    labels = [f"e_{p[0]}" if not p[2] else "*".join(p[2]) for p in basis]
    unit = [field.one if not p[2] else field.zero for p in basis]
    idempotents = [(pos[("e", v)],) for v in pres.vertices]
    alg = Algebra.from_structure(
        field,
        labels,
        structure,
        unit,
        idempotents,
        vertex_names=tuple(pres.vertices),
        paths=tuple(basis),
    )
    alg._cache["presentation"] = pres
    return alg


# radical and opposite -----------------------------------------------------


def radical(a: Algebra):
    """Basis (as rows) of the Jacobson radical via the trace form.

    ``J = {x : tr(L_{x y}) = 0 for all y}``; valid in characteristic 0 and
    for p > dim.
    """
    if "radical" in a._cache:
        return a._cache["radical"]
    n = a.dim
    field = a.field
    if field.kind == "Fp" and field.p <= n:
        raise FieldTooSmall(field.p, n)
    # tr(L_{b_k}) = sum_j coeff of b_j in b_k b_j
    traces = []
    for k in range(n):
        t = field.zero
        for j in range(n):
            t += a.right_mult[j][k, j]
        traces.append(t)
    tvec = field.from_flat(n, 1, traces)
    gram_cols = [a.right_mult[j] * tvec for j in range(n)]  # column j: tr(L_{b_i b_j}) over i
    gram = la.hstack(field, gram_cols, n) if n else field.zeros(0, 0)
    rad = la.left_kernel(gram)
    rad, _ = la.row_space(rad) if rad.nrows() else (rad, [])
    a._cache["radical"] = rad
    return rad


def opposite(a: Algebra) -> Algebra:
    """Same basis, multiplication reversed; ``opposite(opposite(a)) is a``."""
    if "opposite" in a._cache:
        return a._cache["opposite"]
    op = Algebra(
        a.field,
        a.labels,
        a.left_mult,
        a.unit,
        a.idempotents,
        vertex_names=a.vertex_names,
        paths=None,
    )
    op._cache["opposite"] = a
    a._cache["opposite"] = op
    return op


def is_semisimple(a: Algebra) -> bool:
    return radical(a).nrows() == 0


def cartan_matrix(a: Algebra) -> list[list[int]]:
    """``C[v][w] = dim e_v A e_w`` for the distinguished idempotents."""
    k = len(a.idempotents)
    out = [[0] * k for _ in range(k)]
    for v, w in a.block_of:
        out[v][w] += 1
    return out


def radical_power_dims(a: Algebra) -> list[int]:
    """Dimensions of J, J^2, ... until zero (nilpotency witness)."""
    field = a.field
    J = radical(a)
    dims = []
    cur = J
    steps = 0
    while cur.nrows() and steps <= a.dim:
        dims.append(cur.nrows())
        prods = []
        for row in range(cur.nrows()):
            x = la.submatrix(field, cur, [row], range(a.dim))
            for r in range(J.nrows()):
                y = la.submatrix(field, J, [r], range(a.dim))
                prods.append(a.multiply(x, y))
        cur = la.row_space(la.vstack(field, prods, a.dim))[0] if prods else field.zeros(0, a.dim)
        steps += 1
    dims.append(cur.nrows())
    return dims
