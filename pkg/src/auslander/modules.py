"""Right modules over an :class:`Algebra`, their maps and hom-spaces.

A module stores one matrix per algebra basis element; vectors are rows and
``x . b = x @ action[b]``.  A map ``f: X -> Y`` is a ``dim X x dim Y`` matrix
acting on the right, so "first f, then g" is the product ``F * G``.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field as dc_field

from . import exactla as la
from .algebra import Algebra, opposite
from .errors import FieldTooSmall, InputError, NonSplit


class Module:
    def __init__(self, algebra: Algebra, action, check: bool = True, name: str | None = None):
        self.algebra = algebra
        self.field = algebra.field
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise InputError(f"need {algebra.dim} action matrices, got {len(self.action)}")
        if algebra.dim:
            self.dim = self.action[0].nrows()
        else:
            self.dim = 0
        self.name = name
        self._cache: dict = {}
        if check:
            check_module(self)

    @classmethod
    def zero(cls, algebra: Algebra) -> "Module":
        z = algebra.field.zeros(0, 0)
        return cls(algebra, [z] * algebra.dim, check=False)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Module{tag} dim={self.dim} dimvec={self.dimension_vector()}>"

    def act(self, element):
        """Matrix of the action of an algebra element given as a row vector."""
        return la.linear_combination(self.field, element.entries(), self.action, self.dim, self.dim)

    def idempotent_action(self, v: int):
        if self.dim == 0:
            return self.field.zeros(0, 0)
        return la.linear_combination(
            self.field, [1] * len(self.algebra.idempotents[v]), [self.action[i] for i in self.algebra.idempotents[v]], self.dim, self.dim
        )

    def dimension_vector(self) -> tuple[int, ...]:
        if "dimvec" not in self._cache:
            self._cache["dimvec"] = tuple(la.rank(self.idempotent_action(v)) for v in range(len(self.algebra.idempotents)))
        return self._cache["dimvec"]

    def identity(self) -> "ModuleMap":
        return ModuleMap(self, self, self.field.identity(self.dim))


def check_module(x: Module) -> None:
    a = x.algebra
    n = x.dim
    for m in x.action:
        if m.nrows() != n or m.ncols() != n:
            raise InputError("action matrices must be square of the module dimension")
    if n == 0:
        return
    if x.act(a.unit_vector()) != x.field.identity(n):
        raise InputError("the unit does not act as the identity")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = x.action[i] * x.action[j]
            rhs = la.linear_combination(x.field, a.product_coords(i, j), x.action, n, n)
            if lhs != rhs:
                raise InputError(f"action violates the product {a.labels[i]} * {a.labels[j]}")


@dataclass
class ModuleMap:
    source: Module
    target: Module
    matrix: object

    def __post_init__(self):
        if self.matrix.nrows() != self.source.dim or self.matrix.ncols() != self.target.dim:
            raise InputError("map matrix has the wrong shape")

    def is_homomorphism(self) -> bool:
        x, y = self.source, self.target
        return all(x.action[i] * self.matrix == self.matrix * y.action[i] for i in range(x.algebra.dim))

    def then(self, other: "ModuleMap") -> "ModuleMap":
        if other.source is not self.target and other.source.dim != self.target.dim:
            raise InputError("maps are not composable")
        return ModuleMap(self.source, other.target, self.matrix * other.matrix)

    def rank(self) -> int:
        return la.rank(self.matrix)


# vertex-adapted bases ------------------------------------------------------


def _adapted(x: Module):
    """Basis of X concatenating bases of the pieces X e_v, with offsets."""
    if "adapted" in x._cache:
        return x._cache["adapted"]
    field = x.field
    pieces = []
    offsets = [0]
    for v in range(len(x.algebra.idempotents)):
        rows, _ = la.row_space(x.idempotent_action(v)) if x.dim else (field.zeros(0, 0), [])
        pieces.append(rows)
        offsets.append(offsets[-1] + rows.nrows())
    T = la.vstack(field, pieces, x.dim)
    if T.nrows() != x.dim:
        raise InputError("idempotent actions do not split the module")
    Tinv = la.inverse(T)
    data = (T, Tinv, offsets)
    x._cache["adapted"] = data
    return data


def _adapted_action(x: Module, g: int):
    key = ("adapted_act", g)
    if key not in x._cache:
        T, Tinv, _ = _adapted(x)
        x._cache[key] = T * x.action[g] * Tinv
    return x._cache[key]


class HomSpace:
    """A basis of Hom(X, Y) with a coordinate map."""

    def __init__(self, source: Module, target: Module, basis: list):
        self.source = source
        self.target = target
        self.basis = basis
        self._coord = None

    def __len__(self):
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def maps(self) -> list[ModuleMap]:
        return [ModuleMap(self.source, self.target, m) for m in self.basis]

    def _prepare(self):
        field = self.source.field
        k = len(self.basis)
        ncols = self.source.dim * self.target.dim
        flat = [x for m in self.basis for x in m.entries()]
        bm = field.from_flat(k, ncols, flat) if flat else field.zeros(k, ncols)
        _, pivots = la.rref(bm)
        sub = la.submatrix(field, bm, range(k), pivots)
        self._coord = (pivots, la.inverse(sub))

    def coords(self, matrix) -> list:
        """Coordinates of a map in this basis (assumes it is a homomorphism)."""
        if self._coord is None:
            self._prepare()
        pivots, inv = self._coord
        flat = matrix.entries()
        field = self.source.field
        v = field.from_flat(1, len(pivots), [flat[p] for p in pivots]) if pivots else field.zeros(1, 0)
        return list((v * inv).entries()) if pivots else []

    def combination(self, coeffs):
        return la.linear_combination(self.source.field, coeffs, self.basis, self.source.dim, self.target.dim)


def hom_space(x: Module, y: Module) -> HomSpace:
    if x.algebra is not y.algebra:
        raise InputError("modules live over different algebras")
    cache = x._cache.setdefault("hom", weakref.WeakKeyDictionary())
    if y in cache:
        return cache[y]
    hs = HomSpace(x, y, _hom_matrices(x, y))
    cache[y] = hs
    return hs


def hom_basis(x: Module, y: Module) -> list[ModuleMap]:
    return hom_space(x, y).maps()


def hom_dim(x: Module, y: Module) -> int:
    return hom_space(x, y).dim


def _hom_matrices(x: Module, y: Module) -> list:
    field = x.field
    a = x.algebra
    if x.dim == 0 or y.dim == 0:
        return []
    Tx, Txi, ox = _adapted(x)
    Ty, Tyi, oy = _adapted(y)
    nv = len(a.idempotents)
    dx = [ox[v + 1] - ox[v] for v in range(nv)]
    dy = [oy[v + 1] - oy[v] for v in range(nv)]
    uoff = [0]
    for v in range(nv):
        uoff.append(uoff[-1] + dx[v] * dy[v])
    nunk = uoff[-1]
    if nunk == 0:
        return []
    rows = []
    blocks = a.block_of
    for g in a.generators:
        v, w = blocks[g]
        if dx[v] * dy[w] == 0:
            continue
        ax = la.rows_of(la.submatrix(field, _adapted_action(x, g), range(ox[v], ox[v + 1]), range(ox[w], ox[w + 1])))
        ay = la.rows_of(la.submatrix(field, _adapted_action(y, g), range(oy[v], oy[v + 1]), range(oy[w], oy[w + 1])))
        # A_X F_w - F_v A_Y = 0, entry (i, j)
        for i in range(dx[v]):
            for j in range(dy[w]):
                row = [field.zero] * nunk
                for k in range(dx[w]):
                    c = ax[i][k]
                    if c != 0:
                        row[uoff[w] + k * dy[w] + j] += c
                for l in range(dy[v]):
                    c = ay[l][j]
                    if c != 0:
                        row[uoff[v] + i * dy[v] + l] -= c
                rows.append(row)
    if rows:
        ker = la.kernel_basis(field.matrix(rows))
    else:
        ker = field.identity(nunk)
    out = []
    kflat = ker.entries()
    kc = ker.ncols()
    for col in range(kc):
        fp = field.zeros(x.dim, y.dim)
        for v in range(nv):
            for i in range(dx[v]):
                for j in range(dy[v]):
                    c = kflat[(uoff[v] + i * dy[v] + j) * kc + col]
                    if c != 0:
                        fp[ox[v] + i, oy[v] + j] = c
        out.append(Txi * fp * Ty)
    return out


# kernels, cokernels, sums -------------------------------------------------


def submodule(x: Module, rows) -> tuple[Module, object]:
    """Submodule spanned by ``rows`` (assumed closed); returns it with its inclusion matrix."""
    field = x.field
    basis, pivots = la.row_space(rows) if rows.nrows() else (field.zeros(0, x.dim), [])
    k = basis.nrows()
    if k == 0:
        return Module.zero(x.algebra), field.zeros(0, x.dim)
    action = [la.submatrix(field, basis * m, range(k), pivots) for m in x.action]
    return Module(x.algebra, action, check=False), basis


def kernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    x = f.source
    rows = la.left_kernel(f.matrix) if x.dim else x.field.zeros(0, 0)
    k, inc = submodule(x, rows)
    return k, ModuleMap(k, x, inc)


def quotient(y: Module, rows) -> tuple[Module, object]:
    """Quotient of ``y`` by the submodule spanned by ``rows``; returns it with the projection."""
    field = y.field
    n = y.dim
    if rows.nrows():
        r, pivots = la.row_space(rows)
    else:
        r, pivots = field.zeros(0, n), []
    pset = set(pivots)
    free = [j for j in range(n) if j not in pset]
    q = len(free)
    proj = field.zeros(n, q)
    for t, j in enumerate(free):
        proj[j, t] = 1
    rflat = r.entries()
    for i, p in enumerate(pivots):
        for t, j in enumerate(free):
            c = rflat[i * n + j]
            if c != 0:
                proj[p, t] = -c
    if q == 0:
        return Module.zero(y.algebra), proj
    action = [la.submatrix(field, m, free, range(n)) * proj for m in y.action]
    return Module(y.algebra, action, check=False), proj


def cokernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    y = f.target
    c, proj = quotient(y, f.matrix)
    return c, ModuleMap(y, c, proj)


def image(f: ModuleMap) -> tuple[Module, ModuleMap, ModuleMap]:
    field = f.source.field
    im, inc = submodule(f.target, f.matrix)
    _, pivots = la.row_space(f.matrix) if f.matrix.nrows() else (None, [])
    epi = la.submatrix(field, f.matrix, range(f.source.dim), pivots)
    return im, ModuleMap(im, f.target, inc), ModuleMap(f.source, im, epi)


def direct_sum(parts, algebra: Algebra | None = None):
    """Biproduct: returns (sum, injections, projections)."""
    parts = list(parts)
    if not parts:
        if algebra is None:
            raise InputError("direct sum of nothing needs an algebra")
        return Module.zero(algebra), [], []
    a = parts[0].algebra
    field = a.field
    total = sum(p.dim for p in parts)
    action = [la.block_diag(field, [p.action[i] for p in parts]) for i in range(a.dim)]
    s = Module(a, action, check=False)
    inj, proj = [], []
    off = 0
    for p in parts:
        i = field.zeros(p.dim, total)
        pr = field.zeros(total, p.dim)
        for t in range(p.dim):
            i[t, off + t] = 1
            pr[off + t, t] = 1
        inj.append(ModuleMap(p, s, i))
        proj.append(ModuleMap(s, p, pr))
        off += p.dim
    return s, inj, proj


def dualize(x: Module) -> Module:
    """k-dual ``D X = Hom_k(X, k)`` as a right module over the opposite algebra."""
    return Module(opposite(x.algebra), [m.transpose() for m in x.action], check=False, name=x.name and f"D{x.name}")


def dualize_map(f: ModuleMap, dsource: Module, dtarget: Module) -> ModuleMap:
    """``D f: D Y -> D X``; pass the dual modules to keep object identity."""
    return ModuleMap(dsource, dtarget, f.matrix.transpose())


# decomposition -------------------------------------------------------------


@dataclass
class Summand:
    """One isomorphism class of indecomposable summands.

    ``inclusions[c]``: module -> X and ``projections[c]``: X -> module for each
    copy c; the sum over all summands and copies of projection * inclusion is
    the identity of X.
    """

    module: Module
    multiplicity: int
    inclusions: list = dc_field(default_factory=list)
    projections: list = dc_field(default_factory=list)


def _trace_radical(x: Module, basis: list):
    """Rows of coefficient vectors spanning the radical of a subalgebra of End_k(X)."""
    field = x.field
    if field.kind == "Fp" and field.p <= x.dim:
        raise FieldTooSmall(field.p, x.dim)
    k = len(basis)
    gram = field.zeros(k, k)
    for i in range(k):
        for j in range(k):
            gram[i, j] = la.trace(basis[i] * basis[j])
    return la.left_kernel(gram)


def _split_by_poly(phi):
    """Submodule row bases from the primary decomposition of ``phi``, or None."""
    mp = la.minpoly(phi)
    facs = la.factor_poly(mp)
    if len(facs) < 2:
        return None
    f0, e0 = facs[0]
    g1 = f0**e0
    g2 = mp // g1
    k1 = la.left_kernel(la.poly_eval_matrix(g1, phi))
    k2 = la.left_kernel(la.poly_eval_matrix(g2, phi))
    return k1, k2


def _find_splitting(x: Module, basis: list, reverse: bool = False):
    if len(basis) <= 1:
        return None
    rad = _trace_radical(x, basis)
    if len(basis) - rad.nrows() == 1:
        return None
    field = x.field
    order = list(reversed(basis)) if reverse else list(basis)
    for phi in order:
        s = _split_by_poly(phi)
        if s:
            return s
    ident = field.identity(x.dim)
    for phi in order:
        facs = la.factor_poly(la.minpoly(phi))
        f0 = facs[0][0]
        if f0.degree() != 1:
            continue
        lam = -f0.coeffs()[0]
        z = phi - ident * lam
        for psi in order:
            if la.trace(z * psi) != 0:
                s = _split_by_poly(z * psi)
                if s:
                    return s
    for i, phi in enumerate(order):
        for psi in order[i + 1 :]:
            for cand in (phi * psi, phi + psi, psi * phi):
                s = _split_by_poly(cand)
                if s:
                    return s
    raise NonSplit(len(basis) - rad.nrows())


def _pieces(x: Module, reverse: bool):
    """Indecomposable pieces as (module, inclusion, projection) matrices."""
    if x.dim == 0:
        return []
    split = _find_splitting(x, hom_space(x, x).basis, reverse)
    field = x.field
    if split is None:
        ident = field.identity(x.dim)
        return [(x, ident, ident)]
    k1, k2 = split
    m1, b1 = submodule(x, k1)
    m2, b2 = submodule(x, k2)
    binv = la.inverse(la.vstack(field, [b1, b2], x.dim))
    p1 = la.submatrix(field, binv, range(x.dim), range(m1.dim))
    p2 = la.submatrix(field, binv, range(x.dim), range(m1.dim, x.dim))
    out = []
    for m, b, p in ((m1, b1, p1), (m2, b2, p2)):
        for piece, inc, pr in _pieces(m, reverse):
            out.append((piece, inc * b, p * pr))
    return out


def is_local(x: Module) -> bool:
    """Whether End(X) is local with residue field k (the split indecomposable case)."""
    if x.dim == 0:
        return False
    basis = hom_space(x, x).basis
    rad = _trace_radical(x, basis)
    return len(basis) - rad.nrows() == 1


def indecomposable_iso(x: Module, y: Module):
    """Iso ``x -> y`` between split indecomposables, or None.

    Non-invertible maps between isomorphic indecomposables form a proper
    subspace of Hom(x, y), so some basis element is invertible iff x and y
    are isomorphic.
    """
    if x.dim != y.dim or x.dimension_vector() != y.dimension_vector():
        return None
    for m in hom_space(x, y).basis:
        if la.is_invertible(m):
            return m
    return None


def decompose(x: Module, reverse: bool = False) -> list[Summand]:
    key = ("decompose", reverse)
    if key in x._cache:
        return x._cache[key]
    classes: list[Summand] = []
    for piece, inc, pr in _pieces(x, reverse):
        for s in classes:
            theta = indecomposable_iso(s.module, piece)
            if theta is not None:
                s.multiplicity += 1
                s.inclusions.append(theta * inc)
                s.projections.append(pr * la.inverse(theta))
                break
        else:
            classes.append(Summand(piece, 1, [inc], [pr]))
    x._cache[key] = classes
    return classes


def isomorphism(x: Module, y: Module):
    """An invertible intertwiner ``x -> y`` as a matrix, or None."""
    if x.algebra is not y.algebra:
        raise InputError("modules live over different algebras")
    if x.dim != y.dim or x.dimension_vector() != y.dimension_vector():
        return None
    if x.dim == 0:
        return x.field.zeros(0, 0)
    dx, dy = decompose(x), decompose(y)
    if sorted(s.multiplicity for s in dx) != sorted(s.multiplicity for s in dy):
        return None
    total = x.field.zeros(x.dim, y.dim)
    used = set()
    for sx in dx:
        for t, sy in enumerate(dy):
            if t in used or sy.multiplicity != sx.multiplicity:
                continue
            theta = indecomposable_iso(sx.module, sy.module)
            if theta is None:
                continue
            used.add(t)
            for c in range(sx.multiplicity):
                total += sx.projections[c] * theta * sy.inclusions[c]
            break
        else:
            return None
    return total


def is_isomorphic(x: Module, y: Module) -> bool:
    return isomorphism(x, y) is not None


def class_index(x: Module, catalogue: list[Module]) -> int | None:
    """Index of the catalogue member isomorphic to the indecomposable ``x``."""
    for i, c in enumerate(catalogue):
        if indecomposable_iso(c, x) is not None:
            return i
    return None


def multiplicities(x: Module, catalogue: list[Module]) -> list[int] | None:
    """Multiplicity vector of ``x`` over a list of indecomposables, None if not in add."""
    out = [0] * len(catalogue)
    for s in decompose(x):
        i = class_index(s.module, catalogue)
        if i is None:
            return None
        out[i] += s.multiplicity
    return out


# endomorphism algebras -------------------------------------------------------


class _LocalHom:
    """Basis of Hom(M_s, M_t) between indecomposables; identity first when s == t."""

    def __init__(self, x: Module, y: Module, same: bool):
        if same:
            basis = hom_space(x, x).basis
            rad = _trace_radical(x, basis)
            field = x.field
            mats = [field.identity(x.dim)]
            for r in range(rad.nrows()):
                mats.append(la.linear_combination(field, [rad[r, c] for c in range(len(basis))], basis, x.dim, x.dim))
            self.space = HomSpace(x, y, mats)
        else:
            self.space = hom_space(x, y)

    @property
    def basis(self):
        return self.space.basis


@dataclass
class Endomorphisms:
    """``End(X)`` with product ``g h = g o h`` (first h, then g).

    ``copies`` lists (summand index, copy index) pairs; idempotent ``c`` of the
    algebra is the projection onto copy ``c``.  Basis element ``i`` is the map
    ``labels[i] = (source copy, target copy, local index)`` whose matrix on X is
    ``maps[i]``.
    """

    module: Module
    algebra: Algebra
    maps: list
    summands: list
    copies: list
    elements: list
    local: dict

    def copy_projection(self, c: int):
        s, k = self.copies[c]
        return self.summands[s].projections[k]

    def copy_inclusion(self, c: int):
        s, k = self.copies[c]
        return self.summands[s].inclusions[k]

    def coords(self, matrix) -> list:
        """Coordinates of an endomorphism of X in the algebra basis."""
        field = self.module.field
        out = [field.zero] * len(self.elements)
        for src in range(len(self.copies)):
            for tgt in range(len(self.copies)):
                local = self.copy_inclusion(src) * matrix * self.copy_projection(tgt)
                if la.is_zero_matrix(local):
                    continue
                lh = self.local[(self.copies[src][0], self.copies[tgt][0])]
                for k, c in enumerate(lh.space.coords(local)):
                    if c != 0:
                        out[self._index[(src, tgt, k)]] = c
        return out

    @property
    def _index(self):
        if not hasattr(self, "_idx"):
            self._idx = {e: i for i, e in enumerate(self.elements)}
        return self._idx


def end_algebra(x: Module) -> Endomorphisms:
    if "end" in x._cache:
        return x._cache["end"]
    field = x.field
    summands = decompose(x)
    copies = [(s, k) for s, sm in enumerate(summands) for k in range(sm.multiplicity)]
    local = {}
    for s, sm in enumerate(summands):
        for t, tm in enumerate(summands):
            local[(s, t)] = _LocalHom(sm.module, tm.module, s == t)
    elements = []
    for src in range(len(copies)):
        for tgt in range(len(copies)):
            lh = local[(copies[src][0], copies[tgt][0])]
            for k in range(len(lh.basis)):
                elements.append((src, tgt, k))
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    structure = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    # b_i * b_j = b_i o b_j: first b_j then b_i
    for i, (si, ti, ki) in enumerate(elements):
        hi = local[(copies[si][0], copies[ti][0])].basis[ki]
        for j, (sj, tj, kj) in enumerate(elements):
            if tj != si:
                continue
            hj = local[(copies[sj][0], copies[tj][0])].basis[kj]
            lh = local[(copies[sj][0], copies[ti][0])]
            for k, c in enumerate(lh.space.coords(hj * hi)):
                if c != 0:
                    structure[i][j][index[(sj, ti, k)]] = c
    unit = [field.zero] * n
    idempotents = []
    for c in range(len(copies)):
        unit[index[(c, c, 0)]] = field.one
        idempotents.append((index[(c, c, 0)],))
    labels = []
    for src, tgt, k in elements:
        labels.append(f"e{src}" if src == tgt and k == 0 else f"h{src}.{tgt}.{k}")
    names = tuple(f"{s}" if summands[s].multiplicity == 1 else f"{s}.{k}" for s, k in copies)
    alg = Algebra.from_structure(field, labels, structure, unit, idempotents, vertex_names=names)
    maps = []
    for src, tgt, k in elements:
        h = local[(copies[src][0], copies[tgt][0])].basis[k]
        s0, c0 = copies[src]
        s1, c1 = copies[tgt]
        maps.append(summands[s0].projections[c0] * h * summands[s1].inclusions[c1])
    endo = Endomorphisms(x, alg, maps, summands, copies, elements, local)
    x._cache["end"] = endo
    return endo


def hom_functor_module(endo: Endomorphisms, y: Module) -> tuple[Module, list]:
    """``Hom(X, Y)`` as a right module over ``End(X)`` (action by precomposition).

    Returns the module and its basis as X -> Y matrices.  The basis is adapted
    to the copies: for each copy c, a basis of Hom(M_c, Y) precomposed with the
    projection onto c.
    """
    field = y.field
    copies = endo.copies
    spaces = [hom_space(endo.summands[s].module, y) for s, _ in copies]
    offsets = [0]
    for sp in spaces:
        offsets.append(offsets[-1] + sp.dim)
    total = offsets[-1]
    action = []
    for src, tgt, k in endo.elements:
        h = endo.local[(copies[src][0], copies[tgt][0])].basis[k]
        m = field.zeros(total, total)
        # phi . b = first b then phi; nonzero only on the component of copy tgt
        for r, phi in enumerate(spaces[tgt].basis):
            for t, c in enumerate(spaces[src].coords(h * phi)):
                if c != 0:
                    m[offsets[tgt] + r, offsets[src] + t] = c
        action.append(m)
    mod = Module(endo.algebra, action, check=False)
    basis = []
    for c, sp in enumerate(spaces):
        for phi in sp.basis:
            basis.append(endo.copy_projection(c) * phi)
    return mod, basis


def hom_functor_map(endo: Endomorphisms, f: ModuleMap, hx: Module, hy: Module) -> ModuleMap:
    """``Hom(X, f): Hom(X, Y) -> Hom(X, Z)`` between modules from :func:`hom_functor_module`."""
    field = f.source.field
    copies = endo.copies
    sy = [hom_space(endo.summands[s].module, f.source) for s, _ in copies]
    sz = [hom_space(endo.summands[s].module, f.target) for s, _ in copies]
    oy, oz = [0], [0]
    for a, b in zip(sy, sz):
        oy.append(oy[-1] + a.dim)
        oz.append(oz[-1] + b.dim)
    m = field.zeros(oy[-1], oz[-1])
    for c in range(len(copies)):
        for r, phi in enumerate(sy[c].basis):
            for t, x in enumerate(sz[c].coords(phi * f.matrix)):
                if x != 0:
                    m[oy[c] + r, oz[c] + t] = x
    return ModuleMap(hx, hy, m)


def transport(x: Module, target: Algebra, iso) -> Module:
    """Module over ``target`` obtained through an algebra isomorphism.

    ``iso`` has row i = coordinates in ``target`` of the image of basis
    element i of ``x.algebra``.
    """
    inv = la.inverse(iso)
    field = x.field
    action = []
    for j in range(target.dim):
        action.append(la.linear_combination(field, [inv[j, i] for i in range(inv.ncols())], x.action, x.dim, x.dim))
    return Module(target, action, check=False, name=x.name)


def regular_module(a: Algebra) -> Module:
    """``A_A`` with its basis as module basis."""
    return Module(a, a.right_mult, check=False, name="A")
