"""Primitive idempotents and the standard modules (simples, projectives, injectives)."""
from __future__ import annotations

from dataclasses import dataclass

from . import exactla as la
from .algebra import Algebra, opposite, radical
from .errors import NonSplit
from .modules import Module, dualize, hom_dim, indecomposable_iso, quotient, submodule, regular_module


class _Quotient:
    """``A / J`` realised on the non-pivot coordinates of an rref basis of J."""

    def __init__(self, a: Algebra):
        self.a = a
        field = a.field
        self.J = radical(a)
        if self.J.nrows():
            self.Jr, self.piv = la.row_space(self.J)
        else:
            self.Jr, self.piv = field.zeros(0, a.dim), []
        pset = set(self.piv)
        self.free = [j for j in range(a.dim) if j not in pset]

    def reduce(self, x):
        """Representative of x + J supported on the free coordinates."""
        n = self.a.dim
        vv = list(x.entries())
        flat = self.Jr.entries()
        for i, pc in enumerate(self.piv):
            c = vv[pc]
            if c != 0:
                for j in range(n):
                    if flat[i * n + j] != 0:
                        vv[j] -= c * flat[i * n + j]
        return self.a.field.from_flat(1, n, vv)

    def is_zero(self, x) -> bool:
        return la.is_zero_matrix(self.reduce(x))

    def mul(self, x, y):
        return self.reduce(self.a.multiply(x, y))

    def corner_basis(self, f):
        """Basis of f (A/J) f as reduced representatives."""
        a = self.a
        rows = [self.mul(self.mul(f, a.basis_vector(i)), f) for i in range(a.dim)]
        span, _ = la.row_space(la.vstack(a.field, rows, a.dim))
        return [la.submatrix(a.field, span, [r], range(a.dim)) for r in range(span.nrows())]

    def minpoly(self, x, unit):
        """Minimal polynomial of x inside the corner algebra with the given unit."""
        field = self.a.field
        powers = [self.reduce(unit)]
        while True:
            nxt = self.mul(powers[-1], x)
            stack = la.vstack(field, powers, self.a.dim)
            coeffs = la.solve_left(stack, nxt)
            if coeffs is not None:
                c = [-v for v in coeffs.entries()] + [field.one]
                return field.poly(c)
            powers.append(nxt)

    def poly_eval(self, poly, x, unit):
        out = self.a.field.zeros(1, self.a.dim)
        for c in reversed(poly.coeffs()):
            out = self.mul(out, x)
            if c != 0:
                out += self.reduce(unit) * c
        return out


def _split_idempotent(q: _Quotient, f):
    """Split an idempotent of A/J into two orthogonal ones, None if primitive."""
    basis = q.corner_basis(f)
    if len(basis) <= 1:
        return None
    candidates = list(basis)
    for i in range(len(basis)):
        for j in range(len(basis)):
            candidates.append(q.mul(basis[i], basis[j]))
            if j > i:
                candidates.append(basis[i] + basis[j])
    for x in candidates:
        mp = q.minpoly(x, f)
        facs = la.factor_poly(mp)
        if len(facs) >= 2:
            f0, e0 = facs[0]
            g1 = f0**e0
            g2 = mp // g1
            # u g2 = 1 mod g1 gives the primary idempotent u(x) g2(x)
            g, u, _ = g2.xgcd(g1)
            u = u * (1 / g.coeffs()[0])
            e = q.poly_eval(u * g2, x, f)
            return e, q.reduce(f - e)
    raise NonSplit(len(basis))


def _hensel_lift(a: Algebra, e):
    """Iterate e -> 3e^2 - 2e^3 until e is an idempotent of A."""
    for _ in range(a.dim + 2):
        e2 = a.multiply(e, e)
        if e2 == e:
            return e
        e3 = a.multiply(e2, e)
        e = e2 * 3 - e3 * 2
    if a.multiply(e, e) != e:
        raise RuntimeError("idempotent lifting did not converge")
    return e


def primitive_idempotents(a: Algebra) -> list:
    """Complete list of orthogonal primitive idempotents as row vectors.

    Starts from the distinguished idempotents, splits their images in A/J
    with primary idempotents of suitable elements, and lifts the result
    along J one idempotent at a time (each lift computed in the corner left
    over by the previous ones, which keeps the family orthogonal).
    """
    if "primitive" in a._cache:
        return a._cache["primitive"]
    q = _Quotient(a)
    pending = [a.idempotent_vector(v) for v in range(len(a.idempotents))]
    pending = [e for e in pending if not la.is_zero_matrix(e)]
    done_bar = []
    while pending:
        f = pending.pop(0)
        split = _split_idempotent(q, q.reduce(f))
        if split is None:
            done_bar.append((f, q.reduce(f)))
        else:
            pending[0:0] = [split[0], split[1]]
    out = []
    rest = a.unit_vector()
    for k, (orig, fbar) in enumerate(done_bar):
        if k == len(done_bar) - 1:
            out.append(rest)
            break
        if a.multiply(orig, orig) == orig and all(
            la.is_zero_matrix(a.multiply(orig, e)) and la.is_zero_matrix(a.multiply(e, orig)) for e in out
        ):
            e = orig
        else:
            e = _hensel_lift(a, a.multiply(a.multiply(rest, orig), rest))
        out.append(e)
        rest = rest - e
    a._cache["primitive"] = out
    return out


@dataclass
class Projective:
    """An indecomposable projective ``f A`` with its basis inside A."""

    module: Module
    idempotent: object
    basis: object  # rows in algebra coordinates
    generator: object  # coordinates of f in the module basis


@dataclass
class StandardModules:
    simples: list
    projectives: list  # list[Projective], index-aligned with simples
    injectives: list  # injectives[i] has socle simples[i]
    radical_rows: object

    @property
    def projective_modules(self) -> list[Module]:
        return [p.module for p in self.projectives]


def _projective(a: Algebra, f) -> Projective:
    field = a.field
    reg = regular_module(a)
    rows = la.vstack(field, [a.multiply(f, a.basis_vector(i)) for i in range(a.dim)], a.dim)
    mod, basis = submodule(reg, rows)
    _, pivots = la.row_space(basis)
    gen = la.submatrix(field, f, [0], pivots)
    return Projective(mod, f, basis, gen)


def projective_from_idempotent(a: Algebra, f) -> Projective:
    return _projective(a, f)


def standard_modules(a: Algebra) -> StandardModules:
    """Simples, indecomposable projectives and injectives, index-aligned.

    ``projectives[i]`` has top ``simples[i]`` and ``injectives[i]`` has socle
    ``simples[i]``; injectives are duals of projectives over the opposite.
    """
    if "standard" in a._cache:
        return a._cache["standard"]
    field = a.field
    projs = _projectives_only(a)
    J = radical(a)
    simples = []
    for p in projs:
        prod = []
        for r in range(p.basis.nrows()):
            v = la.submatrix(field, p.basis, [r], range(a.dim))
            for j in range(J.nrows()):
                prod.append(a.multiply(v, la.submatrix(field, J, [j], range(a.dim))))
        _, pivots = la.row_space(p.basis)
        if prod:
            pj = la.vstack(field, prod, a.dim)
            pj_coords = la.submatrix(field, pj, range(pj.nrows()), pivots)
        else:
            pj_coords = field.zeros(0, p.module.dim)
        s, _ = quotient(p.module, pj_coords)
        simples.append(s)
    injectives = [None] * len(projs)
    for p in _projectives_only(opposite(a)):
        inj = dualize(p.module)
        for i, s in enumerate(simples):
            if injectives[i] is None and hom_dim(s, inj):
                injectives[i] = inj
                break
    if any(i is None for i in injectives):
        raise NonSplit(0, "could not match injectives with simples")
    out = StandardModules(simples, projs, injectives, J)
    a._cache["standard"] = out
    return out


def _projectives_only(a: Algebra) -> list[Projective]:
    if "projectives" in a._cache:
        return a._cache["projectives"]
    projs: list[Projective] = []
    for f in primitive_idempotents(a):
        p = _projective(a, f)
        if not any(indecomposable_iso(q.module, p.module) is not None for q in projs):
            projs.append(p)
    a._cache["projectives"] = projs
    return projs
