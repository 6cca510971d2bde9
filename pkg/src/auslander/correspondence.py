"""Both directions of the degree-zero correspondence between d-cluster-tilting
modules and d-Auslander algebras, with checkable certificates."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import exactla as la
from .algebra import Algebra, opposite
from .errors import InputError, NoProjectiveInjective
from .homological import (
    DimensionResult,
    dominant_dimension,
    ext_dim,
    global_dimension,
    projective_injective_classes,
)
from .modules import (
    Endomorphisms,
    Module,
    class_index,
    decompose,
    direct_sum,
    dualize,
    end_algebra,
    hom_dim,
    hom_functor_map,
    hom_functor_module,
    hom_space,
    isomorphism,
    indecomposable_iso,
    regular_module,
    transport,
    ModuleMap,
)
from .standard import standard_modules


@dataclass
class ClusterTiltingInstance:
    algebra: Algebra
    module: Module
    d: int
    catalogue: list
    name: str = ""

    def __post_init__(self):
        if self.d < 1:
            raise InputError("d must be at least 1")

    def summands(self) -> list[Module]:
        return [s.module for s in decompose(self.module)]

    def validate(self) -> None:
        """Check the instance contract: catalogue pairwise distinct, M inside it."""
        cat = self.catalogue
        for i in range(len(cat)):
            for j in range(i):
                if indecomposable_iso(cat[j], cat[i]) is not None:
                    raise InputError(f"catalogue members {j} and {i} are isomorphic")
        for s in self.summands():
            if class_index(s, cat) is None:
                raise InputError("a summand of M is missing from the catalogue")


@dataclass
class AuslanderCertificate:
    d: int
    gl_dim: DimensionResult
    dom_dim: DimensionResult
    verdict: bool

    def recompute(self) -> bool:
        return self.gl_dim.at_most(self.d + 1) and self.dom_dim.at_least(self.d + 1)

    def failure(self) -> str | None:
        if self.verdict:
            return None
        if not self.gl_dim.at_most(self.d + 1):
            return "global_dimension"
        return "dominant_dimension"


@dataclass
class Report:
    stage: str
    verdict: bool
    witnesses: dict = dc_field(default_factory=dict)
    counterexample: dict | None = None


def is_d_rigid(inst: ClusterTiltingInstance) -> bool:
    parts = inst.summands()
    for i in range(1, inst.d):
        for x in parts:
            for y in parts:
                if ext_dim(x, y, i):
                    return False
    return True


def is_d_cluster_tilting_direct(inst: ClusterTiltingInstance):
    """Check both descriptions of add M against the catalogue.

    Returns ``(True, None)`` or ``(False, counterexample)`` where the
    counterexample names the catalogue index, the side (``"Ext(M,X)"`` or
    ``"Ext(X,M)"``), the kind (``"nonvanishing"`` for a summand of M with a
    nonzero Ext, ``"membership"`` for a non-summand with vanishing Ext) and
    the offending degree when there is one.
    """
    parts = inst.summands()
    d = inst.d
    for idx, x in enumerate(inst.catalogue):
        inside = any(indecomposable_iso(p, x) is not None for p in parts)
        for side in ("Ext(M,X)", "Ext(X,M)"):
            bad = None
            for i in range(1, d):
                for p in parts:
                    e = ext_dim(p, x, i) if side == "Ext(M,X)" else ext_dim(x, p, i)
                    if e:
                        bad = i
                        break
                if bad is not None:
                    break
            if inside and bad is not None:
                return False, {"module": idx, "side": side, "kind": "nonvanishing", "degree": bad}
            if not inside and bad is None:
                return False, {"module": idx, "side": side, "kind": "membership", "degree": None}
    return True, None


def is_d_auslander(gamma: Algebra, d: int) -> AuslanderCertificate:
    if d < 1:
        raise InputError("d must be at least 1")
    gl = global_dimension(gamma, d + 2)
    dom = dominant_dimension(gamma, d + 1)
    cert = AuslanderCertificate(d, gl, dom, False)
    cert.verdict = cert.recompute()
    return cert


def reduced_check(gamma: Algebra) -> bool:
    """True iff no indecomposable projective is injective."""
    return not projective_injective_classes(gamma)


def forward_endo(inst: ClusterTiltingInstance) -> Endomorphisms:
    return end_algebra(inst.module)


def forward(inst: ClusterTiltingInstance) -> Algebra:
    return forward_endo(inst).algebra


@dataclass
class InverseResult:
    algebra: Algebra
    module: Module
    summands: list  # M'_k = D Hom(P_k, I), one per projective class of gamma
    injective: Module
    endo: Endomorphisms


def inverse(gamma: Algebra, d: int) -> InverseResult:
    """Recover ``(End(I), D Hom(-, I))`` from the projective-injectives I of gamma."""
    st = standard_modules(gamma)
    pairs = projective_injective_classes(gamma)
    if not pairs:
        if gamma.dim:
            raise NoProjectiveInjective("no projective-injective modules")
    pis = [st.projectives[i].module for i, _ in pairs]
    inj, _, _ = direct_sum(pis, gamma)
    endo = end_algebra(inj)
    lam = endo.algebra
    lam_op = opposite(lam)
    parts = []
    for p in st.projectives:
        space = hom_space(p.module, inj)
        # left action of lambda: phi -> phi then lambda
        action = []
        for b in endo.maps:
            rows = [space.coords(phi * b) for phi in space.basis]
            action.append(lam.field.matrix(rows) if rows else lam.field.zeros(0, 0))
        left = Module(lam_op, action, check=False)
        parts.append(dualize(left))
    total, _, _ = direct_sum(parts, lam)
    return InverseResult(lam, total, parts, inj, endo)


def dual_regular(a: Algebra) -> Module:
    """``D(A)`` as a right A-module, in the dual basis of the algebra basis."""
    return dualize(regular_module(opposite(a)))


def algebra_iso_certificate(lam: Algebra, endo_m: Endomorphisms, inv: InverseResult):
    """Explicit algebra isomorphism ``Lambda -> Lambda'``.

    lambda acts on D(Lambda) by precomposing with right multiplication; applying
    Hom(M, -) gives an endomorphism of Hom(M, D Lambda), which is conjugated
    onto I by a module isomorphism.  Returns the matrix whose row i holds the
    coordinates of the image of basis element i, or None when Hom(M, D Lambda)
    and I are not isomorphic.
    """
    field = lam.field
    dl = dual_regular(lam)
    hm, _ = hom_functor_module(endo_m, dl)
    theta = isomorphism(inv.injective, hm)
    if theta is None:
        return None
    theta_inv = la.inverse(theta)
    rows = []
    for i in range(lam.dim):
        beta = ModuleMap(dl, dl, lam.right_mult[i].transpose())
        hb = hom_functor_map(endo_m, beta, hm, hm)
        conj = theta * hb.matrix * theta_inv
        rows.append(inv.endo.coords(conj))
    return field.matrix(rows) if rows else field.zeros(0, 0)


def check_algebra_iso(src: Algebra, dst: Algebra, phi) -> dict:
    """Verify that ``phi`` (rows = images of basis elements) is a unital algebra isomorphism."""
    out = {"bijective": False, "unital": False, "multiplicative": False}
    if phi is None or src.dim != dst.dim:
        return out
    out["bijective"] = la.is_invertible(phi)
    image_unit = src.unit_vector() * phi
    out["unital"] = image_unit == dst.unit_vector()
    ok = True
    for i in range(src.dim):
        pi = la.submatrix(src.field, phi, [i], range(dst.dim))
        for j in range(src.dim):
            pj = la.submatrix(src.field, phi, [j], range(dst.dim))
            lhs = src.field.row(src.product_coords(i, j)) * phi
            if lhs != dst.multiply(pi, pj):
                ok = False
                break
        if not ok:
            break
    out["multiplicative"] = ok
    return out


def hom_table(mods: list[Module]) -> list[list[int]]:
    return [[hom_dim(x, y) for y in mods] for x in mods]


def roundtrip(inst: ClusterTiltingInstance) -> Report:
    ct, cex = is_d_cluster_tilting_direct(inst)
    if not ct:
        return Report("precondition", False, {}, cex)
    endo = forward_endo(inst)
    gamma = endo.algebra
    cert = is_d_auslander(gamma, inst.d)
    wit = {"gamma_dim": gamma.dim, "gl_dim": cert.gl_dim.display(), "dom_dim": cert.dom_dim.display()}
    if not cert.verdict:
        return Report("auslander", False, wit, {"failure": cert.failure()})
    inv = inverse(gamma, inst.d)
    wit["lambda_prime_dim"] = inv.algebra.dim
    phi = algebra_iso_certificate(inst.algebra, endo, inv)
    checks = check_algebra_iso(inst.algebra, inv.algebra, phi)
    wit["algebra_iso"] = checks
    if not all(checks.values()):
        return Report("algebra_iso", False, wit, {"failure": "no algebra isomorphism certificate"})
    parts = inst.summands()
    moved = [transport(p, inv.algebra, phi) for p in parts]
    matching = []
    used = set()
    for k, mk in enumerate(moved):
        hit = None
        for t, mp in enumerate(inv.summands):
            if t not in used and indecomposable_iso(mp, mk) is not None:
                hit = t
                break
        if hit is None:
            wit["matching"] = matching
            return Report("summand_matching", False, wit, {"summand": k})
        used.add(hit)
        matching.append(hit)
    if len(used) != len(inv.summands):
        wit["matching"] = matching
        return Report("summand_matching", False, wit, {"failure": "extra summands in M'"})
    wit["matching"] = matching
    t1 = hom_table(parts)
    t2 = hom_table([inv.summands[t] for t in matching])
    wit["hom_table"] = t1
    if t1 != t2:
        return Report("hom_table", False, wit, {"lambda": t1, "lambda_prime": t2})
    return Report("roundtrip", True, wit, None)
