"""Acceptance criteria 1-8, one test per criterion (criterion 3 also has a
supplementary restricted run).  Each test records a one-line PASS/FAIL
summary that the conftest hook prints at the end of the session."""
import io
import json
import random
import time

import pytest

from auslander import exactla as la
from auslander.cli import run
from auslander.complexes import AddCategory, default_sample, verify_equivalence
from auslander.correspondence import (
    forward,
    inverse,
    is_d_auslander,
    is_d_cluster_tilting_direct,
    roundtrip,
)
from auslander.homological import (
    dominant_dimension,
    ext_dim,
    ext_dim_injective,
    global_dimension,
    is_n_cokernel,
    is_n_kernel,
    projective_injective_classes,
    syzygy,
)
from auslander.modules import ModuleMap, decompose, direct_sum, hom_basis, is_isomorphic
from auslander.standard import standard_modules

import oracles
from conftest import battery, designated, family, instance, is_generator_cogenerator

RESULTS = {}
LIMIT = 10.0  # seconds per criterion


def record(key, ok, detail, elapsed):
    RESULTS[key] = f"criterion {key}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}"
    print(RESULTS[key])


ITEM1 = [("linear_An", 2), ("linear_An", 3), ("loop_nakayama", 2), ("loop_nakayama", 3)]


def test_criterion_1_classical_auslander():
    t = time.perf_counter()
    verdicts = {}
    for kind, n in ITEM1:
        fam = family(kind, n)
        des = designated(fam, "generator")
        verdicts[(kind, n)] = is_d_auslander(forward(instance(fam, des.members, 1)), 1).verdict
    a2 = family("linear_An", 2)
    gamma = forward(instance(a2, designated(a2, "generator").members, 1))
    gl = global_dimension(gamma, 6)
    dom = dominant_dimension(gamma, 6)
    ok = all(verdicts.values()) and gamma.dim == 5 and gl.value == 2 and dom.value == 2
    elapsed = time.perf_counter() - t
    ok = ok and elapsed < LIMIT
    record("1", ok, f"verdicts={sorted(verdicts.values())} dim={gamma.dim} gl={gl.display()} dom={dom.display()}", elapsed)
    assert ok


def test_criterion_2_higher_case():
    t = time.perf_counter()
    fam = family("An_rad_square", 3)
    des = designated(fam, "lambda_dlambda")
    inst = instance(fam, des.members, 2)
    ct, cex = is_d_cluster_tilting_direct(inst)
    # independent check of the same statement from the cocycle Ext^1 oracle
    parts = [p.module for p in decompose(inst.module)]
    e_m_x = [sum(oracles.ext1_dim(p, x) for p in parts) for x in fam.catalogue]
    e_x_m = [sum(oracles.ext1_dim(x, p) for p in parts) for x in fam.catalogue]
    inside = [k in des.members for k in range(len(fam.catalogue))]
    oracle_ct = all((e == 0) == i for e, i in zip(e_m_x, inside)) and all((e == 0) == i for e, i in zip(e_x_m, inside))
    cert = is_d_auslander(forward(inst), 2)
    ok = (
        len(fam.catalogue) == 5
        and len(parts) == 4
        and ct
        and oracle_ct
        and cert.verdict
        and cert.gl_dim.at_most(3)
        and cert.dom_dim.at_least(3)
    )
    elapsed = time.perf_counter() - t
    ok = ok and elapsed < LIMIT
    record("2", ok, f"ct={ct} oracle_ct={oracle_ct} gl={cert.gl_dim.display()} dom={cert.dom_dim.display()}", elapsed)
    assert ok


def _agreement(rows):
    return [r for r in rows if r[1] != r[2]]


def _battery_rows(restrict=False):
    rows = []
    for key, fam, members, d in battery():
        if restrict and not is_generator_cogenerator(fam, members):
            continue
        inst = instance(fam, members, d)
        ct, _ = is_d_cluster_tilting_direct(inst)
        au = is_d_auslander(forward(inst), d).verdict
        rows.append((key, ct, au))
    return rows


def test_criterion_3_theorem_agreement():
    t = time.perf_counter()
    rows = _battery_rows()
    bad = _agreement(rows)
    negatives = sum(1 for r in rows if not r[1])
    elapsed = time.perf_counter() - t
    ok = len(rows) >= 20 and negatives >= 15 and not bad and elapsed < LIMIT
    sample = [(k[0], k[1], list(k[2]), k[3]) for k, _, _ in bad[:3]]
    record("3", ok, f"instances={len(rows)} negatives={negatives} disagreements={len(bad)} first={sample}", elapsed)
    assert ok


def test_criterion_3_supplementary_generator_cogenerator():
    """Same battery restricted to M containing every indecomposable projective
    and injective (the standing hypothesis of the classical correspondence).
    Reported separately; it does not replace the literal criterion."""
    t = time.perf_counter()
    rows = _battery_rows(restrict=True)
    bad = _agreement(rows)
    negatives = sum(1 for r in rows if not r[1])
    elapsed = time.perf_counter() - t
    ok = len(rows) >= 20 and negatives >= 15 and not bad and elapsed < LIMIT
    record("3-supplementary", ok, f"instances={len(rows)} negatives={negatives} disagreements={len(bad)}", elapsed)
    assert ok


def test_criterion_4_roundtrip():
    t = time.perf_counter()
    passing = []
    failures = []
    for key, fam, members, d in battery():
        inst = instance(fam, members, d)
        if not is_d_cluster_tilting_direct(inst)[0]:
            continue
        passing.append(key)
        rep = roundtrip(inst)
        if not rep.verdict:
            failures.append((key, rep.stage))
            continue
        # independent recheck of the hom tables under the matching
        res = inverse(forward(inst), d)
        parts = inst.summands()
        matched = [res.summands[k] for k in rep.witnesses["matching"]]
        t1 = [[oracles.hom_dim(x, y) for y in parts] for x in parts]
        t2 = [[oracles.hom_dim(x, y) for y in matched] for x in matched]
        if t1 != t2 or res.algebra.dim != fam.algebra.dim:
            failures.append((key, "oracle"))
    elapsed = time.perf_counter() - t
    ok = bool(passing) and not failures and elapsed < LIMIT
    record("4", ok, f"passing_instances={len(passing)} failures={failures}", elapsed)
    assert ok


def test_criterion_5_complex_equivalence():
    t = time.perf_counter()
    cases = [(k, n, "generator", 1) for k, n in ITEM1] + [("An_rad_square", 3, "lambda_dlambda", 2)]
    outcomes = {}
    for kind, n, name, d in cases:
        cat = AddCategory(designated(family(kind, n), name).module)
        sample = default_sample(standard_modules(cat.gamma), cat.gamma)
        rep = verify_equivalence(cat, sample, d)
        outcomes[(kind, n)] = (rep.verdict, rep.failure)
    elapsed = time.perf_counter() - t
    ok = all(v for v, _ in outcomes.values()) and elapsed < LIMIT
    record("5", ok, f"cases={len(outcomes)} failures={[k for k, (v, _) in outcomes.items() if not v]}", elapsed)
    assert ok


def _battery_modules():
    """Catalogue modules of every battery family, grouped by algebra, plus the
    simples and projectives of every forward algebra of items 1-2."""
    groups = []
    for kind, n in ITEM1 + [("An_rad_square", 3)]:
        fam = family(kind, n)
        groups.append(list(fam.catalogue))
    for kind, n, name, d in [(k, n, "generator", 1) for k, n in ITEM1] + [("An_rad_square", 3, "lambda_dlambda", 2)]:
        fam = family(kind, n)
        gamma = forward(instance(fam, designated(fam, name).members, d))
        st = standard_modules(gamma)
        groups.append(list(st.simples) + [p.module for p in st.projectives])
    return groups


def test_criterion_6_homological_oracles():
    t = time.perf_counter()
    mismatches = []
    shifts = []
    pairs = 0
    for mods in _battery_modules():
        for x in mods:
            om = syzygy(x)
            for y in mods:
                pairs += 1
                for i in range(4):
                    if ext_dim(x, y, i) != ext_dim_injective(x, y, i):
                        mismatches.append(i)
                for i in (1, 2):
                    if ext_dim(x, y, i + 1) != ext_dim(om, y, i):
                        shifts.append(i)
    loops = [dominant_dimension(family("loop_nakayama", n).algebra, 8).exceeds for n in (1, 2, 3, 4)]
    a2_dom = dominant_dimension(family("linear_An", 2).algebra, 6).value
    elapsed = time.perf_counter() - t
    ok = not mismatches and not shifts and all(loops) and a2_dom == 1 and elapsed < LIMIT
    record("6", ok, f"pairs={pairs} ext_mismatches={len(mismatches)} shift_failures={len(shifts)} selfinjective_exceeds={loops} dom(kA2)={a2_dom}", elapsed)
    assert ok


def test_criterion_7_negative_controls(tmp_path):
    t = time.perf_counter()
    out = io.StringIO()
    gen_dir = tmp_path / "a2"
    assert run(["family", "gen", "linear_An", "-n", "2", "-o", str(gen_dir)], stdout=out) == 0
    a2 = family("linear_An", 2)
    st = standard_modules(a2.algebra)
    lam = gen_dir / "lambda.json"
    from auslander.io import module_to_json

    reg, _, _ = direct_sum([p.module for p in st.projectives], a2.algebra)
    lam.write_text(json.dumps(module_to_json(reg, "algebra.json")))
    inst = json.loads((gen_dir / "instance_generator_d1.json").read_text())
    inst["module"] = "lambda.json"
    (gen_dir / "inst_lambda.json").write_text(json.dumps(inst))
    out = io.StringIO()
    code = run(["ct", "check", str(gen_dir / "inst_lambda.json")], stdout=out, stderr=io.StringIO())
    rep = json.loads(out.getvalue())
    cex_index = rep["counterexample"]["module"]
    cex_is_s1 = is_isomorphic(a2.catalogue[cex_index], st.simples[0])

    cert = is_d_auslander(a2.algebra, 1)
    pi = {j for _, j in projective_injective_classes(a2.algebra)}
    shows_i1 = False
    for w in cert.dom_dim.witnesses["projectives"]:
        k = w["failing_term"]
        if k is not None:
            term = w["coresolution"][k]["blocks"]
            bad = [b for b in term if b not in pi]
            # I_1 is the injective envelope of S_1; it is not projective
            shows_i1 |= bool(bad) and all(is_isomorphic(st.injectives[b], st.injectives[0]) for b in bad)
            shows_i1 &= not any(is_isomorphic(st.injectives[0], p.module) for p in st.projectives)
    elapsed = time.perf_counter() - t
    ok = code == 1 and cex_is_s1 and not cert.verdict and cert.failure() == "dominant_dimension" and shows_i1 and elapsed < LIMIT
    record("7", ok, f"ct_exit={code} counterexample={rep['counterexample'].get('label')} auslander_failure={cert.failure()} shows_I1={shows_i1}", elapsed)
    assert ok


def _random_map(rng, x, y):
    basis = hom_basis(x, y)
    m = la.linear_combination(x.field, [rng.randint(-1, 1) for _ in basis], [f.matrix for f in basis], x.dim, y.dim)
    return ModuleMap(x, y, m)


def _next_map(rng, prev: ModuleMap, y):
    """Random map g: prev.target -> y with prev . g = 0."""
    x = prev.target
    basis = hom_basis(x, y)
    field = x.field
    if not basis or prev.source.dim == 0:
        return _random_map(rng, x, y)
    cols = [la.flatten(prev.matrix * f.matrix) for f in basis]
    a = field.matrix(cols).transpose()
    ker = la.kernel_basis(a)
    coeffs = [0] * len(basis)
    for c in range(ker.ncols()):
        w = rng.randint(-1, 1)
        for r in range(len(basis)):
            coeffs[r] += w * ker[r, c]
    return ModuleMap(x, y, la.linear_combination(field, coeffs, [f.matrix for f in basis], x.dim, y.dim))


def _sequences(rng, parts, a, count=10):
    """Composable sequences over add M with vanishing compositions; odd ones
    are split sequences X -> X + Z -> Z, even ones random."""
    out = []
    for s in range(count):
        if s % 2:
            x = rng.choice(parts)
            z = rng.choice(parts)
            xz, inj, proj = direct_sum([x, z], a)
            out.append([ModuleMap(x, xz, inj[0].matrix), ModuleMap(xz, z, proj[1].matrix)])
            continue
        n = rng.choice([1, 2])
        objs = []
        for _ in range(n + 2):
            pick = [rng.choice(parts) for _ in range(rng.choice([1, 2]))]
            objs.append(direct_sum(pick, a)[0])
        maps = [_random_map(rng, objs[0], objs[1])]
        for k in range(1, n + 1):
            maps.append(_next_map(rng, maps[-1], objs[k + 1]))
        out.append(maps)
    return out


def test_criterion_8_n_kernel_cokernel_checks():
    t = time.perf_counter()
    disagreements = []
    checked = 0
    positives = 0
    for idx, (key, fam, members, d) in enumerate(battery()):
        rng = random.Random(idx)
        inst = instance(fam, members, d)
        parts = [p.module for p in decompose(inst.module)]
        for seq in _sequences(rng, parts, fam.algebra):
            xs = [seq[0].source] + [f.target for f in seq]
            lib_c = is_n_cokernel(seq[0], seq[1:], parts)
            lib_k = is_n_kernel(seq[-1], seq[:-1], parts)
            orc_c = oracles.contravariant_hom_exact(xs, seq, parts)
            orc_k = oracles.covariant_hom_exact(xs, seq, parts)
            checked += 1
            positives += lib_c + lib_k
            if lib_c != orc_c or lib_k != orc_k:
                disagreements.append((key, checked))
    elapsed = time.perf_counter() - t
    ok = not disagreements and checked >= 10 * len(battery()) and elapsed < LIMIT
    record("8", ok, f"sequences={checked} positive_verdicts={positives} disagreements={len(disagreements)}", elapsed)
    assert ok
