"""Command-line interface.

Every command prints one JSON report on standard output.  Exit codes:
0 verdict pass, 1 verdict fail, 2 input or schema error, 3 bound exceeded or
inconclusive.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .complexes import (
    AddCategory,
    default_sample,
    is_object,
    left_I_approximation,
    realize,
    stalk,
    verify_equivalence,
)
from .correspondence import (
    algebra_iso_certificate,
    forward_endo,
    inverse,
    is_d_auslander,
    is_d_cluster_tilting_direct,
    is_d_rigid,
    reduced_check,
    roundtrip,
)
from .algebra import cartan_matrix, radical, radical_power_dims
from .errors import AuslanderError, BoundExceeded, FieldTooSmall, InputError, NonSplit, NotAdmissible, NoProjectiveInjective
from .exactla import Field, FieldError
from .families import KINDS, FamilySpec, generate_family
from .homological import (
    dominant_dimension,
    ext_dim,
    ext_dim_injective,
    global_dimension,
    min_inj_coresolution,
    min_proj_resolution,
    proj_dim,
)
from .io import (
    Loader,
    algebra_to_json,
    dumps,
    instance_from_json,
    module_to_json,
    presentation_to_json,
    read_json,
    write_json,
)
from .modules import decompose, indecomposable_iso, transport
from .report import (
    algebra_iso_certificate_json,
    make_report,
    module_iso_certificate,
    resolution_certificate,
    verify_report,
)
from .standard import standard_modules

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class Outcome:
    def __init__(self, report: dict, code: int):
        self.report = report
        self.code = code


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _code(ok: bool) -> int:
    return EXIT_PASS if ok else EXIT_FAIL


# algebra --------------------------------------------------------------------


def cmd_algebra_info(args, loader: Loader, echo) -> Outcome:
    a = loader.algebra(args.file)
    st = standard_modules(a)
    gl = global_dimension(a, args.bound)
    dom = dominant_dimension(a, args.bound)
    wit = {
        "dim": a.dim,
        "field": str(a.field),
        "basis": list(a.labels),
        "vertices": list(a.vertex_names),
        "radical_dim": radical(a).nrows(),
        "radical_powers": radical_power_dims(a),
        "cartan": [list(r) for r in cartan_matrix(a)],
        "simples": [s.dim for s in st.simples],
        "projectives": [p.module.dim for p in st.projectives],
        "injectives": [q.dim for q in st.injectives],
        "global_dimension": gl.display(),
        "dominant_dimension": dom.display(),
        "reduced": reduced_check(a),
    }
    if args.dump:
        wit["structure"] = algebra_to_json(a)
    return Outcome(make_report(echo, "pass", ["info"], wit), EXIT_PASS)


# modules --------------------------------------------------------------------


def cmd_module_ext(args, loader: Loader, echo) -> Outcome:
    a = loader.algebra(args.alg)
    x = loader.module(args.x, a)
    y = loader.module(args.y, a)
    if args.max_degree < 0:
        raise InputError("--max-degree must be non-negative")
    rows = []
    agree = True
    for i in range(args.max_degree + 1):
        p = ext_dim(x, y, i)
        q = ext_dim_injective(x, y, i)
        agree &= p == q
        rows.append({"degree": i, "projective_route": p, "injective_route": q})
    steps = min_proj_resolution(x, args.max_degree + 1)
    certs = [resolution_certificate(x, steps)]
    cex = None if agree else {"failure": "routes disagree"}
    return Outcome(make_report(echo, _verdict(agree), ["ext"], {"ext": rows}, cex, certs), _code(agree))


def cmd_module_resolve(args, loader: Loader, echo) -> Outcome:
    a = loader.algebra(args.alg)
    x = loader.module(args.x, a)
    steps = min_proj_resolution(x, args.length)
    complete = not steps or steps[-1].syzygy.dim == 0
    wit = {"terms": [{"dim": s.object.dim, "blocks": list(s.blocks)} for s in steps], "complete": complete}
    certs = [resolution_certificate(x, steps)]
    if not complete:
        return Outcome(make_report(echo, "inconclusive", ["resolve"], wit, {"failure": "resolution longer than bound"}, certs), EXIT_BOUND)
    return Outcome(make_report(echo, "pass", ["resolve"], wit, None, certs), EXIT_PASS)


# cluster tilting ------------------------------------------------------------


def cmd_ct_check(args, loader: Loader, echo) -> Outcome:
    inst, labels = instance_from_json(args.instance, loader)
    ok, cex = is_d_cluster_tilting_direct(inst)
    wit = {"d": inst.d, "catalogue": labels, "summands": [labels[_class(s.module, inst.catalogue)] for s in decompose(inst.module)], "rigid": is_d_rigid(inst)}
    if cex is not None:
        cex = dict(cex, label=labels[cex["module"]])
    return Outcome(make_report(echo, _verdict(ok), ["cluster_tilting"], wit, cex), _code(ok))


def _class(x, catalogue) -> int:
    return next(i for i, c in enumerate(catalogue) if indecomposable_iso(c, x) is not None)


def _auslander_outcome(gamma, d: int, echo, stages: list) -> tuple[dict, list, dict | None, bool]:
    cert = is_d_auslander(gamma, d)
    st = standard_modules(gamma)
    wit = {
        "d": d,
        "gamma_dim": gamma.dim,
        "global_dimension": cert.gl_dim.display(),
        "dominant_dimension": cert.dom_dim.display(),
        "simples": cert.gl_dim.witnesses["simples"],
        "projectives": cert.dom_dim.witnesses["projectives"],
        "projective_injective": [list(p) for p in _pi_pairs(gamma)],
    }
    certs = []
    for s in st.simples:
        certs.append(resolution_certificate(s, min_proj_resolution(s, d + 2)))
    for p in st.projectives:
        certs.append(resolution_certificate(p.module, min_inj_coresolution(p.module, d), kind="injective"))
    cex = None
    if not cert.verdict:
        what = cert.failure()
        cex = {"failure": what}
        if what == "dominant_dimension":
            bad = [w for w in cert.dom_dim.witnesses["projectives"] if w["failing_term"] is not None and w["failing_term"] < d + 1]
            w = min(bad, key=lambda w: (w["failing_term"], w["projective"]))
            pi = {j for _, j in _pi_pairs(gamma)}
            term = w["coresolution"][w["failing_term"]]
            cex.update(projective=w["projective"], failing_term=w["failing_term"], non_projective_injectives=[b for b in term["blocks"] if b not in pi])
        else:
            bad = [w for w in cert.gl_dim.witnesses["simples"] if not isinstance(w["proj_dim"], int) or w["proj_dim"] > d + 1]
            cex.update(simple=bad[0]["simple"], proj_dim=bad[0]["proj_dim"])
    return wit, certs, cex, cert.verdict


def _pi_pairs(gamma):
    from .homological import projective_injective_classes

    return projective_injective_classes(gamma)


def cmd_auslander_check(args, loader: Loader, echo) -> Outcome:
    if args.d < 1:
        raise InputError("-d must be at least 1")
    gamma = loader.algebra(args.alg)
    wit, certs, cex, ok = _auslander_outcome(gamma, args.d, echo, [])
    return Outcome(make_report(echo, _verdict(ok), ["auslander"], wit, cex, certs), _code(ok))


# correspondence -------------------------------------------------------------


def cmd_forward(args, loader: Loader, echo) -> Outcome:
    inst, labels = instance_from_json(args.instance, loader)
    endo = forward_endo(inst)
    gamma = endo.algebra
    wit, certs, cex, ok = _auslander_outcome(gamma, inst.d, echo, [])
    wit["gamma"] = algebra_to_json(gamma)
    wit["summands"] = [labels[_class(s.module, inst.catalogue)] for s in endo.summands]
    if args.output:
        write_json(args.output, algebra_to_json(gamma))
    return Outcome(make_report(echo, _verdict(ok), ["forward", "auslander"], wit, cex, certs), _code(ok))


def cmd_inverse(args, loader: Loader, echo) -> Outcome:
    if args.d < 1:
        raise InputError("-d must be at least 1")
    gamma = loader.algebra(args.alg)
    wit, _, cex, ok = _auslander_outcome(gamma, args.d, echo, [])
    if not ok:
        return Outcome(make_report(echo, "fail", ["auslander"], wit, cex), EXIT_FAIL)
    res = inverse(gamma, args.d)
    out = {
        "lambda": algebra_to_json(res.algebra),
        "module": module_to_json(res.module),
        "summand_dims": [m.dim for m in res.summands],
    }
    if args.output:
        base = Path(args.output)
        write_json(base / "lambda.json", algebra_to_json(res.algebra))
        mods = []
        for k, m in enumerate(res.summands):
            name = f"m{k}.json"
            write_json(base / name, module_to_json(m, "lambda.json"))
            mods.append(name)
        write_json(base / "module.json", module_to_json(res.module, "lambda.json"))
        write_json(base / "instance.json", {"schema": 1, "algebra": "lambda.json", "module": "module.json", "d": args.d, "catalogue": mods, "name": "inverse"})
    return Outcome(make_report(echo, "pass", ["auslander", "inverse"], dict(wit, **out)), EXIT_PASS)


def cmd_roundtrip(args, loader: Loader, echo) -> Outcome:
    inst, labels = instance_from_json(args.instance, loader)
    rep = roundtrip(inst)
    stages = ["precondition", "auslander", "algebra_iso", "summand_matching", "hom_table", "roundtrip"]
    trace = stages[: stages.index(rep.stage) + 1]
    certs = []
    if rep.verdict:
        endo = forward_endo(inst)
        inv = inverse(endo.algebra, inst.d)
        phi = algebra_iso_certificate(inst.algebra, endo, inv)
        certs.append(algebra_iso_certificate_json(inst.algebra, inv.algebra, phi))
        for k, part in enumerate(inst.summands()):
            moved = transport(part, inv.algebra, phi)
            target = inv.summands[rep.witnesses["matching"][k]]
            iso = indecomposable_iso(moved, target)
            certs.append(module_iso_certificate(moved, target, iso))
    return Outcome(make_report(echo, _verdict(rep.verdict), trace, _jsonable(rep.witnesses), rep.counterexample, certs), _code(rep.verdict))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# complexes ------------------------------------------------------------------

SAMPLE_KINDS = ("simples", "projectives", "syzygies")


def cmd_cxcat_verify(args, loader: Loader, echo) -> Outcome:
    inst, _ = instance_from_json(args.instance, loader)
    kinds = [k.strip() for k in args.samples.split(",") if k.strip()]
    for k in kinds:
        if k not in SAMPLE_KINDS:
            raise InputError(f"unknown sample kind {k!r}; choose from {', '.join(SAMPLE_KINDS)}")
    cat = AddCategory(inst.module)
    st = standard_modules(cat.gamma)
    from .homological import syzygy

    sample = []
    if "simples" in kinds:
        sample += list(st.simples)
    if "projectives" in kinds:
        sample += [p.module for p in st.projectives]
    if "syzygies" in kinds:
        sample += [syzygy(s) for s in st.simples]
    d = inst.d
    rep = verify_equivalence(cat, sample, d)
    wit = {"d": d, "sample_size": len(sample), "checks": _jsonable(rep.checks)}
    stages = ["is_object", "dense", "fully_faithful", "exact"]
    if not rep.verdict:
        trace = stages[: stages.index(rep.failure["stage"]) + 1]
        return Outcome(make_report(echo, "fail", trace, wit, _jsonable(rep.failure)), EXIT_FAIL)
    # covariant finiteness, checked on A^(d)-shaped samples only
    i_list = cat.injective_classes()
    approx = []
    shapes = [("stalk", c, stalk(cat, (c,), d + 1)) for c in range(len(cat.reps))]
    for k, s in enumerate(st.simples):
        om = syzygy(s)
        try:
            shapes.append(("realized_syzygy", k, realize(cat, om, d - 1)))
        except BoundExceeded:
            continue
    ok = True
    for kind, idx, x in shapes:
        ap = left_I_approximation(cat, x, i_list)
        ok &= ap.verdict
        approx.append({"source": kind, "index": idx, "target": list(ap.target), "verdict": ap.verdict})
    wit["approximations"] = {"label": "sampled", "results": approx}
    trace = stages + ["covariantly_finite"]
    cex = None if ok else {"stage": "covariantly_finite"}
    return Outcome(make_report(echo, _verdict(ok), trace, wit, cex), _code(ok))


# families -------------------------------------------------------------------


def cmd_family_gen(args, loader: Loader, echo) -> Outcome:
    field = loader.field_override or Field("Q")
    fam = generate_family(FamilySpec(args.kind, args.n, field))
    out = Path(args.output)
    write_json(out / "algebra.json", presentation_to_json(fam.presentation))
    names = []
    for k, m in enumerate(fam.catalogue):
        name = f"catalogue/{k:02d}.json"
        write_json(out / name, module_to_json(m, "../algebra.json"))
        names.append(name)
    instances = []
    for des in fam.designated:
        mname = f"{des.name}.json"
        write_json(out / mname, module_to_json(des.module, "algebra.json"))
        iname = f"instance_{des.name}_d{des.d}.json"
        write_json(
            out / iname,
            {"schema": 1, "name": f"{args.kind}{args.n}_{des.name}", "algebra": "algebra.json", "module": mname, "d": des.d, "catalogue": names},
        )
        instances.append(iname)
    wit = {"dim": fam.algebra.dim, "catalogue": list(fam.labels), "instances": instances}
    return Outcome(make_report(echo, "pass", ["generate"], wit), EXIT_PASS)


def cmd_verify_report(args, loader: Loader, echo) -> Outcome:
    data = read_json(args.report)
    results = verify_report(data)
    ok = all(r["ok"] for r in results)
    bad = next((r for r in results if not r["ok"]), None)
    return Outcome(make_report(echo, _verdict(ok), ["replay"], {"certificates": results}, bad), _code(ok))


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="arithmetic: Q or Fp:P (overrides the files)")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing (reports stop being byte-identical)")

    p = argparse.ArgumentParser(prog="auslander", description="Finite-dimensional algebras and the degree-zero Auslander correspondence.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="group", required=True)

    g = sub.add_parser("algebra").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("info", parents=[common], help="dimensions, standard modules, gl.dim and dom.dim")
    c.add_argument("file")
    c.add_argument("--bound", type=int, default=6, help="resolution bound for the dimensions")
    c.add_argument("--dump", action="store_true", help="include the structure constants")
    c.set_defaults(func=cmd_algebra_info)

    g = sub.add_parser("module").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("ext", parents=[common], help="Ext dimensions by both routes")
    c.add_argument("alg")
    c.add_argument("x")
    c.add_argument("y")
    c.add_argument("--max-degree", type=int, default=3)
    c.set_defaults(func=cmd_module_ext)
    c = g.add_parser("resolve", parents=[common], help="minimal projective resolution dump")
    c.add_argument("alg")
    c.add_argument("x")
    c.add_argument("--length", type=int, default=6)
    c.set_defaults(func=cmd_module_resolve)

    g = sub.add_parser("ct").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("check", parents=[common], help="direct d-cluster-tilting check")
    c.add_argument("instance")
    c.set_defaults(func=cmd_ct_check)

    g = sub.add_parser("auslander").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("check", parents=[common], help="d-Auslander check with certificates")
    c.add_argument("alg")
    c.add_argument("-d", type=int, required=True)
    c.set_defaults(func=cmd_auslander_check)

    g = sub.add_parser("correspond").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("forward", parents=[common], help="End(M) and its d-Auslander certificate")
    c.add_argument("instance")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_forward)
    c = g.add_parser("inverse", parents=[common], help="recover (Lambda, M) from a d-Auslander algebra")
    c.add_argument("alg")
    c.add_argument("-d", type=int, required=True)
    c.add_argument("-o", "--output", help="directory for lambda.json, module.json and instance.json")
    c.set_defaults(func=cmd_inverse)
    c = g.add_parser("roundtrip", parents=[common], help="forward, inverse and compare")
    c.add_argument("instance")
    c.set_defaults(func=cmd_roundtrip)

    g = sub.add_parser("cxcat").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("verify", parents=[common], help="complex-category model checks on a sample")
    c.add_argument("instance")
    c.add_argument("--samples", default="simples,projectives,syzygies")
    c.set_defaults(func=cmd_cxcat_verify)

    g = sub.add_parser("family").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("gen", parents=[common], help="write a standard family to a directory")
    c.add_argument("kind", choices=KINDS)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(func=cmd_family_gen)

    c = sub.add_parser("verify-report", parents=[common], help="replay the certificates in a report")
    c.add_argument("report")
    c.set_defaults(func=cmd_verify_report)
    return p


def _error_report(echo, verdict: str, message: str, kind: str) -> dict:
    return make_report(echo, verdict, [], {}, {"error": kind, "message": message})


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    echo = ["auslander"] + argv
    echo = [a for a in echo if a != "--timing"]
    start = time.perf_counter()
    try:
        field = Field.parse(args.field) if args.field else None
        outcome = args.func(args, Loader(field), echo)
    except (InputError, FieldError, FieldTooSmall) as exc:
        print(f"error: {exc}", file=stderr)
        outcome = Outcome(_error_report(echo, "error", str(exc), type(exc).__name__), EXIT_INPUT)
    except (BoundExceeded, NotAdmissible, NonSplit) as exc:
        print(f"inconclusive: {exc}", file=stderr)
        outcome = Outcome(_error_report(echo, "inconclusive", str(exc), type(exc).__name__), EXIT_BOUND)
    except NoProjectiveInjective as exc:
        print(f"fail: {exc}", file=stderr)
        outcome = Outcome(_error_report(echo, "fail", str(exc), type(exc).__name__), EXIT_FAIL)
    except AuslanderError as exc:
        print(f"error: {exc}", file=stderr)
        outcome = Outcome(_error_report(echo, "error", str(exc), type(exc).__name__), EXIT_INPUT)
    except (KeyError, TypeError, IndexError, AttributeError) as exc:
        # malformed input that slipped past schema validation
        print(f"error: malformed input ({type(exc).__name__}: {exc})", file=stderr)
        outcome = Outcome(_error_report(echo, "error", str(exc), type(exc).__name__), EXIT_INPUT)
    if args.timing:
        outcome.report["timing"] = {"seconds": round(time.perf_counter() - start, 4)}
    stdout.write(dumps(outcome.report))
    return outcome.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
