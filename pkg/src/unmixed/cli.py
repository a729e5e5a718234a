"""Command-line entry point.

Exit status: 0 all requested checks hold/agree, 1 a check fails or
disagrees, 2 usage or input error, 3 a budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import combinations

from . import __version__
from .characterization import (
    check_witness,
    cross_validate,
    lemma32_union_cover,
    lemma32_union_is_minimal_cover,
    pairwise_matching_condition,
    theorem33_condition,
)
from .covers import DEFAULT_MAX_VERTICES, BudgetExceeded, enumerate_minimal_covers
from .generators import gen_matched, gen_starstar
from .hypergraph import HypergraphError, skeleton, uniformity
from .ideal import (
    FORMATS,
    ORACLE_MAX_VERTICES,
    SubsetSweep,
    edge_ideal,
    export_ideal,
    is_zero_divisor_sum,
)
from .instance import InstanceError, load_instance, write_instance
from .partition import DEFAULT_MAX_NODES, find_perfect_matching, find_starstar_labeling, validate_starstar
from .report import (
    certificate_dict,
    cover_report_dict,
    digest,
    names,
    new_report,
    render_text,
    to_json,
)
from .suites import check_matched_instance, check_starstar_instance, matched_suite, starstar_suite

OK, FAIL, USAGE, BUDGET = 0, 1, 2, 3


def _status(ok) -> str:
    return {True: "pass", False: "fail", None: "budget"}[ok]


def _load(args, rep):
    doc = load_instance(args.instance)
    rep["instance_digest"] = digest(doc)
    return doc


def _labeling(doc, H, args):
    L = doc.labeling(H)
    if L is None:
        r = getattr(args, "r", None)
        if r is None:
            raise InstanceError("instance has no partition; pass --r to search for one")
        L = find_starstar_labeling(H, r, max_nodes=args.max_nodes)
    return L


def cmd_check_unmixed(args, rep):
    doc = _load(args, rep)
    H = doc.hypergraph()
    label = "unmixed"
    if args.skeleton is not None:
        H = skeleton(H, args.skeleton)
        label = f"unmixed ({args.skeleton}-skeleton)"
    cr = enumerate_minimal_covers(H, limit=args.max_covers, max_vertices=args.max_vertices,
                                  workers=args.parallel)
    check = {"name": label, "status": _status(cr.unmixed)}
    if H.isolated:
        check["isolated_vertices"] = names(H, sum(1 << v for v in H.isolated))
    check.update(cover_report_dict(H, cr))
    rep["checks"].append(check)
    if cr.unmixed is None:
        return BUDGET
    return OK if cr.unmixed else FAIL


def cmd_check_theorem33(args, rep):
    doc = _load(args, rep)
    H = doc.hypergraph()
    L = _labeling(doc, H, args)
    if L is None:
        rep["checks"].append({"name": "labeling", "status": "fail",
                              "detail": f"no clique-row labeling with r={args.r}"})
        return FAIL
    ok, bad = validate_starstar(H, L)
    rep["checks"].append({"name": "labeling", "status": _status(ok), "rows": L.names(H),
                          **({"violation": bad.detail} if bad else {})})
    if not ok:
        return FAIL
    d = uniformity(H)
    cert = theorem33_condition(H, L)
    rep["checks"].append({"name": "theorem33", "status": _status(cert.holds),
                          "k": L.r - d + 2, **certificate_dict(H, cert, L.grid)})
    union = lemma32_union_cover(L, d)
    rep["checks"].append({"name": "lemma32_union_cover",
                          "status": _status(lemma32_union_is_minimal_cover(H, L)),
                          "cover": names(H, union)})
    return OK if cert.holds else FAIL


def cmd_check_props(args, rep):
    doc = _load(args, rep)
    H = doc.hypergraph()
    M = doc.matching_of(H) or find_perfect_matching(H, max_nodes=args.max_nodes)
    if M is None or not M.perfect:
        rep["checks"].append({"name": "perfect_matching", "status": "fail"})
        return FAIL
    rep["checks"].append({"name": "perfect_matching", "status": "pass",
                          "edges": [names(H, sum(1 << v for v in e)) for e in M.edges]})
    cert = pairwise_matching_condition(H, M)
    rep["checks"].append({"name": "pairwise_matching_condition", "status": _status(cert.holds),
                          **certificate_dict(H, cert, M.edges)})
    cr = enumerate_minimal_covers(H, max_vertices=args.max_vertices, workers=args.parallel)
    n = len(M.edges)
    hypothesis = bool(cr.unmixed) and n in cr.size_spectrum
    rep["checks"].append({"name": "oracle", "status": _status(cr.unmixed),
                          **cover_report_dict(H, cr, list_covers=False)})
    sufficient = not cert.holds or bool(cr.unmixed)
    necessary = not hypothesis or cert.holds
    rep["checks"].append({"name": "condition_implies_unmixed", "status": _status(sufficient),
                          "condition_holds": cert.holds, "unmixed": cr.unmixed})
    rep["checks"].append({"name": "unmixed_implies_condition", "status": _status(necessary),
                          "hypothesis": hypothesis, "condition_holds": cert.holds})
    return OK if cert.holds and sufficient and necessary else FAIL


def cmd_check_ideal(args, rep):
    doc = _load(args, rep)
    H = doc.hypergraph()
    L = _labeling(doc, H, args)
    if L is None:
        rep["checks"].append({"name": "labeling", "status": "fail"})
        return FAIL
    d = uniformity(H)
    ideal = edge_ideal(H)
    rep["checks"].append({"name": "edge_ideal", "status": "pass",
                          "generators": [names(H, g) for g in ideal.generators]})
    sweep = SubsetSweep(H, max_vertices=min(args.max_vertices, ORACLE_MAX_VERTICES)) if args.oracle else None
    code = OK
    for q in range(L.n):
        for cols in combinations(range(L.r), L.r - d + 2):
            xs = [L.vertex(q, c) for c in cols]
            flag, w = is_zero_divisor_sum(H, L, q, cols)
            check = {"name": f"sum row {q + 1} columns {','.join(str(c + 1) for c in cols)}",
                     "status": _status(not flag),
                     "variables": [H.names[x] for x in xs], "zero_divisor": flag}
            if flag:
                check["witness_monomial"] = names(H, w)
                code = FAIL
            if sweep is not None:
                agree = sweep.exists(xs) == flag
                check["oracle_agrees"] = agree
                if not agree:
                    check["status"] = "fail"
                    code = FAIL
            rep["checks"].append(check)
    return code


def cmd_cross_validate(args, rep):
    if args.suite and args.instances:
        raise InstanceError("give instance files or --suite, not both")
    if not args.suite and not args.instances:
        raise InstanceError("nothing to do: give instance files or --suite")
    failures = 0
    total = 0
    if args.suite == "starstar":
        agree = vill = cor = zd = lemma = 0
        for doc in starstar_suite(args.count, args.seed):
            res = check_starstar_instance(doc, max_vertices=args.max_vertices)
            total += 1
            agree += res.agree
            vill += res.villarreal_agrees is not None
            cor += res.graph_condition_agrees is not None
            zd += res.zero_divisor_checked
            lemma += res.lemma_rows_ok is not None
            if not res.ok:
                failures += 1
                rep["checks"].append({"name": f"instance seed {res.params.get('seed')}",
                                      "status": "fail", "params": res.params,
                                      "theorem33_holds": res.theorem_holds,
                                      "oracle_unmixed": res.oracle_unmixed, "notes": res.notes})
        rep["summary"] = {"instances": total, "theorem33_agreement": agree,
                          "villarreal_checked": vill, "graph_condition_checked": cor,
                          "lemma32_rows_checked": lemma, "zero_divisor_checked": zd,
                          "failures": failures}
    elif args.suite == "matched":
        holds = hyp = 0
        for doc in matched_suite(args.count, args.seed):
            res = check_matched_instance(doc, max_vertices=args.max_vertices)
            total += 1
            holds += res.condition_holds
            hyp += res.hypothesis
            if not res.ok:
                failures += 1
                rep["checks"].append({"name": f"instance seed {res.params.get('seed')}",
                                      "status": "fail", "params": res.params,
                                      "condition_holds": res.condition_holds,
                                      "oracle_unmixed": res.oracle_unmixed,
                                      "hypothesis": res.hypothesis})
        rep["summary"] = {"instances": total, "condition_holds": holds,
                          "prop36_hypothesis_true": hyp, "failures": failures}
    else:
        for path in args.instances:
            doc = load_instance(path)
            H = doc.hypergraph()
            L = _labeling(doc, H, args)
            if L is None:
                raise InstanceError(f"{path}: no clique-row labeling found")
            cv = cross_validate(H, L, max_vertices=args.max_vertices)
            total += 1
            valid = cv.certificate.witness is None or check_witness(H, L, cv.certificate.witness)
            ok = cv.agree and valid
            failures += not ok
            check = {"name": str(path), "status": _status(ok),
                     "theorem33": cv.certificate.verdict, "oracle_unmixed": cv.oracle_unmixed,
                     "agree": cv.agree}
            if not ok:
                check.update(certificate_dict(H, cv.certificate, L.grid))
                if cv.oracle_witness:
                    check["oracle_witness"] = [names(H, c) for c in cv.oracle_witness]
            rep["checks"].append(check)
        rep["summary"] = {"instances": total, "failures": failures}
    return OK if failures == 0 else FAIL


def cmd_export_ideal(args, rep):
    doc = _load(args, rep)
    text = export_ideal(edge_ideal(doc.hypergraph()), args.format)
    if args.output is None:
        sys.stdout.write(text)
        return None
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    rep["checks"].append({"name": "export", "status": "pass", "format": args.format,
                          "output": args.output})
    return OK


def cmd_gen(args, rep):
    if args.kind == "starstar":
        if args.r is None:
            raise InstanceError("gen starstar needs --r")
        doc = gen_starstar(args.n, args.r, args.d, args.p, args.seed)
    else:
        doc = gen_matched(args.n, args.d, args.p, args.seed)
    text = write_instance(doc)
    if args.output is None:
        sys.stdout.write(text)
        return None
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    rep["checks"].append({"name": "generate", "status": "pass", "output": args.output,
                          "vertices": len(doc.vertices), "edges": len(doc.edges)})
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", metavar="PATH", help="also write the report as JSON")
    common.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    common.add_argument("--max-covers", type=int, default=None)
    common.add_argument("--parallel", type=int, default=1, metavar="N",
                        help="worker processes for cover enumeration")

    p = argparse.ArgumentParser(prog="unmixed", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-unmixed", parents=[common], help="enumerate minimal vertex covers")
    s.add_argument("instance")
    s.add_argument("--skeleton", type=int, metavar="K", help="check the K-skeleton instead")
    s.set_defaults(func=cmd_check_unmixed)

    s = sub.add_parser("check-theorem33", parents=[common],
                       help="submaximal-edge criterion on a clique-row labeling")
    s.add_argument("instance")
    s.add_argument("--r", type=int, help="search for a labeling with R columns if none is given")
    s.set_defaults(func=cmd_check_theorem33)

    s = sub.add_parser("check-props", parents=[common], help="perfect-matching criteria")
    s.add_argument("instance")
    s.set_defaults(func=cmd_check_props)

    s = sub.add_parser("check-ideal", parents=[common], help="zero-divisor sums in the edge ring")
    s.add_argument("instance")
    s.add_argument("--r", type=int)
    s.add_argument("--oracle", action="store_true", help="confirm each sum by a subset sweep")
    s.set_defaults(func=cmd_check_ideal)

    s = sub.add_parser("cross-validate", parents=[common],
                       help="criterion vs. cover enumeration on files or a generated suite")
    s.add_argument("instances", nargs="*")
    s.add_argument("--r", type=int)
    s.add_argument("--suite", choices=("starstar", "matched"))
    s.add_argument("--count", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_cross_validate)

    s = sub.add_parser("export-ideal", parents=[common], help="write the edge ideal for a CAS")
    s.add_argument("instance")
    s.add_argument("--format", choices=FORMATS, default="m2")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_ideal)

    s = sub.add_parser("gen", parents=[common], help="generate a seeded random instance")
    s.add_argument("kind", choices=("starstar", "matched"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--p", type=float, default=0.0, help="extra edge probability")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def _echo(args) -> dict:
    skip = {"func", "report", "timings"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = new_report(args.command, _echo(args), None)
    start = time.perf_counter()
    try:
        code = args.func(args, rep)
    except (InstanceError, HypergraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    if code is None:
        return OK
    rep["status"] = {OK: "ok", FAIL: "fail", BUDGET: "budget"}[code]
    if args.timings:
        rep["timings"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    sys.stdout.write(render_text(rep))
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_json(rep))
    return code


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
