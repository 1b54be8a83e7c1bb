"""Batch command-line front end.

One JSON job file in, one deterministic report out (JSON via --json, or a
markdown rendering derived from the same JSON).  Exit codes: 0 success /
all checks passed, 1 a verification-style check failed, 2 malformed input.

Subcommands: verify, search, compat, max-rank, invariants, qdet, suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import qdet as qdet_mod
from .classify import (
    ParamAction,
    all_matrix_families,
    compatibility,
    enumerate_taft_affine,
    enumerate_taft_matrix,
    enumerate_taft_qplane,
    matrix_family,
    max_rank,
)
from .cyclotomic import Cyc, InputError, as_q_power, lcm, zeta
from .hopf import (
    inner_faithfulness,
    instance_from_json,
    instance_to_json,
    verify_module_algebra,
)
from .invariants import (
    FixedRingCase,
    commutativity_check,
    fixed_dims,
    is_reflection,
    molien_check,
    presentation_match,
    series_equal,
    trace_series_direct,
    trace_series_product,
)
from .ncalg import quantum_matrix
from .suite import run_suite


def parse_scalar(value, q=None, field="scalar"):
    """Job scalars: integers, fraction strings, q-power strings like "q^-2"
    (relative to the job's ambient q), or full {level, coeffs} objects."""
    if isinstance(value, int):
        return Cyc.rational(value)
    if isinstance(value, dict):
        return Cyc.from_json(value)
    if isinstance(value, str):
        s = value.strip()
        if s == "q":
            s = "q^1"
        if s.startswith("q^"):
            if q is None:
                raise InputError(f"{field}: q-power syntax needs ord_q in the job")
            try:
                e = int(s[2:])
            except ValueError as exc:
                raise InputError(f"{field}: bad exponent in {value!r}") from exc
            return q**e
        try:
            return Cyc.rational(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{field}: cannot parse scalar {value!r}") from exc
    raise InputError(f"{field}: cannot parse scalar {value!r}")


def _require(job, key, field=None):
    try:
        return job[key]
    except (KeyError, TypeError):
        raise InputError(f"missing job field: {field or key}") from None


def _scalar_json(c, q=None):
    obj = c.to_json()
    if q is not None:
        e = as_q_power(c, q)
        if e is not None:
            obj["as_q_power"] = e
    return obj


def _family_json(fam, q=None):
    return {
        "tag": fam.tag,
        "lambda": _scalar_json(fam.lam, q),
        "grouplike": {
            "perm": list(fam.g.perm),
            "alpha": [_scalar_json(s, q) for s in fam.g.scalars],
        },
        "dimension": fam.dim,
        "basis": [
            [[_scalar_json(e, q) for e in row] for row in x.eta] for x in fam.basis
        ],
    }


# command handlers ----------------------------------------------------------------


def cmd_verify(job, opts):
    inst = instance_from_json(_require(job, "instance"))
    d_check = opts.degree_bound or 3
    report = verify_module_algebra(inst, d_check=d_check)
    out = report.to_json()
    if job.get("inner_faithful"):
        verdict = inner_faithfulness(inst)
        if isinstance(verdict, tuple):
            out["inner_faithfulness"] = {"verdict": verdict[0], "reason": verdict[1]}
        else:
            out["inner_faithfulness"] = {"verdict": verdict}
    return out, 0 if report.ok else 1


def cmd_search(job, opts):
    target = _require(job, "target")
    grid = None
    if opts.level:
        from .classify import SearchGrid

        grid = SearchGrid(level=opts.level)
    if target == "matrix":
        N = int(_require(job, "N"))
        q = zeta(int(_require(job, "ord_q")))
        lam = parse_scalar(_require(job, "lambda"), q, "lambda")
        fams = enumerate_taft_matrix(N, q, lam, grid=grid, include_tau=job.get("tau", True))
        ref = q
    elif target in ("plane", "weyl"):
        k, m = int(_require(job, "k")), int(_require(job, "m"))
        fams = enumerate_taft_qplane(k, m, grid=grid, algebra=target)
        ref = None
    elif target == "affine":
        m = int(_require(job, "m"))
        if "p" in job:
            p = [[parse_scalar(e, None, "p") for e in row] for row in job["p"]]
        else:
            from .suite import _generic_affine_p

            p = _generic_affine_p(int(_require(job, "t")), int(_require(job, "order")))
        fams = enumerate_taft_affine(p, m, grid=grid)
        ref = None
    else:
        raise InputError(f"unknown search target {target!r}")
    out = {
        "target": target,
        "count": len(fams),
        "families": [_family_json(f, ref) for f in fams],
    }
    return out, 0


def _table_actions(job):
    target = _require(job, "target")
    if target not in ("M2", "M3", "M4"):
        raise InputError(f"unknown table target {target!r}")
    N = int(target[1])
    q = zeta(int(_require(job, "ord_q")))
    return N, q


def cmd_compat(job, opts):
    N, q = _table_actions(job)
    rows = _require(job, "rows")
    if not (isinstance(rows, list) and len(rows) == 2):
        raise InputError("rows must be a two-element list")
    r, c = int(rows[0]), int(rows[1])
    kw_r = {k: job[k] for k in ("a_r", "b_r") if k in job}
    kw_c = {k: job[k] for k in ("a_c", "b_c") if k in job}
    aj = matrix_family(N, q, r, a=kw_r.get("a_r"), b=kw_r.get("b_r"))
    ai = matrix_family(N, q, c, a=kw_c.get("a_c"), b=kw_c.get("b_c"))
    res = compatibility(ai, aj, q)
    out = {"cell": [r, c], "i_action": ai.tag, "j_action": aj.tag}
    out.update(res.to_json(q))
    return out, 0


def cmd_maxrank(job, opts):
    target = _require(job, "target")
    if target in ("M2", "M3", "M4"):
        N = int(target[1])
        q = zeta(int(_require(job, "ord_q")))
        actions = all_matrix_families(N, q)
        ref = q
    elif target == "affine":
        from .suite import _generic_affine_p

        m = int(_require(job, "m"))
        p = _generic_affine_p(int(_require(job, "t")), int(_require(job, "order")))
        fams = enumerate_taft_affine(p, m)
        actions = [
            ParamAction(
                f.pres, f.g, f.lam, tuple((f"p{i}", x) for i, x in enumerate(f.basis)), f.tag
            )
            for f in fams
        ]
        ref = None
    else:
        raise InputError(f"unknown max-rank target {target!r}")
    res = max_rank(actions, ref)
    out = {
        "target": target,
        "theta": res.theta,
        "clique": [actions[v].tag for v in res.clique],
    }
    if res.witness is not None:
        rep = verify_module_algebra(res.witness)
        out["witness"] = instance_to_json(res.witness)
        out["witness_verifies"] = rep.ok
        qls = res.witness.qls
        out["character_table"] = [
            [_scalar_json(chi.eval(g, res.witness.level), ref) for g in qls.gs]
            for chi in qls.chis
        ]
    return out, 0


def cmd_invariants(job, opts):
    from .suite import _plane_instance

    k, m = int(_require(job, "k")), int(_require(job, "m"))
    checks = job.get("checks", ["commutativity", "reflection", "trace", "molien"])
    D = opts.degree_bound or int(job.get("degree_bound", 20))
    inst, mu = _plane_instance(k, m)
    results = {}
    ok = True
    for check in checks:
        if check == "fixed_dims":
            results[check] = fixed_dims(inst, D)
        elif check == "commutativity":
            results[check] = commutativity_check(inst, D)
            ok = ok and results[check]
        elif check == "reflection":
            from .hopf import GrouplikeAction

            flag, xi = is_reflection(GrouplikeAction.diagonal([mu, mu**m]))
            expected = mu**m == 1
            results[check] = {"is_reflection": flag, "expected": expected}
            ok = ok and flag == expected
        elif check == "trace":
            g = inst.gen_actions[0]
            direct = trace_series_direct(inst.pres, g, D)
            prod = trace_series_product(list(g.scalars), [1, 1], D)
            results[check] = series_equal(direct, prod)
            ok = ok and results[check]
        elif check == "molien":
            n = lcm(k, m)
            if n > 12:
                results[check] = "skipped: group order > 12"
            else:
                eq, _, dims = molien_check(inst.pres, [inst.gen_actions[0]], D)
                results[check] = {"equal": eq, "fixed_dims": dims}
                ok = ok and eq
        elif check == "match":
            case_tag = _require(job, "case")
            case = FixedRingCase(case_tag, k, m)
            matched, dims, cand = presentation_match(inst, case, D)
            results[check] = {"match": matched, "dims": dims, "candidate": cand}
            ok = ok and matched
        else:
            raise InputError(f"unknown invariants check {check!r}")
    return {"k": k, "m": m, "degree_bound": D, "results": results}, 0 if ok else 1


def cmd_qdet(job, opts):
    N = int(_require(job, "N"))
    q = zeta(int(_require(job, "ord_q")))
    pres = quantum_matrix(N, q)
    checks = job.get("checks", ["centrality", "laplace"])
    results = {}
    ok = True
    for check in checks:
        if check == "centrality":
            results[check] = qdet_mod.centrality_check(pres)
            ok = ok and results[check]
        elif check == "laplace":
            cols = job.get("columns", list(range(N)))
            col_results = {str(c): qdet_mod.laplace_check(pres, int(c)) for c in cols}
            results[check] = col_results
            ok = ok and all(col_results.values())
        elif check == "stability":
            wanted = {int(r) for r in job["rows"]} if "rows" in job else None
            flags = {}
            for pa in all_matrix_families(N, q):
                if wanted is not None:
                    kind = int(pa.tag[1]) if pa.tag[0] in "rf" else None
                    if kind not in wanted:
                        continue
                g_fix, x_kill = qdet_mod.ideal_stability(pa.instance())
                flags[pa.tag] = {"g_fixes_det": g_fix, "x_kills_det": x_kill}
            results[check] = flags
        else:
            raise InputError(f"unknown qdet check {check!r}")
    return {"N": N, "results": results}, 0 if ok else 1


def cmd_suite(job, opts):
    job = job or {}
    criteria = job.get("criteria")
    ord_q = job.get("ord_q")
    workers = opts.workers or 1
    if workers > 1:
        results = _run_suite_parallel(criteria, ord_q, workers)
    else:
        results = run_suite(criteria, ord_q=ord_q)
    ok = all(r["status"] != "fail" for r in results)
    return {"results": results, "all_pass": ok}, 0 if ok else 1


def _suite_worker(args):
    cid, ord_q = args
    from .suite import run_suite as rs

    return rs([cid], ord_q=ord_q)[0]


def _run_suite_parallel(criteria, ord_q, workers):
    from .suite import CRITERIA

    selected = sorted(criteria) if criteria else sorted(CRITERIA)
    try:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_suite_worker, [(cid, ord_q) for cid in selected]))
    except OSError:
        results = run_suite(selected, ord_q=ord_q)
    return sorted(results, key=lambda r: r["id"])


# rendering -------------------------------------------------------------------------


def render_markdown(command, report):
    lines = [f"# qhact {command} report", ""]
    if command == "suite":
        lines.append("| id | criterion | status | seconds | detail |")
        lines.append("|---:|-----------|--------|--------:|--------|")
        for r in report["results"]:
            lines.append(
                f"| {r['id']} | {r['name']} | {r['status']} | {r.get('seconds', '')} | {r['detail']} |"
            )
        lines.append("")
        lines.append(f"**All pass:** {report['all_pass']}")
    elif command == "search":
        lines.append(f"Found **{report['count']}** families for target `{report['target']}`.")
        lines.append("")
        lines.append("| tag | dim |")
        lines.append("|-----|----:|")
        for fam in report["families"]:
            lines.append(f"| {fam['tag']} | {fam['dimension']} |")
    else:
        lines.append("```json")
        lines.append(json.dumps(report, indent=2, sort_keys=True))
        lines.append("```")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "verify": cmd_verify,
    "search": cmd_search,
    "compat": cmd_compat,
    "max-rank": cmd_maxrank,
    "invariants": cmd_invariants,
    "qdet": cmd_qdet,
    "suite": cmd_suite,
}


def main(argv=None):
    parser = argparse.ArgumentParser(prog="qhact", description=__doc__)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--job", help="JSON job file (omit for suite defaults)")
    parser.add_argument("--json", action="store_true", help="emit the raw JSON report")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--degree-bound", type=int, dest="degree_bound")
    parser.add_argument("--level", type=int, help="ambient level override")
    opts = parser.parse_args(argv)

    job = None
    if opts.job:
        try:
            with open(opts.job) as fh:
                job = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(json.dumps({"error": f"cannot read job file: {exc}"}), file=sys.stderr)
            return 2
    elif opts.command != "suite":
        print(json.dumps({"error": "this command requires --job FILE"}), file=sys.stderr)
        return 2

    try:
        report, code = COMMANDS[opts.command](job, opts)
    except InputError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    if opts.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render_markdown(opts.command, report), end="")
    return code


if __name__ == "__main__":
    sys.exit(main())
