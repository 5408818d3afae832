"""Command-line interface.

Exit codes: 0 success, 1 analysis-contract violation (a computed result
disagrees with the predicted one), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import _kernels
from .boolfn import TableFormatError, TruthTable, anf
from .family import (
    BENT_PAIRS,
    ResidueClassPair,
    _S_TABLE,
    b_m,
    coset_weight_distribution,
    coset_weight_distribution_direct,
    construct_f,
    dual_at_zero,
    predicted_duality,
    s_closed,
    s_sum,
    value_at_zero,
    weight_formula,
    weight_sign,
)
from .maiorana import MAX_SPLIT_M, all_splits, detect_mm
from .quadratic import NotQuadratic, from_anf, hou_conditions
from .walsh import DualityClass, duality_class, is_bent, wht

REPORT_VERSION = 1


class UsageError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_input(args) -> tuple[TruthTable, dict, ResidueClassPair | None]:
    if getattr(args, "infile", None):
        if args.pair is not None:
            raise UsageError("--in and --pair are mutually exclusive")
        try:
            t = TruthTable.read(args.infile)
        except (OSError, TableFormatError) as exc:
            raise UsageError(f"cannot read {args.infile}: {exc}") from None
        return t, {"file": str(args.infile), "m": t.m}, None
    if args.m is None or args.pair is None:
        raise UsageError("need --m and --pair, or --in FILE")
    try:
        pair = ResidueClassPair.parse(args.pair)
        t = construct_f(pair, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return t, {"pair": str(pair), "m": args.m}, pair


def _quadratic_summary(t: TruthTable) -> tuple[dict | None, dict | None]:
    try:
        form = from_anf(anf(t))
    except NotQuadratic:
        return None, None
    inv, alt = hou_conditions(form)
    return form.summary(), {"involution": inv, "alternating": alt, "verdict": inv and alt}


def analyze_table(t: TruthTable) -> dict:
    s = wht(t)
    bent = is_bent(s)
    cls = duality_class(t)
    quad, hou = _quadratic_summary(t)
    out: dict[str, Any] = {
        "m": t.m,
        "weight": t.weight,
        "degree": anf(t).degree,
        "bent": bent,
        "duality": str(cls),
        "quadratic_form": quad,
        "hou": hou,
        "F0": s[0],
    }
    if t.m % 2 == 0 and t.m <= MAX_SPLIT_M:
        out["mm_splits"] = [str(sp) for sp in all_splits(t.m) if detect_mm(t, sp) is not None]
    return out


def build_report(t: TruthTable, source: dict, pair: ResidueClassPair | None) -> dict:
    analysis = analyze_table(t)
    prediction = None
    if pair is not None and t.m >= 4:
        prediction = {"duality": str(predicted_duality(pair, t.m)), "bent": pair.odd_difference}
    return {"version": REPORT_VERSION, "input": source, "analysis": analysis, "prediction": prediction}


def _contract_ok(report: dict) -> bool:
    pred = report["prediction"]
    a = report["analysis"]
    if pred is not None and (pred["duality"] != a["duality"] or pred["bent"] != a["bent"]):
        return False
    if a["hou"] is not None and a["bent"]:
        spectral = a["duality"] in (str(DualityClass.SELF_DUAL), str(DualityClass.ANTI_SELF_DUAL))
        if a["hou"]["verdict"] != spectral:
            return False
    return True


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))


# -- subcommands --------------------------------------------------------------


def cmd_construct(args) -> int:
    t, _, _ = _load_input(args)
    _emit(t.dumps(), args.out)
    return 0


def cmd_analyze(args) -> int:
    t, source, pair = _load_input(args)
    report = build_report(t, source, pair)
    if args.format == "json":
        _emit(_dump(report), args.out)
    else:
        a = report["analysis"]
        lines = [f"input: {', '.join(f'{k}={v}' for k, v in sorted(source.items()))}"]
        for key in ("m", "weight", "degree", "bent", "duality", "F0"):
            lines.append(f"{key}: {a[key]}")
        if a["hou"] is not None:
            lines.append("hou: " + ", ".join(f"{k}={v}" for k, v in sorted(a["hou"].items())))
        if "mm_splits" in a:
            lines.append(f"mm splits: {a['mm_splits'] or 'none'}")
        if report["prediction"]:
            lines.append(f"predicted duality: {report['prediction']['duality']}")
        _emit("\n".join(lines), args.out)
    return 0 if _contract_ok(report) else 1


def cmd_spectrum(args) -> int:
    t, _, _ = _load_input(args)
    s = wht(t)
    if args.format == "json":
        _emit(s.to_json(), args.out)
    else:
        _emit(f"m={s.m}\n" + " ".join(str(v) for v in s.values.tolist()), args.out)
    return 0


def cmd_classify(args) -> int:
    t, source, pair = _load_input(args)
    cls = duality_class(t)
    _, hou = _quadratic_summary(t)
    result = {"input": source, "spectral": str(cls), "hou": hou}
    if pair is not None and t.m >= 4:
        result["predicted"] = str(predicted_duality(pair, t.m))
    if args.format == "json":
        _emit(_dump(result), args.out)
    else:
        lines = []
        if hou is None:
            lines.append("quadratic form: not quadratic, criterion not applicable")
        else:
            lines.append(f"(Q+Q^T)^2 = I: {hou['involution']}")
            lines.append(f"(Q+Q^T)Q(Q+Q^T) + Q^T alternating: {hou['alternating']}")
            lines.append(f"criterion verdict (self- or anti-self-dual): {hou['verdict']}")
        lines.append(f"spectral class: {cls}")
        if "predicted" in result:
            lines.append(f"predicted class: {result['predicted']}")
        _emit("\n".join(lines), args.out)
    ok = "predicted" not in result or result["predicted"] == str(cls)
    if hou is not None and cls != DualityClass.NOT_BENT:
        ok = ok and hou["verdict"] == (cls != DualityClass.NEITHER)
    return 0 if ok else 1


def cmd_mm_check(args) -> int:
    t, source, pair = _load_input(args)
    if t.m % 2 or t.m > MAX_SPLIT_M:
        raise UsageError(f"mm-check needs even m <= {MAX_SPLIT_M}")
    rows = []
    for sp in all_splits(t.m):
        w = detect_mm(t, sp)
        row: dict[str, Any] = {"x": sorted(sp.xset), "y": sorted(sp.yset), "mm": w is not None}
        if w is not None:
            row["phi"] = list(w.phi)
            row["g"] = w.g.to_hex()
        rows.append(row)
    if args.format == "json":
        _emit(_dump({"input": source, "splits": rows}), args.out)
    else:
        lines = []
        for r in rows:
            line = f"x={r['x']} y={r['y']}: {'MM' if r['mm'] else 'not MM'}"
            if r["mm"]:
                line += f"  phi={r['phi']} g={r['g']}"
            lines.append(line)
        lines.append(f"{sum(r['mm'] for r in rows)} of {len(rows)} splits admit an MM decomposition")
        _emit("\n".join(lines), args.out)
    return 0


def cmd_coset_weights(args) -> int:
    if args.m is None or args.pair is None:
        raise UsageError("coset-weights needs --m and --pair")
    try:
        pair = ResidueClassPair.parse(args.pair)
        fn = coset_weight_distribution_direct if args.direct else coset_weight_distribution
        dist = fn(pair, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(json.dumps({str(w): c for w, c in dist.counts}, sort_keys=False), args.out)
    else:
        _emit("\n".join(f"{w}: {c}" for w, c in dist.counts), args.out)
    return 0


def _label(a: int, b: int, sub: str = "") -> str:
    sq = f"{'2' if a == 2 else ''}B{sub}^2"
    return sq if b == 0 else f"{sq}{'+' if b > 0 else '-'}B{sub}"


def build_tables(m_min: int, m_max: int) -> dict:
    ms = list(range(max(2, m_min), m_max + 1))
    sums = {
        "symbolic": [[_label(*_S_TABLE[j][r]) for r in range(8)] for j in range(4)],
        "values": {str(m): [s_sum(j, m) for j in range(4)] for m in ms},
        "B": {str(m): b_m(m) for m in ms},
        "closed_form_agrees": all(s_closed(j, m) == s_sum(j, m) for m in ms for j in range(4)),
    }
    order = [(0, 1), (2, 3), (0, 3), (1, 2)]
    duality_ms = [m for m in ms if m % 2 == 0 and m % 4 == 2 and m >= 4]
    weights = {"pairs": [f"{a},{b}" for a, b in order], "columns": ["m=2 mod 8", "m=6 mod 8"], "symbolic": []}
    for p in order:
        weights["symbolic"].append(["2B^2+B" if weight_sign(p, r) > 0 else "2B^2-B" for r in (2, 6)])
    weights["values"] = {str(m): [construct_f(p, m).weight for p in order] for m in duality_ms}
    weights["formula_agrees"] = all(
        construct_f(p, m).weight == weight_formula(p, m) for m in duality_ms for p in order
    )
    dual0: dict[str, list[int]] = {}
    f0: dict[str, list[int]] = {}
    for m in duality_ms:
        dual0[str(m)] = [int(wht(construct_f(p, m))[0] < 0) for p in order]
        f0[str(m)] = [construct_f(p, m)(0) for p in order]
    zero = {
        "pairs": weights["pairs"],
        "dual_at_zero": dual0,
        "f_at_zero": f0,
        "dual_at_zero_from_weights": {str(m): [dual_at_zero(p, m) for p in order] for m in duality_ms},
        "f_at_zero_from_residues": [value_at_zero(p) for p in order],
    }
    return {"m_range": [ms[0], ms[-1]] if ms else [], "s_sums": sums, "weights": weights, "zero_values": zero}


def _render_tables(tab: dict) -> str:
    out = []
    s = tab["s_sums"]
    out.append("S(j)_m closed forms by m mod 8")
    out.append("        " + "".join(f"{r:>10}" for r in range(8)))
    for j, row in enumerate(s["symbolic"]):
        out.append(f"S({j})_m " + "".join(f"{c:>10}" for c in row))
    out.append("")
    ms = list(s["values"])
    out.append("S(j)_m values")
    out.append("m       " + "".join(f"{m:>10}" for m in ms))
    out.append("m mod 8 " + "".join(f"{int(m) % 8:>10}" for m in ms))
    out.append("B_m     " + "".join(f"{s['B'][m]:>10}" for m in ms))
    for j in range(4):
        out.append(f"S({j})_m " + "".join(f"{s['values'][m][j]:>10}" for m in ms))
    out.append(f"closed form agrees: {s['closed_form_agrees']}")
    out.append("")
    w = tab["weights"]
    out.append("wt(f_{i1,i2})      m=2 mod 8   m=6 mod 8")
    for p, row in zip(w["pairs"], w["symbolic"]):
        out.append(f"({p})          {row[0]:>11} {row[1]:>11}")
    for m, vals in w["values"].items():
        out.append(f"  m={m}: " + ", ".join(f"({p})={v}" for p, v in zip(w["pairs"], vals)))
    out.append(f"weight formula agrees: {w['formula_agrees']}")
    out.append("")
    z = tab["zero_values"]
    out.append("dual(0) and f(0) per pair")
    for m in z["dual_at_zero"]:
        out.append(f"  m={m} (m mod 8 = {int(m) % 8})")
        for p, d, f in zip(z["pairs"], z["dual_at_zero"][m], z["f_at_zero"][m]):
            out.append(f"    ({p})  dual(0)={d}  f(0)={f}  {'self-dual' if d == f else 'anti-self-dual'}")
    return "\n".join(out)


def cmd_table(args) -> int:
    lo = args.m_min if args.m_min is not None else (args.m if args.m is not None else 2)
    hi = args.m_max if args.m_max is not None else (args.m if args.m is not None else 14)
    if lo > hi or hi > 20:
        raise UsageError("need m-min <= m-max <= 20")
    tab = build_tables(lo, hi)
    _emit(_dump(tab) if args.format == "json" else _render_tables(tab), args.out)
    ok = tab["s_sums"]["closed_form_agrees"] and tab["weights"]["formula_agrees"]
    ok = ok and tab["zero_values"]["dual_at_zero"] == tab["zero_values"]["dual_at_zero_from_weights"]
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    from .selftest import run

    results = run(max_m=args.max_m, seed=args.seed)
    if args.format == "json":
        _emit(_dump({"backend": _kernels.backend(), "results": [r.__dict__ for r in results]}), args.out)
    else:
        _emit("\n".join([f"backend: {_kernels.backend()}"] + [r.line() for r in results]), args.out)
    return 0 if all(r.passed for r in results) else 1


# -- parser -------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadbent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, infile=True):
        p.add_argument("--m", type=int)
        p.add_argument("--pair", help="residue pair i1,i2")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to this file")
        if infile:
            p.add_argument("--in", dest="infile", help="read a truth-table file")
        return p

    common(sub.add_parser("construct", help="write the truth table of f_{i1,i2}")).set_defaults(func=cmd_construct)
    common(sub.add_parser("analyze", help="full report for one function")).set_defaults(func=cmd_analyze)
    common(sub.add_parser("spectrum", help="Walsh-Hadamard spectrum")).set_defaults(func=cmd_spectrum)
    common(sub.add_parser("classify", help="matrix criterion vs spectral duality class")).set_defaults(
        func=cmd_classify
    )
    common(sub.add_parser("mm-check", help="Maiorana-McFarland test over all splits")).set_defaults(
        func=cmd_mm_check
    )
    cw = common(sub.add_parser("coset-weights", help="Hadamard-code coset weight distribution"), infile=False)
    cw.add_argument("--direct", action="store_true", help="enumerate codewords instead of using the spectrum")
    cw.set_defaults(func=cmd_coset_weights)
    tb = common(sub.add_parser("table", help="reproduce the sum, weight and dual tables"), infile=False)
    tb.add_argument("--m-min", type=int)
    tb.add_argument("--m-max", type=int)
    tb.set_defaults(func=cmd_table)
    st = sub.add_parser("selftest", help="run the consistency checks at small m")
    st.add_argument("--max-m", type=int, default=8)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--format", choices=("text", "json"), default="text")
    st.add_argument("--out")
    st.set_defaults(func=cmd_selftest)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"quadbent {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
