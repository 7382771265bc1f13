"""Command-line surface: sequences, matrices, determinants, verifications.

Subcommands: seq | matrix | hankel | verify.  The weight is symbolic by
default; pass --omega with an integer to specialize.  Exit codes: 0 success,
1 a mathematical disagreement was detected, 2 usage error.  All output is
deterministic and large integers are printed in full decimal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import discrepancies, hankel, motzkin, schroder
from .algebra import OmegaPoly, TSeries
from .matrices import TriMatrix


class UsageError(Exception):
    pass


def _omega_arg(text: str):
    if text == "symbolic":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"omega must be an integer or 'symbolic', got {text!r}"
        )


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv_line(row) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(row)
    return buf.getvalue()


def _emit_series(ts: TSeries, omega, fmt: str) -> str:
    if omega is None:
        if fmt == "plain":
            return "; ".join(str(c) for c in ts.coeffs)
        if fmt == "csv":
            return _csv_line([str(c) for c in ts.coeffs])
        return _dump_json(ts.to_json())
    values = ts.eval_omega(omega).int_coeffs()
    if fmt == "plain":
        return " ".join(str(v) for v in values)
    if fmt == "csv":
        return _csv_line(values)
    return _dump_json({"order": ts.order, "values": values})


def _emit_matrix(m: TriMatrix, omega, fmt: str) -> str:
    if omega is not None:
        rows = m.eval_omega(omega).int_rows()
        if fmt == "plain":
            return "\n".join(" ".join(str(v) for v in row) for row in rows)
        if fmt == "csv":
            return "\n".join(_csv_line(row) for row in rows)
        return _dump_json({"n": m.n, "rows": rows})
    if fmt == "plain":
        return "\n".join("; ".join(str(e) for e in row) for row in m.rows)
    if fmt == "csv":
        return "\n".join(_csv_line([str(e) for e in row]) for row in m.rows)
    return _dump_json({"n": m.n, "rows": [[e.to_json() for e in row] for row in m.rows]})


def _seq_series(args) -> TSeries:
    family, order, j = args.family, args.N, args.j
    if order < 0:
        raise UsageError("--N must be nonnegative")
    if j < 0:
        raise UsageError("--j must be nonnegative")
    if family == "motzkin":
        return motzkin.motzkin_column_gf(j, order) if j else motzkin.motzkin_series(order)
    if family == "grand-motzkin":
        return motzkin.grand_column_gf(j, order) if j else motzkin.grand_motzkin_series(order)
    if family == "w-path":
        if args.w < 1:
            raise UsageError("--w must be a positive step length")
        return schroder.w_column_gf(j, args.w, order)
    if family == "schroder-compressed":
        return (
            schroder.compressed_column_gf(j, order) if j else schroder.schroder_series(order)
        )
    if family == "delannoy":
        if j:
            raise UsageError("--j is not defined for the delannoy family")
        return TSeries([schroder.delannoy_number(n, n) for n in range(order + 1)], order)
    # banded
    if args.k < 1:
        raise UsageError("banded sequences require a band height --k >= 1")
    if j:
        raise UsageError("--j is not defined for banded sequences; see verify theorem-schroeder")
    if args.band_family == "motzkin":
        return motzkin.banded_motzkin_gf(args.k).gf.expand(order)
    if args.band_family == "schroder":
        return schroder.banded_schroder_series(args.k, order)
    if args.w < 1:
        raise UsageError("--w must be a positive step length")
    return schroder.banded_w_gf(args.k, args.w).expand(order)


def _cmd_seq(args) -> int:
    print(_emit_series(_seq_series(args), args.omega, args.format))
    return 0


def _cmd_matrix(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    build = {
        "motzkin": motzkin.motzkin_matrix,
        "motzkin-inverse": motzkin.inverse_motzkin_matrix,
        "schroder": schroder.schroder_matrix_compressed,
        "schroder-inverse": schroder.inverse_schroder_matrix,
        "grand": motzkin.grand_matrix,
    }[args.kind]
    print(_emit_matrix(build(args.n), args.omega, args.format))
    return 0


def _cmd_hankel(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    shift = args.shift
    if shift and (args.alpha != 1 or args.beta != 0):
        raise UsageError("--shift is only meaningful with the default (alpha, beta) = (1, 0)")
    if (args.alpha, args.beta) == (0, 0):
        raise UsageError("alpha and beta cannot both be zero")
    spec = hankel.HankelSpec(
        n, shift=shift, alpha=OmegaPoly([args.alpha]), beta=OmegaPoly([args.beta])
    )
    det = hankel.det_fraction_free(hankel.hankel_matrix(spec))
    if shift == 0:
        closed = hankel.shifted_hankel_closed(n, args.alpha, args.beta)
    elif shift == 1:
        closed = hankel.second_hankel_closed(n)
    else:
        closed = OmegaPoly([1])
        for d in range(1, n + 1):
            a = hankel.second_hankel_closed(d)
            closed = closed + a * a
    if args.omega is not None:
        det_out = det.evaluate(args.omega)
        closed_out = closed.evaluate(args.omega)
    else:
        det_out, closed_out = det, closed
    agree = det_out == closed_out
    if args.format == "json":
        enc = (lambda v: v.to_json()) if args.omega is None else (lambda v: v)
        print(_dump_json({"agree": agree, "closed_form": enc(closed_out), "determinant": enc(det_out)}))
    elif args.format == "csv":
        print(_csv_line(["determinant", "closed-form", "agree"]))
        print(_csv_line([str(det_out), str(closed_out), str(agree).lower()]))
    else:
        print(f"determinant: {det_out}")
        print(f"closed-form: {closed_out}")
        print(f"agree: {str(agree).lower()}")
    return 0 if agree else 1


def _verify_selected(args):
    """Yield (name, CheckResult, extra_output_lines) for the selected suite."""
    which, bound = args.which, args.max
    if bound < 1:
        raise UsageError("--max must be positive")

    def banded_bounds():
        kmax = args.k if args.k else 6
        horizon = args.N if args.N else 30
        return kmax, horizon

    if which in ("lemma", "all"):
        worst = None
        for i in range(bound + 1):
            for j in range(bound + 1):
                r = motzkin.verify_lemma(i, j)
                if not r:
                    worst = r
                    break
            if worst:
                break
        yield f"lemma (i, j <= {bound})", worst or motzkin.verify_lemma(0, 0), []
    if which in ("orthogonality", "all"):
        yield f"orthogonality (j <= {bound})", motzkin.verify_orthogonality(bound), []
    if which in ("banded-recursion", "all"):
        kmax, horizon = banded_bounds()
        for k in range(1, kmax + 1):
            yield (
                f"banded-recursion (k={k}, n <= {horizon})",
                motzkin.banded_motzkin_recursion_check(k, horizon),
                [],
            )
    if which in ("first-return", "all"):
        horizon = args.N if args.N else 30
        yield f"first-return (n <= {horizon})", motzkin.first_return_check(horizon), []
    if which in ("delannoy", "all"):
        horizon = args.N if args.N else 15
        yield f"delannoy-recursion (n, j <= {horizon})", schroder.delannoy_recursion_check(horizon), []
    if which in ("bridge", "all"):
        top = args.N if args.N else 20
        worst = None
        for n in range(1, top + 1):
            r = schroder.delannoy_s_bridge_check(n)
            if not r:
                worst = r
                break
        yield f"delannoy-s-bridge (n <= {top})", worst or schroder.delannoy_s_bridge_check(1), []
    if which in ("gould", "all"):
        kmax = args.k if args.k else 20
        worst = None
        for k in range(kmax + 1):
            for m in range(k // 2 + 1):
                r = schroder.gould_identity_check(k, m)
                if not r:
                    worst = r
                    break
            if worst:
                break
        yield f"gould-carlitz (k <= {kmax})", worst or schroder.gould_identity_check(0, 0), []
    if which in ("theorem-schroeder", "all"):
        k = args.k if args.k else 4
        order = args.N if args.N else 12
        if k < 2:
            raise UsageError("theorem-schroeder requires --k >= 2")
        result = schroder.theorem_schroeder_check(k, order)
        extra = []
        if result:
            s1 = schroder.inverse_schroder_poly(k - 1).poly.eval_omega(1)
            s2 = schroder.inverse_schroder_poly(k - 2).poly.eval_omega(1)
            coeffs = schroder.banded_schroder_gf(k).expand(order + k) * s1 - s2
            regular = [str(coeffs.coeff(m)) for m in range(k, order + k + 1)]
            extra.append("regular coefficients: " + " ".join(regular))
        yield f"theorem-schroeder (k={k}, order {order})", result, extra


def _cmd_verify(args) -> int:
    lines = []
    records = []
    ok_all = True
    for name, result, extra in _verify_selected(args):
        ok_all = ok_all and bool(result)
        status = "PASS" if result else "FAIL"
        detail = "" if result else f": {result.detail}"
        lines.append(f"{status} {name}{detail}")
        lines.extend(extra)
        records.append({"name": name, "ok": bool(result), "detail": result.detail})
    if args.format == "json":
        print(_dump_json({"ok": ok_all, "results": records}))
    elif args.format == "csv":
        print(_csv_line(["name", "ok", "detail"]))
        for r in records:
            print(_csv_line([r["name"], str(r["ok"]).lower(), r["detail"]]))
    else:
        for line in lines:
            print(line)
    return 0 if ok_all else 1


def _cmd_typo_ledger() -> int:
    ok_all = True
    for d in discrepancies.REGISTRY:
        result = d.check()
        ok_all = ok_all and bool(result)
        status = "verified" if result else "UNRESOLVED"
        print(f"[{d.key}] {d.location}")
        print(f"  printed:  {d.printed}")
        print(f"  resolved: {d.resolved}")
        print(f"  status:   {status}")
    return 0 if ok_all else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathenum",
        description="Exact weighted lattice-path enumeration: sequences, triangles, determinants, identity checks.",
    )
    parser.add_argument(
        "--typo-ledger",
        action="store_true",
        help="print the registry of source-table discrepancies (with verification) and exit",
    )
    sub = parser.add_subparsers(dest="command")

    def add_common(p):
        p.add_argument("--omega", type=_omega_arg, default=None,
                       help="integer weight, or 'symbolic' (default)")
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p_seq = sub.add_parser("seq", help="coefficient sequences")
    p_seq.add_argument(
        "family",
        choices=("motzkin", "grand-motzkin", "w-path", "schroder-compressed", "delannoy", "banded"),
    )
    p_seq.add_argument("--N", type=int, required=True, help="highest index (inclusive)")
    p_seq.add_argument("--k", type=int, default=0, help="band height (banded family)")
    p_seq.add_argument("--w", type=int, default=1, help="horizontal step length (w-path)")
    p_seq.add_argument("--j", type=int, default=0, help="ending height (column sequences)")
    p_seq.add_argument(
        "--family", dest="band_family", choices=("motzkin", "schroder", "w-path"),
        default="motzkin", help="path family for banded sequences",
    )
    add_common(p_seq)
    p_seq.set_defaults(func=_cmd_seq)

    p_mat = sub.add_parser("matrix", help="triangular matrices")
    p_mat.add_argument(
        "kind",
        choices=("motzkin", "motzkin-inverse", "schroder", "schroder-inverse", "grand"),
    )
    p_mat.add_argument("--n", type=int, required=True, help="dimension")
    add_common(p_mat)
    p_mat.set_defaults(func=_cmd_matrix)

    p_han = sub.add_parser("hankel", help="Hankel determinant, two ways")
    p_han.add_argument("--n", type=int, required=True, help="dimension")
    p_han.add_argument("--alpha", type=int, default=1)
    p_han.add_argument("--beta", type=int, default=0)
    p_han.add_argument("--shift", type=int, choices=(0, 1, 2), default=0)
    add_common(p_han)
    p_han.set_defaults(func=_cmd_hankel)

    p_ver = sub.add_parser("verify", help="identity verification suites")
    p_ver.add_argument(
        "which",
        choices=(
            "lemma", "orthogonality", "banded-recursion", "first-return",
            "delannoy", "bridge", "gould", "theorem-schroeder", "all",
        ),
    )
    p_ver.add_argument("--max", type=int, default=12, help="generic index bound")
    p_ver.add_argument("--k", type=int, default=0, help="band height / upper index bound")
    p_ver.add_argument("--N", type=int, default=0, help="horizon / truncation order")
    add_common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.typo_ledger:
        return _cmd_typo_ledger()
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
