"""Command-line interface.

Subcommands:

* ``seq <spec> --upto K``: print terms c_0..c_K of a sequence.
* ``matrix <spec> --n N``: print the (N+1)x(N+1) Hankel matrix.
* ``hankel <spec> --n N``: print the exact determinant H_N.
* ``recurrence <spec> --order N [--at x0]``: three-term recurrence data.
* ``closed-form <id> --n N [--param x=1/2]``: evaluate a registered formula.
* ``verify [--id ID] [--max N]``: brute force against the closed forms.
* ``list [--sequences]``: the identity registry (or the sequence catalog).
* ``table {7.1,7.2}``: re-emit an identity table with computed spot checks.

All numeric output is exact: rationals as p/q strings, polynomials in x with
rational coefficients.  Exit codes: 0 on success, 1 when verification found
an asserted mismatch, 2 on usage errors.

If the environment variable HANKELBE_CACHE_DIR is set, the memoized
Bernoulli/Euler number tables are loaded from and saved to that directory as
plain text.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .closed_forms import (
    UnknownIdentityError,
    catalog as identity_catalog,
    eval_closed_form,
    get_identity,
    registry,
)
from .hankel import ALGORITHMS, hankel_det, hankel_matrix, term_to_str
from .orthopoly import builtin_recurrence_bern_odd, recurrence_from_moments
from .poly import UniPoly, rat_from_str
from .sequences import (
    CACHE_ENV_VAR,
    InvalidParametersError,
    catalog as sequence_catalog,
    get_spec,
    load_number_caches,
    resolve,
    save_number_caches,
)
from .verify import any_asserted_failure, verify_all, verify_identity

USAGE_ERROR = 2
VERIFY_FAILURE = 1

_SYMBOLIC_RECURRENCE_SPECS = {"B_2k+1((x+1)/2)"}


def _display(value) -> str:
    """Human rendering: polynomials as expressions, rationals as p/q."""
    return str(value) if isinstance(value, UniPoly) else term_to_str(value)


def _parse_params(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise InvalidParametersError(f"--param needs key=value, got {pair!r}")
        key, val = pair.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def _emit_rows(rows, header, fmt, out):
    if fmt == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n")
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "latex":
        out.write("\\begin{tabular}{|" + "c|" * len(header) + "}\n\\hline\n")
        out.write(" & ".join(header) + " \\\\\n\\hline\n")
        for r in rows:
            out.write(" & ".join(str(c) for c in r) + " \\\\\n")
        out.write("\\hline\n\\end{tabular}\n")
    else:
        widths = [
            max(len(str(h)), max((len(str(r[i])) for r in rows), default=0))
            for i, h in enumerate(header)
        ]
        out.write("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def cmd_seq(args, out) -> int:
    spec = get_spec(args.spec)
    terms = [resolve(spec, k) for k in range(args.upto + 1)]
    if args.format == "json":
        out.write(json.dumps({"spec": spec.name, "terms": [term_to_str(t) for t in terms]}, indent=2) + "\n")
    elif args.format == "csv":
        _emit_rows([(k, term_to_str(t)) for k, t in enumerate(terms)], ["k", "term"], "csv", out)
    else:
        out.write(" ".join(_display(t) for t in terms) + "\n")
    return 0


def cmd_matrix(args, out) -> int:
    m = hankel_matrix(get_spec(args.spec), args.n)
    if args.format == "json":
        out.write(json.dumps(m.to_dict(), indent=2) + "\n")
        return 0
    rows = [[_display(v) for v in row] for row in m.rows()]
    if args.format == "csv":
        w = csv.writer(out)
        w.writerows(rows)
        return 0
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows))] if rows else []
    for r in rows:
        out.write("[ " + "  ".join(v.rjust(w) for v, w in zip(r, widths)) + " ]\n")
    return 0


def cmd_hankel(args, out) -> int:
    result = hankel_det(get_spec(args.spec), args.n, args.algorithm)
    if args.format == "json":
        out.write(json.dumps(result.to_dict(), indent=2) + "\n")
    else:
        out.write(_display(result.value) + "\n")
    return 0


def cmd_recurrence(args, out) -> int:
    spec = get_spec(args.spec)
    if args.at is not None:
        at = rat_from_str(args.at)
        spec = spec.evaluated_at(at) if spec.term_kind == "poly" else spec
        coeffs = recurrence_from_moments(spec, args.order)
    elif spec.term_kind == "poly":
        if spec.name in _SYMBOLIC_RECURRENCE_SPECS:
            coeffs = builtin_recurrence_bern_odd(args.order)
        else:
            raise InvalidParametersError(
                f"{spec.name} is polynomial-valued; pass --at x0 "
                "(symbolic coefficients exist only for B_2k+1((x+1)/2))"
            )
    else:
        coeffs = recurrence_from_moments(spec, args.order)
    if args.format == "json":
        out.write(json.dumps(coeffs.to_dict(), indent=2) + "\n")
        return 0
    rows = []
    for n in range(coeffs.order + 1):
        rows.append(
            (
                n,
                _display(coeffs.s_at(n)),
                _display(coeffs.t_at(n)) if n >= 1 else "-",
                _display(coeffs.zeta_at(n)),
            )
        )
    _emit_rows(rows, ["n", "s_n", "t_n", "zeta_n"], args.format, out)
    return 0


def cmd_closed_form(args, out) -> int:
    ident = get_identity(args.id)
    value = eval_closed_form(ident, args.n)
    params = _parse_params(args.param)
    if "x" in params and isinstance(value, UniPoly):
        value = value.eval(rat_from_str(params["x"]))
    if args.format == "json":
        out.write(
            json.dumps({"id": ident.id, "n": args.n, "value": term_to_str(value)}, indent=2) + "\n"
        )
    else:
        out.write(_display(value) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.id:
        reports = [verify_identity(args.id, args.max)]
    else:
        reports = verify_all(args.max)
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    elif args.format == "csv":
        rows = [
            (r.identity_id, rec.index, rec.oracle, rec.closed_form, rec.match)
            for r in reports
            for rec in r.records
        ]
        _emit_rows(rows, ["identity", "index", "oracle", "closed_form", "match"], "csv", out)
    else:
        for r in reports:
            if r.status == "report_only":
                agree = f"{r.passed}/{len(r.records)} indices agree"
                out.write(f"report-only  {r.identity_id}  [{agree}]\n")
                for rec in r.records:
                    mark = "=" if rec.match else "#"
                    out.write(
                        f"    n={rec.index} {mark} oracle={rec.oracle} closed={rec.closed_form}\n"
                    )
            else:
                mark = "ok  " if r.ok else "FAIL"
                out.write(f"{mark}  {r.identity_id}  (n = 0..{r.max_index})\n")
                if not r.ok:
                    for rec in r.records:
                        if not rec.match:
                            out.write(
                                f"    n={rec.index}: oracle={rec.oracle} "
                                f"closed={rec.closed_form}\n"
                            )
        bad = sum(1 for r in reports if not r.ok)
        out.write(f"{len(reports)} identities checked, {bad} asserted failure(s)\n")
    return VERIFY_FAILURE if any_asserted_failure(reports) else 0


def cmd_list(args, out) -> int:
    if args.sequences:
        entries = sequence_catalog()
        if args.format == "json":
            out.write(json.dumps(entries, indent=2) + "\n")
        else:
            rows = [(e["name"], e["family"], e["kind"]) for e in entries]
            _emit_rows(rows, ["name", "family", "kind"], args.format, out)
        return 0
    entries = identity_catalog()
    if args.format == "json":
        out.write(json.dumps(entries, indent=2) + "\n")
    else:
        rows = [
            (e["id"], e["sequence"], e["format"], e["status"], e["default_max_index"], e["source"])
            for e in entries
        ]
        _emit_rows(rows, ["id", "sequence", "format", "status", "max_n", "source"], args.format, out)
    return 0


def cmd_table(args, out) -> int:
    which = args.which
    rows = []
    for ident in registry():
        if ident.table != which:
            continue
        eps, a, b = ident.display
        spots = []
        for n in (0, 1, 2) if which == "7.1" else (1, 3):
            if n > ident.default_max_index:
                continue
            spots.append(f"H_{n}={_display(eval_closed_form(ident, n))}")
        rows.append((ident.sequence.name, eps, a, b, "; ".join(spots)))
    header = ["sequence", "sign exponent", "a", "b(l)", "spot checks"]
    _emit_rows(rows, header, args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hankelbe",
        description="Exact Hankel determinants of Bernoulli/Euler-type sequences.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("plain", "json", "csv"), default="plain")

    sp = sub.add_parser("seq", help="print sequence terms")
    sp.add_argument("spec")
    sp.add_argument("--upto", type=int, required=True, metavar="K")
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("matrix", help="print a Hankel matrix")
    sp.add_argument("spec")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("hankel", help="compute a Hankel determinant")
    sp.add_argument("spec")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--algorithm", choices=ALGORITHMS, default=None)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_hankel)

    sp = sub.add_parser("recurrence", help="three-term recurrence coefficients")
    sp.add_argument("spec")
    sp.add_argument("--order", type=int, required=True, metavar="N")
    sp.add_argument("--at", default=None, metavar="X0")
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_recurrence)

    sp = sub.add_parser("closed-form", help="evaluate a registered identity")
    sp.add_argument("id")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--param", action="append", metavar="KEY=VALUE")
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_closed_form)

    sp = sub.add_parser("verify", help="check identities against brute force")
    sp.add_argument("--id", default=None)
    sp.add_argument("--max", type=int, default=None, metavar="N")
    sp.add_argument("--format", **fmt)
    sp.add_argument("--json", dest="format", action="store_const", const="json")
    sp.add_argument("--csv", dest="format", action="store_const", const="csv")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("list", help="print the identity registry")
    sp.add_argument("--sequences", action="store_true", help="sequence catalog instead")
    sp.add_argument("--format", **fmt)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("table", help="re-emit an identity table")
    sp.add_argument("which", choices=("7.1", "7.2"),
                    help="7.1: nonzero for all n; 7.2: zero at even index")
    sp.add_argument("--format", choices=("plain", "json", "csv", "latex"), default="plain")
    sp.add_argument("--latex", dest="format", action="store_const", const="latex")
    sp.set_defaults(func=cmd_table)

    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        try:
            load_number_caches(cache_dir)
        except (OSError, ValueError) as exc:
            print(f"warning: ignoring bad number cache: {exc}", file=sys.stderr)
    try:
        code = args.func(args, out)
    except (InvalidParametersError, UnknownIdentityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if cache_dir:
        try:
            save_number_caches(cache_dir)
        except OSError as exc:
            print(f"warning: could not save number cache: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
