"""Command line front end.

Exit codes: 0 success, 1 parse or range error, 2 unknown token,
3 undecided status, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import tables, tokens
from .a2model import verify_witness
from .binary import alpha
from .chart import Geometry, emit_svg, emit_tsv, enumerate_dots
from .errors import DomainError, OpaqueImage, ParseError, UnknownName
from .grading import lookup_generator, wedge_member_degree
from .localized import (A2_LOCAL, abc, coweight_equation_solution, format_monomial, image_predicate_set,
                        in_phi_image, oracle_image_enumerate, parse_monomial, phi_preimage_certificate)
from .wedge import (Verdict, family_status, higher_weight_lookup, parse_descriptor, tau_divisibility_row,
                    tau_region_e0cubed)

EXIT_OK, EXIT_PARSE, EXIT_UNKNOWN, EXIT_UNDECIDED, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved for unknown tokens here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --- subcommands -----------------------------------------------------------

def cmd_alpha(args) -> int:
    n = int(args.n)
    _emit(args, str(alpha(n)), {"n": n, "alpha": alpha(n)})
    return EXIT_OK


def cmd_degree(args) -> int:
    if args.wedge:
        lam, i, j = args.wedge
        lam = tokens.canonical(lam)
        deg = wedge_member_degree(lam, int(i), int(j))
        name, source = f"wedge({lam},{i},{j})", "wedge"
    else:
        if args.token is None:
            raise ParseError("give a token or --wedge LAMBDA I J")
        info = lookup_generator(args.token)
        if info.degree is None:
            raise UnknownName(f"{args.token!r} has no assigned degree")
        deg, name, source = info.degree, info.name, info.source
    text = f"{name}\t{deg}\tchow={deg.chow}\tcoweight={deg.coweight}"
    _emit(args, text, {"name": name, "degree": list(deg.as_tuple()), "chow": deg.chow,
                       "coweight": deg.coweight, "source": source})
    return EXIT_OK


def _status_out(args, st) -> int:
    if args.json:
        print(st.to_json())
    else:
        sys.stdout.write(st.report())
    return EXIT_UNDECIDED if st.verdict is Verdict.UNKNOWN else EXIT_OK


def cmd_status(args) -> int:
    return _status_out(args, family_status(parse_descriptor(args.descriptor), conjectures_on=args.conjectures))


def cmd_tau_region(args) -> int:
    return _status_out(args, tau_region_e0cubed(args.i, args.j))


def cmd_tau_row(args) -> int:
    return _status_out(args, tau_divisibility_row(args.f_class, args.k, args.s, conjectures_on=args.conjectures))


def cmd_higher_weight(args) -> int:
    row = higher_weight_lookup(args.token)
    if row is None:
        _emit(args, "absent", {"token": args.token, "entry": None})
        return EXIT_OK
    _emit(args, f"{row.wedge}\t{row.wedge_weight}\t{row.element}\t{row.weight}",
          {"token": args.token, "entry": {"wedge": row.wedge, "wedge_weight": row.wedge_weight,
                                          "element": row.element, "weight": row.weight}})
    return EXIT_OK


def cmd_image_test(args) -> int:
    m = parse_monomial(args.monomial, A2_LOCAL)
    a, b, c = abc(m)
    member = in_phi_image(m)
    cert = phi_preimage_certificate(m) if member else None
    lines = [f"monomial\t{format_monomial(m)}", f"a,b,c\t{a},{b},{c}",
             f"alpha(b+c)\t{alpha(b + c)}", f"in_image\t{'yes' if member else 'no'}"]
    if cert is not None:
        lines.append(f"certificate\t{format_monomial(cert.monomial())}")
    _emit(args, "\n".join(lines), {"monomial": format_monomial(m), "abc": [a, b, c], "alpha": alpha(b + c),
                                   "in_image": member,
                                   "certificate": format_monomial(cert.monomial()) if cert else None})
    return EXIT_OK


def cmd_oracle_image(args) -> int:
    found = oracle_image_enumerate(args.max_coweight)
    predicted = image_predicate_set(args.max_coweight)
    extra, missing = sorted(found - predicted), sorted(predicted - found)
    ok = not extra and not missing
    text = (f"max_coweight\t{args.max_coweight}\nenumerated\t{len(found)}\npredicate\t{len(predicted)}\n"
            f"discrepancies\t{len(extra) + len(missing)}\nresult\t{'match' if ok else 'MISMATCH'}")
    _emit(args, text, {"max_coweight": args.max_coweight, "enumerated": len(found), "predicate": len(predicted),
                       "only_enumerated": extra, "only_predicate": missing, "match": ok})
    if not ok:
        print(f"oracle mismatch: {len(extra)} extra, {len(missing)} missing", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oracle_coweight(args) -> int:
    sol = coweight_equation_solution(args.t, args.k)
    predicate = alpha(args.t + args.k) <= args.t
    ok = (sol is not None) == predicate
    sol_text = "none" if sol is None else f"n={sol[0]} m={sol[1]} parts={list(sol[2])}"
    text = (f"t,k\t{args.t},{args.k}\nsolution\t{sol_text}\nalpha(t+k)<=t\t{predicate}\n"
            f"result\t{'match' if ok else 'MISMATCH'}")
    _emit(args, text, {"t": args.t, "k": args.k, "solvable": sol is not None,
                       "solution": None if sol is None else {"n": sol[0], "m": sol[1], "parts": list(sol[2])},
                       "predicate": predicate, "match": ok})
    if not ok:
        print("oracle mismatch", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_witness(args) -> int:
    lam, i, j = args.target
    target = (lam, int(i), int(j))
    try:
        ok = verify_witness(args.expression, target)
    except OpaqueImage as exc:
        print(str(exc), file=sys.stderr)
        _emit(args, "undecided", {"expression": args.expression, "target": list(target), "verified": None})
        return EXIT_UNDECIDED
    _emit(args, "verified" if ok else "rejected",
          {"expression": args.expression, "target": list(target), "verified": ok})
    return EXIT_OK


def cmd_chart(args) -> int:
    dots = enumerate_dots(args.stem_max)
    if args.json:
        text = json.dumps([{"stem": d.stem, "filtration": d.filtration, "weight": d.weight,
                            "label": tokens.display(d.label), "class": d.cls, "lambda": d.lam,
                            "i": d.i, "j": d.j, "synthesized": d.synthesized} for d in dots],
                          ensure_ascii=False) + "\n"
    elif args.format == "svg":
        text = emit_svg(dots, Geometry(show_labels=args.labels))
    else:
        text = emit_tsv(dots)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import render_chart
        render_chart(dots, args.plot, labels=True)
    return EXIT_OK


def cmd_tables_dump(args) -> int:
    text = tables.dump(args.table)
    if args.json:
        print(json.dumps({"table": args.table, "text": text}, ensure_ascii=False))
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    p = _Parser(prog="motwedge", description="Wedge families in h1-localized motivic Ext.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("alpha", parents=[common], help="binary digit sum")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("degree", parents=[common], help="degree of a token or of P^i g^j lambda")
    s.add_argument("token", nargs="?")
    s.add_argument("--wedge", nargs=3, metavar=("LAMBDA", "I", "J"))
    s.set_defaults(func=cmd_degree)

    s = sub.add_parser("status", parents=[common], help="status of a family descriptor")
    s.add_argument("descriptor")
    s.add_argument("--conjectures", action="store_true")
    s.set_defaults(func=cmd_status)

    s = sub.add_parser("tau-region", parents=[common], help="tau-divisible elements of tau P^i g^j e0^3")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(func=cmd_tau_region)

    s = sub.add_parser("tau-row", parents=[common], help="tau-divisibility along f = 4k or 4k+1")
    s.add_argument("f_class", choices=["4k", "4k+1"])
    s.add_argument("k", type=int)
    s.add_argument("s", type=int)
    s.add_argument("--conjectures", action="store_true")
    s.set_defaults(func=cmd_tau_row)

    s = sub.add_parser("higher-weight", parents=[common], help="higher-weight representative of a wedge seed")
    s.add_argument("token")
    s.set_defaults(func=cmd_higher_weight)

    s = sub.add_parser("image-test", parents=[common], help="is an A2Local monomial in the image of phi")
    s.add_argument("monomial")
    s.set_defaults(func=cmd_image_test)

    s = sub.add_parser("oracle", help="brute-force oracles")
    osub = s.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    o = osub.add_parser("image", parents=[common])
    o.add_argument("--max-coweight", type=int, required=True)
    o.set_defaults(func=cmd_oracle_image)
    o = osub.add_parser("coweight", parents=[common])
    o.add_argument("--t", type=int, required=True)
    o.add_argument("--k", type=int, required=True)
    o.set_defaults(func=cmd_oracle_coweight)

    s = sub.add_parser("witness", parents=[common], help="check a witness in the rewrite model")
    s.add_argument("expression")
    s.add_argument("--target", nargs=3, metavar=("LAMBDA", "I", "J"), required=True)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("chart", parents=[common], help="emit the wedge chart")
    s.add_argument("--stem-max", type=int, default=70)
    s.add_argument("--format", choices=["svg", "tsv"], default="tsv")
    s.add_argument("--out")
    s.add_argument("--plot", metavar="PATH", help="also render with matplotlib (png, pdf, svg by suffix)")
    s.add_argument("--labels", action="store_true", help="draw labels in the SVG")
    s.set_defaults(func=cmd_chart)

    s = sub.add_parser("tables", help="packaged tables")
    tsub = s.add_subparsers(dest="tables", required=True, parser_class=_Parser)
    t = tsub.add_parser("dump", parents=[common])
    t.add_argument("table", choices=list(tables.TABLE_NAMES))
    t.set_defaults(func=cmd_tables_dump)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownName as exc:
        print(f"unknown token: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (ParseError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
