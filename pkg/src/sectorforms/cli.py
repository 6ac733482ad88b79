"""Command-line front end: verification sweeps, factorization, operator
application, and cohomology reports, all JSON in / JSON out.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
guard.  The JSON report goes to --out when given and to stdout
otherwise; a one-line human summary always goes to stderr.  Identical
requests produce byte-identical JSON.  No domain logic lives here.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .cohomology import SizeError, complex_report, sector_basis
from .fincard import check_relations, classify, factor_map, factor_surjection
from .jsonio import InputFormatError, JsonSyntaxError
from .sector import apply_cardinal_map, coface, exterior_derivative, multilinearity_failures
from .tangent import verify_tangent_axioms

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


class CommandError(Exception):
    """An input problem with a machine-readable code."""

    def __init__(self, code: str, detail: str, status: int = EXIT_INPUT):
        super().__init__(detail)
        self.code = code
        self.detail = detail
        self.status = status


def _emit(payload: dict, out_path: str | None, summary: str) -> None:
    text = jsonio.dumps(payload)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(summary, file=sys.stderr)


def _guard(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise CommandError("resource-guard",
                           f"{what}={value} exceeds the cap of {cap}; raise the cap explicitly",
                           EXIT_GUARD)


def _load_form(path: str):
    form = jsonio.sectorform_from_dict(jsonio.load_json_file(path))
    bad = multilinearity_failures(form)
    if bad:
        raise CommandError("invalid-form",
                           f"input is not a sector form; linearity fails at {list(bad)}")
    return form


def _cmd_verify_relations(args) -> int:
    _guard(args.max_n, args.cap_n, "max-n")
    reports = check_relations(args.max_n)
    total = sum(len(r.failures) for r in reports)
    payload = {
        "max_n": args.max_n,
        "families": [jsonio.relation_report_to_dict(r) for r in reports],
        "total_failures": total,
    }
    checked = sum(r.checked for r in reports)
    _emit(payload, args.out,
          f"{len(reports)} families, {checked} instances, {total} failures")
    return EXIT_OK if total == 0 else EXIT_VERIFICATION


def _cmd_verify_axioms(args) -> int:
    _guard(args.dim, args.cap_dim, "dim")
    _guard(args.depth, args.cap_depth, "depth")
    rep = verify_tangent_axioms(args.dim, args.depth)
    payload = jsonio.relation_report_to_dict(rep)
    payload["dim"] = args.dim
    _emit(payload, args.out,
          f"{rep.checked} axiom instances at dim {args.dim}, {len(rep.failures)} failures")
    return EXIT_OK if rep.ok else EXIT_VERIFICATION


def _cmd_factor(args) -> int:
    fmap = jsonio.finmap_from_dict(jsonio.load_json_file(args.infile))
    if args.gens == "surj":
        if not classify(fmap).surjective:
            raise CommandError("invalid-input", "map is not surjective; use --gens full")
        word = factor_surjection(fmap)
    else:
        word = factor_map(fmap)
    _emit(jsonio.genword_to_dict(word), args.out,
          f"factored {fmap.dom}->{fmap.cod} map into {len(word)} generators")
    return EXIT_OK


def _cmd_apply(args) -> int:
    form = _load_form(args.form)
    fmap = jsonio.finmap_from_dict(jsonio.load_json_file(args.map))
    if fmap.dom != form.n:
        raise CommandError("dimension-mismatch",
                           f"map leaves cardinal {fmap.dom}, form has degree {form.n}")
    result = apply_cardinal_map(form, fmap, validate=False)
    _emit(jsonio.sectorform_to_dict(result), args.out,
          f"degree {form.n} -> {result.n} along {list(fmap.table)}")
    return EXIT_OK


def _cmd_derive(args) -> int:
    form = _load_form(args.form)
    if args.position is not None:
        if not 1 <= args.position <= form.n + 1:
            raise CommandError("dimension-mismatch",
                               f"position must lie in 1..{form.n + 1}")
        result = coface(form, args.position, validate=False)
        what = f"derivative in position {args.position}"
    else:
        result = exterior_derivative(form, validate=False)
        what = "exterior derivative"
    _emit(jsonio.sectorform_to_dict(result), args.out,
          f"{what}: degree {form.n} -> {result.n}"
          + (", zero form" if result.is_zero else ""))
    return EXIT_OK


def _cmd_derham(args) -> int:
    _guard(args.dim, args.cap_dim, "dim")
    _guard(args.deg, args.cap_deg, "deg")
    _guard(args.levels, args.cap_levels, "levels")
    try:
        rep = complex_report(args.dim, args.deg, args.levels, args.max_candidates)
    except SizeError as err:
        raise CommandError("resource-guard", str(err), EXIT_GUARD) from None
    payload = jsonio.complex_report_to_dict(rep)
    _emit(payload, args.out,
          f"H = {list(rep.cohomology)}, singular H = {list(rep.singular_cohomology)}, "
          f"boundary squared zero: {rep.complex_verified}")
    return EXIT_OK if rep.complex_verified and rep.consistent() else EXIT_VERIFICATION


def _cmd_sector_basis(args) -> int:
    _guard(args.dim, args.cap_dim, "dim")
    _guard(args.deg, args.cap_deg, "deg")
    _guard(args.n, args.cap_levels, "n")
    try:
        basis = sector_basis(args.n, args.dim, args.deg, args.max_candidates)
    except SizeError as err:
        raise CommandError("resource-guard", str(err), EXIT_GUARD) from None
    payload = {
        "n": args.n, "m": args.dim, "d": args.deg,
        "dimension": len(basis),
        "basis": [jsonio.sectorform_to_dict(b) for b in basis],
    }
    _emit(payload, args.out,
          f"sector {args.n}-forms on R^{args.dim} at degree {args.deg}: dimension {len(basis)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectorforms",
        description="Exact sector-form calculus: verification sweeps, "
                    "factorization, operators, cohomology.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("verify-relations", help="sweep the presentation relations")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--cap-n", type=int, default=12, dest="cap_n")
    common(p)
    p.set_defaults(fn=_cmd_verify_relations)

    p = sub.add_parser("verify-axioms", help="check the tangent-structure axioms")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--cap-dim", type=int, default=4, dest="cap_dim")
    p.add_argument("--cap-depth", type=int, default=5, dest="cap_depth")
    common(p)
    p.set_defaults(fn=_cmd_verify_axioms)

    p = sub.add_parser("factor", help="factor a map of finite cardinals into generators")
    p.add_argument("--in", required=True, dest="infile", help="FinMap JSON file")
    p.add_argument("--gens", choices=("surj", "full"), default="full")
    common(p)
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("apply", help="act on a sector form by a map of cardinals")
    p.add_argument("--form", required=True, help="SectorForm JSON file")
    p.add_argument("--map", required=True, help="FinMap JSON file")
    common(p)
    p.set_defaults(fn=_cmd_apply)

    p = sub.add_parser("derive", help="coface or full exterior derivative")
    p.add_argument("--form", required=True, help="SectorForm JSON file")
    p.add_argument("--position", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_derive)

    p = sub.add_parser("derham", help="degree-bounded sector cohomology report")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--cap-dim", type=int, default=3, dest="cap_dim")
    p.add_argument("--cap-deg", type=int, default=8, dest="cap_deg")
    p.add_argument("--cap-levels", type=int, default=3, dest="cap_levels")
    p.add_argument("--max-candidates", type=int, default=20000, dest="max_candidates")
    common(p)
    p.set_defaults(fn=_cmd_derham)

    p = sub.add_parser("sector-basis", help="basis of degree-bounded sector forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--cap-dim", type=int, default=3, dest="cap_dim")
    p.add_argument("--cap-deg", type=int, default=8, dest="cap_deg")
    p.add_argument("--cap-levels", type=int, default=4, dest="cap_levels")
    p.add_argument("--max-candidates", type=int, default=20000, dest="max_candidates")
    common(p)
    p.set_defaults(fn=_cmd_sector_basis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = getattr(args, "out", None)
    try:
        return args.fn(args)
    except CommandError as err:
        _emit({"error": err.code, "detail": err.detail}, out, f"error: {err.detail}")
        return err.status
    except JsonSyntaxError as err:
        _emit({"error": "bad-json", "detail": str(err)}, out, f"error: {err}")
        return EXIT_INPUT
    except InputFormatError as err:
        _emit({"error": "bad-format", "detail": str(err)}, out, f"error: {err}")
        return EXIT_INPUT
    except ValueError as err:
        _emit({"error": "dimension-mismatch", "detail": str(err)}, out, f"error: {err}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
