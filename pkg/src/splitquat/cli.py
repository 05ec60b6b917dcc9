"""Command-line front end.

Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on any
error (bad input, invalid configuration, failed construction).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cauchy, errata
from .algebra import Matrix2, SplitQuaternion, from_matrix, quadratic_form, to_matrix
from .generators import (
    AffineSpec,
    OneClassSpec,
    affine,
    ck_extend_2d,
    ck_extend_3d,
    grad_ultrahyperbolic,
    oneclass_construct,
    oneclass_decompose,
    oneclass_detect,
)
from .operators import apply_operator, check_differentiable, check_regularity
from .polynomial import NULL_VARS, CliffordPolyMap, Poly4
from .syntax import format_element, format_map, format_null, parse_element, parse_function, parse_poly

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

NOTIONS = ("left-regular", "right-regular", "d-left", "d-right",
           "right-differentiable", "left-differentiable")


class Report:
    """Structured result plus exit status; rendered as text or JSON."""

    def __init__(self, data: dict, text: list[str], status: int = EXIT_OK):
        self.data = data
        self.text = text
        self.status = status

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, indent=2, sort_keys=True)
        return "\n".join(self.text)


def _read(text: str) -> str:
    if text == "-":
        return sys.stdin.read().strip()
    if text.startswith("@"):
        return Path(text[1:]).read_text(encoding="utf-8").strip()
    return text


def _map_arg(text: str) -> CliffordPolyMap:
    """Four components separated by ';', or a single polynomial for a scalar map."""
    text = _read(text)
    if ";" in text:
        return parse_function(text)
    return CliffordPolyMap.scalar(parse_poly(text))


def _constant_of(F: CliffordPolyMap) -> SplitQuaternion | None:
    if F.degree() > 0:
        return None
    return F.evaluate((0, 0, 0, 0))


def _map_report(name: str, F: CliffordPolyMap, extra: dict | None = None) -> Report:
    data = {name: format_map(F), "components": [str(c) for c in F]}
    text = [f"{name}: {format_map(F)}"]
    const = _constant_of(F)
    if const is not None:
        data["constant"] = format_element(const)
        text.append(f"constant: {format_element(const)}")
    for key, value in (extra or {}).items():
        data[key] = value
        text.append(f"{key}: {value}")
    return Report(data, text)


# verbs ---------------------------------------------------------------------------


def cmd_check(args) -> Report:
    F = _map_arg(args.function)
    notion = args.notion.replace("_", "-")
    if notion.endswith("differentiable"):
        report = check_differentiable(F, notion.split("-")[0])
    else:
        report = check_regularity(F, notion)
    return Report(report.to_dict(), report.to_text().splitlines(),
                  EXIT_OK if report.verdict else EXIT_FALSE)


def cmd_apply(args) -> Report:
    F = _map_arg(args.function)
    return _map_report("result", apply_operator(F, args.op, args.side),
                       {"operator": f"{args.op} ({args.side})"})


def cmd_generate(args) -> Report:
    if args.kind == "affine":
        A = parse_element(args.A)
        K = parse_element(args.K)
        F = affine(AffineSpec(A, K, args.side))
        return _map_report("function", F)
    f = parse_poly(_read(args.scalar))
    return _map_report("function", grad_ultrahyperbolic(f))


def cmd_ck2d(args) -> Report:
    g = _map_arg(args.g)
    return _map_report("function", ck_extend_2d(g), {"boundary": format_map(g)})


def cmd_ck3d(args) -> Report:
    g = _map_arg(args.g)
    return _map_report("function", ck_extend_3d(g), {"boundary": format_map(g)})


def cmd_oneclass(args) -> Report:
    gs = [parse_poly(_read(t), NULL_VARS) for t in (args.g1, args.g2, args.g3, args.g4)]
    return _map_report("function", oneclass_construct(OneClassSpec(*gs)))


def cmd_detect(args) -> Report:
    F = _map_arg(args.function)
    found = oneclass_detect(F)
    data = {"in_class": found}
    text = [f"in class: {str(found).lower()}"]
    spec = oneclass_decompose(F)
    if spec is not None:
        parts = {name: format_null(getattr(spec, name)) for name in ("g1", "g2", "g3", "g4")}
        data.update(parts)
        text += [f"{k}: {v}" for k, v in parts.items()]
    return Report(data, text, EXIT_OK if found else EXIT_FALSE)


def _point(text: str) -> tuple:
    values = [float(v) for v in text.replace(",", " ").split()]
    if len(values) != 4:
        raise ValueError(f"expected four coordinates, got {text!r}")
    return tuple(values)


def cmd_cauchy(args) -> Report:
    if args.config:
        config, extras = cauchy.QuadratureConfig.from_file(args.config)
    else:
        config, extras = cauchy.QuadratureConfig(), {}
    overrides = {}
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.formula is not None:
        overrides["formula"] = args.formula
    if overrides:
        config = cauchy.QuadratureConfig(**{**config.__dict__, **overrides})
    z0_text = args.z0 or extras.pop("z0", None)
    z0 = _point(z0_text) if z0_text else config.center
    f = _map_arg(args.function or extras.pop("function", "1"))
    if args.method == "contour":
        est = cauchy.contour_estimate(f, z0, config)
    else:
        est = cauchy.integral_estimate(f, z0, config)
    data = {"method": args.method, "z0": list(z0), "function": format_map(f), **est.to_dict()}
    if args.method == "eps":
        data["formula"] = config.formula
    value = [float(c) for c in est.raw.real] if args.method == "contour" else data["value"]
    text = [
        f"method: {args.method}" + (f" ({config.formula})" if args.method == "eps" else ""),
        f"z0: {', '.join(f'{c:g}' for c in z0)}",
        f"function: {format_map(f)}",
        "value: " + ", ".join(f"{c:.6g}" for c in value),
        f"imag residue: {est.imag_norm:.3g}",
        f"refinement delta: {est.refinement_delta:.3g}",
    ]
    if args.method == "eps":
        text.insert(5, f"error indicator: {est.error_indicator:.3g}")
        text.append(f"min denominator: {est.min_denominator:.3g}")
        text.append(f"cone crossing fraction: {est.crossing_fraction:.3f}")
    return Report(data, text)


def cmd_matrix(args) -> Report:
    if args.inverse:
        entries = [parse_element(t).x0 for t in args.inverse.replace(",", " ").split()]
        if len(entries) != 4:
            raise ValueError("--inverse needs four entries y1 y2 y3 y4")
        z = from_matrix(Matrix2(*entries))
        return Report({"element": format_element(z)}, [f"element: {format_element(z)}"])
    z = parse_element(args.element)
    m = to_matrix(z)
    rows = [[format_element(SplitQuaternion(v)) for v in row] for row in m.rows()]
    det = format_element(SplitQuaternion(m.det()))
    form = format_element(SplitQuaternion(quadratic_form(z)))
    return Report(
        {"element": format_element(z), "matrix": rows, "det": det, "quadratic_form": form},
        [f"matrix: [[{rows[0][0]}, {rows[0][1]}], [{rows[1][0]}, {rows[1][1]}]]",
         f"det: {det}", f"quadratic form: {form}"],
    )


def cmd_errata(args) -> Report:
    entries = errata.collect(include_numeric=not args.exact_only)
    text = errata.render(entries)
    data = {"entries": [{"key": e.key, "title": e.title, "reproduced": e.confirmed} for e in entries]}
    status = EXIT_OK if all(e.confirmed for e in entries) else EXIT_FALSE
    target = Path(args.output)
    if args.check:
        current = target.read_text(encoding="utf-8") if target.exists() else ""
        same = current == text
        data["up_to_date"] = same
        return Report(data, [f"{target}: {'up to date' if same else 'out of date'}"],
                      status if same else EXIT_FALSE)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    lines = [f"{'reproduced' if e.confirmed else 'NOT reproduced'}: {e.title}" for e in entries]
    return Report(data, lines + [f"written: {target}"], status)


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitquat",
        description="Cl(1,1) algebra, regularity checks, left-regular generators and "
                    "a numerical check of the Cauchy-type integral formula.",
        epilog="Maps are written 'f0 ; f1 ; f2 ; f3' in x0..x3, e.g. 'x1*x2*x3 ; -x0*x2*x3 ; "
               "x0*x1*x3 ; x0*x1*x2'. Prefix an argument with @ to read it from a file.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("-o", "--output-report", metavar="PATH", help="write the report to PATH")
    # the same flags are also accepted after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("-o", "--output-report", metavar="PATH", default=argparse.SUPPRESS,
                        help="write the report to PATH")
    verbs = parser.add_subparsers(dest="verb", required=True)

    class _Sub:
        def __init__(self, group):
            self.group = group

        def add_parser(self, *a, **kw):
            return self.group.add_parser(*a, parents=[common], **kw)

    sub = _Sub(verbs)

    p = sub.add_parser("check", help="regularity or differentiability verdict with residuals")
    p.add_argument("function")
    p.add_argument("--notion", default="left-regular", choices=NOTIONS)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("apply", help="apply dbar or d from one side")
    p.add_argument("function")
    p.add_argument("--op", default="dbar", choices=("dbar", "d"))
    p.add_argument("--side", default="left", choices=("left", "right"))
    p.set_defaults(run=cmd_apply)

    p = sub.add_parser("generate", help="affine maps or gradients of ultra-hyperbolic scalars")
    gen = _Sub(p.add_subparsers(dest="kind", required=True))
    q = gen.add_parser("affine", help="A Z + K or Z A + K")
    q.add_argument("--A", required=True, help="element such as '1 + i'")
    q.add_argument("--K", default="0")
    q.add_argument("--side", default="left_mul", choices=("left_mul", "right_mul"))
    q = gen.add_parser("grad", help="d f for an ultra-hyperbolic polynomial f")
    q.add_argument("scalar")
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("ck2d", help="left-regular extension of g(x2, x3)")
    p.add_argument("g")
    p.set_defaults(run=cmd_ck2d)

    p = sub.add_parser("ck3d", help="left-regular extension of g(x1, x2, x3) off x0 = 0")
    p.add_argument("g")
    p.set_defaults(run=cmd_ck3d)

    p = sub.add_parser("oneclass", help="separated null-coordinate construction")
    for name, hint in (("g1", "u0, u1"), ("g2", "v0, v1"), ("g3", "v0, v1"), ("g4", "u0, u1")):
        p.add_argument(f"--{name}", default="0", help=f"polynomial in {hint}")
    p.set_defaults(run=cmd_oneclass)

    p = sub.add_parser("detect", help="is the map in the separated null-coordinate class")
    p.add_argument("function")
    p.set_defaults(run=cmd_detect)

    p = sub.add_parser("cauchy", help="numerical Cauchy-type integral over a sphere")
    p.add_argument("--config", help="key = value file (center, radius, resolution, epsilons, ...)")
    p.add_argument("--z0", help="evaluation point 'a, b, c, d' (default: config z0 or centre)")
    p.add_argument("--function", help="left-regular map (default: config function or 1)")
    p.add_argument("--method", default="eps", choices=("eps", "contour"),
                   help="eps schedule with extrapolation, or the deformed contour")
    p.add_argument("--formula", choices=tuple(cauchy.FORMULAS), help="override the config formula")
    p.add_argument("--workers", type=int, help="threads for the eps method")
    p.set_defaults(run=cmd_cauchy)

    p = sub.add_parser("matrix", help="2x2 real matrix of an element, or the inverse map")
    p.add_argument("element", nargs="?", default="0")
    p.add_argument("--inverse", metavar="'y1 y2 y3 y4'", help="matrix entries, row-major")
    p.set_defaults(run=cmd_matrix)

    p = sub.add_parser("errata", help="re-derive discrepancies into docs/errata.md")
    p.add_argument("--output", default="docs/errata.md")
    p.add_argument("--check", action="store_true", help="compare with the existing file instead")
    p.add_argument("--exact-only", action="store_true", help="skip the quadrature entry")
    p.set_defaults(run=cmd_errata)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.run(args)
    except (ValueError, ZeroDivisionError, OSError, RuntimeError) as err:
        message = f"{type(err).__name__}: {err}"
        if args.json:
            print(json.dumps({"error": message, "type": type(err).__name__}))
        else:
            print(f"error: {message}", file=sys.stderr)
        return EXIT_ERROR
    out = report.render(args.json)
    if args.output_report:
        Path(args.output_report).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
