"""Command-line front end: ``heunfg <subcommand> ...``."""
from __future__ import annotations

import argparse
import cmath
import json
import sys
from fractions import Fraction

from .algebra.multipoly import MultiPoly, format_rational, parse_rational
from .algebra.singular import as_modulus
from .appendix import verify_appendix
from .curve import (
    NUMERIC_TOL, branch_factorize, branch_points, enumerate_nk, exact_branch_points,
    heun_polynomial_eigenvalues, nu_squared, stieltjes_checks,
)
from .errors import (
    HeunError, InvalidModulus, OutsideValidatedRegime, PathTooCloseToZero, TooCloseToSingularity,
)
from .flows import flow_sequence, novikov_order
from .numerics import (
    ClosedFormSolutions, monodromy_generators, ode_residual, wronskian_check,
)
from .psi import Characteristics, build_psi, genus, normalize_characteristics

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
_USAGE_ERRORS = (InvalidModulus, OutsideValidatedRegime, TooCloseToSingularity,
                 PathTooCloseToZero, ValueError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- value parsing -------------------------------------------------------------

def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    return complex(t)


def parse_lambda(text: str | None):
    """Exact Fraction when the text is a rational, complex float otherwise."""
    if text is None:
        return None
    try:
        return parse_rational(text.strip())
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse lambda {text!r}") from exc


def parse_modulus(text: str):
    if text.strip().lower() == "symbolic":
        return None
    try:
        value = parse_rational(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"a must be 'symbolic' or a rational p/q, got {text!r}") from exc
    return as_modulus(value)


def enc_complex(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def fmt_complex(z) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.15g}"
    return f"{z.real:.15g}{z.imag:+.15g}i"


def _enc_lambda(lam):
    if isinstance(lam, MultiPoly):
        return lam.to_text()
    if isinstance(lam, Fraction):
        return format_rational(lam)
    return enc_complex(lam)


# -- subcommands ---------------------------------------------------------------

class Output:
    def __init__(self, m: Characteristics | None):
        self.lines = []
        self.data = {"characteristics": list(m) if m is not None else None,
                     "genus": None, "psi": None, "nu2": None,
                     "branch_points": [], "records": [], "residuals": {}}

    def line(self, text: str = ""):
        self.lines.append(text)


def _normalized(args, out: Output):
    """Characteristics to build from, reporting the shift for negative input."""
    shift = normalize_characteristics(args.m)
    if not shift.is_trivial():
        out.data["normalization"] = shift.to_json()
        p = ", ".join(format_rational(x) for x in shift.prefactor)
        out.line(f"normalized {shift.original} -> {shift.characteristics}; "
                 f"l -> {shift.mu.to_text()}; prefactor exponents ({p})")
    return shift


def cmd_psi(args, out: Output):
    shift = _normalized(args, out)
    psi = build_psi(shift.characteristics, args.a)
    out.data["genus"] = psi.genus
    out.data["psi"] = psi.to_json()["psi"]
    out.data["a"] = psi.to_json()["a"]
    out.line(f"Ψ = {psi.to_text()}")
    return EXIT_OK


def cmd_curve(args, out: Output):
    shift = _normalized(args, out)
    psi = build_psi(shift.characteristics, args.a)
    curve = nu_squared(psi)
    out.data["genus"] = curve.genus
    out.data["nu2"] = curve.to_json()["nu2"]
    out.data["a"] = curve.to_json()["a"]
    out.line(f"ν² = {curve.nu2.to_text()}")
    if args.a is not None:
        pts = branch_points(curve)
        out.data["branch_points"] = [enc_complex(p) for p in pts]
        out.line("branch points: " + ", ".join(fmt_complex(p) for p in pts))
    else:
        exact = exact_branch_points(curve)
        if exact:
            out.data["exact_branch_points"] = [r.to_text() for r in exact]
            out.line("branch points polynomial in a: " + ", ".join(r.to_text() for r in exact))
    return EXIT_OK


def cmd_genus(args, out: Output):
    m = Characteristics.of(args.m)
    g = genus(m)
    out.data["genus"] = g
    out.line(f"genus = {g}")
    if args.novikov:
        nov = novikov_order(m, args.a)
        out.data["novikov_order"] = nov.order
        out.line(f"Novikov order = {nov.order}")
        if nov.order != g:
            return EXIT_FAILED
    return EXIT_OK


def cmd_nk(args, out: Output):
    m = Characteristics.of(args.m)
    classes = enumerate_nk(m)
    out.data["genus"] = genus(m)
    out.data["classes"] = [c.to_json() for c in classes]
    total = sum(c.count for c in classes)
    for c in classes:
        out.line(f"pattern {''.join(map(str, c.pattern))}  reduced ({c.reduced})  n = {c.count}")
    out.line(f"total = {total}")
    return EXIT_OK


def cmd_branch(args, out: Output):
    m = Characteristics.of(args.m)
    if args.a is None:
        raise UsageError("branch needs a rational --a")
    psi = build_psi(m, args.a)
    curve = nu_squared(psi)
    out.data["genus"] = psi.genus
    lam = parse_lambda(args.lam)
    if lam is None:
        exact = {complex(r.constant_value()): r.constant_value() for r in exact_branch_points(curve)}
        targets = []
        for p in branch_points(curve):
            hit = next((v for k, v in exact.items() if abs(k - p) <= 1e-9 * max(1, abs(p))), None)
            if hit is None:
                targets.append(p)
            elif hit not in targets:
                targets.append(hit)
    else:
        targets = [lam]
    out.data["branch_points"] = [enc_complex(t) for t in targets]
    status = EXIT_OK
    for t in targets:
        rec = branch_factorize(psi, t, tol=args.tol)
        st = stieltjes_checks(rec, curve=curve)
        js = rec.to_json()
        js["stieltjes_max_residual"] = st.max_residual
        out.data["records"].append(js)
        F = rec.F.to_text() if rec.exact else "[" + ", ".join(fmt_complex(c) for c in rec.F) + "]"
        out.line(f"λ = {fmt_complex(t) if not isinstance(t, Fraction) else format_rational(t)}: "
                 f"M = {rec.multiplicities[1:]}, reduced ({rec.reduced}), deg F = {rec.degree}, "
                 f"F = {F}, Stieltjes residual {st.max_residual:.2e}")
        if not st.passed(args.tol):
            status = EXIT_FAILED
    return status


def cmd_heunpoly(args, out: Output):
    mt = Characteristics.of(args.m)
    sols = heun_polynomial_eigenvalues(mt, args.degree, args.a)
    for s in sols:
        lam = s.eigenvalue.to_text() if s.exact else fmt_complex(s.eigenvalue)
        poly = s.polynomial.to_text() if s.exact else "[" + ", ".join(fmt_complex(c) for c in s.polynomial) + "]"
        out.data["records"].append({"eigenvalue": _enc_lambda(s.eigenvalue),
                                    "polynomial": poly, "exact": s.exact})
        out.line(f"l = {lam}: F = {poly}")
    if not sols:
        out.line("no eigenvalues found")
    return EXIT_OK


def cmd_flows(args, out: Output):
    m = Characteristics.of(args.m)
    seq = flow_sequence(m, args.a)
    out.data["flows"] = [seq[k].to_text() for k in range(args.count + 1)]
    for k in range(args.count + 1):
        out.line(f"I{k} = {seq[k].to_text()}")
    if args.novikov:
        nov = novikov_order(m, args.a)
        out.data["genus"] = nov.order
        out.data["novikov"] = {"order": nov.order,
                               "constants": [c.to_text() if hasattr(c, "to_text") else str(c)
                                             for c in nov.constants]}
        out.line(f"Novikov order = {nov.order}")
    return EXIT_OK


def _eval_setup(args):
    if args.a is None:
        raise UsageError("eval needs a rational --a")
    lam = parse_lambda(args.lam)
    if lam is None:
        raise UsageError("eval needs --lambda")
    shift = normalize_characteristics(args.m, a=args.a)
    if not shift.is_trivial():
        raise UsageError("eval takes non-negative characteristics; apply the normalization first")
    psi = build_psi(shift.characteristics, args.a)
    return psi, lam


def cmd_eval(args, out: Output):
    psi, lam = _eval_setup(args)
    curve = nu_squared(psi)
    out.data["genus"] = psi.genus
    z = parse_complex(args.z)
    lam_c = complex(lam)
    scale = max(1.0, abs(lam_c)) ** (2 * psi.genus + 1)
    record = None
    if abs(curve.evaluate(lam_c)) <= args.tol * scale:
        record = branch_factorize(psi, lam, tol=args.tol)
        out.data["records"].append(record.to_json())
    sol = ClosedFormSolutions(psi, lam_c, curve=curve, record=record)
    ev = sol.local(z)
    v = ev.at(z)
    Psi = sol._psi_value(z)
    res = {
        "product": abs(v.Y1 * v.Y2 - Psi) / max(abs(Psi), 1e-300) if record is None else None,
        "ode_Y1": ode_residual(psi.characteristics, lam_c, args.a, ev.component(1), z),
        "ode_Y2": ode_residual(psi.characteristics, lam_c, args.a, ev.component(2), z),
    }
    if record is None:
        res["wronskian"] = wronskian_check(psi.characteristics, lam_c, args.a,
                                           ev.component(1), ev.component(2), z)
    out.data["residuals"] = res
    out.data["values"] = {"Y1": enc_complex(v.Y1), "Y2": enc_complex(v.Y2),
                          "nu": enc_complex(v.nu), "z": enc_complex(z), "lambda": _enc_lambda(lam)}
    out.line(f"Y1 = {fmt_complex(v.Y1)}")
    out.line(f"Y2 = {fmt_complex(v.Y2)}")
    out.line(f"ν = {fmt_complex(v.nu)}" + ("  (branch point: degenerate pair)" if record else ""))
    for k, r in res.items():
        if r is not None:
            out.line(f"{k} residual = {r:.3e}")
    bad = (res["ode_Y1"] > args.check_tol or res["ode_Y2"] > args.check_tol
           or (res.get("wronskian") or 0) > args.check_tol
           or (res["product"] or 0) > 1e-10)
    return EXIT_FAILED if bad else EXIT_OK


def cmd_monodromy(args, out: Output):
    psi, lam = _eval_setup(args)
    data = monodromy_generators(psi, None, lam)
    out.data["genus"] = psi.genus
    out.data["monodromy"] = data.to_json()
    out.line(f"φ = {fmt_complex(data.phi)}")
    out.line(f"ψ = {fmt_complex(data.psi)}")
    for name, M in data.generators().items():
        rows = "; ".join(", ".join(fmt_complex(x) for x in row) for row in M)
        out.line(f"{name} = [{rows}]")
    return EXIT_OK


def cmd_verify_appendix(args, out: Output):
    results = verify_appendix()
    exact = sum(r.exact for r in results)
    accepted = sum(r.accepted for r in results)
    n = len(results)
    out.data["records"] = [
        {"characteristics": list(r.characteristics), "psi": r.psi, "nu2": r.nu2,
         "psi_matches_printed": r.psi_matches_printed, "nu2_matches_printed": r.nu2_matches_printed,
         "psi_matches_erratum": r.psi_matches_erratum}
        for r in results
    ]
    for r in results:
        if r.exact:
            tag = "exact"
        elif r.accepted:
            tag = "matches after erratum (printed Psi belongs to another case)"
        else:
            tag = "MISMATCH"
        out.line(f"({', '.join(map(str, r.characteristics))}): {tag}")
    out.line(f"{exact}/{n} exact matches; {accepted}/{n} after known errata")
    if args.strict:
        return EXIT_OK if exact == n else EXIT_FAILED
    return EXIT_OK if accepted == n else EXIT_FAILED


# -- argument parsing ------------------------------------------------------------

def _characteristics(text: str) -> Characteristics:
    try:
        return Characteristics.of(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"expected four integers m0,m1,m2,m3, got {text!r}") from exc


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-m", "--characteristics", dest="m", type=_characteristics,
                        help="characteristics m0,m1,m2,m3")
    common.add_argument("--a", default="symbolic", help="modulus: 'symbolic' or a rational p/q")
    common.add_argument("--json", action="store_true", help="emit a JSON record")
    common.add_argument("-o", "--output", help="write the result to this file")
    common.add_argument("--tol", type=_positive, default=NUMERIC_TOL,
                        help="tolerance for numeric factorizations")

    parser = _Parser(prog="heunfg", description="Finite-gap solutions of Heun's equation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("psi", parents=[common], help="spectral polynomial Psi(l, z)")
    sub.add_parser("curve", parents=[common], help="spectral curve nu^2(l) and branch points")
    p = sub.add_parser("genus", parents=[common], help="genus from the characteristics")
    p.add_argument("--novikov", action="store_true", help="also compute the Novikov order")
    sub.add_parser("nk", parents=[common], help="sign classes and their counts")
    p = sub.add_parser("branch", parents=[common], help="factorization at branch points")
    p.add_argument("--lambda", dest="lam", help="single branch point (rational or complex)")
    p = sub.add_parser("heunpoly", parents=[common], help="Heun-polynomial eigenvalues")
    p.add_argument("--degree", type=int, required=True)
    p = sub.add_parser("flows", parents=[common], help="flows I_0..I_n")
    p.add_argument("--count", type=int, default=2)
    p.add_argument("--novikov", action="store_true")
    for name, helptext in (("eval", "evaluate the closed-form solutions"),
                           ("monodromy", "connection angles and monodromy generators")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--lambda", dest="lam", required=True)
        if name == "eval":
            p.add_argument("--z", required=True)
            p.add_argument("--check-tol", type=_positive, default=1e-8,
                           help="residual threshold for exit status")
    p = sub.add_parser("verify-appendix", parents=[common], help="rebuild the reference table")
    p.add_argument("--strict", action="store_true",
                   help="fail unless every printed entry matches without errata")
    return parser


COMMANDS = {
    "psi": cmd_psi, "curve": cmd_curve, "genus": cmd_genus, "nk": cmd_nk,
    "branch": cmd_branch, "heunpoly": cmd_heunpoly, "flows": cmd_flows,
    "eval": cmd_eval, "monodromy": cmd_monodromy, "verify-appendix": cmd_verify_appendix,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "-m -1,0,0,0" would otherwise be read as an option
    for i in range(len(argv) - 1):
        if argv[i] in ("-m", "--characteristics") and argv[i + 1][:1] == "-":
            argv[i: i + 2] = [f"{argv[i]}={argv[i + 1]}", ""]
    argv = [x for x in argv if x != ""]
    try:
        args = parser.parse_args(argv)
        if args.command != "verify-appendix" and args.m is None:
            raise UsageError("-m/--characteristics is required")
        args.a = parse_modulus(args.a)
        out = Output(args.m)
        status = COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"heunfg: error: {exc}", file=stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"heunfg: error: {exc}", file=stderr)
        return EXIT_USAGE
    except HeunError as exc:
        print(f"heunfg: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED
    text = json.dumps(out.data, indent=2) if args.json else "\n".join(out.lines)
    if status != EXIT_OK:
        print(text, file=stderr)
        return status
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
