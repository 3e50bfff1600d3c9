"""Command-line interface.

Results go to stdout; domain errors go to stderr as ``{"code", "message"}``
with exit status 1.  Usage errors exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import applications as apps
from .catalog import BrieskornParams, LensParams, swf_brieskorn, swf_lens
from .errors import SWFError
from .forget import forget
from .gluing import RelativeInvariantClass, glue
from .homotopy import homotopy_group
from .spectrum import SpectrumPresentation, describe, dualize, from_json, suspend, to_document, to_json


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def _rational(text: str) -> Fraction:
    """Integers or ``a/b``; decimal points are refused."""
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(f"expected an integer or a/b, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or a/b, got {text!r}") from None


def _coords(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")] if text.strip() else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _spectrum_file(text: str) -> SpectrumPresentation:
    path = Path(text)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"no such spectrum file: {text}")
    try:
        return from_json(path.read_text())
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"{text} is not JSON: {exc}") from None


def _emit_spectrum(p: SpectrumPresentation, mode: str) -> str:
    return to_json(p) if mode == "json" else describe(p) + "\n"


def _emit(doc: dict, pretty: str, mode: str) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n" if mode == "json" else pretty + "\n"


def _shifted(p: SpectrumPresentation, args) -> SpectrumPresentation:
    if args.suspend_real or args.suspend_complex:
        return suspend(p, args.suspend_real, args.suspend_complex)
    return p


def _cmd_lens(args) -> str:
    return _emit_spectrum(_shifted(swf_lens(LensParams(args.n, args.k)), args), args.output)


def _cmd_brieskorn(args) -> str:
    p = _shifted(swf_brieskorn(BrieskornParams(args.r, args.orientation)), args)
    return _emit_spectrum(forget(p) if args.forget else p, args.output)


def _cmd_groups(args) -> str:
    hg = homotopy_group(args.spectrum, args.k, args.equivariant)
    name = f"pi_{args.k}^T" if args.equivariant else f"pi_{args.k}"
    doc = {
        "degree": args.k,
        "equivariant": args.equivariant,
        "group": str(hg.group),
        "rank": hg.group.rank,
        "torsion": list(hg.group.torsion),
        "generators": list(hg.group.generators or ()),
        "audits": [a.ok for a in hg.audits],
    }
    gens = ", ".join(hg.group.generators or ())
    pretty = f"{name} = {hg.group}" + (f"  generated by {gens}" if gens else "")
    return _emit(doc, pretty, args.output)


def _cmd_dualize(args) -> str:
    return _emit_spectrum(dualize(args.spectrum), args.output)


def _cmd_forget(args) -> str:
    return _emit_spectrum(forget(args.spectrum), args.output)


def _cmd_glue(args) -> str:
    left = RelativeInvariantClass.create(args.left, args.left_degree, args.left_class, args.left_equivariant)
    right = RelativeInvariantClass.create(args.right, args.right_degree, args.right_class, args.right_equivariant)
    value = glue(left, right)
    doc = {"stem": value.stem, "value": value.value, "element": str(value)}
    return _emit(doc, str(value), args.output)


def _cmd_exotic(args) -> str:
    report = apps.exotic_nuclei_check(apps.NucleusParams(args.p, args.q))
    pretty = (
        f"N(2)_{{{args.p},{args.q}}}: x0 = {report.x0}, x1 = {report.x1}, z = {report.z}, "
        f"Psi(c0) = {report.c0_value}, Psi(c1) = {report.c1_value}\n{report.verdict.value}"
    )
    return _emit(report.as_dict(), pretty, args.output)


def _cmd_adjunction(args) -> str:
    if args.square > 0:
        report = apps.adjunction_positive_check(True, args.square)
        pretty = report.verdict.value + "".join(f"\n  {line}" for line in report.certificate)
    else:
        if args.pairing is None:
            raise _Usage("--pairing is required for a sphere of negative square")
        report = apps.adjunction_negative_check(-args.square, args.pairing)
        pretty = f"j = {report.j}, k = {report.k}, i = {report.index}\n{report.verdict.value}"
    return _emit(report.as_dict(), pretty, args.output)


def _cmd_series(args) -> str:
    series = apps.relative_sw_series(apps.NucleusParams(args.p, args.q))
    doc = {"p": args.p, "q": args.q, "coefficients": {str(e): c for e, c in series.coeffs}}
    return _emit(doc, str(series), args.output)


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swfspectra", description="Seiberg-Witten Floer spectra calculator")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "pretty"), default="pretty")
    sub = parser.add_subparsers(dest="command", required=True)

    def suspension(sp):
        sp.add_argument("--suspend-real", type=_integer, default=0, metavar="M")
        sp.add_argument("--suspend-complex", type=_rational, default=Fraction(0), metavar="Q")

    sp = sub.add_parser("lens", parents=[common], help="Floer spectrum of L(n,1) with spin^c structure k")
    sp.add_argument("--n", type=_integer, required=True)
    sp.add_argument("--k", type=_integer, required=True)
    suspension(sp)
    sp.set_defaults(func=_cmd_lens)

    sp = sub.add_parser("brieskorn", parents=[common], help="Floer spectrum of +-Sigma(2,3,r)")
    sp.add_argument("--r", type=_integer, required=True)
    sp.add_argument("--orientation", choices=("pos", "neg"), default="neg")
    sp.add_argument("--forget", action="store_true", help="forget the circle action")
    suspension(sp)
    sp.set_defaults(func=_cmd_brieskorn)

    sp = sub.add_parser("groups", parents=[common], help="stable homotopy group of a spectrum file")
    sp.add_argument("--spectrum", type=_spectrum_file, required=True)
    sp.add_argument("--k", type=_integer, required=True)
    sp.add_argument("--equivariant", action="store_true")
    sp.set_defaults(func=_cmd_groups)

    for name, func, text in (("dualize", _cmd_dualize, "Spanier-Whitehead dual"),
                             ("forget", _cmd_forget, "forget the circle action")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--spectrum", type=_spectrum_file, required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("glue", parents=[common], help="pair classes on a spectrum and its dual")
    for side in ("left", "right"):
        sp.add_argument(f"--{side}", type=_spectrum_file, required=True)
        sp.add_argument(f"--{side}-degree", type=_integer, required=True)
        sp.add_argument(f"--{side}-class", type=_coords, required=True, metavar="C1,C2,...")
        sp.add_argument(f"--{side}-equivariant", action="store_true")
    sp.set_defaults(func=_cmd_glue)

    sp = sub.add_parser("exotic-nuclei", parents=[common], help="obstruction to N(2)_{p,q} in K3#K3#K3")
    sp.add_argument("--p", type=_integer, required=True)
    sp.add_argument("--q", type=_integer, required=True)
    sp.set_defaults(func=_cmd_exotic)

    sp = sub.add_parser("adjunction", parents=[common], help="basic classes versus an embedded sphere")
    sp.add_argument("--square", type=_integer, required=True)
    sp.add_argument("--pairing", type=_integer)
    sp.set_defaults(func=_cmd_adjunction)

    sp = sub.add_parser("series", parents=[common], help="relative Seiberg-Witten series of N(2)_{p,q}")
    sp.add_argument("--p", type=_integer, required=True)
    sp.add_argument("--q", type=_integer, required=True)
    sp.set_defaults(func=_cmd_series)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except SWFError as exc:
        sys.stderr.write(json.dumps({"code": exc.code, "message": str(exc)}, sort_keys=True) + "\n")
        return 1
    except (_Usage, ValueError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
