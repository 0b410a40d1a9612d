"""Command-line front end.

    sectioncounts series phi --prec 4
    sectioncounts series gw --c-mode conjecture --theta a1 --eta-power -36
    sectioncounts pluecker 36 0 216 --format json
    sectioncounts lattice theta a2 --prec 3
    sectioncounts lattice enum a1a1 --norm -4
    sectioncounts lattice project --sz 3
    sectioncounts lattice mw-power --k 2 --sz 0
    sectioncounts lattice classify bitangent

Exit status is 0 on success, 2 on bad arguments and 3 when two independent
computations of the same quantity disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import counts, geometry, lattice, modforms
from .errors import ConsistencyError, SectionCountsError
from .qseries import DEFAULT_PREC, QSeries

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

SERIES_NAMES = ("e4", "e6", "eta", "eta-inv36", "theta-a1", "theta-a2", "phi", "h", "gw")


class UsageError(Exception):
    pass


def _num(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def _jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return _num(obj)
    if isinstance(obj, QSeries):
        return [_num(c) for c in obj.coeffs]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class OutputEnvelope:
    command: str
    parameters: dict
    result: dict
    provenance: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": _jsonable(self.parameters),
            "result": _jsonable(self.result),
            "provenance": list(self.provenance),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"# {d['command']}"]
        for k in sorted(d["parameters"]):
            lines.append(f"#   {k} = {d['parameters'][k]}")
        res = d["result"]
        coeffs = res.get("coefficients")
        scalars = {k: v for k, v in res.items() if k != "coefficients"}
        if scalars:
            width = max(len(k) for k in scalars)
            for k in sorted(scalars):
                v = scalars[k]
                if isinstance(v, list):
                    v = ", ".join(json.dumps(x) if isinstance(x, list) else str(x) for x in v)
                lines.append(f"{k.ljust(width)}  {v}")
        if coeffs is not None:
            nw = max(len("n"), len(str(len(coeffs) - 1)))
            cw = max(len(c) for c in coeffs)
            lines.append(f"{'n'.rjust(nw)}  {'coefficient'.rjust(cw)}")
            for n, c in enumerate(coeffs):
                lines.append(f"{str(n).rjust(nw)}  {c.rjust(cw)}")
        if d["provenance"]:
            lines.append("# provenance: " + "; ".join(d["provenance"]))
        return "\n".join(lines) + "\n"


def _theta(name: str, prec: int, threads: int) -> QSeries:
    return lattice.theta_series(lattice.named_lattice(name), prec, workers=threads)


def cmd_series(name: str, prec: int = DEFAULT_PREC, c_mode: str | None = None, theta: str | None = None,
               eta_power: int | None = None, threads: int = 1) -> OutputEnvelope:
    if prec < 0:
        raise UsageError("--prec must be nonnegative")
    if name not in SERIES_NAMES:
        raise UsageError(f"unknown series {name!r}")
    if name != "gw" and (c_mode is not None or theta is not None or eta_power is not None):
        raise UsageError("--c-mode, --theta and --eta-power only apply to the gw series")
    params = {"name": name, "prec": prec}
    result: dict = {}
    provenance: list[str] = []

    if name == "e4" or name == "e6":
        s = modforms.eisenstein(int(name[1]), prec)
        provenance = [f"eisenstein({name[1]})"]
    elif name == "eta":
        s = modforms.euler_product(prec)
        provenance = ["euler_product"]
    elif name == "eta-inv36":
        s = counts.bl_correction(prec)
        provenance = ["euler_product", "e3_surface_invariants.nodal_fibers"]
    elif name in ("theta-a1", "theta-a2"):
        s = _theta(name[-2:], prec, threads)
        provenance = [f"theta_series({name[-2:].upper()})"]
    elif name == "phi":
        fit = counts.phi_fit(prec)
        s = fit.series.truncate(prec) if prec < fit.series.prec else fit.series
        result["weight"] = counts.PHI_WEIGHT
        result["basis"] = [f"E4^{a}*E6^{b}" for a, b in fit.monomials]
        result["basis_coefficients"] = list(fit.coefficients)
        provenance = list(counts.anchors().provenance[:2]) + ["mform_fit(16)"]
    else:
        mode = _c_mode(c_mode, theta, eta_power) if name == "gw" else "zero"
        ledger = counts.build_ledger(max(prec, 2), mode)
        provenance = list(ledger.anchors.provenance) + ["h_series_theorem1 == h_series_correction"]
        if name == "h":
            s = ledger.h.truncate(prec)
        else:
            s = ledger.gw.truncate(prec)
            params["c_mode"] = ledger.c_mode_label
            result["experimental"] = ledger.experimental
            provenance.append("bl_correction")
            if ledger.experimental:
                result["label"] = ledger.c_mode_label
    result["coefficients"] = s
    return OutputEnvelope("series", params, result, provenance)


def _c_mode(c_mode, theta, eta_power):
    if c_mode in (None, "zero"):
        if theta is not None or eta_power is not None:
            raise UsageError("--theta/--eta-power require --c-mode conjecture")
        return "zero"
    if theta is None or eta_power is None:
        raise UsageError("--c-mode conjecture needs both --theta and --eta-power")
    try:
        return counts.Conjecture(theta, eta_power)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_pluecker(d: int, n: int, c: int) -> OutputEnvelope:
    try:
        curve = geometry.PlaneCurveInvariants(d, n, c)
        dual = geometry.pluecker_dual(curve)
    except (SectionCountsError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return OutputEnvelope(
        "pluecker",
        {"degree": d, "nodes": n, "cusps": c},
        {"dual_degree": dual.degree, "dual_nodes": dual.nodes, "dual_cusps": dual.cusps},
        ["pluecker_dual"],
    )


def _parse_gram(text: str) -> lattice.GramLattice:
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
        return lattice.GramLattice(tuple(map(tuple, rows)))
    except ValueError as exc:
        raise UsageError(f"invalid Gram matrix {text!r}: {exc}") from exc


def _lattice_arg(name: str | None, gram: str | None) -> lattice.GramLattice:
    if (name is None) == (gram is None):
        raise UsageError("give exactly one of a lattice name or --gram")
    if gram is not None:
        return _parse_gram(gram)
    return lattice.named_lattice(name)


def cmd_lattice(sub: str, args: argparse.Namespace) -> OutputEnvelope:
    threads = getattr(args, "threads", 1)
    if sub == "theta":
        L = _lattice_arg(args.lattice, args.gram)
        s = lattice.theta_series(L, args.prec, workers=threads)
        params = {"lattice": _lattice_label(args), "prec": args.prec}
        return OutputEnvelope("lattice theta", params, {"coefficients": s}, ["theta_series"])
    if sub == "enum":
        L = _lattice_arg(args.lattice, args.gram)
        vecs = lattice.enumerate_by_norm(L, args.norm, workers=threads)
        params = {"lattice": _lattice_label(args), "norm": args.norm}
        return OutputEnvelope("lattice enum", params, {"count": len(vecs), "vectors": [list(v) for v in vecs]},
                              ["enumerate_by_norm"])
    if sub == "project":
        sz = _nonneg(args.sz, "--sz")
        result = {
            "projection_norm": lattice.projection_norm(sz),
            "direct_gram_projection_norm": lattice.projection_norm_direct(sz),
            "pushforward": list(lattice.pushforward_to_X(sz)),
        }
        if result["projection_norm"] != result["direct_gram_projection_norm"]:
            raise ConsistencyError(f"projection norms disagree at sz={sz}")
        return OutputEnvelope("lattice project", {"sz": sz}, result,
                              ["projection_norm", "projection_norm_direct", "pushforward_to_X"])
    if sub == "mw-power":
        sz = _nonneg(args.sz, "--sz")
        c = lattice.mw_power_class(args.k, sz)
        result = {"class": str(c), "coords": list(c.coords), "self_intersection": lattice.self_intersection(c)}
        return OutputEnvelope("lattice mw-power", {"k": args.k, "sz": sz}, result, ["mw_power_class"])
    if sub == "classify":
        fc = geometry.classify_line(args.position)
        result = {
            "line_position": fc.line_position.value,
            "singularities": list(fc.singularities),
            "kodaira": "+".join(k.value for k in fc.kodaira),
            "a0_lattice": None if fc.a0_lattice is None else [list(r) for r in fc.a0_lattice.gram],
            "a0_lattice_name": "" if fc.a0_lattice is None else fc.a0_lattice.name,
        }
        return OutputEnvelope("lattice classify", {"position": fc.line_position.value}, result, ["classify_line"])
    raise UsageError(f"unknown lattice subcommand {sub!r}")


def _lattice_label(args) -> str:
    return args.lattice if args.lattice is not None else f"gram:{args.gram}"


def _nonneg(x: int, flag: str) -> int:
    if x < 0:
        raise UsageError(f"{flag} must be nonnegative")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=1, help="worker threads for lattice enumeration")
    prec = argparse.ArgumentParser(add_help=False)
    prec.add_argument("--prec", type=int, default=DEFAULT_PREC, help="truncation order (default %(default)s)")

    p = argparse.ArgumentParser(prog="sectioncounts", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common, prec], help="print a q-expansion")
    s.add_argument("name", choices=SERIES_NAMES)
    s.add_argument("--c-mode", choices=("zero", "conjecture"), default=None)
    s.add_argument("--theta", choices=("a1", "a2"), default=None)
    s.add_argument("--eta-power", type=int, choices=(1, -36), default=None)

    pl = sub.add_parser("pluecker", parents=[common], help="dual plane curve invariants")
    pl.add_argument("d", type=int)
    pl.add_argument("n", type=int)
    pl.add_argument("c", type=int)

    lat = sub.add_parser("lattice", help="lattice and surface-class computations")
    lsub = lat.add_subparsers(dest="sub", required=True)
    t = lsub.add_parser("theta", parents=[common, prec])
    t.add_argument("lattice", nargs="?", choices=lattice.LATTICE_NAMES)
    t.add_argument("--gram", help="Gram matrix as rows separated by ';', written --gram='-2,1;1,-2'")
    e = lsub.add_parser("enum", parents=[common])
    e.add_argument("lattice", nargs="?", choices=lattice.LATTICE_NAMES)
    e.add_argument("--gram", help="Gram matrix, as for theta")
    e.add_argument("--norm", type=int, required=True)
    pr = lsub.add_parser("project", parents=[common])
    pr.add_argument("--sz", type=int, default=0)
    mw = lsub.add_parser("mw-power", parents=[common])
    mw.add_argument("--k", type=int, required=True)
    mw.add_argument("--sz", type=int, default=0)
    cl = lsub.add_parser("classify", parents=[common])
    cl.add_argument("position", choices=[p.value for p in geometry.LinePosition])
    return p


def run(args: argparse.Namespace) -> OutputEnvelope:
    if getattr(args, "threads", 1) < 1:
        raise UsageError("--threads must be at least 1")
    if args.command == "series":
        return cmd_series(args.name, args.prec, args.c_mode, args.theta, args.eta_power, args.threads)
    if args.command == "pluecker":
        return cmd_pluecker(args.d, args.n, args.c)
    if getattr(args, "prec", 0) < 0:
        raise UsageError("--prec must be nonnegative")
    return cmd_lattice(args.sub, args)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        env = run(args)
    except ConsistencyError as exc:
        print(f"error: consistency check failed: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (UsageError, SectionCountsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = env.to_json() if args.format == "json" else env.to_text()
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
