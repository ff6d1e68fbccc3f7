"""Command-line interface: ``polyregions {region,eigs,compare}``.

Exit status: 0 success, 1 usage or numerical error, 2 an eigenvalue fell
outside a verified region.
"""

import argparse
import json
import sys

import numpy as np

from ._validation import DimensionError, SingularMatrixError
from .bases import InvalidBasisError, convert_to_basis, verify_basis_condition
from .estimator import resolve_basis
from .linalg import EigenvalueConvergenceError, polyeig_oracle
from .polynomial import MatrixPolynomial
from .problems import RecipeError, build_problem, mass_spring_nodes
from .regions import cauchy_disk, inclusion_region, reversal_exclusion, verify_containment
from .svg import render_svg

EIGS_MAX_SIZE = 1000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_problem_args(p):
    g = p.add_argument_group("problem")
    g.add_argument("--family", choices=["mass-spring", "acoustic", "string"])
    g.add_argument("--coeffs", metavar="PATH", help="JSON file with power-basis coefficients")
    g.add_argument("--m", type=int, default=50)
    g.add_argument("--tau", type=float)
    g.add_argument("--kappa", type=float)
    g.add_argument("--ell", type=int, default=20)
    g.add_argument("--zeta-re", type=float, default=0.1)
    g.add_argument("--zeta-im", type=float, default=0.1)
    g.add_argument("--n-basis", type=int, default=50)
    g.add_argument("--eps", type=float, default=0.1)
    g.add_argument("--delta", type=float, default=2.7)
    p.add_argument("--norm", choices=["one", "inf"], default="one")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH")


def build_parser():
    parser = _Parser(prog="polyregions", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    region = sub.add_parser("region", help="inclusion region of one basis")
    _add_problem_args(region)
    region.add_argument(
        "--basis", choices=["power", "newton", "quadratic-general", "generic"], default="newton"
    )
    region.add_argument("--nodes", help="JSON list of nodes ([re, im] or numbers), or generic basis object")
    region.add_argument("--verify", action="store_true")
    region.add_argument("--svg", metavar="PATH")

    eigs = sub.add_parser("eigs", help="oracle eigenvalues as CSV")
    _add_problem_args(eigs)
    eigs.add_argument("--csv", metavar="PATH")

    compare = sub.add_parser("compare", help="several bases side by side")
    _add_problem_args(compare)
    compare.add_argument(
        "--basis",
        action="append",
        choices=["power", "newton", "quadratic-general", "generic"],
    )
    compare.add_argument("--nodes", help="explicit nodes; only with a single --basis")
    compare.add_argument("--verify", action="store_true")
    return parser


def problem_descriptor(args):
    if (args.family is None) == (args.coeffs is None):
        raise UsageError("give exactly one of --family or --coeffs")
    if args.coeffs:
        return {"coeffs": args.coeffs}
    if args.family == "mass-spring":
        if args.tau is None or args.kappa is None:
            raise UsageError("mass-spring needs --tau and --kappa")
        return {"family": "mass_spring", "m": args.m, "tau": args.tau, "kappa": args.kappa}
    if args.family == "acoustic":
        return {"family": "acoustic", "ell": args.ell, "zeta": [args.zeta_re, args.zeta_im]}
    return {"family": "string", "n_basis": args.n_basis, "eps": args.eps, "delta": args.delta}


def load_problem(descriptor):
    if "coeffs" in descriptor:
        with open(descriptor["coeffs"]) as fh:
            return MatrixPolynomial.from_dict(json.load(fh)).to_power()
    return build_problem(descriptor)


def parse_nodes(text):
    if text is None:
        return None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--nodes is not valid JSON: {exc}") from exc
    if isinstance(raw, dict):
        return raw
    if not isinstance(raw, list):
        raise UsageError("--nodes must be a JSON list or object")
    return [complex(*x) if isinstance(x, list) else complex(x) for x in raw]


def choose_basis(name, descriptor, P, nodes, norm):
    """Explicit nodes win; otherwise the family's recipe."""
    if nodes is None and descriptor.get("family") == "mass_spring" and name != "power":
        sel = mass_spring_nodes(descriptor["tau"], descriptor["kappa"])
        return sel.newton_basis() if name == "newton" else sel.general_basis()
    return resolve_basis(name, P, nodes, norm)


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dumps(doc):
    return json.dumps(doc, indent=2) + "\n"


def _region_for(P, basis, norm):
    return inclusion_region(convert_to_basis(P, basis), norm)


def cmd_region(args):
    descriptor = problem_descriptor(args)
    P = load_problem(descriptor)
    basis = choose_basis(args.basis, descriptor, P, parse_nodes(args.nodes), args.norm)
    region = _region_for(P, basis, args.norm)
    cauchy = cauchy_disk(P, args.norm)
    doc = {
        "problem": descriptor,
        "norm": args.norm,
        "basis": basis.to_dict(),
        "cauchy_radius": cauchy.rho,
        "region": region.to_dict(),
    }
    status = 0
    report = None
    if args.verify:
        report = verify_containment(P, region)
        doc["verification"] = report.to_dict()
        cond = verify_basis_condition(basis, samples=64, seed=args.seed)
        doc["basis_condition"] = {"holds": cond.holds, "worst_slack": cond.worst_slack}
        status = 0 if report.contained else 2
    _write(args.json, _dumps(doc))
    if args.svg:
        ev = report.eigenvalues if report is not None else None
        _write(args.svg, render_svg(region, cauchy.rho, ev))
    return status


def cmd_eigs(args):
    P = load_problem(problem_descriptor(args))
    if P.degree * P.size > EIGS_MAX_SIZE:
        raise UsageError(
            f"n*m = {P.degree * P.size} exceeds the desk-scale limit of {EIGS_MAX_SIZE}"
        )
    ev = polyeig_oracle(P)
    order = np.lexsort((ev.imag, ev.real))
    lines = ["re,im"] + [f"{float(z.real) + 0.0!r},{float(z.imag) + 0.0!r}" for z in ev[order]]
    _write(getattr(args, "csv", None), "\n".join(lines) + "\n")
    return 0


def cmd_compare(args):
    descriptor = problem_descriptor(args)
    P = load_problem(descriptor)
    names = args.basis or ["power", "newton"]
    nodes = parse_nodes(args.nodes)
    if nodes is not None and len(names) > 1:
        raise UsageError("--nodes can only be combined with a single --basis")
    ev = polyeig_oracle(P) if args.verify else None
    try:
        r_min = reversal_exclusion(P, args.norm)
    except SingularMatrixError:
        r_min = None
    entries, regions, status = [], [], 0
    for name in names:
        basis = choose_basis(name, descriptor, P, nodes, args.norm)
        region = _region_for(P, basis, args.norm)
        regions.append(region)
        entry = {
            "basis": basis.to_dict(),
            "gamma": region.gamma,
            "rho": region.rho,
            "radius": region.radius,
            "n_components": region.n_components,
            "predicted_counts": [int(c) for c in region.predicted_counts],
        }
        if ev is not None:
            report = verify_containment(P, region, eigenvalues=ev)
            entry["contained"] = bool(report.contained)
            entry["counts_match"] = report.counts_match
            if not report.contained:
                status = 2
        entries.append(entry)
    doc = {
        "problem": descriptor,
        "norm": args.norm,
        "cauchy_radius": cauchy_disk(P, args.norm).rho,
        "reversal_r_min": r_min,
        "regions": entries,
    }
    if ev is not None:
        inside_all = np.ones(len(ev), dtype=bool)
        for region in regions:
            inside_all &= region.margins(ev) <= 1e-8 * (1.0 + region.radius)
        doc["intersection"] = {
            "n_eigenvalues": int(len(ev)),
            "in_all_regions": int(inside_all.sum()),
            "outside_exclusion_disk": None
            if r_min is None
            else int(np.count_nonzero(np.abs(ev) >= r_min * (1 - 1e-10))),
        }
    _write(args.json, _dumps(doc))
    return status


COMMANDS = {"region": cmd_region, "eigs": cmd_eigs, "compare": cmd_compare}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (
        UsageError,
        RecipeError,
        InvalidBasisError,
        DimensionError,
        SingularMatrixError,
        EigenvalueConvergenceError,
        OSError,
        ValueError,
        KeyError,
    ) as exc:
        print(f"polyregions {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
