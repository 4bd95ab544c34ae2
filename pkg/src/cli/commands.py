"""
One handler per subcommand. Each takes the parsed arguments and the resource
limits and returns the JSON-ready report.
"""

import logging
from argparse import Namespace
from pathlib import Path
from typing import Any, Callable, Dict

from src.centraliser import centraliser_quadruple, load_action, standard_points
from src.cli.inputs import load_centraliser_input, load_group, load_ideal, read_group, resolve_order
from src.cli.sweep import centraliser_stage, frobenius_stage, group_stage, parse_primes, sweep
from src.fol import build, print_formula
from src.groebner import buchberger, dimension, eliminate
from src.hopf import check_hopf, is_smooth
from src.idealops import saturate
from src.primdec import primdec
from src.utils.config import ResourceLimits
from src.utils.errors import InvalidParameter

logger = logging.getLogger(__name__)

Report = Dict[str, Any]


def cmd_groebner(args: Namespace, limits: ResourceLimits) -> Report:
    I = load_ideal(args.input, args.field)
    order = resolve_order(args.order, I.ring)
    basis = buchberger(I.generators, order, ring=I.ring.with_order(order), limits=limits)
    return {"field": str(I.ring.field), "order": args.order or "grlex", "basis": basis.to_strings()}


def cmd_member(args: Namespace, limits: ResourceLimits) -> Report:
    I = load_ideal(args.input, args.field)
    f = I.ring.parse(args.poly)
    I.groebner(limits)
    return {"poly": str(f), "member": I.contains(f)}


def cmd_eliminate(args: Namespace, limits: ResourceLimits) -> Report:
    I = load_ideal(args.input, args.field)
    keep = [name.strip() for name in args.keep.split(",") if name.strip()]
    basis = eliminate(I.generators, keep, ring=I.ring, use_lex=args.lex, limits=limits)
    return {"keep": list(basis.ring.variables), "basis": basis.to_strings()}


def cmd_dimension(args: Namespace, limits: ResourceLimits) -> Report:
    I = load_ideal(args.input, args.field)
    return {"dimension": dimension(I.groebner(limits))}


def cmd_saturate(args: Namespace, limits: ResourceLimits) -> Report:
    I = load_ideal(args.input, args.field)
    result = saturate(I, I.ring.parse(args.poly), limits)
    return {"ideal": result.ideal.to_strings(), "exponent": result.exponent}


def cmd_primdec(args: Namespace, limits: ResourceLimits) -> Report:
    I = load_ideal(args.input, args.field)
    components = primdec(I, limits)
    return {"count": len(components), "components": [c.to_dict() for c in components]}


def cmd_hopf_check(args: Namespace, limits: ResourceLimits) -> Report:
    H = load_group(args.input, args.field)
    result = check_hopf(H, limits)
    return {"field": str(H.field), "is_hopf": result.is_valid, "failures": [e.to_dict() for e in result.errors]}


def cmd_smooth_check(args: Namespace, limits: ResourceLimits) -> Report:
    H = load_group(args.input, args.field)
    return is_smooth(H, limits).to_dict()


def cmd_centralise(args: Namespace, limits: ResourceLimits) -> Report:
    A, N = load_centraliser_input(args.action, args.example, args.field)
    result = centraliser_quadruple(A, N, limits, identity_components=not args.full, progress=args.progress)
    return result.to_dict()


def cmd_emit_formula(args: Namespace, limits: ResourceLimits) -> Report:
    params = {name: getattr(args, name) for name in ("d", "n", "e", "r", "p") if getattr(args, name) is not None}
    F = build(args.kind, **params)
    text = print_formula(F, limits)
    report: Report = {"label": F.label, "free": len(F.free), "size": F.size(limits)}
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        report["output"] = args.output
    else:
        report["formula"] = text
    return report


def cmd_sweep(args: Namespace, limits: ResourceLimits) -> Report:
    primes = parse_primes(args.primes)
    if args.example:
        if args.example != "frobenius-twist":
            raise InvalidParameter("sweep templates: only frobenius-twist is instantiated per prime", stage="sweep")
        stage = frobenius_stage(standard_points(), limits, not args.full)
        subject = "gl2-frobenius-twist"
    elif args.action:
        A, N = load_action(args.action)
        stage = centraliser_stage(A, N, limits, not args.full)
        subject = A.name or args.action
    elif args.input:
        H = read_group(args.input)
        stage = group_stage(H, limits)
        subject = H.name or args.input
    else:
        raise InvalidParameter("sweep needs --input, --action or --example", stage="sweep")
    report = sweep(stage, primes, subject, char0=args.char0, progress=args.progress)
    return report.to_dict(timings=args.timings)


COMMANDS: Dict[str, Callable[[Namespace, ResourceLimits], Report]] = {
    "groebner": cmd_groebner,
    "member": cmd_member,
    "eliminate": cmd_eliminate,
    "dimension": cmd_dimension,
    "saturate": cmd_saturate,
    "primdec": cmd_primdec,
    "hopf-check": cmd_hopf_check,
    "smooth-check": cmd_smooth_check,
    "centralise": cmd_centralise,
    "emit-formula": cmd_emit_formula,
    "sweep": cmd_sweep,
}
