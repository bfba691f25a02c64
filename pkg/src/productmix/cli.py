"""Command-line front end: ``productmix <command> [flags]``.

Reports are JSON on standard output, diagnostics go to standard error.
Exit codes: 0 affirmative answer, 1 negative answer, 2 error.
"""

import argparse
import sys
from typing import Any, Dict, Optional, Sequence, Tuple

from . import io
from .equilibrium import (DEFAULT_POINT_CAP, EquilibriumError, equilibrium_at,
                          equilibrium_over_hull, max_profit_price, price_region,
                          counterexample_for, demand_type_union)
from .lattice import LatticeError, is_unimodular, DemandType
from .matching import find_core, tu_to_auction
from .tropical import demand_type_of, regular_subdivision

OK, NEGATIVE, ERROR = 0, 1, 2


def _region_payload(region, n: int) -> Dict[str, Any]:
    return {
        "inequalities": [{"row": list(r), "rhs": b} for r, b in zip(region.rows, region.rhs)],
        "bounded": region.bounded,
        "bounds": [list(region.bounds(i)) for i in range(n)],
    }


def _supply(args, file_supply) -> Tuple[int, ...]:
    if args.supply is not None:
        flag = io.parse_supply(args.supply)
        if file_supply is not None and tuple(file_supply) != flag:
            print(f"warning: --supply {list(flag)} overrides the file supply {list(file_supply)}",
                  file=sys.stderr)
        return flag
    if file_supply is None:
        raise io.FormatError("supply: not given in the file or with --supply")
    return tuple(file_supply)


def _instance(args):
    if not args.input:
        raise io.FormatError("--input: an instance file is required")
    return io.load_instance(args.input)


def _certificate(cert, names) -> Dict[str, Any]:
    return {"price": cert.price,
            "allocation": {name: a for name, a in zip(names, cert.allocation)}}


def cmd_check(args):
    auction, file_supply, names = _instance(args)
    supply = _supply(args, file_supply)
    if len(supply) != auction.dimension:
        raise io.FormatError(f"supply: expected {auction.dimension} entries")
    res = equilibrium_at(auction, supply)
    if not res:
        return {"supply": supply, "equilibrium": False,
                "aggregate_utility": res.aggregate_value,
                "concave_majorant": res.majorant_value}, NEGATIVE
    out = {"supply": supply, "equilibrium": True}
    out.update(_certificate(res, names))
    out["price_region"] = _region_payload(price_region(auction, supply), auction.dimension)
    return out, OK


def cmd_sweep(args):
    auction, _, names = _instance(args)
    report = equilibrium_over_hull(auction, args.cap or DEFAULT_POINT_CAP)
    points = []
    for a, res in report.results.items():
        entry: Dict[str, Any] = {"bundle": a, "equilibrium": bool(res)}
        if res:
            entry.update(_certificate(res, names))
        else:
            entry["aggregate_utility"] = res.aggregate_value
            entry["concave_majorant"] = res.majorant_value
        points.append(entry)
    payload = {"overall": report.overall, "failures": report.failures, "points": points}
    return payload, OK if report.overall else NEGATIVE


def cmd_price_region(args):
    auction, file_supply, _ = _instance(args)
    supply = _supply(args, file_supply)
    if not equilibrium_at(auction, supply):
        return {"supply": supply, "region": None}, NEGATIVE
    region = price_region(auction, supply)
    return {"supply": supply, "region": _region_payload(region, auction.dimension)}, OK


def cmd_max_profit(args):
    auction, file_supply, names = _instance(args)
    supply = _supply(args, file_supply)
    cert = equilibrium_at(auction, supply)
    if not cert:
        return {"supply": supply, "equilibrium": False}, NEGATIVE
    res = max_profit_price(auction, supply, cert.allocation)
    return {"supply": supply, "equilibrium": True, "status": res.status,
            "allocation": {name: a for name, a in zip(names, cert.allocation)},
            "price": res.price, "revenue": res.revenue}, OK


def cmd_demand_type(args):
    auction, _, names = _instance(args)
    per_agent = {name: list(demand_type_of(u)) for name, u in zip(names, auction.agents)}
    union = demand_type_union(auction)
    check = is_unimodular(union)
    return {"agents": per_agent, "union": list(union), "unimodular": check.unimodular,
            "witness": check.witness}, OK


def _vectors(args) -> DemandType:
    if args.vectors is not None:
        return DemandType.of(io.parse_vectors(args.vectors))
    if args.input:
        auction, _, _ = _instance(args)
        return demand_type_union(auction)
    raise io.FormatError("--vectors: give vectors or an --input instance")


def cmd_unimodular(args):
    dtype = _vectors(args)
    check = is_unimodular(dtype)
    return {"vectors": list(dtype), "unimodular": check.unimodular,
            "witness": check.witness}, OK if check.unimodular else NEGATIVE


def cmd_counterexample(args):
    dtype = _vectors(args)
    if is_unimodular(dtype):
        return {"vectors": list(dtype), "unimodular": True, "counterexample": None}, NEGATIVE
    ce = counterexample_for(dtype)
    fail = equilibrium_at(ce.auction, ce.witness)
    return {"vectors": list(dtype), "unimodular": False, "subset": ce.subset,
            "witness": ce.witness,
            "aggregate_utility": fail.aggregate_value,
            "concave_majorant": fail.majorant_value,
            "instance": io.instance_to_dict(ce.auction, ce.witness)}, OK


def cmd_tu_core(args):
    if not args.game:
        raise io.FormatError("--game: a game file is required")
    game = io.load_game(args.game)
    core = find_core(game, exhaustive=args.exhaustive_coalitions)
    if core is None:
        auction, target, _ = tu_to_auction(game, exhaustive=args.exhaustive_coalitions)
        fail = equilibrium_at(auction, target)
        return {"core": None, "ip_optimum": fail.aggregate_value,
                "lp_optimum": fail.majorant_value}, NEGATIVE
    return {"core": {"partition": [sorted(c) for c in core.partition],
                     "payoffs": core.payoffs}}, OK


def cmd_subdivision(args):
    auction, _, names = _instance(args)
    agents = []
    for name, u in zip(names, auction.agents):
        sub = regular_subdivision(u)
        agents.append({
            "name": name,
            "dimension": sub.dim,
            "marked": sub.marked,
            "unmarked": sorted(set(u.support) - sub.marked),
            "cells": [{"members": c.members, "price": c.price_witness,
                       "maximal": c in sub.maximal_cells} for c in sub.cells],
        })
    return {"agents": agents}, OK


COMMANDS = {
    "check": cmd_check,
    "sweep": cmd_sweep,
    "price-region": cmd_price_region,
    "max-profit": cmd_max_profit,
    "demand-type": cmd_demand_type,
    "unimodular": cmd_unimodular,
    "counterexample": cmd_counterexample,
    "tu-core": cmd_tu_core,
    "subdivision": cmd_subdivision,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="productmix",
                                     description="Exact solver for product-mix auctions.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", metavar="PATH", help="auction instance (JSON)")
    parser.add_argument("--supply", metavar="A1,A2,...", help="supply bundle; overrides the file")
    parser.add_argument("--vectors", metavar="V;W;...", help='vector set, e.g. "1,0;1,2"')
    parser.add_argument("--game", metavar="PATH", help="TU game (JSON)")
    parser.add_argument("--cap", type=int, help="lattice point cap for sweep")
    parser.add_argument("--out", metavar="PATH", help="also write the report here")
    parser.add_argument("--exhaustive-coalitions", action="store_true",
                        help="keep a bidder for every coalition, including zero-valued ones")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> Tuple[Optional[dict], int]:
    """Parse ``argv`` and execute; returns (report or None, exit code)."""
    args = build_parser().parse_args(argv)
    try:
        payload, code = COMMANDS[args.command](args)
    except (io.FormatError, LatticeError, EquilibriumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, ERROR
    echo = {k: v for k, v in sorted(vars(args).items()) if v not in (None, False)}
    return {"command": echo, "result": payload}, code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        report, code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return ERROR if exc.code else OK
    if report is not None:
        text = io.dumps(report)
        print(text)
        if report["command"].get("out"):
            try:
                with open(report["command"]["out"], "w", encoding="utf-8") as fh:
                    fh.write(text + "\n")
            except OSError as exc:
                print(f"error: --out: {exc.strerror}", file=sys.stderr)
                return ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
