"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 consistency mismatch,
3 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from . import io_formats
from .arrangement import Arrangement, rotation_number
from .combinatorics import separated
from .curves import (
    Bridge,
    PolyCurve,
    mutual_crossings,
    self_crossings,
    standard_curve,
    validate_bridge,
    validate_general_position,
    validate_generic,
)
from .errors import CurvesumError
from .geom import cross
from .generator import InstanceGenerator, RandomSpec
from .homotopy import simulate_separation
from .invariants import (
    InvariantLedger,
    SumInputs,
    base_invariants,
    connected_sum_invariants,
    consistency_check,
    plain_bridge_invariants,
    strange_sum_invariants,
    sum_invariants,
)
from .io_formats import InstanceFile, pair_with_bridge, single_curve
from .render import Scene, render_configuration, render_filmstrip, render_svg
from .sums import bridge_stats, classify, construct_sum
from .t_invariants import t_pm, t_st

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 3


def _default_seed() -> int:
    env = os.environ.get("CURVESUM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 0


def _read_instance(path: Optional[str]) -> InstanceFile:
    if path is None or path == "-":
        return io_formats.loads(sys.stdin.read())
    return io_formats.read_instance(path)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.standard is not None:
        n = args.standard
        inst = single_curve(standard_curve(n), base_invariants(n))
    else:
        gen = InstanceGenerator(RandomSpec(seed=seed))
        if args.separated:
            bi = gen.bridged_instance(separated_pair=True, plain=args.plain_bridge)
        elif args.plain_bridge:
            bi = gen.bridged_instance(plain=True)
        else:
            bi = gen.bridged_instance()
        inst = pair_with_bridge(bi.c0, bi.c1, bi.bridge, bi.l0, bi.l1)
    _emit(io_formats.dumps(inst), args.output)
    return EXIT_OK


def _validate_instance(inst: InstanceFile) -> List[str]:
    problems: List[str] = []
    for i, c in enumerate(inst.curves):
        rep = validate_generic(c)
        problems += [f"curve-{i}: {v.rule}: {v.detail}" for v in rep.violations]
    if len(inst.curves) == 2 and not problems:
        rep = validate_general_position(inst.curves[0], inst.curves[1])
        problems += [f"pair: {v.rule}: {v.detail}" for v in rep.violations]
        for k, br in enumerate(inst.bridges):
            rep = validate_bridge(br, inst.curves[0], inst.curves[1])
            problems += [f"bridge-{k}: {v.rule}: {v.detail}" for v in rep.violations]
    return problems


def _cmd_validate(args) -> int:
    inst = _read_instance(args.file)
    problems = _validate_instance(inst)
    for p in problems:
        print(p)
    if problems:
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    inst = _read_instance(args.file)
    if _validate_instance(inst):
        print("instance fails validation", file=sys.stderr)
        return EXIT_INVALID
    arr = Arrangement(list(inst.curves))
    doc = {
        "rotation_numbers": [rotation_number(c) for c in inst.curves],
        "crossings": [
            {
                "point": io_formats._point_to_json(cr.point),
                "mutual": cr.mutual,
            }
            for cr in arr.crossings
        ],
        "faces": [
            {
                "id": f.region_id,
                "bounded": f.bounded,
                "winding": list(f.winding),
            }
            for f in arr.faces
        ],
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def _require_pair_bridge(inst: InstanceFile) -> Tuple[PolyCurve, PolyCurve, Bridge]:
    if len(inst.curves) != 2 or inst.bridge is None:
        raise CurvesumError("this command needs two curves and a bridge")
    return inst.curves[0], inst.curves[1], inst.bridge


def _ledgers_of(inst: InstanceFile) -> Tuple[InvariantLedger, InvariantLedger]:
    l0, l1 = inst.ledgers[0], inst.ledgers[-1]
    if l0 is None or l1 is None:
        raise CurvesumError("both curves need ledgers (asserted or generated)")
    return l0, l1


def _cmd_sum(args) -> int:
    inst = _read_instance(args.file)
    c0, c1, br = _require_pair_bridge(inst)
    built = construct_sum(c0, c1, br)
    print(f"sum curve: {built.curve.n} vertices, "
          f"{built.double_points} double points, offset {built.delta}")
    l0, l1 = inst.ledgers[0], inst.ledgers[-1]
    if l0 is not None and l1 is not None:
        inputs = SumInputs.measure(c0, c1, br)
        ledger = sum_invariants(l0, l1, inputs)
        print("ledger:", ledger.describe())
        rep = consistency_check(ledger, built.curve)
        print("consistency:", rep.describe())
        if not rep.ok:
            return EXIT_MISMATCH
    if args.output:
        io_formats.write_instance(args.output, single_curve(built.curve, cid="sum-0"))
    return EXIT_OK


def _cmd_tpm(args) -> int:
    inst = _read_instance(args.file)
    c0, c1 = inst.curves[0], inst.curves[-1]
    if inst.bridge is not None:
        stats = bridge_stats(c0, c1, inst.bridge)
        c0, c1 = stats.oriented.c0, stats.oriented.c1
    results = {}
    if args.method in ("closed-form", "both"):
        results["closed-form"] = t_pm(c0, c1)
    if args.method in ("simulate", "both"):
        sim = simulate_separation(c0, c1, seed=args.seed or _default_seed())
        results["simulate"] = sim.t_pair
    for name, val in sorted(results.items()):
        print(f"{name}: T+ = {val.plus}, T- = {val.minus}")
    if len(results) == 2 and len(set(results.values())) != 1:
        print("MISMATCH")
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_tst(args) -> int:
    inst = _read_instance(args.file)
    c0, c1, br = _require_pair_bridge(inst)
    results = {}
    events = None
    if args.method in ("closed-form", "both"):
        results["closed-form"] = t_st(c0, c1, br)
    if args.method in ("simulate", "both"):
        sim = simulate_separation(c0, c1, bridge=br, seed=args.seed or _default_seed())
        results["simulate"] = sim.t_st
        events = sim.events
    for name, val in sorted(results.items()):
        print(f"{name}: T^St = {val}")
    if args.trace and events is not None:
        doc = [
            {
                "time": io_formats.rational_to_str(e.time),
                "kind": e.kind,
                "sign": e.sign,
                "point": io_formats._point_to_json(e.point),
                "owner": e.moving,
            }
            for e in events
        ]
        print(json.dumps(doc, indent=2))
    if len(results) == 2 and len(set(results.values())) != 1:
        print("MISMATCH")
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_invariants(args) -> int:
    inst = _read_instance(args.file)
    code = EXIT_OK
    for cid, ledger in zip(inst.curve_ids, inst.ledgers):
        if ledger is None:
            print(f"{cid}: no ledger")
            continue
        rep = consistency_check(ledger)
        print(f"{cid}: ({ledger.j_plus}, {ledger.j_minus}, {ledger.st}), "
              f"d={ledger.double_points} [{rep.describe()}]")
        if not rep.ok:
            code = EXIT_MISMATCH
    if len(inst.curves) == 2 and inst.bridge is not None:
        try:
            l0, l1 = _ledgers_of(inst)
        except CurvesumError:
            return code
        inputs = SumInputs.measure(inst.curves[0], inst.curves[1], inst.bridge)
        ledger = sum_invariants(l0, l1, inputs)
        print(f"sum: ({ledger.j_plus}, {ledger.j_minus}, {ledger.st}), "
              f"d={ledger.double_points}")
    return code


@dataclass
class _Identity:
    name: str
    ok: Optional[bool]  # None = not applicable
    detail: str = ""


def _verify_instance(c0: PolyCurve, l0, c1: PolyCurve, l1, br: Bridge,
                     seed: int) -> List[_Identity]:
    out: List[_Identity] = []
    stats = bridge_stats(c0, c1, br)
    inputs = SumInputs.measure(c0, c1, br)
    kind = classify(c0, c1, br, stats)
    m = len(mutual_crossings(c0, c1))

    built = construct_sum(c0, c1, br)
    want = (len(self_crossings(c0)) + len(self_crossings(c1)) + m
            + 2 * stats.interior_count + 4 * stats.n_gamma)
    out.append(_Identity("construction-count", built.double_points == want
                         and validate_generic(built.curve).ok))

    ledger = sum_invariants(l0, l1, inputs)
    rep = consistency_check(ledger, built.curve)
    out.append(_Identity("ledger-difference", rep.ok, rep.describe()))

    out.append(_Identity("tangency-balance",
                         inputs.t_pair.plus + inputs.t_pair.minus == -(m // 2)))

    sums_by_curve = [sum(x.s for x in stats.crossings_with(i)) for i in (0, 1)]
    out.append(_Identity(
        "adjacent-indices",
        stats.ind_r0_v0 - stats.ind_v0 == -sums_by_curve[0]
        and stats.ind_r1_v1 - stats.ind_v1 == -sums_by_curve[1],
    ))

    oc0, oc1 = stats.oriented.c0, stats.oriented.c1
    shared = any(
        cross(oc0.edge_dir(i), oc1.edge_dir(j)) == 0
        for i in range(oc0.n) for j in range(oc1.n)
    )
    if shared:
        out.append(_Identity("simulation-equivalence", None, "shared edge directions"))
    else:
        sim = simulate_separation(c0, c1, bridge=br, seed=seed)
        out.append(_Identity(
            "simulation-equivalence",
            sim.t_pair == inputs.t_pair and sim.t_st == inputs.t_triple,
            f"sim {sim.t_pair}/{sim.t_st} vs closed {inputs.t_pair}/{inputs.t_triple}",
        ))

    if kind.is_strange_sum:
        alt = strange_sum_invariants(l0, l1, inputs)
        out.append(_Identity("separated-reduction",
                             (alt.j_plus, alt.j_minus, alt.st)
                             == (ledger.j_plus, ledger.j_minus, ledger.st)
                             and ledger.st == l0.st + l1.st))
    else:
        out.append(_Identity("separated-reduction", None))
    if kind.plain_bridge:
        alt = plain_bridge_invariants(l0, l1, inputs)
        out.append(_Identity("plain-bridge-reduction",
                             (alt.j_plus, alt.j_minus, alt.st)
                             == (ledger.j_plus, ledger.j_minus, ledger.st)))
    else:
        out.append(_Identity("plain-bridge-reduction", None))
    return out


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    jobs: List[Tuple[int, PolyCurve, InvariantLedger, PolyCurve, InvariantLedger, Bridge]] = []
    if args.random:
        gen = InstanceGenerator(RandomSpec(seed=seed))
        for i in range(args.count):
            bi = gen.bridged_instance()
            jobs.append((i, bi.c0, bi.l0, bi.c1, bi.l1, bi.bridge))
    else:
        inst = _read_instance(args.file)
        c0, c1, br = _require_pair_bridge(inst)
        l0, l1 = _ledgers_of(inst)
        jobs.append((0, c0, l0, c1, l1, br))

    def run(job):
        i, c0, l0, c1, l1, br = job
        try:
            return i, _verify_instance(c0, l0, c1, l1, br, seed + i), None
        except CurvesumError as exc:
            return i, [], exc

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = sorted(pool.map(run, jobs), key=lambda r: r[0])

    failures = 0
    for i, identities, exc in results:
        if exc is not None:
            failures += 1
            print(f"instance {i}: ERROR {type(exc).__name__}: {exc}")
            continue
        bad = [ident for ident in identities if ident.ok is False]
        status = "FAIL" if bad else "pass"
        cells = " ".join(
            f"{ident.name}={'skip' if ident.ok is None else ('ok' if ident.ok else 'FAIL')}"
            for ident in identities
        )
        print(f"instance {i}: {status}  {cells}")
        if bad:
            failures += 1
            job = jobs[i]
            path = f"reproducer-{seed}-{i}.json"
            io_formats.write_instance(
                path, pair_with_bridge(job[1], job[3], job[5], job[2], job[4])
            )
            for ident in bad:
                print(f"  {ident.name}: {ident.detail}")
            print(f"  reproducer written to {path}")
    print(f"{len(results) - failures}/{len(results)} instances pass")
    return EXIT_MISMATCH if failures else EXIT_OK


def _cmd_render(args) -> int:
    inst = _read_instance(args.file)
    if _validate_instance(inst):
        print("instance fails validation", file=sys.stderr)
        return EXIT_INVALID
    if args.filmstrip:
        if len(inst.curves) != 2:
            print("filmstrip needs two curves", file=sys.stderr)
            return EXIT_USAGE
        sim = simulate_separation(inst.curves[0], inst.curves[1],
                                  bridge=inst.bridge, seed=_default_seed())
        svg = render_filmstrip(inst.curves[0], inst.curves[1], sim.events,
                               sim.direction)
    else:
        svg = render_configuration(
            inst.curves[0],
            inst.curves[1] if len(inst.curves) > 1 else None,
            inst.bridge,
        )
    _emit(svg, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="curvesum",
        description="Exact invariants of generic closed plane curves and "
        "their sums along bridges",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a standard curve or a random instance")
    p.add_argument("--standard", type=int, metavar="N")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--separated", action="store_true")
    p.add_argument("--plain-bridge", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("validate", help="validate an instance file")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("analyze", help="emit the arrangement as JSON")
    p.add_argument("file", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("sum", help="construct the sum curve and its ledger")
    p.add_argument("file", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_sum)

    p = sub.add_parser("tpm", help="tangency counts of a separating homotopy")
    p.add_argument("file", nargs="?")
    p.add_argument("--method", choices=("closed-form", "simulate", "both"),
                   default="both")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_tpm)

    p = sub.add_parser("tst", help="triple-point count of a separating homotopy")
    p.add_argument("file", nargs="?")
    p.add_argument("--method", choices=("closed-form", "simulate", "both"),
                   default="both")
    p.add_argument("--seed", type=int)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_tst)

    p = sub.add_parser("invariants", help="print ledgers (and the sum ledger)")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--jobs", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="render an instance as SVG")
    p.add_argument("file", nargs="?")
    p.add_argument("-o", "--output")
    p.add_argument("--filmstrip", action="store_true")
    p.set_defaults(func=_cmd_render)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CurvesumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
