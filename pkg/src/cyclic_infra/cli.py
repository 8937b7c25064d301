"""Command-line front end: validate | enumerate | solve | smooth | bench.

Backends are given as JSON (inline or a file path): ``{"R": 10, "distances":
[0, 2, 3, 7]}`` for a table, ``{"p": 5, "D": [1, 1, 0, 0, 1]}`` for y^2 = D(x).
All output is JSON with sorted keys. Exit codes: 0 success, 1 validation
failure, 2 invalid input, 3 resource cap, 4 target not in subgroup.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from sympy import isprime

from .errors import (
    CurveTooLarge,
    CycleTooLong,
    FTooLarge,
    InfraError,
    InvalidInput,
    NotInSubgroup,
)
from .frep_group import FRepGroup, OpCostLedger
from .infra_core import Infrastructure, TableInfra, enumerate_cycle, validate_axioms
from .ph_solver import DlogInstance, Factorization, solve_distance, trim_multiple
from .rqff import RealQuadraticCurve, l_polynomial
from .smoothness import SmoothnessQuery, hasse_weil_bound, is_smooth

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP, EXIT_SUBGROUP = 0, 1, 2, 3, 4
TRIAL_DIVISION_CAP = 10**6


def trial_division(n: int, bound: int = TRIAL_DIVISION_CAP) -> Factorization:
    """Factor n by trial division up to ``bound`` (a convenience, not part of the attack).

    A leftover cofactor is accepted only if it is prime.
    """
    if n < 1:
        raise InvalidInput("can only factor positive integers")
    bound = min(bound, TRIAL_DIVISION_CAP)
    exps: dict[int, int] = {}
    d = 2
    while d <= bound and d * d <= n:
        while n % d == 0:
            exps[d] = exps.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if not isprime(n):
            raise InvalidInput(f"cofactor {n} is composite beyond the trial-division bound")
        exps[n] = exps.get(n, 0) + 1
    return Factorization.from_dict(exps)


def load_json(text: str):
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from exc


def load_backend(source) -> Infrastructure:
    data = load_json(source) if isinstance(source, str) else source
    if not isinstance(data, dict):
        raise InvalidInput("backend JSON must be an object")
    if "R" in data and "p" not in data:
        return TableInfra.from_json(data)
    if "p" in data and "D" in data:
        return RealQuadraticCurve.from_json(data)
    raise InvalidInput("backend JSON needs either R/distances or p/D")


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- commands: each returns (exit code, JSON payload) ---------------------


def cmd_validate(backend: Infrastructure, cap: int | None = None, seed: int = 0):
    enum = enumerate_cycle(backend, cap)
    report = validate_axioms(backend, enum, seed=seed)
    out = report.to_json()
    out["R"] = enum.R
    return (EXIT_OK if report.passed else EXIT_FAIL), out


def cmd_enumerate(backend: Infrastructure, cap: int | None = None):
    enum = enumerate_cycle(backend, cap)
    out = enum.to_json()
    if not isinstance(backend, TableInfra):
        out["points"] = [backend.point_to_json(x) for x in enum.points]
    return EXIT_OK, out


def _default_multiple(backend: Infrastructure) -> int:
    if isinstance(backend, TableInfra):
        return backend.R
    # R * h = L(1): the order of Pic^0 is a multiple of the regulator
    return sum(l_polynomial(backend))


def cmd_solve(backend: Infrastructure, target, gen=None, factorization=None,
              auto_factor_bound: int | None = None, multiple: int | None = None,
              workers: int | None = None):
    group = FRepGroup(backend)
    tgt = group.from_json(target)
    g = group.from_json(gen) if gen is not None else group.unit()
    if factorization is not None:
        fac = Factorization.from_json(factorization)
    else:
        m = multiple if multiple is not None else _default_multiple(backend)
        fac = trial_division(m, auto_factor_bound or TRIAL_DIVISION_CAP)
        fac = trim_multiple(group.with_ledger(), fac, g)
    report = solve_distance(group, DlogInstance(g, tgt, fac), workers=workers)
    out = report.to_json()
    out["factorization"] = fac.to_json()
    return EXIT_OK, out


def cmd_smooth(backend: Infrastructure, B: int, R_upper: int | None = None,
               hasse_weil: bool = False):
    if hasse_weil:
        if not isinstance(backend, RealQuadraticCurve):
            raise InvalidInput("--hasse-weil needs a curve backend")
        R_upper = hasse_weil_bound(backend.p, backend.g)
    if R_upper is None:
        raise InvalidInput("give --R-upper or --hasse-weil")
    group = FRepGroup(backend)
    verdict = is_smooth(group, SmoothnessQuery(B, R_upper, group.unit()))
    return EXIT_OK, {
        "smooth": verdict.smooth,
        "B": B,
        "R_upper": R_upper,
        "m_bits": verdict.m_bits,
        "witness": group.to_json(verdict.witness),
        "group_ops": verdict.group_ops,
    }


def cmd_bench(backend: Infrastructure, ops: int, seed: int = 0, timing: bool = False):
    rng = random.Random(seed)
    group = FRepGroup(backend)
    out = {"ops": ops, "seed": seed}
    if ops == 0:
        out["ledger"] = OpCostLedger().snapshot()
        return EXIT_OK, out
    unit = group.unit()
    setup = group.with_ledger()
    pool = [setup.scalar_mul(rng.randrange(1 << 12), unit) for _ in range(32)]
    max_bs = max_inv = 0
    t0 = time.perf_counter()
    for _ in range(ops):
        a, b = rng.choice(pool), rng.choice(pool)
        c = group.op(a, b)
        _, n_bs, n_inv = group.ledger.cost_of_last_op()
        max_bs, max_inv = max(max_bs, n_bs), max(max_inv, n_inv)
        pool[rng.randrange(len(pool))] = c
    elapsed = time.perf_counter() - t0
    out.update(ledger=group.ledger.snapshot(), max_bs_per_op=max_bs, max_bs_inv_per_op=max_inv)
    if timing:
        out["seconds"] = elapsed
    return EXIT_OK, out


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclic-infra", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--backend", required=True, help="table or curve JSON (inline or file)")
        p.add_argument("--output", default="-", help="output path, - for stdout")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("validate", help="check the infrastructure axioms")
    common(p)
    p.add_argument("--max", type=int, default=None, help="enumeration cap")

    p = sub.add_parser("enumerate", help="walk the cycle, print R and distances")
    common(p)
    p.add_argument("--max", type=int, default=None, help="enumeration cap")

    p = sub.add_parser("solve", help="Pohlig-Hellman for the distance of a target")
    common(p)
    p.add_argument("--target", required=True, help='FRep JSON, e.g. {"point": 7, "f": 0}')
    p.add_argument("--gen", default=None, help="generator FRep JSON (default: distance 1)")
    p.add_argument("--factorization", default=None, help="JSON [[p, e], ...] of R or a multiple")
    p.add_argument("--auto-factor-bound", type=int, default=None)
    p.add_argument("--multiple", type=int, default=None,
                   help="known multiple of R to factor (default: R of a table, L(1) of a curve)")
    p.add_argument("--parallel", type=int, default=None, help="worker threads for prime branches")

    p = sub.add_parser("smooth", help="test R for B-smoothness")
    common(p)
    p.add_argument("--B", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--R-upper", type=int, dest="R_upper")
    grp.add_argument("--hasse-weil", action="store_true")

    p = sub.add_parser("bench", help="random group operations with op counts")
    common(p)
    p.add_argument("--ops", type=int, default=1000)
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds")
    return ap


def run(argv=None) -> tuple[int, dict]:
    args = build_parser().parse_args(argv)
    try:
        backend = load_backend(args.backend)
        if args.command == "validate":
            return cmd_validate(backend, args.max, args.seed)
        if args.command == "enumerate":
            return cmd_enumerate(backend, args.max)
        if args.command == "solve":
            return cmd_solve(
                backend,
                load_json(args.target),
                load_json(args.gen) if args.gen else None,
                load_json(args.factorization) if args.factorization else None,
                args.auto_factor_bound,
                args.multiple,
                args.parallel,
            )
        if args.command == "smooth":
            return cmd_smooth(backend, args.B, args.R_upper, args.hasse_weil)
        return cmd_bench(backend, args.ops, args.seed, args.timing)
    except NotInSubgroup as exc:
        return EXIT_SUBGROUP, {"error": "NotInSubgroup", "prime": exc.prime}
    except (CycleTooLong, FTooLarge, CurveTooLarge) as exc:
        return EXIT_CAP, {"error": type(exc).__name__, "message": str(exc)}
    except InfraError as exc:
        return EXIT_INPUT, {"error": type(exc).__name__, "message": str(exc)}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, payload = run(argv)
    text = dump(payload)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
