"""Command-line front end: game analysis, scenario runs, and a walkthrough
of the re-encryption pipeline.

Exit codes: 0 success, 2 usage error, 3 runtime failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import pre
from .algebra import ParameterError, exp, scalar, setup
from .game import GameParams, analyze
from .harness import (
    BuyerStrategy,
    ScenarioConfig,
    SellerStrategy,
    run_scenario,
)

USAGE_ERROR = 2
RUNTIME_ERROR = 3


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fairex")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="payoff matrix, Nash set, and fairness conditions")
    for flag, help_ in [
        ("--c", "price of the data"),
        ("--ds", "seller deposit"),
        ("--db", "buyer deposit"),
        ("--vs", "data value to the seller"),
        ("--vb", "data value to the buyer"),
    ]:
        pa.add_argument(flag, type=int, required=True, help=help_)

    pr = sub.add_parser("run", help="execute one exchange scenario from a config file")
    pr.add_argument("config", type=Path)
    pr.add_argument("--trace", type=Path, default=None, help="write the event-log trace here")

    pd = sub.add_parser("demo-pre", help="walk through the re-encryption pipeline")
    pd.add_argument("--q", type=int, default=11)
    pd.add_argument("--seed", type=int, default=0)
    return p


def cmd_analyze(args, out) -> int:
    try:
        params = GameParams(c=args.c, d_s=args.ds, d_b=args.db, v_s=args.vs, v_b=args.vb)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = analyze(params)
    if args.format == "structured":
        json.dump(report, out, indent=2)
        out.write("\n")
        return 0
    out.write("Payoff matrix (buyer, seller):\n")
    out.write(f"{'':>16} {'CorrectSending':>22} {'FailedSending':>22}\n")
    for buyer in ("Confirmation", "NoConfirmation"):
        cells = [tuple(report["matrix"][f"{buyer}/{s}"]) for s in ("CorrectSending", "FailedSending")]
        out.write(f"{buyer:>16} {str(cells[0]):>22} {str(cells[1]):>22}\n")
    out.write(f"Pure Nash equilibria: {', '.join(report['pure_nash']) or 'none'}\n")
    rev = report["revised"]
    if rev["indifferent"]:
        out.write("Proof-gated game: seller indifferent, no strict equilibrium\n")
    else:
        out.write(f"Proof-gated game outcome: {rev['profile']}\n")
    cond = report["conditions"]
    out.write(
        f"Conditions: d_s>c={cond['ds_gt_c']} d_b>c={cond['db_gt_c']} "
        f"d_s>2*v_s-c={cond['revised_condition']} all={cond['all_hold']}\n"
    )
    return 0


def _load_config(path: Path) -> tuple[ScenarioConfig, SellerStrategy, BuyerStrategy]:
    if not path.exists():
        raise UsageError(f"config file not found: {path}")
    try:
        doc = tomllib.loads(path.read_text())
        game = doc["game"]
        params = GameParams(
            c=game["c"], d_s=game["ds"], d_b=game["db"], v_s=game["vs"], v_b=game["vb"]
        )
        config = ScenarioConfig(
            game=params,
            seed=doc.get("seed", 0),
            order=doc.get("order", ScenarioConfig.order),
        )
        strategies = doc["strategies"]
        ss = SellerStrategy(strategies["seller"])
        bs = BuyerStrategy(strategies["buyer"])
    except (tomllib.TOMLDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad config: {exc}")
    return config, ss, bs


def cmd_run(args, out) -> int:
    config, ss, bs = _load_config(args.config)
    result = run_scenario(config, ss, bs)
    if args.trace is not None:
        args.trace.write_text(result.trace)
    if args.format == "structured":
        json.dump(
            {
                "phase": result.final_phase.value,
                "delivered": result.delivered,
                "proof_accepted": result.proof_accepted,
                "money": result.money,
                "info": result.info,
                "utility": result.utility,
                "sink_delta": result.sink_delta,
            },
            out,
            indent=2,
        )
        out.write("\n")
        return 0
    out.write(f"Final phase: {result.final_phase.value}\n")
    out.write(f"Key delivered usable data: {result.delivered}\n")
    if not result.proof_accepted and ss != SellerStrategy.HONEST_KEY:
        out.write("Buyer could not construct a valid proof (key failure)\n")
    for party in ("buyer", "seller"):
        out.write(
            f"{party}: money {result.money[party]:+d}, info {result.info[party]:+d}, "
            f"utility {result.utility[party]:+d}\n"
        )
    out.write(f"sink: {result.sink_delta:+d}\n")
    return 0


def cmd_demo_pre(args, out) -> int:
    try:
        params = setup(args.q)
    except ParameterError as exc:
        raise UsageError(str(exc))
    rng = random.Random(args.seed)
    alice = pre.keygen(params, rng)
    bob = pre.keygen(params, rng)
    out.write(f"group order q = {params.q}\n")
    out.write(f"alice: sk a = {alice.sk.value}, pk = g^{alice.pk.log}\n")
    out.write(f"bob:   sk b = {bob.sk.value}, pk = g^{bob.pk.log}\n")
    mu = rng.randrange(1, params.q)
    m = exp(params.target_generator, scalar(params, mu))
    out.write(f"message m = Z^{m.log}\n")
    ct1 = pre.encrypt(params, alice.pk, m, rng)
    out.write(f"encrypt:   C_a = (Z^{ct1.c1.log}, g^{ct1.c2.log})\n")
    rk = pre.rekeygen(alice.sk, bob.pk)
    out.write(f"rekeygen:  rk = g^{rk.rk.log}\n")
    ct2 = pre.reencrypt(ct1, rk)
    out.write(f"reencrypt: C_b = (Z^{ct2.c1.log}, Z^{ct2.c2.log})\n")
    recovered = pre.decrypt_level2(ct2, bob.sk)
    out.write(f"decrypt:   Z^{recovered.log}\n")
    out.write(f"m recovered: {str(recovered == m).lower()}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    handlers = {"analyze": cmd_analyze, "run": cmd_run, "demo-pre": cmd_demo_pre}
    try:
        return handlers[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"runtime failure: {exc}", file=sys.stderr)
        return RUNTIME_ERROR


if __name__ == "__main__":
    sys.exit(main())
